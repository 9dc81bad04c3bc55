#include "cl/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cl::io {

namespace {

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

json to_json(const IntMatrix& m) {
  json a = json::array();
  for (auto& row : m) a.push_back(row);
  return a;
}

json to_json(const Quiver& q) {
  json j;
  j["n"] = q.n;
  j["eps"] = to_json(q.eps);
  json fr = json::array();
  for (int i = 0; i < q.n; ++i)
    if (q.frozen[i]) fr.push_back(i + 1);
  j["frozen"] = fr;
  if (!q.labels.empty()) j["labels"] = q.labels;
  return j;
}

Quiver quiver_from_json(const json& j) {
  const json& e = field(j, "eps");
  if (!e.is_array()) throw InputError("eps must be an array of rows");
  int n = static_cast<int>(e.size());
  if (j.contains("n") && as_int(j.at("n"), "n") != n) throw InputError("n disagrees with eps");
  IntMatrix eps(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i) {
    if (!e[i].is_array() || static_cast<int>(e[i].size()) != n) throw InputError("eps must be square");
    for (int k = 0; k < n; ++k) eps[i][k] = as_int(e[i][k], "eps entry");
  }
  std::vector<bool> fr(n, false);
  if (j.contains("frozen")) {
    if (!j.at("frozen").is_array()) throw InputError("frozen must be a list");
    for (auto& v : j.at("frozen")) {
      int k = as_int(v, "frozen index");
      if (k < 1 || k > n) throw InputError("frozen index out of range");
      fr[k - 1] = true;
    }
  }
  Quiver q;
  try {
    q = Quiver(eps, fr);
  } catch (const std::exception& ex) {
    throw InputError(ex.what());
  }
  if (j.contains("labels")) {
    if (!j.at("labels").is_array() || static_cast<int>(j.at("labels").size()) != n)
      throw InputError("labels must list one string per vertex");
    for (auto& l : j.at("labels")) {
      if (!l.is_string()) throw InputError("labels must be strings");
      q.labels.push_back(l.get<std::string>());
    }
  }
  try {
    q.check();
  } catch (const std::exception& ex) {
    throw InputError(ex.what());
  }
  return q;
}

json to_json(const Word& w) {
  json a = json::array();
  for (auto& s : w) {
    if (s.kind == Step::Mutate) {
      a.push_back({{"m", s.k + 1}});
    } else {
      std::vector<int> p;
      for (int x : s.perm) p.push_back(x + 1);
      a.push_back({{"p", p}});
    }
  }
  return a;
}

Word word_from_json(const json& j) {
  if (!j.is_array()) throw InputError("a word is a JSON array of steps");
  Word w;
  for (auto& s : j) {
    if (s.is_object() && s.size() == 1 && s.contains("m")) {
      w.push_back(Step::mu(as_int(s.at("m"), "mutation index") - 1));
    } else if (s.is_object() && s.size() == 1 && s.contains("p") && s.at("p").is_array()) {
      Perm p;
      for (auto& x : s.at("p")) p.push_back(as_int(x, "permutation entry") - 1);
      w.push_back(Step::pi(p));
    } else {
      throw InputError("step must be {\"m\": k} or {\"p\": [..]}");
    }
  }
  return w;
}

json to_json(const SurfaceSpec& s) { return {{"genus", s.genus}, {"punctures", s.punctures}, {"boundary", s.boundary}}; }

SurfaceSpec surface_from_json(const json& j) {
  SurfaceSpec s;
  s.genus = as_int(field(j, "genus"), "genus");
  s.punctures = as_int(field(j, "punctures"), "punctures");
  const json& b = j.contains("boundary") ? j.at("boundary") : json::array();
  if (!b.is_array()) throw InputError("boundary must be a list of special-point counts");
  for (auto& k : b) s.boundary.push_back(as_int(k, "boundary count"));
  return s;
}

json to_json(const Triangulation& t) {
  json pts = json::array();
  for (auto k : t.points) pts.push_back(k == PointKind::Puncture ? "puncture" : "special");
  json tris = json::array();
  for (int i = 0; i < t.num_triangles(); ++i) {
    json c = json::array(), s = json::array();
    for (int x : t.corners[i]) c.push_back(x + 1);
    for (int x : t.sides[i]) s.push_back(x + 1);
    tris.push_back({{"corners", c}, {"edges", s}});
  }
  json edges = json::array();
  for (auto& e : t.edges) {
    json h = json::array({json::array({e.t0 + 1, e.s0 + 1})});
    if (!e.boundary()) h.push_back(json::array({e.t1 + 1, e.s1 + 1}));
    edges.push_back({{"half_edges", h}, {"boundary", e.boundary()}});
  }
  return {{"points", pts}, {"triangles", tris}, {"edges", edges}};
}

std::string digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& ex) {
    throw InputError(path + ": " + ex.what());
  }
}

}  // namespace cl::io
