// command-line front end: mutate, dt-certify, verify
#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "cl/acceptance.hpp"
#include "cl/io.hpp"
#include "cl/quantum.hpp"

using namespace cl;
using io::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kInput = 2, kWord = 3, kSurface = 4, kBudget = 5 };

int fail(int code, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return code;
}

int cmd_mutate(const std::string& quiver_file, const std::string& word_file) {
  Quiver q;
  Word w;
  try {
    q = io::quiver_from_json(io::read_file(quiver_file));
    w = io::word_from_json(io::read_file(word_file));
  } catch (const std::exception& ex) {
    return fail(kInput, ex.what());
  }
  try {
    validate_word(q, w);
    std::cout << io::to_json(apply_word(q, w)).dump() << "\n";
  } catch (const std::exception& ex) {
    return fail(kWord, ex.what());
  }
  return kOk;
}

struct CertifyOpts {
  std::string surface_file;
  int m = 2;
  int order = 10;
  bool series = false;
  long budget = 100000;
  std::string composition = "r-first";
  int candidates = 8;
};

int cmd_dt_certify(const CertifyOpts& o) {
  io::json input;
  SurfaceSpec spec;
  try {
    input = io::read_file(o.surface_file);
    spec = io::surface_from_json(input);
  } catch (const std::exception& ex) {
    return fail(kInput, ex.what());
  }
  auto adm = admissibility(spec);
  if (!adm.ok) return fail(kSurface, "surface is not admissible: " + adm.reason);
  if (o.m < 2) return fail(kInput, "--m must be at least 2");
  auto t0 = std::chrono::steady_clock::now();
  try {
    Triangulation T = triangulate(spec);
    MQuiver Q = build_quiver(T, o.m);
    Composition comp = o.composition == "r-last" ? Composition::RLast : Composition::RFirst;
    DTResult r = dt_word(T, o.m, comp, 1, o.budget, o.candidates);
    json rep;
    rep["schema"] = "1";
    rep["input_digest"] = io::digest(input.dump() + "|m=" + std::to_string(o.m) + "|" + o.composition);
    rep["surface"] = io::to_json(spec);
    rep["m"] = o.m;
    rep["composition"] = o.composition;
    rep["quiver"] = io::to_json(Q.q);
    rep["word"] = io::to_json(r.full());
    rep["word_length"] = static_cast<int>(r.word.size());
    rep["mutations"] = mutation_count(r.word);
    rep["c_matrix"] = io::to_json(r.c.C);
    rep["signs"] = r.c.signs;
    rep["verdict"] = r.certified ? "DT-certified" : "not-certified";
    rep["rotation_candidate"] = r.rotation_candidate;
    if (r.perm) {
      std::vector<int> p;
      for (int x : *r.perm) p.push_back(x + 1);
      rep["permutation"] = p;
    } else {
      rep["permutation"] = nullptr;
    }
    if (o.series) {
      TruncatedSeries s = dt_series_of_word(Q.q, r.word, o.order);
      rep["order"] = o.order;
      rep["series_digest"] = io::digest(s.str());
    }
    rep["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << rep.dump() << "\n";
    return r.certified ? kOk : kFail;
  } catch (const SearchBudgetError& ex) {
    return fail(kBudget, ex.what());
  } catch (const UnsupportedSurface& ex) {
    return fail(kSurface, ex.what());
  } catch (const AdmissibilityError& ex) {
    return fail(kSurface, ex.what());
  }
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  auto ids = suite_criteria(suite);
  if (ids.empty()) return fail(kInput, "unknown suite '" + suite + "'");
  json out;
  out["schema"] = "1";
  out["suite"] = suite;
  out["seed"] = seed;
  json rows = json::array();
  bool all = true;
  double total = 0;
  for (int id : ids) {
    auto r = run_criterion(id, seed);
    rows.push_back({{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"timing_ms", r.ms}});
    all &= r.pass;
    total += r.ms;
  }
  out["results"] = rows;
  out["pass"] = all;
  out["timing_ms"] = total;
  std::cout << out.dump() << "\n";
  return all ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cluster transformations and DT certification"};
  app.require_subcommand(1);

  std::string quiver_file, word_file;
  auto* mut = app.add_subcommand("mutate", "apply a word to a quiver");
  mut->add_option("quiver", quiver_file, "quiver JSON file")->required();
  mut->add_option("word", word_file, "word JSON file")->required();

  CertifyOpts co;
  auto* dt = app.add_subcommand("dt-certify", "build the DT word of a surface and certify it");
  dt->add_option("surface", co.surface_file, "surface JSON file")->required();
  dt->add_option("--m", co.m, "rank parameter m");
  dt->add_option("--order", co.order, "truncation order of the DT series");
  dt->add_flag("--series", co.series, "also compute the truncated DT series digest");
  dt->add_option("--budget", co.budget, "flip search budget");
  dt->add_option("--composition", co.composition, "r-first or r-last")
      ->check(CLI::IsMember({"r-first", "r-last"}));
  dt->add_option("--candidates", co.candidates, "rotation candidates to try");

  std::string suite;
  std::uint64_t seed = 20240611;
  auto* ver = app.add_subcommand("verify", "run an acceptance suite");
  ver->add_option("suite", suite, "pentagon|tau|signs|a2-basis|octahedron|schutzenberger|surfaces|all")->required();
  ver->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInput;
  }
  if (*mut) return cmd_mutate(quiver_file, word_file);
  if (*dt) return cmd_dt_certify(co);
  return cmd_verify(suite, seed);
}
