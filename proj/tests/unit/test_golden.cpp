// values produced by tests/oracle/gen_golden.py (python, independent code path)
#include <doctest.h>

#include "cl/io.hpp"
#include "cl/seeds.hpp"
#include "cl/series.hpp"
#include "cl/surface.hpp"

using namespace cl;
using nlohmann::json;

namespace {

json golden(const char* name) { return io::read_file(std::string(GOLDEN_DIR) + "/" + name); }

IntMatrix int_matrix(const json& j) {
  IntMatrix m;
  for (auto& row : j) m.push_back(row.get<std::vector<Int>>());
  return m;
}

std::vector<Rational> rationals(const json& j) {
  std::vector<Rational> r;
  for (auto& s : j) r.push_back(parse_rational(s.get<std::string>()));
  return r;
}

Rational eval_q(const QLaurent& p, const Rational& q) {
  Rational r = 0;
  for (auto& [k, c] : p.terms()) {
    Rational t = c;
    for (int i = 0; i < std::abs(k); ++i) t = k > 0 ? Rational(t * q) : Rational(t / q);
    r += t;
  }
  return r;
}

Rational eval_q(const QFraction& f, const Rational& q) { return eval_q(f.num(), q) / eval_q(f.expanded_den(), q); }

}  // namespace

TEST_CASE("golden C-matrices and final quivers") {
  auto cases = golden("cmatrix.json");
  REQUIRE(cases.size() >= 30);
  for (auto& c : cases) {
    Quiver q(int_matrix(c["eps"]));
    Word w = io::word_from_json(c["word"]);
    auto r = cmatrix_of_word(q, w);
    CHECK(r.C == int_matrix(c["c_matrix"]));
    CHECK(r.final_quiver.eps == int_matrix(c["final_eps"]));
    CHECK(apply_word(q, w).eps == int_matrix(c["final_eps"]));
    auto b = cmatrix_of_word_big(q, w);
    for (int i = 0; i < q.n; ++i)
      for (int j = 0; j < q.n; ++j) CHECK(b.C[i][j] == static_cast<long>(r.C[i][j]));
  }
}

TEST_CASE("golden cluster pushforwards") {
  for (auto& c : golden("pushforward.json")) {
    CAPTURE(c["name"].get<std::string>());
    Quiver q(int_matrix(c["eps"]));
    Word w = io::word_from_json(c["word"]);
    auto pt = rationals(c["point"]);
    CHECK(x_numeric(q, pt, w) == rationals(c["x_values"]));
    CHECK(a_numeric(q, pt, w) == rationals(c["a_values"]));
    if (q.n <= 4) {
      XSeed s = x_apply_word(XSeed::initial(q), w);
      ASeed a = a_apply_word(ASeed::initial(q), w);
      auto xs = rationals(c["x_values"]);
      auto as = rationals(c["a_values"]);
      for (int i = 0; i < q.n; ++i) {
        CHECK(s.eval(i, pt) == xs[i]);
        CHECK(a.a[i].eval(pt) == as[i]);
      }
    }
  }
}

TEST_CASE("golden octahedral recursion and the involution word") {
  for (auto& c : golden("octahedral.json")) {
    int m = c["m"];
    CAPTURE(m);
    auto pts = gamma_points(m);
    std::map<Tri, Rational> face, star;
    for (auto& e : c["face"]) face[e["point"].get<Tri>()] = parse_rational(e["value"].get<std::string>());
    for (auto& e : c["delta_star"]) star[e["point"].get<Tri>()] = parse_rational(e["value"].get<std::string>());
    std::vector<Rational> fv;
    for (auto& p : pts) fv.push_back(face.at(p));

    auto tab = octahedral_numeric(m, fv);
    for (auto& p : pts) CHECK(tab.at({p[2], 0, p[0], p[1]}) == star.at(p));

    Triangulation T = Triangulation::from_sides({PointKind::Special, PointKind::Special, PointKind::Special},
                                                {{0, 1, 2}}, {{0, 1, 2}});
    MQuiver Q = build_quiver(T, m, Mode::A);
    REQUIRE(Q.q.n == static_cast<int>(pts.size()));
    std::vector<Rational> init(Q.q.n);
    std::vector<Tri> at(Q.q.n);
    for (auto& p : pts) {
      int i = Q.index.at(*key_of(T, m, 0, p));
      init[i] = face.at(p);
      at[i] = p;
    }
    auto out = a_numeric(Q.q, init, involution_word(Q, T));
    for (int i = 0; i < Q.q.n; ++i) CHECK(out[i] == star.at(at[i]));
  }
}

TEST_CASE("golden dilogarithm coefficients at a rational q") {
  auto g = golden("dilog.json");
  Rational q = parse_rational(g["q"].get<std::string>());
  auto psi = rationals(g["psi"]);
  for (size_t n = 0; n < psi.size(); ++n) CHECK(eval_q(dilog_coeff(static_cast<int>(n)), q) == psi[n]);
  auto lg = rationals(g["log"]);
  auto lc = log_dilog_coeffs(static_cast<int>(lg.size()));
  for (size_t n = 1; n <= lg.size(); ++n) {
    CHECK(eval_q(lc[n], q) == lg[n - 1]);
    CHECK(eval_q(log_dilog_closed(static_cast<int>(n)), q) == lg[n - 1]);
  }
}
