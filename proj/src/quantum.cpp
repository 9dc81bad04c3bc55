#include "cl/quantum.hpp"

#include <algorithm>

namespace cl {

namespace {

int sgn(Int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

Exp neg(const Exp& v) {
  Exp r = v;
  for (auto& x : r) x = -x;
  return r;
}

Exp add(const Exp& a, const Exp& b, int k = 1) {
  Exp r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += k * b[i];
  return r;
}

QTorusElt mono(const Exp& v, int qexp = 0) { return QTorusElt::monomial(v, QLaurent::qpow(qexp)); }

// 1 + q^b X_v
QTorusElt one_plus(const Exp& v, int b) {
  QTorusElt r = QTorusElt::unit(static_cast<int>(v.size()));
  r.add_term(v, QLaurent::qpow(b));
  return r;
}

QTorusElt den_poly(const Exp& v, const std::map<int, int>& den, int rank) {
  QTorusElt r = QTorusElt::unit(rank);
  for (auto& [b, m] : den)
    for (int i = 0; i < m; ++i) r = qtorus_mul(r, one_plus(v, b), IntMatrix(rank, std::vector<Int>(rank, 0)));
  return r;
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

// ------------------------------------------------------------------ RayFraction

RayFraction RayFraction::from(const QTorusElt& x) { return RayFraction{{}, x, {}}; }

std::optional<QTorusElt> RayFraction::to_laurent() const {
  if (!den.empty()) return std::nullopt;
  return num;
}

std::optional<QTorusElt> right_divide(const QTorusElt& x, const Exp& v, int b, const IntMatrix& form) {
  int p = -1;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      p = static_cast<int>(i);
      break;
    }
  if (p < 0) throw DimensionError("division along the zero ray");
  // x = sum over cosets X_{w0} n_{w0}(t), t = X_v
  std::map<Exp, std::map<int, QLaurent>> cos;
  for (auto& [w, c] : x.terms()) {
    int j = floor_div(w[p], v[p]);
    Exp w0 = add(w, v, -j);
    int pr = static_cast<int>(pairing(form, w0, v));
    cos[w0][j] += c.qshift(-j * pr);
  }
  QTorusElt out(x.rank());
  for (auto& [w0, poly] : cos) {
    std::map<int, QLaurent> n;
    for (auto& [j, c] : poly)
      if (!c.is_zero()) n[j] = c;
    if (n.empty()) continue;
    int lo = n.begin()->first, hi = n.rbegin()->first;
    if (lo == hi) return std::nullopt;
    std::map<int, QLaurent> s;
    for (int j = lo; j < hi; ++j) {
      QLaurent cj = n.count(j) ? n[j] : QLaurent();
      if (cj.is_zero()) continue;
      s[j] = cj;
      n[j + 1] -= cj.qshift(b);
    }
    if (!n[hi].is_zero()) return std::nullopt;
    int pr = static_cast<int>(pairing(form, w0, v));
    for (auto& [j, c] : s) out.add_term(add(w0, v, j), c.qshift(j * pr));
  }
  return out;
}

void RayFraction::reduce(const IntMatrix& form) {
  for (auto it = den.begin(); it != den.end();) {
    while (it->second > 0) {
      auto q = right_divide(num, v, it->first, form);
      if (!q) break;
      num = *q;
      --it->second;
    }
    it = it->second == 0 ? den.erase(it) : std::next(it);
  }
}

// rewrite a fraction along -v onto v: (1 + q^b X_{-v})^{-1} = (1 + q^{-b} X_v)^{-1} q^{-b} X_v
static RayFraction onto_ray(const RayFraction& r, const Exp& v, const IntMatrix& form) {
  if (r.den.empty() || r.v == v) return r;
  if (r.v != neg(v)) throw RationalityError("comparing fractions on different rays");
  RayFraction out{v, r.num, {}};
  for (auto& [b, m] : r.den) {
    for (int i = 0; i < m; ++i) out.num = qtorus_mul(out.num, mono(v, -b), form);
    out.den[-b] += m;
  }
  return out;
}

bool equal(const RayFraction& a0, const RayFraction& b0, const IntMatrix& form) {
  if (a0.den.empty() && b0.den.empty()) return a0.num == b0.num;
  Exp v = a0.den.empty() ? b0.v : a0.v;
  RayFraction a = onto_ray(a0, v, form), b = onto_ray(b0, v, form);
  int n = a.num.rank();
  QTorusElt lhs = qtorus_mul(a.num, den_poly(v, b.den, n), form);
  QTorusElt rhs = qtorus_mul(b.num, den_poly(v, a.den, n), form);
  return lhs == rhs;
}

QTorusElt ad_dilog(const Exp& v, int sign, const QTorusElt& m, const IntMatrix& form) {
  QTorusElt out(m.rank());
  for (auto& [w, c] : m.terms()) {
    Int cc = pairing(form, v, w);
    QTorusElt t = QTorusElt::monomial(w, c);
    if (cc != 0 && sgn(cc) * sign < 0) throw RationalityError("conjugation leaves the quantum torus");
    for (Int a = 1; a <= std::llabs(cc); ++a) t = qtorus_mul(t, one_plus(v, static_cast<int>(sgn(cc) * (2 * a - 1))), form);
    out += t;
  }
  return out;
}

RayFraction ad_dilog(const Exp& f, int sign, const RayFraction& r, const IntMatrix& form) {
  RayFraction out = r;
  if (out.v.empty() || (out.den.empty() && out.v != f && out.v != neg(f))) out.v = f;
  const Exp& v = out.v;
  bool flip = f != v;
  if (flip && f != neg(v)) throw RationalityError("conjugation along a second ray");
  int n = r.num.rank();
  // per term: numerator piece and its reciprocal factors
  std::vector<std::pair<QTorusElt, std::map<int, int>>> pieces;
  std::map<int, int> D;
  for (auto& [w, c] : r.num.terms()) {
    Int cc = pairing(form, f, w);
    int e = sgn(cc) * sign;
    QTorusElt t = QTorusElt::monomial(w, c);
    std::map<int, int> d;
    for (Int a = 1; a <= std::llabs(cc); ++a) {
      int b = static_cast<int>(sgn(cc) * (2 * a - 1));
      // 1 + q^b X_f = m * (1 + q^{b'} X_v)
      QTorusElt m = flip ? mono(f, b) : QTorusElt::unit(n);
      int bp = flip ? -b : b;
      if (e > 0) {
        t = qtorus_mul(t, qtorus_mul(m, one_plus(v, bp), form), form);
      } else {
        if (flip) t = qtorus_mul(t, mono(v, -b), form);
        ++d[bp];
      }
    }
    for (auto& [b, k] : d) D[b] = std::max(D[b], k);
    pieces.emplace_back(t, d);
  }
  out.num = QTorusElt(n);
  for (auto& [t, d] : pieces) {
    std::map<int, int> rest;
    for (auto& [b, k] : D)
      if (k - (d.count(b) ? d.at(b) : 0) > 0) rest[b] = k - (d.count(b) ? d.at(b) : 0);
    out.num += qtorus_mul(t, den_poly(v, rest, n), form);
  }
  for (auto& [b, k] : D) out.den[b] += k;
  out.reduce(form);
  return out;
}

// ------------------------------------------------------------------ quantum seeds

QuantumSeed QuantumSeed::initial(const Quiver& q) { return QuantumSeed{q, q.eps, identity_matrix(q.n), {}}; }

QuantumSeed quantum_mutate(const QuantumSeed& s, int k) {
  Quiver next = mutate(s.q, k);
  int n = s.q.n;
  int sg = row_sign(s.C[k]);
  if (sg == 0) throw SignCoherenceError("zero row in C-matrix");
  Exp f(n);
  for (int j = 0; j < n; ++j) f[j] = static_cast<int>(sg * s.C[k][j]);
  QuantumSeed r = s;
  r.factors.push_back({f, sg, k});
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      for (auto& x : r.C[k]) x = -x;
      continue;
    }
    Int c = std::max<Int>(0, sg * s.q.eps[i][k]);
    if (c)
      for (int j = 0; j < n; ++j) r.C[i][j] += c * s.C[k][j];
  }
  r.q = next;
  return r;
}

QuantumSeed quantum_permute(const QuantumSeed& s, const Perm& p) {
  QuantumSeed r = s;
  r.q = permute(s.q, p);
  for (int i = 0; i < s.q.n; ++i) r.C[p[i]] = s.C[i];
  return r;
}

QuantumSeed quantum_apply_word(const QuantumSeed& s, const Word& w) {
  validate_word(s.q, w);
  QuantumSeed r = s;
  for (auto& st : w) r = st.kind == Step::Mutate ? quantum_mutate(r, st.k) : quantum_permute(r, st.perm);
  return r;
}

std::vector<DilogFactor> simplify_factors(const std::vector<DilogFactor>& f) {
  std::vector<DilogFactor> st;
  for (auto& x : f) {
    if (!st.empty() && st.back().f == x.f && st.back().sign == -x.sign)
      st.pop_back();
    else
      st.push_back(x);
  }
  return st;
}

std::optional<RayFraction> generator_image(const QuantumSeed& s, int i) {
  auto fs = simplify_factors(s.factors);
  Exp row(s.q.n);
  for (int j = 0; j < s.q.n; ++j) row[j] = static_cast<int>(s.C[i][j]);
  RayFraction r = RayFraction::from(mono(row));
  try {
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) r = ad_dilog(it->f, it->sign, r, s.form);
  } catch (const RationalityError&) {
    return std::nullopt;
  }
  return r;
}

std::vector<Rational> generator_values_q1(const QuantumSeed& s, const std::vector<Rational>& x0) {
  int n = s.q.n;
  std::vector<Rational> x = x0;
  auto mono_val = [&](const std::vector<Rational>& pt, const std::vector<Int>& e) {
    Rational r = 1;
    for (int j = 0; j < n; ++j)
      for (Int a = 0; a < std::llabs(e[j]); ++a) r = e[j] > 0 ? Rational(r * pt[j]) : Rational(r / pt[j]);
    return r;
  };
  for (auto& f : s.factors) {
    std::vector<Int> fe(f.f.begin(), f.f.end());
    Rational base = 1 + mono_val(x, fe);
    std::vector<Rational> y = x;
    for (int j = 0; j < n; ++j) {
      Int e = f.sign * pairing(s.form, f.f, [&] {
                Exp u(n, 0);
                u[j] = 1;
                return u;
              }());
      for (Int a = 0; a < std::llabs(e); ++a) y[j] = e > 0 ? Rational(y[j] * base) : Rational(y[j] / base);
    }
    x = y;
  }
  std::vector<Rational> out(n);
  for (int i = 0; i < n; ++i) out[i] = mono_val(x, s.C[i]);
  return out;
}

bool mutation_presentations_agree(const Quiver& q, int k) {
  mutate(q, k);
  int n = q.n;
  Exp ek(n, 0);
  ek[k] = 1;
  for (int i = 0; i < n; ++i) {
    Exp up(n, 0), dn(n, 0);
    if (i == k) {
      up[k] = dn[k] = -1;
    } else {
      up[i] = dn[i] = 1;
      up[k] += static_cast<int>(std::max<Int>(0, q.eps[i][k]));
      dn[k] += static_cast<int>(std::max<Int>(0, -q.eps[i][k]));
    }
    RayFraction a = ad_dilog(ek, 1, RayFraction::from(mono(up)), q.eps);
    RayFraction b = ad_dilog(neg(ek), -1, RayFraction::from(mono(dn)), q.eps);
    if (!equal(a, b, q.eps)) return false;
  }
  return true;
}

// ------------------------------------------------------------------ series

TruncatedSeries dilog_product(const std::vector<DilogFactor>& fs, const IntMatrix& form, int order) {
  TruncatedSeries s = TruncatedSeries::one(form, order);
  for (auto& f : fs) {
    TruncatedSeries p = quantum_dilog(f.f, form, order);
    s = s * (f.sign > 0 ? p : p.inverse());
  }
  return s;
}

TruncatedSeries dt_series_of_word(const Quiver& q, const Word& w, int order) {
  return dilog_product(cmatrix_of_word(q, w).factors, q.eps, order);
}

Word a2_sigma1() { return {Step::mu(0), Step::mu(1)}; }
Word a2_sigma2() { return {Step::mu(1), Step::mu(0), Step::mu(1), Step::pi({1, 0})}; }

bool pentagon_check(int order) {
  Quiver q = a2_quiver();
  return dt_series_of_word(q, a2_sigma1(), order) == dt_series_of_word(q, a2_sigma2(), order);
}

bool pentagon_negative_control(int order) {
  Quiver q = a2_quiver();
  std::vector<DilogFactor> swapped = {{{1, 1}, 1, 0}, {{0, 1}, 1, 1}, {{1, 0}, 1, 0}};
  return dilog_product(swapped, q.eps, order) != dt_series_of_word(q, a2_sigma1(), order);
}

bool difference_relation_check(int order) {
  IntMatrix f{{0}};
  TruncatedSeries lhs(f, order);
  for (int n = 0; n <= order; ++n) lhs.add_term({n}, dilog_coeff(n).qshift(2 * n));
  TruncatedSeries onep = TruncatedSeries::one(f, order);
  onep.add_term({1}, QFraction(QLaurent::qpow(1)));
  return lhs == onep * quantum_dilog({1}, f, order);
}

bool dilog_inverse_check(int order) {
  IntMatrix f{{0}};
  TruncatedSeries p = quantum_dilog({1}, f, order);
  return p.inverse() == p.bar();
}

bool log_dilog_check(int order) {
  auto c = log_dilog_coeffs(order);
  for (int n = 1; n <= order; ++n)
    if (c[n] != log_dilog_closed(n)) return false;
  return true;
}

bool conjugation_involution_check(const Exp& v, const Exp& w, const IntMatrix& form) {
  RayFraction r = ad_dilog(v, 1, ad_dilog(neg(v), 1, RayFraction::from(mono(w)), form), form);
  Int c = pairing(form, w, v);
  Exp target = w;
  for (size_t i = 0; i < w.size(); ++i) target[i] -= static_cast<int>(c * v[i]);
  auto l = r.to_laurent();
  return l && *l == mono(target);
}

// ------------------------------------------------------------------ A2 canonical basis

std::vector<QTorusElt> a2_basis() {
  auto M = [](std::initializer_list<Exp> vs) {
    QTorusElt r(2);
    for (auto& v : vs) r.add_term(v, QLaurent(1));
    return r;
  };
  return {M({{1, 0}}), M({{0, -1}}), M({{-1, -1}, {-1, 0}}), M({{-1, 0}, {-1, 1}, {0, 1}}), M({{0, 1}, {1, 1}})};
}

A2BasisReport a2_canonical_basis_check(int order) {
  A2BasisReport rep;
  IntMatrix form = a2_quiver().eps;
  auto P = a2_basis();
  rep.exchange = true;
  for (int i = 0; i < 5; ++i) {
    QTorusElt lhs = qtorus_mul(P[(i + 2) % 5], P[i], form);
    QTorusElt rhs = QTorusElt::unit(2) + P[(i + 1) % 5].scaled(QLaurent::qpow(1));
    rep.exchange = rep.exchange && lhs == rhs;
  }
  rep.bar_invariant = true;
  for (auto& p : P) rep.bar_invariant = rep.bar_invariant && p.bar() == p;

  // DT(X_u) = T X_{-u} T^{-1} = X_{-u} (X_u T X_{-u}) T^{-1}, T = Psi(X_e1) Psi(X_e2)
  rep.dt_order = order;
  TruncatedSeries T = dt_series_of_word(a2_quiver(), a2_sigma1(), order);
  TruncatedSeries Tinv = T.inverse();
  auto image = [&](const QTorusElt& p, int* window) {
    QSeriesTorus out(2);
    int dmin = 1 << 20;
    for (auto& [u, c] : p.terms()) dmin = std::min(dmin, -u[0] - u[1]);
    *window = dmin + order;
    for (auto& [u, c] : p.terms()) {
      TruncatedSeries S = T.conjugated_by_monomial(neg(u)) * Tinv;
      for (auto& [v, sc] : S.base().terms()) {
        Exp tgt = add(neg(u), v);
        if (tgt[0] + tgt[1] > *window) continue;
        out.add_term(tgt, (sc * QFraction(c)).qshift(static_cast<int>(pairing(form, neg(u), v))));
      }
    }
    return out;
  };
  for (int shift = 1; shift < 5 && rep.dt_shift < 0; ++shift) {
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i) {
      int window;
      QSeriesTorus got = image(P[i], &window);
      QSeriesTorus want(2);
      for (auto& [v, c] : P[(i + shift) % 5].terms())
        if (v[0] + v[1] <= window) want.add_term(v, QFraction(c));
      ok = got == want;
    }
    if (ok) rep.dt_shift = shift;
  }
  return rep;
}

}  // namespace cl
