#include "cl/seeds.hpp"

#include <algorithm>
#include <numeric>

namespace cl {

namespace {

Rational rpow(const Rational& x, int k) {
  if (k == 0) return 1;
  Rational base = k < 0 ? Rational(1) / x : x;
  unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

int sgn(Int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

Exp unit(int n, int i) {
  Exp e(n, 0);
  e[i] = 1;
  return e;
}

// normalise: strip monomial factor, scale so the lex-smallest term is 1
MultiLaurent normalise(const MultiLaurent& p, Exp* mono, Rational* c) {
  *mono = p.min_exponents();
  Exp neg(mono->size());
  for (size_t i = 0; i < neg.size(); ++i) neg[i] = -(*mono)[i];
  MultiLaurent r = p.shifted(neg);
  auto terms = r.sorted();
  *c = terms.front().second;
  r *= Rational(1) / *c;
  return r;
}

// per-variable max degree of a polynomial
Exp max_degrees(const MultiLaurent& p) {
  Exp m(p.nvars(), 0);
  for (auto& [e, c] : p.terms())
    for (size_t i = 0; i < e.size(); ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

bool fits(const Exp& small, const Exp& big) {
  for (size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

}  // namespace

std::vector<Rational> random_point(int n, std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> num(lo, hi), den(1, hi);
  std::vector<Rational> p(n);
  for (auto& x : p) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return p;
}

// ------------------------------------------------------------------ XValue

XValue XValue::inverse() const {
  XValue r;
  r.c = Rational(1) / c;
  r.mono = mono;
  for (auto& x : r.mono) x = -x;
  for (auto& [i, e] : fac) r.fac[i] = -e;
  return r;
}

XValue XValue::pow(int k) const {
  XValue r;
  r.c = rpow(c, k);
  r.mono = mono;
  for (auto& x : r.mono) x *= k;
  if (k != 0)
    for (auto& [i, e] : fac) r.fac[i] = e * k;
  return r;
}

XValue XValue::operator*(const XValue& o) const {
  XValue r = *this;
  r.c *= o.c;
  if (r.mono.empty()) r.mono.assign(o.mono.size(), 0);
  for (size_t i = 0; i < o.mono.size(); ++i) r.mono[i] += o.mono[i];
  for (auto& [i, e] : o.fac) {
    int v = (r.fac[i] += e);
    if (v == 0) r.fac.erase(i);
  }
  return r;
}

// ------------------------------------------------------------------ XSeed

XSeed XSeed::initial(const Quiver& q) {
  XSeed s;
  s.q_ = q;
  s.pool_ = std::make_shared<FactorPool>();
  for (int i = 0; i < q.n; ++i) s.x_.push_back(XValue{1, unit(q.n, i), {}});
  return s;
}

MultiLaurent XSeed::expand(const XValue& v, bool positive_part) const {
  int n = q_.n;
  Exp m(n, 0);
  for (int i = 0; i < n; ++i) m[i] = positive_part ? std::max(0, v.mono[i]) : std::max(0, -v.mono[i]);
  MultiLaurent r = MultiLaurent::monomial(m, positive_part ? v.c : Rational(1));
  for (auto& [i, e] : v.fac) {
    if (positive_part && e > 0) r = r * pool_->polys[i].pow(e);
    if (!positive_part && e < 0) r = r * pool_->polys[i].pow(-e);
  }
  return r;
}

MultiLaurent XSeed::numerator(int i) const { return expand(x_[i], true); }
MultiLaurent XSeed::denominator(int i) const { return expand(x_[i], false); }

Rational XSeed::eval(int i, const std::vector<Rational>& pt) const {
  const XValue& v = x_[i];
  Rational r = v.c;
  for (int j = 0; j < q_.n; ++j) r *= rpow(pt[j], v.mono[j]);
  for (auto& [f, e] : v.fac) r *= rpow(pool_->polys[f].eval(pt), e);
  return r;
}

// 1 + y written as a new XValue; the sum polynomial is split against the pool
XValue XSeed::one_plus(const XValue& y) const {
  MultiLaurent num = expand(y, true), den = expand(y, false);
  MultiLaurent s = num + den;
  Exp mono;
  Rational c;
  MultiLaurent p = normalise(s, &mono, &c);
  XValue r{c, mono, {}};
  Exp pdeg = max_degrees(p);
  for (size_t i = 0; i < pool_->polys.size() && !p.is_constant(); ++i) {
    const MultiLaurent& f = pool_->polys[i];
    while (!p.is_constant() && fits(max_degrees(f), pdeg)) {
      auto quo = p.divide_exact(f);
      if (!quo) break;
      p = *quo;
      pdeg = max_degrees(p);
      ++r.fac[static_cast<int>(i)];
    }
  }
  if (!p.is_constant()) {
    r.fac[static_cast<int>(pool_->polys.size())] = 1;
    pool_->polys.push_back(p);
  } else {
    r.c *= p.coeff(Exp(q_.n, 0));
  }
  // divide by the denominator of y
  XValue d{1, Exp(q_.n, 0), {}};
  for (int i = 0; i < q_.n; ++i) d.mono[i] = std::max(0, -y.mono[i]);
  for (auto& [i, e] : y.fac)
    if (e < 0) d.fac[i] = -e;
  return r * d.inverse();
}

XSeed x_mutate(const XSeed& s, int k) {
  Quiver next = mutate(s.q_, k);
  XSeed r = s;
  r.q_ = next;
  const XValue& xk = s.x_[k];
  XValue plus, minus;  // 1 + x_k^{-1}, 1 + x_k
  bool have_plus = false, have_minus = false;
  for (int i = 0; i < s.q_.n; ++i) {
    if (i == k) {
      r.x_[i] = xk.inverse();
      continue;
    }
    Int e = s.q_.eps[i][k];
    if (e == 0) continue;
    XValue* t;
    if (e > 0) {
      if (!have_plus) plus = s.one_plus(xk.inverse()), have_plus = true;
      t = &plus;
    } else {
      if (!have_minus) minus = s.one_plus(xk), have_minus = true;
      t = &minus;
    }
    r.x_[i] = s.x_[i] * t->pow(static_cast<int>(-e));
  }
  return r;
}

XSeed x_permute(const XSeed& s, const Perm& p) {
  XSeed r = s;
  r.q_ = permute(s.q_, p);
  for (int i = 0; i < s.q_.n; ++i) r.x_[p[i]] = s.x_[i];
  return r;
}

XSeed x_apply_word(const XSeed& s, const Word& w) {
  validate_word(s.quiver(), w);
  XSeed r = s;
  for (auto& st : w) r = st.kind == Step::Mutate ? x_mutate(r, st.k) : x_permute(r, st.perm);
  return r;
}

std::vector<Rational> x_numeric(const Quiver& q0, std::vector<Rational> x, const Word& w) {
  Quiver q = q0;
  for (auto& st : w) {
    if (st.kind == Step::Permute) {
      std::vector<Rational> y(x.size());
      for (int i = 0; i < q.n; ++i) y[st.perm[i]] = x[i];
      x = y;
      q = permute(q, st.perm);
      continue;
    }
    int k = st.k;
    Quiver next = mutate(q, k);
    std::vector<Rational> y = x;
    for (int i = 0; i < q.n; ++i) {
      if (i == k) {
        y[i] = Rational(1) / x[k];
        continue;
      }
      Int e = q.eps[i][k];
      if (e == 0) continue;
      Rational t = 1 + rpow(x[k], -sgn(e));
      y[i] = x[i] * rpow(t, static_cast<int>(-e));
    }
    x = y;
    q = next;
  }
  return x;
}

std::vector<Rational> a_numeric(const Quiver& q0, std::vector<Rational> a, const Word& w) {
  Quiver q = q0;
  for (auto& st : w) {
    if (st.kind == Step::Permute) {
      std::vector<Rational> y(a.size());
      for (int i = 0; i < q.n; ++i) y[st.perm[i]] = a[i];
      a = y;
      q = permute(q, st.perm);
      continue;
    }
    int k = st.k;
    Quiver next = mutate(q, k);
    Rational p = 1, m = 1;
    for (int j = 0; j < q.n; ++j) {
      Int e = q.eps[k][j];
      if (e > 0) p *= rpow(a[j], static_cast<int>(e));
      if (e < 0) m *= rpow(a[j], static_cast<int>(-e));
    }
    a[k] = (p + m) / a[k];
    q = next;
  }
  return a;
}

// ------------------------------------------------------------------ ASeed

ASeed ASeed::initial(const Quiver& q) {
  ASeed s{q, {}};
  for (int i = 0; i < q.n; ++i) s.a.push_back(MultiLaurent::var(q.n, i));
  return s;
}

static MultiLaurent exchange_product(const std::vector<MultiLaurent>& a, const Quiver& q, int k, int side, int nv) {
  MultiLaurent r = MultiLaurent::constant(nv, 1);
  for (int j = 0; j < q.n; ++j) {
    Int e = side * q.eps[k][j];
    if (e > 0) r = r * a[j].pow(static_cast<int>(e));
  }
  return r;
}

ASeed a_mutate(const ASeed& s, int k) {
  Quiver next = mutate(s.q, k);
  int nv = s.a[k].nvars();
  MultiLaurent top = exchange_product(s.a, s.q, k, 1, nv) + exchange_product(s.a, s.q, k, -1, nv);
  auto quo = top.divide_exact(s.a[k]);
  if (!quo) throw LaurentViolation("exchange at vertex " + std::to_string(k + 1) + " left the Laurent ring");
  ASeed r = s;
  r.q = next;
  r.a[k] = *quo;
  return r;
}

ASeed a_apply_word(const ASeed& s, const Word& w) {
  validate_word(s.q, w);
  ASeed r = s;
  for (auto& st : w) {
    if (st.kind == Step::Mutate) {
      r = a_mutate(r, st.k);
    } else {
      ASeed t = r;
      t.q = permute(r.q, st.perm);
      for (int i = 0; i < r.q.n; ++i) t.a[st.perm[i]] = r.a[i];
      r = t;
    }
  }
  return r;
}

// ------------------------------------------------------------------ principal coefficients

APrinSeed APrinSeed::initial(const Quiver& q) {
  APrinSeed s{q, {}, identity_matrix(q.n)};
  for (int i = 0; i < q.n; ++i) s.a.push_back(MultiLaurent::var(2 * q.n, i));
  return s;
}

APrinSeed aprin_mutate(const APrinSeed& s, int k) {
  Quiver next = mutate(s.q, k);
  int n = s.q.n;
  Exp ypos(2 * n, 0), yneg(2 * n, 0);
  for (int j = 0; j < n; ++j) {
    ypos[n + j] = static_cast<int>(std::max<Int>(0, s.c[k][j]));
    yneg[n + j] = static_cast<int>(std::max<Int>(0, -s.c[k][j]));
  }
  MultiLaurent top = MultiLaurent::monomial(ypos) * exchange_product(s.a, s.q, k, 1, 2 * n) +
                     MultiLaurent::monomial(yneg) * exchange_product(s.a, s.q, k, -1, 2 * n);
  auto quo = top.divide_exact(s.a[k]);
  if (!quo) throw LaurentViolation("exchange at vertex " + std::to_string(k + 1) + " left the Laurent ring");
  APrinSeed r = s;
  r.q = next;
  r.a[k] = *quo;
  // coefficient rows mutate like the C-matrix
  int sg = 0;
  for (Int x : s.c[k]) sg = sg ? sg : sgn(x);
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      for (auto& x : r.c[k]) x = -x;
      continue;
    }
    Int c = std::max<Int>(0, sg * s.q.eps[i][k]);
    if (c)
      for (int j = 0; j < n; ++j) r.c[i][j] += c * s.c[k][j];
  }
  return r;
}

APrinSeed aprin_apply_word(const APrinSeed& s, const Word& w) {
  validate_word(s.q, w);
  APrinSeed r = s;
  for (auto& st : w) {
    if (st.kind == Step::Mutate) {
      r = aprin_mutate(r, st.k);
    } else {
      APrinSeed t = r;
      t.q = permute(r.q, st.perm);
      for (int i = 0; i < r.q.n; ++i) {
        t.a[st.perm[i]] = r.a[i];
        t.c[st.perm[i]] = r.c[i];
      }
      r = t;
    }
  }
  return r;
}

MultiLaurent f_polynomial(const APrinSeed& s, int j) {
  int n = s.q.n;
  IntMatrix M(n, std::vector<Int>(2 * n, 0));
  for (int i = 0; i < n; ++i) M[i][n + i] = 1;
  return s.a[j].monomial_map(M);
}

MultiLaurent specialize_y_one(const APrinSeed& s, int j) {
  int n = s.q.n;
  IntMatrix M(n, std::vector<Int>(2 * n, 0));
  for (int i = 0; i < n; ++i) M[i][i] = 1;
  return s.a[j].monomial_map(M);
}

IntMatrix p_map_matrix(const Quiver& q) { return q.eps; }

// ------------------------------------------------------------------ tau_N

bool TauReport::all_matched() const {
  if (!quiver_restored) return false;
  for (auto& r : rows)
    if (!r.matched_random || (r.exact_checked && !r.matched_exact)) return false;
  return true;
}

Word tau_word(int n, const std::vector<int>& cycle, const std::vector<int>& order) {
  int N = static_cast<int>(cycle.size());
  if (N < 2) throw std::invalid_argument("tau needs N >= 2");
  std::vector<int> ord = order;
  if (ord.empty()) {
    ord.resize(N);
    std::iota(ord.begin(), ord.end(), 0);
  }
  if (!is_perm(ord, N)) throw WordError("ordering is not a permutation of the cycle");
  std::vector<int> v(N);
  for (int t = 0; t < N; ++t) v[t] = cycle[ord[t]];
  Word w;
  for (int t = 0; t + 1 < N; ++t) w.push_back(Step::mu(v[t]));
  Perm p = identity_perm(n);
  std::swap(p[v[N - 2]], p[v[N - 1]]);
  w.push_back(Step::pi(p));
  for (int t = N - 2; t >= 0; --t) w.push_back(Step::mu(v[t]));
  return w;
}

std::map<int, std::vector<Int>> satellite_c_vectors(const Quiver& q, const std::vector<int>& cycle) {
  int N = static_cast<int>(cycle.size());
  std::vector<bool> in(q.n, false);
  for (int v : cycle) in[v] = true;
  std::map<int, std::vector<Int>> out;
  for (int k = 0; k < q.n; ++k) {
    if (in[k]) continue;
    Int sum = 0;
    for (int v : cycle) sum += q.eps[k][v];
    if (sum != 0)
      throw PreconditionError("vertex " + std::to_string(k + 1) + " has unbalanced arrows to the cycle");
    std::vector<Int> c(N, 0);
    for (int t = 1; t < N; ++t) c[t] = c[t - 1] + q.eps[k][cycle[t]];
    Int mn = *std::min_element(c.begin(), c.end());
    for (auto& x : c) x -= mn;
    out[k] = c;
  }
  return out;
}

namespace {

struct Frac {
  MultiLaurent num, den;
};

Frac fmul(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
Frac fpow(const Frac& a, int k) { return k >= 0 ? Frac{a.num.pow(k), a.den.pow(k)} : Frac{a.den.pow(-k), a.num.pow(-k)}; }

// F_t = 1 + X_{v_t} + X_{v_t}X_{v_{t-1}} + ... (N-1 nonconstant terms)
std::vector<MultiLaurent> cycle_F(int n, const std::vector<int>& cyc) {
  int N = static_cast<int>(cyc.size());
  std::vector<MultiLaurent> F;
  for (int t = 0; t < N; ++t) {
    MultiLaurent f = MultiLaurent::constant(n, 1);
    Exp e(n, 0);
    for (int l = 0; l < N - 1; ++l) {
      e[cyc[((t - l) % N + N) % N]] += 1;
      f.add_term(e, 1);
    }
    F.push_back(f);
  }
  return F;
}

std::vector<std::string> show(const std::vector<Rational>& p) {
  std::vector<std::string> r;
  for (auto& x : p) r.push_back(to_string(x));
  return r;
}

Rational eval_frac(const Frac& f, const std::vector<Rational>& p) { return f.num.eval(p) / f.den.eval(p); }

}  // namespace

TauReport verify_tau_closed_form(const Quiver& q, const std::vector<int>& cyc, const std::vector<int>& order,
                                 int exact_limit, int random_points, std::mt19937_64& rng) {
  int n = q.n, N = static_cast<int>(cyc.size());
  std::vector<int> pos(n, -1);
  for (int t = 0; t < N; ++t) {
    if (cyc[t] < 0 || cyc[t] >= n || pos[cyc[t]] >= 0) throw PreconditionError("cycle vertices must be distinct");
    pos[cyc[t]] = t;
  }
  // q_N shape: N = 2 no arrows, otherwise a consistently oriented cycle
  for (int t = 0; t < N; ++t)
    for (int u = 0; u < N; ++u) {
      Int e = q.eps[cyc[t]][cyc[u]], want = 0;
      if (N > 2 && u == (t + 1) % N) want = 1;
      if (N > 2 && t == (u + 1) % N) want = -1;
      if (e != want) throw PreconditionError("listed vertices do not form q_N in this order");
    }
  auto cvec = satellite_c_vectors(q, cyc);
  Word w = tau_word(n, cyc, order);

  TauReport rep;
  rep.N = N;
  rep.quiver_restored = apply_word(q, w) == q;

  auto F = cycle_F(n, cyc);
  auto X = [&](int v) { return MultiLaurent::var(n, v); };
  auto one = MultiLaurent::constant(n, 1);
  std::vector<Frac> Y(N);
  for (int t = 0; t < N; ++t) Y[t] = {X(cyc[t]) * F[(t - 1 + N) % N], F[t]};

  std::vector<Frac> xform(n), aform(n);
  MultiLaurent W(n);
  for (int t = 0; t < N; ++t) {
    Exp e(n, 0);
    for (auto& [k, c] : cvec) e[k] = static_cast<int>(c[t]);
    e[cyc[t]] -= 1;
    e[cyc[(t + 1) % N]] -= 1;
    W.add_term(e, 1);
  }
  for (int j = 0; j < n; ++j) {
    if (pos[j] >= 0) {
      int t = pos[j];
      xform[j] = fmul({X(j), one}, fpow(fmul(Y[t], Y[(t - 1 + N) % N]), -1));
      aform[j] = {X(j) * W, one};
    } else {
      Frac f{X(j), one};
      for (int t = 0; t < N; ++t) f = fmul(f, fpow(Y[t], static_cast<int>(cvec[j][t])));
      xform[j] = f;
      aform[j] = {X(j), one};
    }
  }

  bool exact = N <= exact_limit;
  XSeed xs;
  ASeed as;
  if (exact) {
    xs = x_apply_word(XSeed::initial(q), w);
    as = a_apply_word(ASeed::initial(q), w);
  }
  std::vector<std::vector<Rational>> pts;
  for (int r = 0; r < random_points; ++r) pts.push_back(random_point(n, rng));
  std::vector<std::vector<Rational>> xv, av;
  for (auto& p : pts) {
    xv.push_back(x_numeric(q, p, w));
    av.push_back(a_numeric(q, p, w));
  }

  for (int side = 0; side < 2; ++side)
    for (int j = 0; j < n; ++j) {
      TauMatch m;
      m.variable = std::string(side == 0 ? "X" : "A") + std::to_string(j + 1);
      const Frac& f = side == 0 ? xform[j] : aform[j];
      if (exact) {
        m.exact_checked = true;
        if (side == 0)
          m.matched_exact = xs.numerator(j) * f.den == f.num * xs.denominator(j);
        else
          m.matched_exact = as.a[j] * f.den == f.num;
      }
      m.matched_random = true;
      for (size_t r = 0; r < pts.size(); ++r) {
        Rational got = side == 0 ? xv[r][j] : av[r][j];
        if (got != eval_frac(f, pts[r])) {
          m.matched_random = false;
          m.witness = show(pts[r]);
          break;
        }
      }
      if (m.matched_random && !pts.empty()) m.witness = show(pts[0]);
      rep.rows.push_back(m);
    }
  return rep;
}

Word dt_word_cycle(int N) {
  std::vector<int> cyc(N);
  std::iota(cyc.begin(), cyc.end(), 0);
  Word w = tau_word(N, cyc);
  Perm r(N);
  for (int i = 0; i < N; ++i) r[i] = (i - 1 + N) % N;
  w.push_back(Step::pi(r));
  return w;
}

bool verify_cycle_dt_formula(int N, bool exact, int random_points, std::mt19937_64& rng) {
  Quiver q = cycle_quiver(N);
  std::vector<int> cyc(N);
  std::iota(cyc.begin(), cyc.end(), 0);
  auto F = cycle_F(N, cyc);
  Word w = dt_word_cycle(N);
  std::vector<Frac> want(N);
  for (int i = 0; i < N; ++i) want[i] = {F[(i + 1) % N], MultiLaurent::var(N, i) * F[(i - 1 + N) % N]};
  if (exact) {
    XSeed s = x_apply_word(XSeed::initial(q), w);
    for (int i = 0; i < N; ++i)
      if (s.numerator(i) * want[i].den != want[i].num * s.denominator(i)) return false;
  }
  for (int r = 0; r < random_points; ++r) {
    auto p = random_point(N, rng);
    auto x = x_numeric(q, p, w);
    for (int i = 0; i < N; ++i)
      if (x[i] != eval_frac(want[i], p)) return false;
  }
  return true;
}

// ------------------------------------------------------------------ octahedra

std::vector<Tri> gamma_points(int m) {
  std::vector<Tri> pts;
  for (int a = m; a >= 0; --a)
    for (int b = m - a; b >= 0; --b) {
      int c = m - a - b;
      if (a == m || b == m || c == m) continue;
      pts.push_back({a, b, c});
    }
  return pts;
}

namespace {

template <class V, class Div>
std::map<std::array<int, 4>, V> oct_run(int m, const std::vector<V>& face, V one, Div div) {
  std::map<std::array<int, 4>, V> T;
  auto pts = gamma_points(m);
  for (size_t i = 0; i < pts.size(); ++i) T[{pts[i][0], pts[i][1], pts[i][2], 0}] = face[i];
  T[{m, 0, 0, 0}] = one;
  T[{0, m, 0, 0}] = one;
  T[{0, 0, m, 0}] = one;
  auto D0 = [&](int a, int b, int c) -> const V& { return T.at({a, b, c, 0}); };
  for (int s = 1; s < m; ++s) {
    int tot = m - s;
    for (int b = tot; b >= 0; --b)
      for (int a = 0; a <= tot - b; ++a) {
        int c = tot - a - b;
        if (a == 0) {
          T[{a, b, c, s}] = D0(s, m - s, 0) * D0(0, b, m - b);
        } else if (c == 0) {
          T[{a, b, c, s}] = D0(m - b, b, 0) * D0(0, m - s, s);
        } else {
          const V& num1 = T.at({a + 1, b, c, s - 1});
          const V& num2 = T.at({a - 1, b + 1, c, s});
          const V& num3 = T.at({a, b, c + 1, s - 1});
          const V& num4 = T.at({a, b + 1, c - 1, s});
          T[{a, b, c, s}] = div(num1 * num2 + num3 * num4, T.at({a, b + 1, c, s - 1}));
        }
      }
  }
  return T;
}

}  // namespace

OctTable octahedral_expand(int m) {
  if (m < 2) throw std::invalid_argument("octahedral recursion needs m >= 2");
  auto pts = gamma_points(m);
  int nv = static_cast<int>(pts.size());
  std::vector<MultiLaurent> face;
  for (int i = 0; i < nv; ++i) face.push_back(MultiLaurent::var(nv, i));
  return oct_run<MultiLaurent>(m, face, MultiLaurent::constant(nv, 1), [](const MultiLaurent& x, const MultiLaurent& y) {
    auto q = x.divide_exact(y);
    if (!q) throw LaurentViolation("octahedral recursion left the Laurent ring");
    return *q;
  });
}

std::map<std::array<int, 4>, Rational> octahedral_numeric(int m, const std::vector<Rational>& face) {
  if (face.size() != gamma_points(m).size()) throw DimensionError("face value count mismatch");
  return oct_run<Rational>(m, face, Rational(1), [](const Rational& x, const Rational& y) {
    if (y == 0) throw DivisionError("vanishing octahedral denominator");
    return Rational(x / y);
  });
}

MultiLaurent delta_star(const OctTable& t, const Tri& p) { return t.at({p[2], 0, p[0], p[1]}); }

// ------------------------------------------------------------------ Schutzenberger

// d = {D(a+1,b,c), D(a,b,c+1), D(a+1,b-1,c+1), D(a,b-1,c+2), D(a+2,b-1,c),
//      D'(a-1,b,c+1), D'(a,b,c), D'(a+1,b,c-1)}  (tropical values)
Int schutzenberger_generic_residual(const std::array<Int, 8>& d) {
  Int J = std::min(d[2] + d[5], d[3] + d[6]) - d[1];  // D'(a,b-1,c+1)
  Int I = std::min(d[4] + d[6], d[2] + d[7]) - d[0];  // D'(a+1,b-1,c)
  Int lhs = J - I;
  Int R2 = d[1] - d[0];  // R_{a,b,c}
  Int R3 = d[2] - d[4];  // R_{a+1,b-1,c}
  Int R4 = d[3] - d[2];  // R_{a,b-1,c+1}
  Int R5 = d[6] - d[7];  // R'_{a,b,c-1}
  Int R6 = d[5] - d[6];  // R'_{a-1,b,c}
  Int rhs = std::min(R6, R4) + std::max(R5, R3) - R2;
  return lhs - rhs;
}

bool schutzenberger_trop_check(int m, int trials, std::mt19937_64& rng, std::string* detail) {
  if (m < 3) throw std::invalid_argument("Schutzenberger check needs m >= 3");
  std::uniform_int_distribution<Int> U(-10, 10);
  for (int t = 0; t < trials; ++t) {
    std::array<Int, 8> d;
    for (auto& x : d) x = U(rng);
    if (schutzenberger_generic_residual(d) != 0) {
      if (detail) *detail = "generic instance failed";
      return false;
    }
  }
  // full table: tropicalise each Delta^s and test every interior instance
  OctTable T = octahedral_expand(m);
  for (auto& [k, v] : T)
    if (!v.all_coeffs_positive()) {
      if (detail) *detail = "non-positive octahedral value";
      return false;
    }
  int nv = static_cast<int>(gamma_points(m).size());
  int table_trials = std::min(trials, 25);
  for (int t = 0; t < table_trials; ++t) {
    std::vector<Int> x(nv);
    for (auto& v : x) v = U(rng);
    std::map<std::array<int, 4>, Int> tv;
    for (auto& [k, v] : T) tv[k] = v.trop_eval(x);
    auto R = [&](int a, int b, int c, int s) { return tv.at({a, b, c + 1, s}) - tv.at({a + 1, b, c, s}); };
    for (int s = 0; s + 1 < m; ++s)
      for (int a = 1; a < m; ++a)
        for (int b = 1; b < m; ++b) {
          int c = m - 1 - s - a - b;
          if (c < 1) continue;
          Int lhs = R(a, b - 1, c, s + 1);
          Int rhs = std::min(R(a - 1, b, c, s + 1), R(a, b - 1, c + 1, s)) +
                    std::max(R(a, b, c - 1, s + 1), R(a + 1, b - 1, c, s)) - R(a, b, c, s);
          if (lhs != rhs) {
            if (detail)
              *detail = "table instance failed at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + "," + std::to_string(s) + ")";
            return false;
          }
        }
  }
  return true;
}

}  // namespace cl
