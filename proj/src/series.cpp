#include "cl/series.hpp"

namespace cl {

Int pairing(const IntMatrix& form, const Exp& a, const Exp& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) s += a[i] * form[i][j] * b[j];
  }
  return s;
}

bool is_skew(const IntMatrix& m) {
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != -m[j][i]) return false;
  }
  return true;
}

MultiLaurent at_q_one(const QTorusElt& a) {
  MultiLaurent r(a.rank());
  for (auto& [v, c] : a.terms()) r.add_term(v, c.at_one());
  return r;
}

static std::vector<std::vector<Rational>> invert(const IntMatrix& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw ConeError("cone basis must be square");
    for (int j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m[i][j]));
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw ConeError("cone basis is singular");
    std::swap(a[p], a[c]);
    Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

TruncatedSeries::TruncatedSeries(IntMatrix form, int order, IntMatrix cone)
    : form_(std::move(form)), order_(order), cone_(std::move(cone)), s_(static_cast<int>(form_.size())) {
  if (order_ < 0) throw std::invalid_argument("negative truncation order");
  if (!is_skew(form_)) throw DimensionError("form must be skew-symmetric");
  int n = rank();
  if (cone_.empty()) {
    cone_.assign(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) cone_[i][i] = 1;
  }
  inv_ = invert(cone_);
}

TruncatedSeries TruncatedSeries::one(const IntMatrix& form, int order, const IntMatrix& cone) {
  TruncatedSeries s(form, order, cone);
  s.add_term(Exp(form.size(), 0), QFraction(1));
  return s;
}

int TruncatedSeries::degree(const Exp& v) const {
  int n = rank();
  Rational tot = 0;
  for (int i = 0; i < n; ++i) {
    Rational li = 0;
    for (int j = 0; j < n; ++j) li += Rational(v[j]) * inv_[j][i];
    if (li < 0 || li.get_den() != 1) throw ConeError("vector outside the positive cone");
    tot += li;
  }
  return static_cast<int>(tot.get_num().get_si());
}

bool TruncatedSeries::in_cone(const Exp& v) const {
  try {
    degree(v);
    return true;
  } catch (const ConeError&) {
    return false;
  }
}

void TruncatedSeries::add_term(const Exp& v, const QFraction& c) {
  if (degree(v) <= order_) s_.add_term(v, c);
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (o.form_ != form_ || o.cone_ != cone_ || o.order_ != order_)
    throw ConeError("series with different cone, form or order");
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries r(form_, order_, cone_);
  std::vector<std::pair<const Exp*, int>> db;
  for (auto& [v, c] : o.s_.terms()) db.emplace_back(&v, degree(v));
  Exp s(rank());
  for (auto& [va, ca] : s_.terms()) {
    int da = degree(va);
    size_t j = 0;
    for (auto& [vb, cb] : o.s_.terms()) {
      int d = db[j++].second;
      if (da + d > order_) continue;
      for (int i = 0; i < rank(); ++i) s[i] = va[i] + vb[i];
      r.s_.add_term(s, (ca * cb).qshift(static_cast<int>(pairing(form_, va, vb))));
    }
  }
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  s_ += o.s_;
  return *this;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries r = *this;
  r.s_ -= o.s_;
  return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  check_compatible(o);
  return (*this - o).s_.is_zero();
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries r(form_, order, cone_);
  for (auto& [v, c] : s_.terms()) r.add_term(v, c);
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  Exp zero(rank(), 0);
  if (s_.coeff(zero) != QFraction(1)) throw ConeError("inverse needs constant term 1");
  TruncatedSeries u(form_, order_, cone_);  // u = 1 - S
  for (auto& [v, c] : s_.terms())
    if (v != zero) u.s_.add_term(v, -c);
  TruncatedSeries acc = one(form_, order_, cone_), p = acc;
  for (int k = 1; k <= order_; ++k) {
    p = p * u;
    if (p.s_.is_zero()) break;
    acc += p;
  }
  return acc;
}

TruncatedSeries TruncatedSeries::bar() const {
  TruncatedSeries r(form_, order_, cone_);
  r.s_ = s_.bar();
  return r;
}

TruncatedSeries TruncatedSeries::conjugated_by_monomial(const Exp& w) const {
  TruncatedSeries r(form_, order_, cone_);
  for (auto& [v, c] : s_.terms()) r.s_.add_term(v, c.qshift(static_cast<int>(2 * pairing(form_, v, w))));
  return r;
}

QFraction dilog_coeff(int n) {
  std::map<int, int> den;
  for (int a = 1; a <= n; ++a) den[a] = 1;
  return QFraction(QLaurent::qpow(n), den);
}

TruncatedSeries quantum_dilog(const Exp& v, const IntMatrix& form, int order, const IntMatrix& cone) {
  TruncatedSeries s(form, order, cone);
  int d = s.degree(v);
  if (d == 0) throw ConeError("dilogarithm of the zero vector");
  Exp w(v.size(), 0);
  for (int n = 0; n * d <= order; ++n) {
    s.add_term(w, dilog_coeff(n));
    for (size_t i = 0; i < v.size(); ++i) w[i] += v[i];
  }
  return s;
}

std::vector<QFraction> log_dilog_coeffs(int order) {
  // univariate: u = Psi - 1, log(1+u) = sum (-1)^{j+1} u^j / j
  std::vector<QFraction> u(order + 1), p(order + 1), out(order + 1);
  for (int n = 1; n <= order; ++n) u[n] = dilog_coeff(n);
  p = u;
  for (int j = 1; j <= order; ++j) {
    Rational f = Rational(j % 2 ? 1 : -1) / j;
    for (int n = 0; n <= order; ++n) out[n] += p[n] * QFraction(f);
    std::vector<QFraction> nx(order + 1);
    for (int a = 1; a <= order; ++a) {
      if (p[a].is_zero()) continue;
      for (int b = 1; a + b <= order; ++b) nx[a + b] += p[a] * u[b];
    }
    p = nx;
  }
  return out;
}

QFraction log_dilog_closed(int n) {
  Rational c = Rational(n % 2 ? 1 : -1) / n;
  return QFraction(QLaurent::qpow(n, c), {{n, 1}});
}

}  // namespace cl
