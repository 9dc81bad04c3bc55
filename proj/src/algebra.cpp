#include "cl/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cl {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw DivisionError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

static Rational rpow(const Rational& b, int k) {
  if (k == 0) return 1;
  unsigned long a = static_cast<unsigned long>(k < 0 ? -k : k);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), b.get_num_mpz_t(), a);
  mpz_pow_ui(d.get_mpz_t(), b.get_den_mpz_t(), a);
  if (k < 0) {
    if (n == 0) throw DivisionError("negative power of zero");
    std::swap(n, d);
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// ------------------------------------------------------------ MultiLaurent

MultiLaurent MultiLaurent::constant(int nvars, const Rational& c) {
  MultiLaurent p(nvars);
  if (c != 0) p.t_[Exp(nvars, 0)] = c;
  return p;
}

MultiLaurent MultiLaurent::var(int nvars, int i, int power) {
  Exp e(nvars, 0);
  e.at(i) = power;
  return monomial(e);
}

MultiLaurent MultiLaurent::monomial(const Exp& e, const Rational& c) {
  MultiLaurent p(static_cast<int>(e.size()));
  if (c != 0) p.t_[e] = c;
  return p;
}

bool MultiLaurent::is_constant() const {
  if (t_.empty()) return true;
  if (t_.size() != 1) return false;
  for (int x : t_.begin()->first)
    if (x) return false;
  return true;
}

Rational MultiLaurent::coeff(const Exp& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rational(0) : it->second;
}

void MultiLaurent::add_term(const Exp& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_) throw DimensionError("exponent length mismatch");
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
  if (o.n_ != n_) throw DimensionError("variable count mismatch");
  for (auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
  if (o.n_ != n_) throw DimensionError("variable count mismatch");
  for (auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

MultiLaurent& MultiLaurent::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [e, v] : t_) v *= c;
  return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
  if (a.n_ != b.n_) throw DimensionError("variable count mismatch");
  MultiLaurent r(a.n_);
  r.t_.reserve(a.t_.size() * b.t_.size());
  Exp e(a.n_);
  for (auto& [ea, ca] : a.t_)
    for (auto& [eb, cb] : b.t_) {
      for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiLaurent MultiLaurent::pow(int k) const {
  if (k < 0) {
    if (!is_monomial()) throw DivisionError("negative power of a non-monomial");
    auto& [e, c] = *t_.begin();
    Exp f(e);
    for (int& x : f) x *= k;
    return monomial(f, rpow(c, k));
  }
  MultiLaurent r = constant(n_, 1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

MultiLaurent MultiLaurent::shifted(const Exp& by) const {
  MultiLaurent r(n_);
  r.t_.reserve(t_.size());
  for (auto& [e, c] : t_) {
    Exp f(e);
    for (int i = 0; i < n_; ++i) f[i] += by[i];
    r.t_.emplace(std::move(f), c);
  }
  return r;
}

Exp MultiLaurent::min_exponents() const {
  Exp m(n_, 0);
  bool first = true;
  for (auto& [e, c] : t_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < n_; ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

std::optional<MultiLaurent> MultiLaurent::divide_exact(const MultiLaurent& g) const {
  if (g.n_ != n_) throw DimensionError("variable count mismatch");
  if (g.is_zero()) throw DivisionError("division by zero polynomial");
  if (is_zero()) return MultiLaurent(n_);
  if (g.is_monomial()) return *this * g.pow(-1);

  Exp fmin = min_exponents(), gmin = g.min_exponents();
  // lex-descending remainder, leading term at begin()
  std::map<Exp, Rational, std::greater<Exp>> rem;
  for (auto& [e, c] : t_) {
    Exp f(e);
    for (int i = 0; i < n_; ++i) f[i] -= fmin[i];
    rem.emplace(std::move(f), c);
  }
  std::vector<std::pair<Exp, Rational>> G;
  for (auto& [e, c] : g.t_) {
    Exp f(e);
    for (int i = 0; i < n_; ++i) f[i] -= gmin[i];
    G.emplace_back(std::move(f), c);
  }
  std::sort(G.begin(), G.end(), [](auto& x, auto& y) { return x.first > y.first; });
  const Exp& lt = G.front().first;
  const Rational& lc = G.front().second;

  MultiLaurent q(n_);
  Exp d(n_), f(n_);
  while (!rem.empty()) {
    auto it = rem.begin();
    for (int i = 0; i < n_; ++i) {
      d[i] = it->first[i] - lt[i];
      if (d[i] < 0) return std::nullopt;
    }
    Rational c = it->second / lc;
    q.t_[d] = c;
    rem.erase(it);
    for (size_t j = 1; j < G.size(); ++j) {
      for (int i = 0; i < n_; ++i) f[i] = d[i] + G[j].first[i];
      auto [jt, fresh] = rem.try_emplace(f, 0);
      jt->second -= c * G[j].second;
      if (jt->second == 0) rem.erase(jt);
    }
  }
  Exp s(n_);
  for (int i = 0; i < n_; ++i) s[i] = fmin[i] - gmin[i];
  return q.shifted(s);
}

MultiLaurent MultiLaurent::monomial_map(const IntMatrix& M) const {
  int m = static_cast<int>(M.size());
  MultiLaurent r(m);
  Exp f(m);
  for (auto& [e, c] : t_) {
    for (int i = 0; i < m; ++i) {
      Int s = 0;
      for (int j = 0; j < n_; ++j) s += M[i][j] * e[j];
      f[i] = static_cast<int>(s);
    }
    r.add_term(f, c);
  }
  return r;
}

Rational MultiLaurent::eval(const std::vector<Rational>& pt) const {
  if (static_cast<int>(pt.size()) != n_) throw DimensionError("point dimension mismatch");
  std::vector<std::map<int, Rational>> cache(n_);
  Rational s = 0;
  for (auto& [e, c] : t_) {
    Rational v = c;
    for (int i = 0; i < n_; ++i) {
      if (!e[i]) continue;
      auto it = cache[i].find(e[i]);
      if (it == cache[i].end()) {
        if (e[i] < 0 && pt[i] == 0) throw DivisionError("zero value for an inverted variable");
        it = cache[i].emplace(e[i], rpow(pt[i], e[i])).first;
      }
      v *= it->second;
    }
    s += v;
  }
  return s;
}

Int MultiLaurent::trop_eval(const std::vector<Int>& pt) const {
  if (t_.empty()) throw DivisionError("tropical value of zero");
  Int best = 0;
  bool first = true;
  for (auto& [e, c] : t_) {
    Int s = 0;
    for (int i = 0; i < n_; ++i) s += e[i] * pt[i];
    if (first || s < best) best = s;
    first = false;
  }
  return best;
}

bool MultiLaurent::all_coeffs_positive() const {
  for (auto& [e, c] : t_)
    if (c <= 0) return false;
  return true;
}

std::vector<std::pair<Exp, Rational>> MultiLaurent::sorted() const {
  std::vector<std::pair<Exp, Rational>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return v;
}

std::string MultiLaurent::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : sorted()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int i = 0; i < n_; ++i) {
      if (!e[i]) continue;
      os << "*" << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

// ------------------------------------------------------------ QLaurent

QLaurent QLaurent::qpow(int k, const Rational& c) {
  QLaurent r;
  if (c != 0) r.t_[k] = c;
  return r;
}

Rational QLaurent::coeff(int k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Rational(0) : it->second;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (auto& [k, c] : o.t_) {
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) { return *this += -o; }

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (auto& [i, x] : a.t_)
    for (auto& [j, y] : b.t_) {
      auto [it, fresh] = r.t_.try_emplace(i + j, x * y);
      if (!fresh) {
        it->second += x * y;
        if (it->second == 0) r.t_.erase(it);
      }
    }
  return r;
}

QLaurent QLaurent::qshift(int k) const {
  QLaurent r;
  for (auto& [i, c] : t_) r.t_.emplace(i + k, c);
  return r;
}

QLaurent QLaurent::bar() const {
  QLaurent r;
  for (auto& [i, c] : t_) r.t_.emplace(-i, c);
  return r;
}

QLaurent QLaurent::pow(int k) const {
  if (k < 0) {
    if (t_.size() != 1) throw DivisionError("negative power of a non-monomial in q");
    auto& [i, c] = *t_.begin();
    return qpow(i * k, rpow(c, k));
  }
  QLaurent r(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Rational QLaurent::at_one() const {
  Rational s = 0;
  for (auto& [i, c] : t_) s += c;
  return s;
}

std::optional<QLaurent> QLaurent::divide_exact(const QLaurent& d) const {
  if (d.is_zero()) throw DivisionError("division by zero in Z[q,q^-1]");
  if (is_zero()) return QLaurent();
  // shift both to polynomials with nonzero constant term, then long division
  std::map<int, Rational> rem;
  int a0 = min_deg(), d0 = d.min_deg();
  for (auto& [i, c] : t_) rem[i - a0] = c;
  std::vector<std::pair<int, Rational>> D;
  for (auto& [i, c] : d.t_) D.emplace_back(i - d0, c);
  int dtop = D.back().first;
  Rational lc = D.back().second;
  QLaurent q;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    int k = top->first - dtop;
    if (k < 0) return std::nullopt;
    Rational c = top->second / lc;
    q.t_[k] = c;
    for (auto& [j, dc] : D) {
      auto [it, fresh] = rem.try_emplace(j + k, 0);
      it->second -= c * dc;
      if (it->second == 0) rem.erase(it);
    }
  }
  return q.qshift(a0 - d0);
}

std::string QLaurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [i, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (i) os << "*q^" << i;
  }
  return os.str();
}

QLaurent qcyc(int a) { return QLaurent::qpow(2 * a) - QLaurent(1); }

// ------------------------------------------------------------ QFraction

static QLaurent cyc_power(const std::map<int, int>& f) {
  QLaurent r(1);
  for (auto& [a, m] : f)
    for (int i = 0; i < m; ++i) r = r * qcyc(a);
  return r;
}

QFraction::QFraction(QLaurent n, std::map<int, int> den) : num_(std::move(n)) {
  for (auto& [a, m] : den) {
    if (m < 0) throw std::invalid_argument("negative multiplicity in denominator");
    if (m > 0 && a != 0) den_[a] = m;
    if (a == 0 && m > 0) throw DivisionError("q^0 - 1 in denominator");
  }
  if (num_.is_zero()) den_.clear();
}

QFraction QFraction::operator-() const {
  QFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

QFraction& QFraction::operator+=(const QFraction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    std::map<int, int> M = den_, e1, e2;
    for (auto& [a, m] : o.den_) M[a] = std::max(M[a], m);
    for (auto& [a, m] : M) {
      auto i1 = den_.find(a);
      auto i2 = o.den_.find(a);
      e1[a] = m - (i1 == den_.end() ? 0 : i1->second);
      e2[a] = m - (i2 == o.den_.end() ? 0 : i2->second);
    }
    num_ = num_ * cyc_power(e1) + o.num_ * cyc_power(e2);
    den_ = M;
  }
  reduce();
  return *this;
}

QFraction& QFraction::operator-=(const QFraction& o) { return *this += -o; }

QFraction operator*(const QFraction& a, const QFraction& b) {
  if (a.is_zero() || b.is_zero()) return QFraction();
  QFraction r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_;
  for (auto& [k, m] : b.den_) r.den_[k] += m;
  r.reduce();
  return r;
}

bool QFraction::operator==(const QFraction& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  std::map<int, int> M = den_, e1, e2;
  for (auto& [a, m] : o.den_) M[a] = std::max(M[a], m);
  for (auto& [a, m] : M) {
    auto i1 = den_.find(a), i2 = o.den_.find(a);
    e1[a] = m - (i1 == den_.end() ? 0 : i1->second);
    e2[a] = m - (i2 == o.den_.end() ? 0 : i2->second);
  }
  return num_ * cyc_power(e1) == o.num_ * cyc_power(e2);
}

QFraction QFraction::qshift(int k) const {
  QFraction r = *this;
  r.num_ = num_.qshift(k);
  return r;
}

QFraction QFraction::bar() const {
  // 1/(q^{-2a}-1) = -q^{2a}/(q^{2a}-1)
  QFraction r;
  r.num_ = num_.bar();
  int shift = 0, sign = 1;
  for (auto& [a, m] : den_) {
    shift += 2 * a * m;
    if (m % 2) sign = -sign;
  }
  r.num_ = r.num_.qshift(shift);
  if (sign < 0) r.num_ = -r.num_;
  r.den_ = den_;
  return r;
}

QFraction QFraction::divided_by_cyc(int a, int mult) const {
  if (a <= 0) throw DivisionError("cyclotomic index must be positive");
  QFraction r = *this;
  if (r.is_zero()) return r;
  r.den_[a] += mult;
  r.reduce();
  return r;
}

void QFraction::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = num_.divide_exact(qcyc(it->first));
      if (!q) break;
      num_ = *q;
      --it->second;
    }
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
}

QLaurent QFraction::expanded_den() const { return cyc_power(den_); }

std::string QFraction::str() const {
  if (den_.empty()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ")/(";
  bool first = true;
  for (auto& [a, m] : den_) {
    if (!first) os << "*";
    first = false;
    os << "(q^" << 2 * a << "-1)";
    if (m != 1) os << "^" << m;
  }
  os << ")";
  return os.str();
}

}  // namespace cl
