#pragma once
// exact arithmetic: rationals (GMP), sparse Laurent polynomials, Laurent
// polynomials in q, fractions over products of (q^{2a}-1)

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cl {

using Rational = mpq_class;
using Int = long long;
using Exp = std::vector<int>;
using IntMatrix = std::vector<std::vector<Int>>;

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// 64-bit arithmetic that refuses to wrap
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow; use the arbitrary-precision path");
  return r;
}
inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow; use the arbitrary-precision path");
  return r;
}

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);  // always "num/den"
Rational parse_rational(const std::string& s);

struct ExpHash {
  size_t operator()(const Exp& e) const noexcept {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : e) h ^= std::hash<int>()(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

// ---------------------------------------------------------------------------
// MultiLaurent: sum of c * x^e with e in Z^n
class MultiLaurent {
 public:
  using Terms = std::unordered_map<Exp, Rational, ExpHash>;

  MultiLaurent() = default;
  explicit MultiLaurent(int nvars) : n_(nvars) {}
  static MultiLaurent constant(int nvars, const Rational& c);
  static MultiLaurent var(int nvars, int i, int power = 1);
  static MultiLaurent monomial(const Exp& e, const Rational& c = 1);

  int nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }
  bool is_constant() const;
  Rational coeff(const Exp& e) const;

  void add_term(const Exp& e, const Rational& c);

  MultiLaurent operator-() const;
  MultiLaurent& operator+=(const MultiLaurent& o);
  MultiLaurent& operator-=(const MultiLaurent& o);
  MultiLaurent& operator*=(const Rational& c);
  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
  friend MultiLaurent operator*(MultiLaurent a, const Rational& c) { return a *= c; }
  bool operator==(const MultiLaurent& o) const { return n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const MultiLaurent& o) const { return !(*this == o); }

  MultiLaurent pow(int k) const;  // k < 0 only for monomials
  MultiLaurent shifted(const Exp& by) const;
  Exp min_exponents() const;
  // exact quotient, nullopt when g does not divide *this in the Laurent ring
  std::optional<MultiLaurent> divide_exact(const MultiLaurent& g) const;
  // x^e -> x^{M e}; M has rows = new variables, cols = old variables
  MultiLaurent monomial_map(const IntMatrix& M) const;
  // evaluate with rational values (nonzero where negative powers occur)
  Rational eval(const std::vector<Rational>& pt) const;
  // min over terms of <e, pt>; only meaningful for positive coefficients
  Int trop_eval(const std::vector<Int>& pt) const;
  bool all_coeffs_positive() const;

  // canonical order: lexicographic on exponents
  std::vector<std::pair<Exp, Rational>> sorted() const;
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int n_ = 0;
  Terms t_;
};

// ---------------------------------------------------------------------------
// QLaurent: Laurent polynomial in q
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(const Rational& c) { if (c != 0) t_[0] = c; }  // NOLINT
  QLaurent(long c) : QLaurent(Rational(c)) {}               // NOLINT
  static QLaurent qpow(int k, const Rational& c = 1);

  const std::map<int, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int min_deg() const { return t_.begin()->first; }
  int max_deg() const { return t_.rbegin()->first; }
  Rational coeff(int k) const;

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
  bool operator==(const QLaurent& o) const { return t_ == o.t_; }
  bool operator!=(const QLaurent& o) const { return t_ != o.t_; }

  QLaurent qshift(int k) const;  // times q^k
  QLaurent bar() const;          // q -> q^{-1}
  QLaurent pow(int k) const;
  Rational at_one() const;
  // quotient when divisible (leading coefficient of d must be a unit times q^j)
  std::optional<QLaurent> divide_exact(const QLaurent& d) const;
  std::string str() const;

 private:
  std::map<int, Rational> t_;
};

// q^{2a} - 1
QLaurent qcyc(int a);

// ---------------------------------------------------------------------------
// QFraction: num / prod_a (q^{2a}-1)^{m_a}
class QFraction {
 public:
  QFraction() = default;
  QFraction(const QLaurent& n) : num_(n) {}    // NOLINT
  QFraction(const Rational& c) : num_(c) {}    // NOLINT
  QFraction(long c) : num_(Rational(c)) {}     // NOLINT
  QFraction(QLaurent n, std::map<int, int> den);

  const QLaurent& num() const { return num_; }
  const std::map<int, int>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QFraction operator-() const;
  QFraction& operator+=(const QFraction& o);
  QFraction& operator-=(const QFraction& o);
  friend QFraction operator+(QFraction a, const QFraction& b) { return a += b; }
  friend QFraction operator-(QFraction a, const QFraction& b) { return a -= b; }
  friend QFraction operator*(const QFraction& a, const QFraction& b);
  QFraction& operator*=(const QFraction& o) { return *this = *this * o; }
  bool operator==(const QFraction& o) const;
  bool operator!=(const QFraction& o) const { return !(*this == o); }

  QFraction qshift(int k) const;
  QFraction bar() const;
  QFraction divided_by_cyc(int a, int mult = 1) const;
  void reduce();
  QLaurent expanded_den() const;
  std::string str() const;

 private:
  QLaurent num_;
  std::map<int, int> den_;
};

}  // namespace cl
