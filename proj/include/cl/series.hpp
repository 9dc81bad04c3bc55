#pragma once
// q-commuting formal series truncated by degree in a positive cone basis

#include "cl/qtorus.hpp"

namespace cl {

using QSeriesTorus = QTorus<QFraction>;

struct ConeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class TruncatedSeries {
 public:
  // cone rows are the basis vectors; default is the standard basis
  TruncatedSeries(IntMatrix form, int order, IntMatrix cone = {});
  static TruncatedSeries one(const IntMatrix& form, int order, const IntMatrix& cone = {});

  int rank() const { return static_cast<int>(form_.size()); }
  int order() const { return order_; }
  const IntMatrix& form() const { return form_; }
  const IntMatrix& cone() const { return cone_; }
  const QSeriesTorus& base() const { return s_; }

  // nonnegative cone degree, or throws ConeError
  int degree(const Exp& v) const;
  bool in_cone(const Exp& v) const;
  void add_term(const Exp& v, const QFraction& c);
  QFraction coeff(const Exp& v) const { return s_.coeff(v); }

  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  bool operator==(const TruncatedSeries& o) const;
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }
  TruncatedSeries truncated(int order) const;
  // requires constant term 1
  TruncatedSeries inverse() const;
  // substitute q -> q^{-1} in every coefficient
  TruncatedSeries bar() const;
  // q^{2(., w)}-twist of terms: X_{-w} S X_{w}
  TruncatedSeries conjugated_by_monomial(const Exp& w) const;
  size_t size() const { return s_.size(); }
  std::string str() const { return s_.str(); }

 private:
  void check_compatible(const TruncatedSeries& o) const;
  IntMatrix form_;
  int order_;
  IntMatrix cone_;
  std::vector<std::vector<Rational>> inv_;  // inverse of cone basis
  QSeriesTorus s_;
};

// Psi_q(X_v) = sum_n q^n X_{nv} / prod_{a=1}^n (q^{2a}-1)
TruncatedSeries quantum_dilog(const Exp& v, const IntMatrix& form, int order,
                              const IntMatrix& cone = {});
// coefficient of x^n in Psi_q(x)
QFraction dilog_coeff(int n);
// coefficient of x^n in log Psi_q(x) computed from the series
std::vector<QFraction> log_dilog_coeffs(int order);
// closed form (-1)^{n+1} / (n (q^n - q^{-n}))
QFraction log_dilog_closed(int n);

}  // namespace cl
