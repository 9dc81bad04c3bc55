#pragma once
// quantum torus: X_a X_b = q^{(a,b)} X_{a+b}, coefficients in QLaurent or QFraction

#include <map>
#include <sstream>
#include <string>

#include "cl/algebra.hpp"

namespace cl {

Int pairing(const IntMatrix& form, const Exp& a, const Exp& b);
bool is_skew(const IntMatrix& m);

template <class C>
class QTorus {
 public:
  QTorus() = default;
  explicit QTorus(int rank) : n_(rank) {}
  static QTorus unit(int rank) { return monomial(Exp(rank, 0)); }
  static QTorus monomial(const Exp& v, const C& c = C(1)) {
    QTorus r(static_cast<int>(v.size()));
    r.add_term(v, c);
    return r;
  }

  int rank() const { return n_; }
  const std::map<Exp, C>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  C coeff(const Exp& v) const {
    auto it = t_.find(v);
    return it == t_.end() ? C() : it->second;
  }

  void add_term(const Exp& v, const C& c) {
    if (static_cast<int>(v.size()) != n_) throw DimensionError("lattice rank mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(v, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  QTorus& operator+=(const QTorus& o) {
    if (o.n_ != n_) throw DimensionError("lattice rank mismatch");
    for (auto& [v, c] : o.t_) add_term(v, c);
    return *this;
  }
  QTorus& operator-=(const QTorus& o) {
    if (o.n_ != n_) throw DimensionError("lattice rank mismatch");
    for (auto& [v, c] : o.t_) add_term(v, -c);
    return *this;
  }
  friend QTorus operator+(QTorus a, const QTorus& b) { return a += b; }
  friend QTorus operator-(QTorus a, const QTorus& b) { return a -= b; }
  QTorus scaled(const C& c) const {
    QTorus r(n_);
    for (auto& [v, x] : t_) r.add_term(v, x * c);
    return r;
  }
  bool operator==(const QTorus& o) const { return n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const QTorus& o) const { return !(*this == o); }

  // X_v fixed, q -> 1/q
  QTorus bar() const {
    QTorus r(n_);
    for (auto& [v, c] : t_) r.add_term(v, c.bar());
    return r;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, c] : t_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")X[";
      for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      os << "]";
    }
    return os.str();
  }

 private:
  int n_ = 0;
  std::map<Exp, C> t_;
};

template <class C>
QTorus<C> qtorus_mul(const QTorus<C>& a, const QTorus<C>& b, const IntMatrix& form) {
  if (a.rank() != b.rank() || static_cast<int>(form.size()) != a.rank())
    throw DimensionError("lattice rank mismatch");
  QTorus<C> r(a.rank());
  Exp s(a.rank());
  for (auto& [va, ca] : a.terms())
    for (auto& [vb, cb] : b.terms()) {
      for (int i = 0; i < a.rank(); ++i) s[i] = va[i] + vb[i];
      r.add_term(s, (ca * cb).qshift(static_cast<int>(pairing(form, va, vb))));
    }
  return r;
}

using QTorusElt = QTorus<QLaurent>;

// q -> 1: commutative Laurent polynomial
MultiLaurent at_q_one(const QTorusElt& a);

}  // namespace cl
