#pragma once
// classical seeds: X (rational), A (Laurent), A with principal coefficients;
// tau_N closed forms; octahedral recursion; tropical Schutzenberger check

#include <array>
#include <map>
#include <memory>
#include <random>

#include "cl/quiver.hpp"

namespace cl {

struct LaurentViolation : std::logic_error {
  using std::logic_error::logic_error;
};
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ------------------------------------------------------------------ X side
// value = c * X^mono * prod pool[i]^fac[i]; pool entries are polynomials with
// no monomial factor, normalised so the lex-smallest term has coefficient 1
struct FactorPool {
  std::vector<MultiLaurent> polys;
};

struct XValue {
  Rational c = 1;
  Exp mono;
  std::map<int, int> fac;
  XValue inverse() const;
  XValue pow(int k) const;
  XValue operator*(const XValue& o) const;
};

class XSeed {
 public:
  static XSeed initial(const Quiver& q);
  const Quiver& quiver() const { return q_; }
  int size() const { return q_.n; }
  const XValue& value(int i) const { return x_[i]; }
  MultiLaurent numerator(int i) const;
  MultiLaurent denominator(int i) const;
  Rational eval(int i, const std::vector<Rational>& pt) const;
  const FactorPool& pool() const { return *pool_; }

  friend XSeed x_mutate(const XSeed& s, int k);
  friend XSeed x_permute(const XSeed& s, const Perm& p);

 private:
  XValue one_plus(const XValue& y) const;
  MultiLaurent expand(const XValue& v, bool positive_part) const;
  Quiver q_;
  std::shared_ptr<FactorPool> pool_;
  std::vector<XValue> x_;
};

XSeed x_mutate(const XSeed& s, int k);
XSeed x_permute(const XSeed& s, const Perm& p);
XSeed x_apply_word(const XSeed& s, const Word& w);

// numeric replay, used as an independent randomized oracle
std::vector<Rational> x_numeric(const Quiver& q, std::vector<Rational> x, const Word& w);
std::vector<Rational> a_numeric(const Quiver& q, std::vector<Rational> a, const Word& w);

// ------------------------------------------------------------------ A side
struct ASeed {
  Quiver q;
  std::vector<MultiLaurent> a;
  static ASeed initial(const Quiver& q);
};
ASeed a_mutate(const ASeed& s, int k);
ASeed a_apply_word(const ASeed& s, const Word& w);

struct APrinSeed {
  Quiver q;
  std::vector<MultiLaurent> a;  // variables A_1..A_n, y_1..y_n
  IntMatrix c;                  // y-exponent of the coefficient at vertex i
  static APrinSeed initial(const Quiver& q);
};
APrinSeed aprin_mutate(const APrinSeed& s, int k);
APrinSeed aprin_apply_word(const APrinSeed& s, const Word& w);
// A_i := 1
MultiLaurent f_polynomial(const APrinSeed& s, int j);
// A_i := 1 for y, drop y entirely (y := 1)
MultiLaurent specialize_y_one(const APrinSeed& s, int j);

// p*X_j = prod_i A_i^{eps_ij}
IntMatrix p_map_matrix(const Quiver& q);

// ------------------------------------------------------------------ tau_N
struct TauMatch {
  std::string variable;
  bool matched_exact = false;
  bool exact_checked = false;
  bool matched_random = false;
  std::vector<std::string> witness;  // point used in randomized check
};
struct TauReport {
  int N = 0;
  bool quiver_restored = false;
  std::vector<TauMatch> rows;
  bool all_matched() const;
};

// order is a permutation of the cycle positions; empty = 0..N-1
Word tau_word(int n, const std::vector<int>& cycle, const std::vector<int>& order = {});
// c_k for vertices outside the cycle; throws PreconditionError on sum != 0
std::map<int, std::vector<Int>> satellite_c_vectors(const Quiver& q, const std::vector<int>& cycle);
// cycle lists the vertices of q_N in order, consecutive ones joined by one arrow
TauReport verify_tau_closed_form(const Quiver& q, const std::vector<int>& cycle, const std::vector<int>& order,
                                 int exact_limit, int random_points, std::mt19937_64& rng);
// (r o tau_N)^* X_i = F_{i+1} / (X_i F_{i-1}) on q_N
Word dt_word_cycle(int N);
bool verify_cycle_dt_formula(int N, bool exact, int random_points, std::mt19937_64& rng);

// ------------------------------------------------------------------ octahedra
using Tri = std::array<int, 3>;
// Gamma_m minus the three corners, fixed order
std::vector<Tri> gamma_points(int m);
using OctTable = std::map<std::array<int, 4>, MultiLaurent>;  // (a,b,c,s)
OctTable octahedral_expand(int m);
// the same recursion over rationals at a point (values indexed like gamma_points)
std::map<std::array<int, 4>, Rational> octahedral_numeric(int m, const std::vector<Rational>& face);
// Delta*_{a,b,c} = Delta^b_{c,0,a}
MultiLaurent delta_star(const OctTable& t, const Tri& p);

// tropical ratio identity on random integer inputs, then on the full
// octahedral table of size m evaluated at random tropical points
bool schutzenberger_trop_check(int m, int trials, std::mt19937_64& rng, std::string* detail = nullptr);
// one instance: returns lhs - rhs (0 when the identity holds)
Int schutzenberger_generic_residual(const std::array<Int, 8>& d);

std::vector<Rational> random_point(int n, std::mt19937_64& rng, long lo = 2, long hi = 1000000);

}  // namespace cl
