#pragma once
// quantum seeds: exact dilogarithm conjugation, DT series, pentagon, A2 basis

#include <optional>

#include "cl/series.hpp"
#include "cl/tropical.hpp"

namespace cl {

struct RationalityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// num * prod_b (1 + q^b X_v)^{-den[b]}; the denominator only involves the ray of v
struct RayFraction {
  Exp v;  // empty while no denominator has been introduced
  QTorusElt num;
  std::map<int, int> den;

  static RayFraction from(const QTorusElt& x);
  bool is_laurent() const { return den.empty(); }
  std::optional<QTorusElt> to_laurent() const;
  void reduce(const IntMatrix& form);
};
bool equal(const RayFraction& a, const RayFraction& b, const IntMatrix& form);

// Ad_{Psi(X_v)^sign}(m) for a Laurent element; throws RationalityError when the
// result leaves the quantum torus
QTorusElt ad_dilog(const Exp& v, int sign, const QTorusElt& m, const IntMatrix& form);
// same, allowing reciprocal factors along the ray of v (and of r.v)
RayFraction ad_dilog(const Exp& v, int sign, const RayFraction& r, const IntMatrix& form);

// right division of x by (1 + q^b X_v), nullopt if not exact
std::optional<QTorusElt> right_divide(const QTorusElt& x, const Exp& v, int b, const IntMatrix& form);

struct QuantumSeed {
  Quiver q;                   // current quiver
  IntMatrix form;             // initial form
  IntMatrix C;                // current basis vectors in the initial lattice
  std::vector<DilogFactor> factors;
  static QuantumSeed initial(const Quiver& q);
};
QuantumSeed quantum_mutate(const QuantumSeed& s, int k);
QuantumSeed quantum_permute(const QuantumSeed& s, const Perm& p);
QuantumSeed quantum_apply_word(const QuantumSeed& s, const Word& w);

// drop adjacent pairs Psi(X_f)^e Psi(X_f)^{-e}
std::vector<DilogFactor> simplify_factors(const std::vector<DilogFactor>& f);
// image of the i-th current generator in the initial torus, when it stays
// expressible on one ray at every stage; nullopt otherwise
std::optional<RayFraction> generator_image(const QuantumSeed& s, int i);
// q = 1 images at a numeric point, by pushing the point through each conjugation
std::vector<Rational> generator_values_q1(const QuantumSeed& s, const std::vector<Rational>& x);

// X_w -> Ad_{Psi(X_v)} over the positive presentation vs Ad_{Psi(X_{-v})^{-1}} over
// the negative one, on every generator of a one-step mutation
bool mutation_presentations_agree(const Quiver& q, int k);

TruncatedSeries dt_series_of_word(const Quiver& q, const Word& w, int order);
TruncatedSeries dilog_product(const std::vector<DilogFactor>& f, const IntMatrix& form, int order);

Word a2_sigma1();
Word a2_sigma2();
bool pentagon_check(int order);
bool pentagon_negative_control(int order);  // true when the swapped product differs

// unit suite pieces
bool difference_relation_check(int order);
bool dilog_inverse_check(int order);
bool log_dilog_check(int order);
// Ad_{Psi(X_v)} Ad_{Psi(X_{-v})} (X_w) = X_{w - (w,v) v}
bool conjugation_involution_check(const Exp& v, const Exp& w, const IntMatrix& form);

struct A2BasisReport {
  bool exchange = false;  // P_{i+2} P_i = 1 + q P_{i+1}
  bool bar_invariant = false;
  int dt_shift = -1;      // s with DT(P_i) = P_{i+s} for all i inside the window, -1 if none
  int dt_order = 0;       // truncation order used for the DT comparison
};
std::vector<QTorusElt> a2_basis();
A2BasisReport a2_canonical_basis_check(int order);

}  // namespace cl
