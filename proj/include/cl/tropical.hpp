#pragma once
// tropical points, C-matrices, canonical signs, DT certification

#include <optional>

#include "cl/quiver.hpp"

namespace cl {

using TropPoint = std::vector<Int>;

struct SignCoherenceError : std::logic_error {
  using std::logic_error::logic_error;
};

struct DilogFactor {
  Exp f;     // sign * (mutated row of C before the step)
  int sign;  // canonical sign
  int vertex;
};

struct CResult {
  IntMatrix C;  // C[i][j]: i-th coordinate of the image of l_j^+; rows: current basis
  std::vector<int> signs;
  std::vector<DilogFactor> factors;
  Quiver final_quiver;
};

TropPoint trop_mutate(const TropPoint& x, const Quiver& q, int k);
TropPoint trop_apply_word(const TropPoint& x, const Quiver& q, const Word& w);
TropPoint i_x_tropical(const TropPoint& x);

// replays w from the identity; asserts coherence and eps' = C eps C^T per step
CResult cmatrix_of_word(const Quiver& q, const Word& w);
int row_sign(const std::vector<Int>& row);  // +1, -1, 0 for zero row; throws if mixed

bool is_reddening(const Quiver& q, const Word& w);
// pi with C_{w then pi} = -Id on unfrozen vertices
std::optional<Perm> extract_dt_permutation(const Quiver& q, const Word& w);
std::optional<Perm> extract_dt_permutation(const IntMatrix& C, const Quiver& q);
std::optional<Perm> is_permutation_word(const Quiver& q, const Word& w);
bool f_inverse_check(const Quiver& q, const Word& w);

// arbitrary-precision replay with the same conventions and checks; for long
// random words where 64-bit entries overflow
using BigInt = mpz_class;
using BigMatrix = std::vector<std::vector<BigInt>>;
struct BigCResult {
  BigMatrix C;
  BigMatrix eps;  // final quiver
  std::vector<int> signs;
};
BigCResult cmatrix_of_word_big(const BigMatrix& eps, const std::vector<bool>& frozen, const Word& w);
BigCResult cmatrix_of_word_big(const Quiver& q, const Word& w);
bool f_inverse_check_big(const Quiver& q, const Word& w);

bool is_identity(const IntMatrix& C);
bool is_minus_identity(const IntMatrix& C);

}  // namespace cl
