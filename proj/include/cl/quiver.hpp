#pragma once
// quivers as skew-symmetric integer matrices, mutation words, lattice bases

#include <string>
#include <vector>

#include "cl/algebra.hpp"

namespace cl {

struct FrozenMutationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct WordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Perm = std::vector<int>;  // vertex i is relabelled perm[i]

struct Quiver {
  int n = 0;
  std::vector<bool> frozen;
  IntMatrix eps;
  std::vector<std::string> labels;  // optional

  Quiver() = default;
  explicit Quiver(int n_);
  Quiver(IntMatrix e, std::vector<bool> fr = {});

  bool is_frozen(int k) const { return frozen[k]; }
  int num_frozen() const;
  bool operator==(const Quiver& o) const { return n == o.n && frozen == o.frozen && eps == o.eps; }
  bool operator!=(const Quiver& o) const { return !(*this == o); }
  // compare ignoring entries between two frozen vertices
  bool equal_ignoring_frozen_arrows(const Quiver& o) const;
  void check() const;
};

struct Step {
  enum Kind { Mutate, Permute } kind = Mutate;
  int k = 0;
  Perm perm;
  static Step mu(int k) { return Step{Mutate, k, {}}; }
  static Step pi(Perm p) { return Step{Permute, 0, std::move(p)}; }
  bool operator==(const Step& o) const { return kind == o.kind && k == o.k && perm == o.perm; }
};
using Word = std::vector<Step>;

Quiver mutate(const Quiver& q, int k);
Quiver permute(const Quiver& q, const Perm& p);
Quiver opposite(const Quiver& q);
Quiver apply_word(const Quiver& q, const Word& w);
void validate_word(const Quiver& q, const Word& w);

Perm inverse_perm(const Perm& p);
bool is_perm(const Perm& p, int n);
Perm identity_perm(int n);
// reversed steps with inverted permutations
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);
Word repeat(const Word& w, int times);
int mutation_count(const Word& w);

// basic quivers
Quiver a2_quiver();  // eps_12 = 1
Quiver cycle_quiver(int N);  // eps_{i,i+1} = 1 cyclically; q_2 has no arrows

// current basis {e_i'} written in the initial basis, with the initial form
struct LatticeBasis {
  IntMatrix vec;   // rows
  IntMatrix form;  // initial form (e_i, e_j) = eps_ij
  static LatticeBasis identity(const Quiver& q);
  Int pair(int i, int j) const;
  Int det() const;
};
LatticeBasis basis_mutate(const LatticeBasis& b, const Quiver& q, int k, int sign);
LatticeBasis twist(const LatticeBasis& b, const Quiver& q, int k);

struct UnsupportedCase : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// t_j t_k = t_k t_j or t_j t_k t_j = t_k t_j t_k on the lattice basis
bool braid_check(const Quiver& q, int j, int k);

IntMatrix identity_matrix(int n);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
Int determinant(const IntMatrix& a);

}  // namespace cl
