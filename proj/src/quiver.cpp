#include "cl/quiver.hpp"

#include <algorithm>
#include <numeric>

namespace cl {

Quiver::Quiver(int n_) : n(n_), frozen(n_, false), eps(n_, std::vector<Int>(n_, 0)) {}

Quiver::Quiver(IntMatrix e, std::vector<bool> fr) : n(static_cast<int>(e.size())), frozen(std::move(fr)), eps(std::move(e)) {
  if (frozen.empty()) frozen.assign(n, false);
  check();
}

int Quiver::num_frozen() const { return static_cast<int>(std::count(frozen.begin(), frozen.end(), true)); }

bool Quiver::equal_ignoring_frozen_arrows(const Quiver& o) const {
  if (n != o.n || frozen != o.frozen) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(frozen[i] && frozen[j]) && eps[i][j] != o.eps[i][j]) return false;
  return true;
}

void Quiver::check() const {
  if (static_cast<int>(eps.size()) != n || static_cast<int>(frozen.size()) != n)
    throw DimensionError("quiver size mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(eps[i].size()) != n) throw DimensionError("eps must be square");
    if (eps[i][i] != 0) throw DimensionError("eps diagonal must vanish");
    for (int j = 0; j < i; ++j)
      if (eps[i][j] != -eps[j][i]) throw DimensionError("eps must be skew-symmetric");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n) throw DimensionError("label count mismatch");
}

static void check_vertex(const Quiver& q, int k) {
  if (k < 0 || k >= q.n) throw IndexError("vertex " + std::to_string(k + 1) + " out of range");
  if (q.frozen[k]) throw FrozenMutationError("vertex " + std::to_string(k + 1) + " is frozen");
}

Quiver mutate(const Quiver& q, int k) {
  check_vertex(q, k);
  Quiver r = q;
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) {
      if (i == k || j == k) {
        r.eps[i][j] = -q.eps[i][j];
      } else {
        Int a = q.eps[i][k], b = q.eps[k][j];
        if ((a > 0 && b > 0) || (a < 0 && b < 0)) r.eps[i][j] = checked_add(q.eps[i][j], checked_mul(a, b < 0 ? -b : b));
      }
    }
  return r;
}

bool is_perm(const Perm& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : p) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Quiver permute(const Quiver& q, const Perm& p) {
  if (!is_perm(p, q.n)) throw WordError("permutation is not a bijection of the vertex set");
  Quiver r(q.n);
  for (int i = 0; i < q.n; ++i) {
    r.frozen[p[i]] = q.frozen[i];
    for (int j = 0; j < q.n; ++j) r.eps[p[i]][p[j]] = q.eps[i][j];
  }
  if (!q.labels.empty()) {
    r.labels.resize(q.n);
    for (int i = 0; i < q.n; ++i) r.labels[p[i]] = q.labels[i];
  }
  return r;
}

Quiver opposite(const Quiver& q) {
  Quiver r = q;
  for (auto& row : r.eps)
    for (auto& x : row) x = -x;
  return r;
}

void validate_word(const Quiver& q, const Word& w) {
  for (auto& s : w) {
    if (s.kind == Step::Mutate) {
      if (s.k < 0 || s.k >= q.n) throw WordError("mutation index " + std::to_string(s.k + 1) + " out of range");
    } else if (!is_perm(s.perm, q.n)) {
      throw WordError("permutation step is not a bijection");
    }
  }
}

Quiver apply_word(const Quiver& q, const Word& w) {
  Quiver r = q;
  for (auto& s : w) r = s.kind == Step::Mutate ? mutate(r, s.k) : permute(r, s.perm);
  return r;
}

Word inverse_word(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    r.push_back(it->kind == Step::Mutate ? *it : Step::pi(inverse_perm(it->perm)));
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word repeat(const Word& w, int times) {
  Word r;
  for (int i = 0; i < times; ++i) r.insert(r.end(), w.begin(), w.end());
  return r;
}

int mutation_count(const Word& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](const Step& s) { return s.kind == Step::Mutate; }));
}

Quiver a2_quiver() { return Quiver(IntMatrix{{0, 1}, {-1, 0}}); }

Quiver cycle_quiver(int N) {
  if (N < 2) throw std::invalid_argument("cycle quiver needs N >= 2");
  Quiver q(N);
  if (N == 2) return q;
  for (int i = 0; i < N; ++i) {
    int j = (i + 1) % N;
    q.eps[i][j] += 1;
    q.eps[j][i] -= 1;
  }
  return q;
}

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix r(n, std::vector<Int>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (!a[i][l]) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] = checked_add(r[i][j], checked_mul(a[i][l], b[l][j]));
    }
  return r;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return a;
  IntMatrix r(a[0].size(), std::vector<Int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

Int determinant(const IntMatrix& a) {
  // Bareiss fraction-free elimination
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = static_cast<long>(a[i][j]);
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1].get_si();
}

LatticeBasis LatticeBasis::identity(const Quiver& q) { return {identity_matrix(q.n), q.eps}; }

Int LatticeBasis::pair(int i, int j) const {
  Exp a(vec[i].begin(), vec[i].end()), b(vec[j].begin(), vec[j].end());
  Int s = 0;
  for (size_t x = 0; x < a.size(); ++x)
    for (size_t y = 0; y < b.size(); ++y) s += a[x] * form[x][y] * b[y];
  return s;
}

Int LatticeBasis::det() const { return determinant(vec); }

LatticeBasis basis_mutate(const LatticeBasis& b, const Quiver& q, int k, int sign) {
  check_vertex(q, k);
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  LatticeBasis r = b;
  int n = static_cast<int>(b.vec.size());
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      for (auto& x : r.vec[k]) x = -x;
      continue;
    }
    Int c = std::max<Int>(0, sign * b.pair(i, k));
    if (c)
      for (int j = 0; j < n; ++j) r.vec[i][j] += c * b.vec[k][j];
  }
  return r;
}

LatticeBasis twist(const LatticeBasis& b, const Quiver& q, int k) {
  return basis_mutate(basis_mutate(b, q, k, 1), q, k, 1);
}

bool braid_check(const Quiver& q, int j, int k) {
  check_vertex(q, j);
  check_vertex(q, k);
  LatticeBasis b = LatticeBasis::identity(q);
  Int c = b.pair(j, k);
  if (std::llabs(c) >= 2) throw UnsupportedCase("braid relation needs |(e_j,e_k)| <= 1");
  if (c == 0) {
    return twist(twist(b, q, j), q, k).vec == twist(twist(b, q, k), q, j).vec;
  }
  auto lhs = twist(twist(twist(b, q, j), q, k), q, j);
  auto rhs = twist(twist(twist(b, q, k), q, j), q, k);
  return lhs.vec == rhs.vec;
}

}  // namespace cl
