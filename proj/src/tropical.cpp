#include "cl/tropical.hpp"

#include <algorithm>

namespace cl {

TropPoint trop_mutate(const TropPoint& x, const Quiver& q, int k) {
  if (static_cast<int>(x.size()) != q.n) throw DimensionError("tropical point size mismatch");
  mutate(q, k);  // index and frozen checks
  TropPoint y = x;
  for (int i = 0; i < q.n; ++i) {
    if (i == k) {
      y[i] = -x[k];
      continue;
    }
    Int e = q.eps[i][k];
    Int s = e > 0 ? 1 : (e < 0 ? -1 : 0);
    y[i] = x[i] - e * std::min<Int>(0, -s * x[k]);
  }
  return y;
}

TropPoint trop_apply_word(const TropPoint& x, const Quiver& q, const Word& w) {
  Quiver cur = q;
  TropPoint y = x;
  for (auto& s : w) {
    if (s.kind == Step::Mutate) {
      y = trop_mutate(y, cur, s.k);
      cur = mutate(cur, s.k);
    } else {
      TropPoint z(y.size());
      for (int i = 0; i < cur.n; ++i) z[s.perm[i]] = y[i];
      y = z;
      cur = permute(cur, s.perm);
    }
  }
  return y;
}

TropPoint i_x_tropical(const TropPoint& x) {
  TropPoint y = x;
  for (auto& v : y) v = -v;
  return y;
}

int row_sign(const std::vector<Int>& row) {
  bool pos = false, neg = false;
  for (Int x : row) {
    pos |= x > 0;
    neg |= x < 0;
  }
  if (pos && neg) throw SignCoherenceError("C-matrix row is not sign-coherent");
  return pos ? 1 : (neg ? -1 : 0);
}

CResult cmatrix_of_word(const Quiver& q, const Word& w) {
  validate_word(q, w);
  CResult r{identity_matrix(q.n), {}, {}, q};
  Quiver& cur = r.final_quiver;
  IntMatrix& C = r.C;
  for (auto& s : w) {
    if (s.kind == Step::Permute) {
      IntMatrix D(q.n);
      for (int i = 0; i < q.n; ++i) D[s.perm[i]] = C[i];
      C = D;
      cur = permute(cur, s.perm);
    } else {
      int k = s.k;
      Quiver next = mutate(cur, k);
      int sg = row_sign(C[k]);
      if (sg == 0) throw SignCoherenceError("zero row in C-matrix");
      Exp f(q.n);
      for (int j = 0; j < q.n; ++j) f[j] = static_cast<int>(sg * C[k][j]);
      r.factors.push_back({f, sg, k});
      r.signs.push_back(sg);
      IntMatrix D = C;
      for (int i = 0; i < q.n; ++i) {
        if (i == k) {
          for (auto& x : D[k]) x = -x;
          continue;
        }
        Int c = std::max<Int>(0, sg * cur.eps[i][k]);
        if (c)
          for (int j = 0; j < q.n; ++j) D[i][j] = checked_add(D[i][j], checked_mul(c, C[k][j]));
      }
      C = D;
      cur = next;
      for (int i = 0; i < q.n; ++i)
        if (!cur.frozen[i]) row_sign(C[i]);
    }
    if (matmul(matmul(C, q.eps), transpose(C)) != cur.eps)
      throw std::logic_error("C eps C^T differs from the mutated quiver");
  }
  return r;
}

bool is_reddening(const Quiver& q, const Word& w) {
  auto r = cmatrix_of_word(q, w);
  for (int i = 0; i < q.n; ++i) {
    if (q.frozen[i]) continue;
    for (int j = 0; j < q.n; ++j)
      if (!q.frozen[j] && r.C[i][j] > 0) return false;
  }
  return true;
}

// row i (unfrozen) = s * e_{p(i)} with p a bijection of the unfrozen set
static std::optional<Perm> signed_perm(const IntMatrix& C, const Quiver& q, int s) {
  Perm p = identity_perm(q.n);
  std::vector<bool> hit(q.n, false);
  for (int i = 0; i < q.n; ++i) {
    if (q.frozen[i]) continue;
    int found = -1;
    for (int j = 0; j < q.n; ++j) {
      if (q.frozen[j] || C[i][j] == 0) continue;
      if (C[i][j] != s || found >= 0) return std::nullopt;
      found = j;
    }
    if (found < 0 || hit[found]) return std::nullopt;
    hit[found] = true;
    p[i] = found;
  }
  return p;
}

std::optional<Perm> extract_dt_permutation(const IntMatrix& C, const Quiver& q) { return signed_perm(C, q, -1); }

std::optional<Perm> extract_dt_permutation(const Quiver& q, const Word& w) {
  return extract_dt_permutation(cmatrix_of_word(q, w).C, q);
}

std::optional<Perm> is_permutation_word(const Quiver& q, const Word& w) {
  auto p = signed_perm(cmatrix_of_word(q, w).C, q, 1);
  if (!p) return p;
  return inverse_perm(*p);
}

bool f_inverse_check(const Quiver& q, const Word& w) {
  auto a = cmatrix_of_word(q, w);
  auto b = cmatrix_of_word(opposite(a.final_quiver), inverse_word(w));
  return is_identity(matmul(b.C, a.C));
}

namespace {

int big_row_sign(const std::vector<BigInt>& row) {
  bool pos = false, neg = false;
  for (auto& x : row) {
    pos |= sgn(x) > 0;
    neg |= sgn(x) < 0;
  }
  if (pos && neg) throw SignCoherenceError("C-matrix row is not sign-coherent");
  return pos ? 1 : (neg ? -1 : 0);
}

BigMatrix big_mul(const BigMatrix& a, const BigMatrix& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  BigMatrix r(n, std::vector<BigInt>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

BigMatrix big_transpose(const BigMatrix& a) {
  size_t n = a.size();
  BigMatrix t(n, std::vector<BigInt>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace

BigCResult cmatrix_of_word_big(const BigMatrix& eps0, const std::vector<bool>& frozen, const Word& w) {
  int n = static_cast<int>(eps0.size());
  BigCResult r;
  r.C.assign(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) r.C[i][i] = 1;
  r.eps = eps0;
  std::vector<bool> fr = frozen;
  for (auto& s : w) {
    if (s.kind == Step::Permute) {
      if (!is_perm(s.perm, n)) throw WordError("permutation step is not a bijection");
      BigMatrix D(n), E(n, std::vector<BigInt>(n));
      std::vector<bool> f2(n);
      for (int i = 0; i < n; ++i) {
        D[s.perm[i]] = r.C[i];
        f2[s.perm[i]] = fr[i];
        for (int j = 0; j < n; ++j) E[s.perm[i]][s.perm[j]] = r.eps[i][j];
      }
      r.C = D;
      r.eps = E;
      fr = f2;
    } else {
      int k = s.k;
      if (k < 0 || k >= n) throw WordError("mutation index " + std::to_string(k + 1) + " out of range");
      if (fr[k]) throw FrozenMutationError("vertex " + std::to_string(k + 1) + " is frozen");
      int sg = big_row_sign(r.C[k]);
      if (sg == 0) throw SignCoherenceError("zero row in C-matrix");
      r.signs.push_back(sg);
      BigMatrix D = r.C;
      for (int i = 0; i < n; ++i) {
        if (i == k) {
          for (auto& x : D[k]) x = -x;
          continue;
        }
        BigInt c = sg * r.eps[i][k];
        if (sgn(c) > 0)
          for (int j = 0; j < n; ++j) D[i][j] += c * r.C[k][j];
      }
      BigMatrix E = r.eps;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == k || j == k) {
            E[i][j] = -r.eps[i][j];
          } else {
            const BigInt &a = r.eps[i][k], &b = r.eps[k][j];
            if (sgn(a) * sgn(b) > 0) E[i][j] = r.eps[i][j] + a * abs(b);
          }
        }
      r.C = D;
      r.eps = E;
      for (int i = 0; i < n; ++i)
        if (!fr[i]) big_row_sign(r.C[i]);
    }
    if (big_mul(big_mul(r.C, eps0), big_transpose(r.C)) != r.eps)
      throw std::logic_error("C eps C^T differs from the mutated quiver");
  }
  return r;
}

BigCResult cmatrix_of_word_big(const Quiver& q, const Word& w) {
  BigMatrix e(q.n, std::vector<BigInt>(q.n));
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) e[i][j] = static_cast<long>(q.eps[i][j]);
  return cmatrix_of_word_big(e, q.frozen, w);
}

bool f_inverse_check_big(const Quiver& q, const Word& w) {
  auto a = cmatrix_of_word_big(q, w);
  BigMatrix op = a.eps;
  for (auto& row : op)
    for (auto& x : row) x = -x;
  std::vector<bool> fr = q.frozen;
  for (auto& s : w)
    if (s.kind == Step::Permute) {
      std::vector<bool> f2(q.n);
      for (int i = 0; i < q.n; ++i) f2[s.perm[i]] = fr[i];
      fr = f2;
    }
  auto b = cmatrix_of_word_big(op, fr, inverse_word(w));
  BigMatrix prod = big_mul(b.C, a.C);
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j)
      if (prod[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool is_identity(const IntMatrix& C) { return C == identity_matrix(static_cast<int>(C.size())); }

bool is_minus_identity(const IntMatrix& C) {
  for (size_t i = 0; i < C.size(); ++i)
    for (size_t j = 0; j < C.size(); ++j)
      if (C[i][j] != (i == j ? -1 : 0)) return false;
  return true;
}

}  // namespace cl
