#include "cl/surface.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace cl {

Admissibility admissibility(const SurfaceSpec& s) {
  if (s.genus < 0 || s.punctures < 0) return {false, "negative genus or puncture count"};
  int special = 0;
  for (int k : s.boundary) {
    if (k < 1) return {false, "every boundary component needs at least one special point"};
    special += k;
  }
  int mu = s.punctures + special;
  if (mu <= 0) return {false, "no marked points"};
  bool annulus2 = s.genus == 0 && s.punctures == 0 && s.boundary.size() == 2 && special == 2;
  if (s.genus + mu < 3 && !annulus2) return {false, "g + (number of marked points) < 3"};
  if (special == 0 && s.punctures <= 1) return {false, "no special points and at most one puncture"};
  return {true, ""};
}

// ------------------------------------------------------------------ triangulations

Triangulation Triangulation::from_sides(std::vector<PointKind> pts, std::vector<std::array<int, 3>> corners,
                                        std::vector<std::array<int, 3>> sides) {
  Triangulation T;
  T.points = std::move(pts);
  T.corners = std::move(corners);
  T.sides = std::move(sides);
  if (T.corners.size() != T.sides.size()) throw DimensionError("corner and side tables differ in length");
  int E = 0;
  for (auto& s : T.sides)
    for (int e : s) E = std::max(E, e + 1);
  T.edges.assign(E, {});
  std::vector<int> seen(E, 0);
  for (int t = 0; t < T.num_triangles(); ++t)
    for (int s = 0; s < 3; ++s) {
      int e = T.sides[t][s];
      if (e < 0) throw DimensionError("negative edge id");
      if (seen[e] == 0) {
        T.edges[e].t0 = t;
        T.edges[e].s0 = s;
      } else if (seen[e] == 1) {
        T.edges[e].t1 = t;
        T.edges[e].s1 = s;
      } else {
        throw DimensionError("edge " + std::to_string(e) + " bounds more than two sides");
      }
      ++seen[e];
    }
  std::vector<bool> used(T.points.size(), false);
  for (auto& c : T.corners)
    for (int p : c) {
      if (p < 0 || p >= static_cast<int>(T.points.size())) throw DimensionError("corner label out of range");
      used[p] = true;
    }
  for (size_t p = 0; p < used.size(); ++p)
    if (!used[p]) throw DimensionError("marked point " + std::to_string(p) + " is not a vertex");
  for (int e = 0; e < E; ++e) {
    if (seen[e] == 0) throw DimensionError("unused edge id " + std::to_string(e));
    auto& ed = T.edges[e];
    if (ed.boundary()) {
      if (T.points[T.edge_start(e)] != PointKind::Special || T.points[T.edge_end(e)] != PointKind::Special)
        throw DimensionError("boundary edge with a puncture endpoint");
      continue;
    }
    if (ed.t0 == ed.t1) throw UnsupportedSurface("self-folded triangle");
    const auto &c0 = T.corners[ed.t0], &c1 = T.corners[ed.t1];
    if (c1[ed.s1] != c0[(ed.s0 + 1) % 3] || c1[(ed.s1 + 1) % 3] != c0[ed.s0])
      throw DimensionError("gluing along edge " + std::to_string(e) + " reverses orientation");
  }
  return T;
}

std::vector<std::vector<int>> Triangulation::boundary_cycles() const {
  std::map<int, int> next;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    if (edges[e].boundary()) {
      if (next.count(edge_start(e))) throw DimensionError("special point starts two boundary edges");
      next[edge_start(e)] = edge_end(e);
    }
  std::vector<std::vector<int>> out;
  std::set<int> done;
  for (auto& [p, q] : next) {
    if (done.count(p)) continue;
    std::vector<int> cyc;
    int x = p;
    while (!done.count(x)) {
      done.insert(x);
      cyc.push_back(x);
      x = next.at(x);
    }
    if (x != p) throw DimensionError("boundary does not close up");
    out.push_back(cyc);
  }
  return out;
}

std::vector<int> Triangulation::punctures() const {
  std::vector<int> r;
  for (int p = 0; p < static_cast<int>(points.size()); ++p)
    if (points[p] == PointKind::Puncture) r.push_back(p);
  return r;
}

int Triangulation::euler_characteristic() const {
  return static_cast<int>(points.size()) - static_cast<int>(edges.size()) + num_triangles();
}

namespace {

struct Builder {
  std::vector<PointKind> pts;
  std::vector<std::array<int, 3>> C, S;
  int next_edge = 0;
  int point(PointKind k) {
    pts.push_back(k);
    return static_cast<int>(pts.size()) - 1;
  }
  int edge() { return next_edge++; }
  void tri(std::array<int, 3> c, std::array<int, 3> s, int slot = -1) {
    if (slot >= 0) {
      C[slot] = c;
      S[slot] = s;
    } else {
      C.push_back(c);
      S.push_back(s);
    }
  }
  // annulus between an outer polygon (corner labels, side ids) and a new hole with k points;
  // the first triangle goes into `slot` when given
  void annulus(const std::vector<int>& c, const std::vector<int>& o, int k, int slot = -1) {
    int N = static_cast<int>(c.size());
    std::vector<int> h(k), hb(k), g(N + 1);
    for (int j = 0; j < k; ++j) h[j] = point(PointKind::Special);
    for (int j = 0; j < k; ++j) hb[j] = edge();
    for (auto& x : g) x = edge();
    for (int i = 0; i < N; ++i) tri({c[i], c[(i + 1) % N], h[0]}, {o[i], g[i + 1], g[i]}, i == 0 ? slot : -1);
    std::vector<int> x(k), y(k);
    x[0] = g[N];
    y[k - 1] = g[0];
    for (int j = 0; j + 1 < k; ++j) y[j] = x[j + 1] = edge();
    for (int j = 0; j < k; ++j) tri({h[(j + 1) % k], h[j], c[0]}, {hb[j], x[j], y[j]});
  }
  void stellar(int t) {
    auto c = C[t];
    auto s = S[t];
    int p = point(PointKind::Puncture);
    int e0 = edge(), e1 = edge(), e2 = edge();
    tri({c[0], c[1], p}, {s[0], e1, e0}, t);
    tri({c[1], c[2], p}, {s[1], e2, e1});
    tri({c[2], c[0], p}, {s[2], e0, e2});
  }
  Triangulation done() const { return Triangulation::from_sides(pts, C, S); }
};

}  // namespace

Triangulation insert_puncture(const Triangulation& T, int t) {
  Builder b{T.points, T.corners, T.sides, static_cast<int>(T.edges.size())};
  b.stellar(t);
  return b.done();
}

Triangulation triangulate(const SurfaceSpec& s) {
  auto adm = admissibility(s);
  if (!adm.ok) throw AdmissibilityError("surface is not admissible: " + adm.reason);
  Builder b;
  int g = s.genus, n = s.punctures, nb = static_cast<int>(s.boundary.size());
  int used_punctures = 0;
  size_t next_hole = 0;
  if (g == 0 && nb == 0) {
    int p0 = b.point(PointKind::Puncture), p1 = b.point(PointKind::Puncture), p2 = b.point(PointKind::Puncture);
    int a = b.edge(), c = b.edge(), d = b.edge();
    b.tri({p0, p1, p2}, {a, c, d});
    b.tri({p1, p0, p2}, {a, d, c});
    used_punctures = 3;
  } else if (g == 0) {
    int k = s.boundary[0];
    std::vector<int> c(k), o(k);
    for (auto& x : c) x = b.point(PointKind::Special);
    for (auto& x : o) x = b.edge();
    next_hole = 1;
    if (nb >= 2) {
      b.annulus(c, o, s.boundary[1]);
      next_hole = 2;
    } else if (n == 0) {
      if (k < 3) throw UnsupportedSurface("polygon with fewer than three sides");
      std::vector<int> d(k, -1);
      for (int i = 2; i <= k - 2; ++i) d[i] = b.edge();
      for (int i = 1; i <= k - 2; ++i)
        b.tri({c[0], c[i], c[i + 1]}, {i == 1 ? o[0] : d[i], o[i], i + 1 == k - 1 ? o[k - 1] : d[i + 1]});
    } else if (k >= 2) {
      int P = b.point(PointKind::Puncture);
      std::vector<int> sp(k);
      for (auto& x : sp) x = b.edge();
      for (int i = 0; i < k; ++i) b.tri({c[i], c[(i + 1) % k], P}, {o[i], sp[(i + 1) % k], sp[i]});
      used_punctures = 1;
    } else {
      if (n < 2) throw UnsupportedSurface("monogon needs two punctures");
      int P1 = b.point(PointKind::Puncture), P2 = b.point(PointKind::Puncture);
      int a1 = b.edge(), a2 = b.edge(), c1 = b.edge(), c2 = b.edge();
      b.tri({c[0], c[0], P1}, {o[0], a1, a2});
      b.tri({c[0], P1, P2}, {a2, c2, c1});
      b.tri({P1, c[0], P2}, {a1, c1, c2});
      used_punctures = 2;
    }
  } else {
    if (n == 0) throw UnsupportedSurface("positive genus without punctures is not constructed");
    if (nb == 0 && n < 2) throw UnsupportedSurface("closed surface needs two punctures");
    int Q = b.point(PointKind::Puncture);
    used_punctures = 1;
    int N = 4 * g;
    std::vector<int> c(N, Q), o(N);
    for (int j = 0; j < g; ++j) {
      int a = b.edge(), bb = b.edge();
      o[4 * j] = o[4 * j + 2] = a;
      o[4 * j + 1] = o[4 * j + 3] = bb;
    }
    if (nb == 0) {
      int P = b.point(PointKind::Puncture);
      std::vector<int> sp(N);
      for (auto& x : sp) x = b.edge();
      for (int i = 0; i < N; ++i) b.tri({c[i], c[(i + 1) % N], P}, {o[i], sp[(i + 1) % N], sp[i]});
      used_punctures = 2;
    } else {
      b.annulus(c, o, s.boundary[0]);
      next_hole = 1;
    }
  }
  for (; next_hole < s.boundary.size(); ++next_hole) {
    auto c = b.C[0];
    auto o = b.S[0];
    b.annulus({c[0], c[1], c[2]}, {o[0], o[1], o[2]}, s.boundary[next_hole], 0);
  }
  for (; used_punctures < n; ++used_punctures) b.stellar(0);
  Triangulation T = b.done();
  if (T.euler_characteristic() != 2 - 2 * g - nb) throw std::logic_error("triangulation has the wrong Euler characteristic");
  auto cyc = T.boundary_cycles();
  std::vector<int> got, want = s.boundary;
  for (auto& x : cyc) got.push_back(static_cast<int>(x.size()));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) throw std::logic_error("triangulation has the wrong boundary");
  return T;
}

// ------------------------------------------------------------------ quivers

namespace {

const std::array<Tri, 3> kDirs = {Tri{-1, 1, 0}, Tri{0, -1, 1}, Tri{1, 0, -1}};

bool valid_point(int m, const Tri& w) {
  for (int x : w)
    if (x < 0 || x >= m) return false;
  return w[0] + w[1] + w[2] == m;
}

Tri to_stored(const Tri& local, int rot) {
  Tri w;
  for (int i = 0; i < 3; ++i) w[(rot + i) % 3] = local[i];
  return w;
}

Tri to_local(const Tri& w, int rot) {
  Tri l;
  for (int i = 0; i < 3; ++i) l[i] = w[(rot + i) % 3];
  return l;
}

// some triangle and stored coordinates representing a vertex key
std::pair<int, Tri> representative(const Triangulation& T, int m, const VKey& k) {
  if (k[0] == 1) return {k[1], Tri{k[2], k[3], m - k[2] - k[3]}};
  auto& e = T.edges[k[1]];
  int s = e.s0, j = k[2];
  Tri w{0, 0, 0};
  w[s] = m - j;
  w[(s + 1) % 3] = j;
  return {e.t0, w};
}

std::string key_label(const VKey& k, int m) {
  if (k[0] == 0) return "e" + std::to_string(k[1] + 1) + ":" + std::to_string(k[2]);
  return "t" + std::to_string(k[1] + 1) + ":(" + std::to_string(k[2]) + "," + std::to_string(k[3]) + "," +
         std::to_string(m - k[2] - k[3]) + ")";
}

}  // namespace

std::optional<VKey> key_of(const Triangulation& T, int m, int t, const Tri& w) {
  if (!valid_point(m, w)) return std::nullopt;
  for (int s = 0; s < 3; ++s) {
    if (w[(s + 2) % 3] != 0) continue;
    int e = T.sides[t][s];
    auto& ed = T.edges[e];
    int j = w[(s + 1) % 3];
    bool forward = ed.t0 == t && ed.s0 == s;
    return VKey{0, e, forward ? j : m - j, 0};
  }
  return VKey{1, t, w[0], w[1]};
}

MQuiver build_quiver(const Triangulation& T, int m, Mode mode) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  MQuiver Q;
  Q.m = m;
  Q.mode = mode;
  std::vector<bool> frozen;
  for (int e = 0; e < static_cast<int>(T.edges.size()); ++e) {
    bool bd = T.edges[e].boundary();
    if (bd && mode == Mode::X) continue;
    for (int j = 1; j < m; ++j) {
      Q.keys.push_back({0, e, j, 0});
      frozen.push_back(bd);
    }
  }
  auto pts = gamma_points(m);
  for (int t = 0; t < T.num_triangles(); ++t)
    for (auto& p : pts)
      if (p[0] > 0 && p[1] > 0 && p[2] > 0) {
        Q.keys.push_back({1, t, p[0], p[1]});
        frozen.push_back(false);
      }
  int n = static_cast<int>(Q.keys.size());
  for (int i = 0; i < n; ++i) Q.index[Q.keys[i]] = i;
  Quiver q(n);
  q.frozen = frozen;
  for (int t = 0; t < T.num_triangles(); ++t)
    for (auto& p : pts)
      for (auto& d : kDirs) {
        Tri p2{p[0] + d[0], p[1] + d[1], p[2] + d[2]};
        if (!valid_point(m, p2)) continue;
        bool same_side = false;
        for (int s = 0; s < 3; ++s) same_side |= p[s] == 0 && p2[s] == 0;
        if (same_side) continue;
        auto k1 = key_of(T, m, t, p), k2 = key_of(T, m, t, p2);
        auto i1 = Q.index.find(*k1), i2 = Q.index.find(*k2);
        if (i1 == Q.index.end() || i2 == Q.index.end()) continue;
        q.eps[i1->second][i2->second] += 1;
        q.eps[i2->second][i1->second] -= 1;
      }
  for (auto& k : Q.keys) q.labels.push_back(key_label(k, m));
  Q.q = q;
  return Q;
}

// ------------------------------------------------------------------ flips

namespace {

struct Quad {
  int t1, r1, t2, r2;
  int A, B, C, D;
  int eBC, eCA, eAD, eDB;
};

Quad quad_of(const Triangulation& T, int e) {
  auto& E = T.edges[e];
  Quad q{};
  q.t1 = E.t0;
  q.r1 = E.s0;
  q.t2 = E.t1;
  q.r2 = E.s1;
  auto& c1 = T.corners[q.t1];
  auto& c2 = T.corners[q.t2];
  q.A = c1[q.r1];
  q.B = c1[(q.r1 + 1) % 3];
  q.C = c1[(q.r1 + 2) % 3];
  q.D = c2[(q.r2 + 2) % 3];
  q.eBC = T.sides[q.t1][(q.r1 + 1) % 3];
  q.eCA = T.sides[q.t1][(q.r1 + 2) % 3];
  q.eAD = T.sides[q.t2][(q.r2 + 1) % 3];
  q.eDB = T.sides[q.t2][(q.r2 + 2) % 3];
  return q;
}

Triangulation flip_triangulation(const Triangulation& T, int e) {
  Quad q = quad_of(T, e);
  auto corners = T.corners;
  auto sides = T.sides;
  corners[q.t1] = {q.D, q.B, q.C};
  sides[q.t1] = {q.eDB, q.eBC, e};
  corners[q.t2] = {q.A, q.D, q.C};
  sides[q.t2] = {q.eAD, e, q.eCA};
  return Triangulation::from_sides(T.points, corners, sides);
}

using P4 = std::array<int, 4>;

std::vector<P4> simplex_points(int total) {
  std::vector<P4> r;
  for (int a = 0; a <= total; ++a)
    for (int b = 0; a + b <= total; ++b)
      for (int c = 0; a + b + c <= total; ++c) r.push_back({a, b, c, total - a - b - c});
  return r;
}

}  // namespace

bool flippable(const Triangulation& T, int e) {
  if (e < 0 || e >= static_cast<int>(T.edges.size())) return false;
  auto& E = T.edges[e];
  if (E.boundary() || E.t0 == E.t1) return false;
  Quad q = quad_of(T, e);
  return q.eDB != q.eBC && q.eAD != q.eCA;
}

FlipResult flip_word(const Triangulation& T, int e, int m, Mode mode) {
  if (!flippable(T, e)) throw FlipError("edge " + std::to_string(e + 1) + " is not flippable");
  Quad qd = quad_of(T, e);
  MQuiver Q0 = build_quiver(T, m, mode);
  std::map<P4, int> cur;
  for (auto& x : simplex_points(m)) {
    if (*std::max_element(x.begin(), x.end()) == m) continue;
    if (x[0] != 0 && x[1] != 0) continue;
    int t, rot;
    Tri local;
    if (x[0] == 0) {
      t = qd.t1, rot = qd.r1, local = {x[2], x[3], x[1]};
    } else {
      t = qd.t2, rot = qd.r2, local = {x[3], x[2], x[0]};
    }
    auto k = key_of(T, m, t, to_stored(local, rot));
    auto it = Q0.index.find(*k);
    if (it != Q0.index.end()) cur[x] = it->second;
  }
  auto ys = simplex_points(m - 2);
  std::stable_sort(ys.begin(), ys.end(), [](const P4& a, const P4& b) { return a[0] + a[1] < b[0] + b[1]; });
  FlipResult r;
  for (auto& y : ys) {
    P4 from{y[0], y[1], y[2] + 1, y[3] + 1}, to{y[0] + 1, y[1] + 1, y[2], y[3]};
    auto it = cur.find(from);
    if (it == cur.end()) throw std::logic_error("flip sweep reached a missing vertex");
    int idx = it->second;
    r.word.push_back(Step::mu(idx));
    cur.erase(it);
    cur[to] = idx;
  }
  r.after = flip_triangulation(T, e);
  MQuiver Q1 = build_quiver(r.after, m, mode);
  int n = Q0.q.n;
  Perm perm(n, -1);
  for (auto& [x, idx] : cur) {
    int t;
    Tri local;
    if (x[2] == 0) {
      t = qd.t1, local = {x[0], x[3], x[1]};
    } else if (x[3] == 0) {
      t = qd.t2, local = {x[2], x[0], x[1]};
    } else {
      throw std::logic_error("flip sweep left a vertex inside the tetrahedron");
    }
    perm[idx] = Q1.index.at(*key_of(r.after, m, t, local));
  }
  for (int i = 0; i < n; ++i)
    if (perm[i] < 0) perm[i] = Q1.index.at(Q0.keys[i]);
  if (!is_perm(perm, n)) throw std::logic_error("flip relabeling is not a bijection");
  r.word.push_back(Step::pi(perm));
  Quiver got = apply_word(Q0.q, r.word);
  bool ok = mode == Mode::X ? got == Q1.q : got.equal_ignoring_frozen_arrows(Q1.q);
  if (!ok) throw std::logic_error("flip word does not produce the flipped quiver");
  return r;
}

// ------------------------------------------------------------------ Weyl group words

std::vector<int> level_cycle(const MQuiver& Q, const Triangulation& T, int p, int i) {
  if (p < 0 || p >= static_cast<int>(T.points.size()) || T.points[p] != PointKind::Puncture)
    throw std::invalid_argument("point " + std::to_string(p + 1) + " is not a puncture");
  int m = Q.m;
  if (i < 1 || i >= m) throw std::invalid_argument("level must lie in 1..m-1");
  std::set<int> vs;
  int degree = 0;
  for (int t = 0; t < T.num_triangles(); ++t)
    for (int c = 0; c < 3; ++c) {
      if (T.corners[t][c] != p) continue;
      ++degree;
      for (auto& w : gamma_points(m)) {
        if (w[c] != i) continue;
        auto k = key_of(T, m, t, w);
        vs.insert(Q.index.at(*k));
      }
    }
  // a loop at p makes the level points collide
  if (static_cast<int>(vs.size()) != degree * (m - i))
    throw UnsupportedSurface("puncture " + std::to_string(p + 1) + " has a loop edge; level cycle is not simple");
  std::vector<int> cyc;
  int N = static_cast<int>(vs.size());
  if (N < 2) throw std::logic_error("level cycle too short");
  if (N == 2) {
    cyc.assign(vs.begin(), vs.end());
  } else {
    int x = *vs.begin();
    for (int step = 0; step < N; ++step) {
      cyc.push_back(x);
      int nx = -1;
      for (int y : vs)
        if (Q.q.eps[x][y] == 1) {
          if (nx >= 0) throw std::logic_error("level subquiver is not a cycle");
          nx = y;
        }
      if (nx < 0) throw std::logic_error("level subquiver is not a cycle");
      x = nx;
    }
    if (x != cyc[0]) throw std::logic_error("level subquiver is not a single cycle");
  }
  satellite_c_vectors(Q.q, cyc);  // asserts the balance condition
  return cyc;
}

Word weyl_generator_word(const MQuiver& Q, const Triangulation& T, int p, int i, const std::vector<int>& order) {
  return tau_word(Q.q.n, level_cycle(Q, T, p, i), order);
}

Word w0_word(const MQuiver& Q, const Triangulation& T, int p) {
  int m = Q.m;
  Word w;
  for (int k = m - 1; k >= 1; --k)
    for (int l = m - 1; l >= m - k; --l) {
      Word s = weyl_generator_word(Q, T, p, l);
      w.insert(w.end(), s.begin(), s.end());
    }
  return w;
}

Word w0_all_punctures(const MQuiver& Q, const Triangulation& T) {
  Word w;
  for (int p : T.punctures()) {
    Word s = w0_word(Q, T, p);
    w.insert(w.end(), s.begin(), s.end());
  }
  return w;
}

// ------------------------------------------------------------------ the involution *

std::vector<Tri> involution_mutations(int m) {
  std::vector<Tri> r;
  for (int i = 1; i <= m - 2; ++i)
    for (int row = i; row >= 1; --row) {
      int b = m - row - 1;
      for (int a = row; a >= 1; --a) r.push_back({a, b, row + 1 - a});
    }
  return r;
}

Tri involution_sigma(int, const Tri& p) {
  if (p[0] == 0) return {0, p[2], p[1]};
  if (p[2] == 0) return {p[1], p[0], 0};
  return {p[2], p[1], p[0]};
}

Word involution_word(const MQuiver& Q, const Triangulation& T) {
  int m = Q.m;
  Word w;
  auto muts = involution_mutations(m);
  for (int t = 0; t < T.num_triangles(); ++t)
    for (auto& p : muts) w.push_back(Step::mu(Q.index.at(*key_of(T, m, t, p))));
  int n = Q.q.n;
  Perm perm(n);
  for (int i = 0; i < n; ++i) {
    const VKey& k = Q.keys[i];
    VKey img = k;
    if (k[0] == 0) {
      img[2] = m - k[2];
    } else {
      Tri s = involution_sigma(m, {k[2], k[3], m - k[2] - k[3]});
      img[2] = s[0];
      img[3] = s[1];
    }
    perm[i] = Q.index.at(img);
  }
  w.push_back(Step::pi(perm));
  return w;
}

// ------------------------------------------------------------------ rotation

Triangulation rotated_labels(const Triangulation& T, int dir) {
  std::vector<int> rho(T.points.size());
  std::iota(rho.begin(), rho.end(), 0);
  for (auto& cyc : T.boundary_cycles()) {
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) rho[cyc[i]] = cyc[((i + dir) % k + k) % k];
  }
  auto corners = T.corners;
  for (auto& c : corners)
    for (auto& x : c) x = rho[x];
  return Triangulation::from_sides(T.points, corners, T.sides);
}

namespace {

struct Canon {
  std::vector<int> sig;
  std::vector<std::pair<int, int>> order;  // (triangle, rotation) in visit order
};

Canon canon(const Triangulation& T) {
  Canon c;
  int root_t = 0, root_r = 0, best = -1;
  for (int e = 0; e < static_cast<int>(T.edges.size()); ++e)
    if (T.edges[e].boundary() && (best < 0 || T.edge_start(e) < best)) {
      best = T.edge_start(e);
      root_t = T.edges[e].t0;
      root_r = T.edges[e].s0;
    }
  int F = T.num_triangles();
  std::vector<int> idx(F, -1), rot(F, 0);
  std::deque<int> queue;
  idx[root_t] = 0;
  rot[root_t] = root_r;
  c.order.push_back({root_t, root_r});
  queue.push_back(root_t);
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (int i = 0; i < 3; ++i) c.sig.push_back(T.corners[t][(rot[t] + i) % 3]);
    for (int i = 0; i < 3; ++i) {
      int s = (rot[t] + i) % 3;
      auto& E = T.edges[T.sides[t][s]];
      if (E.boundary()) {
        c.sig.push_back(-1);
        c.sig.push_back(-1);
        continue;
      }
      int t2 = E.t0 == t && E.s0 == s ? E.t1 : E.t0;
      int s2 = E.t0 == t && E.s0 == s ? E.s1 : E.s0;
      if (idx[t2] < 0) {
        idx[t2] = static_cast<int>(c.order.size());
        rot[t2] = s2;
        c.order.push_back({t2, s2});
        queue.push_back(t2);
      }
      c.sig.push_back(idx[t2]);
      c.sig.push_back(((s2 - rot[t2]) % 3 + 3) % 3);
    }
  }
  return c;
}

}  // namespace

std::vector<int> canonical_signature(const Triangulation& T) { return canon(T).sig; }

namespace {

// flip paths from T to triangulations carrying the rotated labels, in BFS order.
// States are triangulations up to isotopy: the labeled combinatorics together with
// the C-matrix rows (m = 2) of the flip path, which tell twists around holes apart.
std::vector<std::vector<int>> rotation_paths(const Triangulation& T, int dir, long budget, int max_paths,
                                             long* explored) {
  auto target = canon(rotated_labels(T, dir)).sig;
  struct Node {
    Triangulation t;
    int parent;
    int edge;
    Word w2;
  };
  Quiver q2 = build_quiver(T, 2, Mode::X).q;
  auto state = [&](const Triangulation& t, const Word& w2) {
    IntMatrix rows = cmatrix_of_word(q2, w2).C;
    std::sort(rows.begin(), rows.end());
    return std::make_pair(canon(t).sig, rows);
  };
  std::vector<Node> nodes{{T, -1, -1, {}}};
  std::set<std::pair<std::vector<int>, IntMatrix>> seen{state(T, {})};
  std::vector<int> hits;
  if (canon(T).sig == target) hits.push_back(0);
  for (size_t head = 0; static_cast<int>(hits.size()) < max_paths && head < nodes.size(); ++head) {
    for (int e = 0; e < static_cast<int>(nodes[head].t.edges.size()); ++e) {
      if (static_cast<int>(hits.size()) >= max_paths) break;
      if (!flippable(nodes[head].t, e)) continue;
      FlipResult f = flip_word(nodes[head].t, e, 2, Mode::X);
      Word w2 = concat(nodes[head].w2, f.word);
      auto st = state(f.after, w2);
      if (!seen.insert(st).second) continue;
      if (static_cast<long>(nodes.size()) >= budget) {
        if (!hits.empty()) break;
        throw SearchBudgetError("flip search exceeded the budget of " + std::to_string(budget) + " triangulations");
      }
      nodes.push_back({f.after, static_cast<int>(head), e, std::move(w2)});
      if (st.first == target) hits.push_back(static_cast<int>(nodes.size()) - 1);
    }
    if (static_cast<long>(nodes.size()) >= budget && !hits.empty()) break;
  }
  if (explored) *explored = static_cast<long>(nodes.size());
  if (hits.empty()) throw std::logic_error("rotated triangulation not reachable by flips");
  std::vector<std::vector<int>> out;
  for (int h : hits) {
    std::vector<int> path;
    for (int x = h; nodes[x].parent >= 0; x = nodes[x].parent) path.push_back(nodes[x].edge);
    std::reverse(path.begin(), path.end());
    out.push_back(path);
  }
  return out;
}

Word rotation_from_path(const Triangulation& T, int m, Mode mode, int dir, const std::vector<int>& path) {
  Canon target = canon(rotated_labels(T, dir));
  Word w;
  Triangulation cur = T;
  for (int e : path) {
    FlipResult f = flip_word(cur, e, m, mode);
    w.insert(w.end(), f.word.begin(), f.word.end());
    cur = f.after;
  }
  // identify cur with the rotated copy of T, triangle by triangle
  Canon cc = canon(cur);
  if (cc.sig != target.sig) throw std::logic_error("flip path replay diverged");
  MQuiver Qc = build_quiver(cur, m, mode), QT = build_quiver(T, m, mode);
  std::vector<int> pos(cur.num_triangles());
  for (size_t i = 0; i < cc.order.size(); ++i) pos[cc.order[i].first] = static_cast<int>(i);
  Perm perm(Qc.q.n);
  for (int i = 0; i < Qc.q.n; ++i) {
    auto [t, wst] = representative(cur, m, Qc.keys[i]);
    int j = pos[t];
    Tri local = to_local(wst, cc.order[j].second);
    perm[i] = QT.index.at(*key_of(T, m, target.order[j].first, to_stored(local, target.order[j].second)));
  }
  w.push_back(Step::pi(perm));
  Quiver got = apply_word(QT.q, w);
  bool ok = mode == Mode::X ? got == QT.q : got.equal_ignoring_frozen_arrows(QT.q);
  if (!ok) throw std::logic_error("rotation word does not return the quiver");
  return w;
}

void check_rotatable(const Triangulation& T) {
  // with one special point the rotation is a boundary twist, invisible to labels
  for (auto& c : T.boundary_cycles())
    if (c.size() == 1) throw UnsupportedSurface("rotation of a boundary component with one special point");
}

}  // namespace

std::vector<Word> rotation_candidates(const Triangulation& T, int m, Mode mode, int dir, long budget, int max_candidates,
                                      long* explored) {
  if (T.boundary_cycles().empty()) return {Word{}};
  check_rotatable(T);
  std::vector<Word> out;
  for (auto& p : rotation_paths(T, dir, budget, max_candidates, explored))
    out.push_back(rotation_from_path(T, m, mode, dir, p));
  return out;
}

Word rotation_word(const Triangulation& T, int m, Mode mode, int dir, long budget, long* explored) {
  return rotation_candidates(T, m, mode, dir, budget, 1, explored).front();
}

// ------------------------------------------------------------------ DT

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

Word DTResult::full() const {
  Word w = word;
  if (perm) w.push_back(Step::pi(*perm));
  return w;
}

DTResult certify(const Quiver& q, const Word& w) {
  DTResult r;
  r.word = w;
  r.c = cmatrix_of_word(q, w);
  r.perm = extract_dt_permutation(r.c.C, q);
  r.certified = r.perm.has_value() && apply_word(q, r.full()) == q;
  return r;
}

DTResult dt_word(const Triangulation& T, int m, Composition comp, int dir, long budget, int max_candidates) {
  MQuiver Q = build_quiver(T, m, Mode::X);
  Word w0 = w0_all_punctures(Q, T);
  Word D = involution_word(Q, T);
  auto rs = rotation_candidates(T, m, Mode::X, dir, budget, max_candidates);
  DTResult first;
  for (size_t i = 0; i < rs.size(); ++i) {
    Word w = comp == Composition::RFirst ? concat(concat(rs[i], w0), D) : concat(concat(w0, D), rs[i]);
    DTResult r = certify(Q.q, w);
    r.rotation_candidate = static_cast<int>(i);
    if (r.certified) return r;
    if (i == 0) first = r;
  }
  return first;
}

}  // namespace cl
