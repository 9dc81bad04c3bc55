#pragma once
// decorated surfaces, ideal triangulations, m-triangulation quivers and the
// cluster words attached to them (flips, Weyl generators, rotation, *, DT)

#include <array>
#include <map>
#include <optional>

#include "cl/seeds.hpp"
#include "cl/tropical.hpp"

namespace cl {

struct AdmissibilityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedSurface : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FlipError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SearchBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SurfaceSpec {
  int genus = 0;
  int punctures = 0;
  std::vector<int> boundary;  // special points per boundary component
};

struct Admissibility {
  bool ok = false;
  std::string reason;
};
Admissibility admissibility(const SurfaceSpec& s);

enum class PointKind { Puncture, Special };

struct Triangulation {
  struct Edge {
    int t0 = -1, s0 = -1;  // first occurrence fixes the direction
    int t1 = -1, s1 = -1;  // -1 for boundary edges
    bool boundary() const { return t1 < 0; }
  };
  std::vector<PointKind> points;
  std::vector<std::array<int, 3>> corners;  // counterclockwise
  std::vector<std::array<int, 3>> sides;    // side s runs corner s -> corner s+1
  std::vector<Edge> edges;

  // edges are recovered from shared side ids; validates orientation
  static Triangulation from_sides(std::vector<PointKind> pts, std::vector<std::array<int, 3>> corners,
                                  std::vector<std::array<int, 3>> sides);
  int num_triangles() const { return static_cast<int>(corners.size()); }
  int edge_start(int e) const { return corners[edges[e].t0][edges[e].s0]; }
  int edge_end(int e) const { return corners[edges[e].t0][(edges[e].s0 + 1) % 3]; }
  // boundary components as cycles of special points, in boundary-edge direction
  std::vector<std::vector<int>> boundary_cycles() const;
  std::vector<int> punctures() const;
  int euler_characteristic() const;
};

Triangulation triangulate(const SurfaceSpec& s);
// stellar subdivision of triangle t by a new puncture
Triangulation insert_puncture(const Triangulation& T, int t);

// ------------------------------------------------------------------ quivers
enum class Mode { X, A };  // X: boundary edges carry no vertex; A: they carry frozen ones

using VKey = std::array<int, 4>;  // {0, edge, position, 0} or {1, triangle, a, b}

struct MQuiver {
  Quiver q;
  int m = 2;
  Mode mode = Mode::X;
  std::vector<VKey> keys;
  std::map<VKey, int> index;
};

std::optional<VKey> key_of(const Triangulation& T, int m, int t, const Tri& w);
MQuiver build_quiver(const Triangulation& T, int m, Mode mode = Mode::X);

// ------------------------------------------------------------------ words
bool flippable(const Triangulation& T, int e);
struct FlipResult {
  Word word;  // mutations, then the relabeling onto the flipped triangulation
  Triangulation after;
};
FlipResult flip_word(const Triangulation& T, int e, int m, Mode mode = Mode::X);

// level-i cycle at puncture p, ordered along the arrows
std::vector<int> level_cycle(const MQuiver& Q, const Triangulation& T, int p, int i);
Word weyl_generator_word(const MQuiver& Q, const Triangulation& T, int p, int i, const std::vector<int>& order = {});
Word w0_word(const MQuiver& Q, const Triangulation& T, int p);
Word w0_all_punctures(const MQuiver& Q, const Triangulation& T);

// per-triangle mutation part of *, then sigma on interior points and edge reversal
Word involution_word(const MQuiver& Q, const Triangulation& T);
// the mutation sequence of * on one triangle, in local coordinates
std::vector<Tri> involution_mutations(int m);
Tri involution_sigma(int m, const Tri& p);

// relabeling of special points along each boundary by `dir` steps
Triangulation rotated_labels(const Triangulation& T, int dir);
std::vector<int> canonical_signature(const Triangulation& T);
Word rotation_word(const Triangulation& T, int m, Mode mode, int dir, long budget, long* explored = nullptr);
// rotation words for every isotopy class carrying the rotated labels, nearest first
// (several exist when twists around holes or punctures are invisible to labels)
std::vector<Word> rotation_candidates(const Triangulation& T, int m, Mode mode, int dir, long budget,
                                      int max_candidates, long* explored = nullptr);

enum class Composition { RFirst, RLast };
struct DTResult {
  Word word;  // composite, without the final permutation
  CResult c;
  std::optional<Perm> perm;
  bool certified = false;
  int rotation_candidate = 0;  // which rotation candidate was used
  Word full() const;  // word followed by the permutation
};
DTResult dt_word(const Triangulation& T, int m, Composition comp, int dir = 1, long budget = 100000,
                 int max_candidates = 8);
DTResult certify(const Quiver& q, const Word& w);

long lcm_long(long a, long b);

}  // namespace cl
