#pragma once

// Thurston-Veech surfaces from bipartite intersection graphs, and the
// structural checks the congruence-degree criterion relies on.

#include <optional>
#include <string>
#include <vector>

#include "veechfib/linalg.hpp"
#include "veechfib/number_field.hpp"
#include "veechfib/roots.hpp"

namespace veechfib {

struct BipartiteIntersectionGraph {
  int black_count = 0;
  int white_count = 0;
  IntMatrix intersections;  // black x white, Q[i][j] = |C_i ∩ C_j|
  std::vector<int> black_labels, white_labels;  // diagram vertex numbers

  int vertex_count() const { return black_count + white_count; }
  // symmetric adjacency, blacks first
  IntMatrix adjacency() const;
  BipartiteIntersectionGraph transposed() const;
};

// Validates shape, nonnegativity, nonzero rows/columns and connectivity.
BipartiteIntersectionGraph make_graph(IntMatrix q, std::vector<int> black_labels = {},
                                      std::vector<int> white_labels = {});

enum class CoxeterKind { A, E7, E8 };
// A(k): path on k vertices, black = odd positions. E7/E8: Bourbaki numbering
// (chain 1-3-4-5-..., vertex 2 attached to 4), black = the part containing 2.
BipartiteIntersectionGraph coxeter_graph(CoxeterKind kind, int rank = 0);

struct PerronFrobeniusData {
  NumberRingElement mu;
  RootInterval mu_root;  // isolates mu among the roots of its minimal polynomial
  std::vector<NumberRingElement> heights;  // blacks then whites, first entry 1
};

// Largest eigenvalue of the adjacency matrix, exactly, with its positive eigenvector.
PerronFrobeniusData perron_frobenius(const BipartiteIntersectionGraph& g);

// Minimal polynomial of the largest root of a squarefree integer polynomial,
// using cyclotomic-type factors when the root is <= 2, otherwise a mod-p
// irreducibility certificate. Throws unsupported_family when neither applies.
IntPolynomial largest_root_minimal_polynomial(const IntPolynomial& charpoly, const RootInterval& largest,
                                              const IntPolynomial* bipartite_square_charpoly = nullptr);

enum class Direction { horizontal, vertical };
const char* direction_name(Direction d);

struct CylinderDatum {
  Direction direction = Direction::horizontal;
  NumberRingElement height;
  NumberRingElement circumference;
  int twist_count = 1;
  std::string core_curve;    // "H1", "V2", ...
  std::vector<int> vertices;  // graph vertex indices (blacks 0.., whites black_count..)
};

enum class SurfaceKind { polygon, E7, E8, custom };

struct SurfaceFamily {
  SurfaceKind kind = SurfaceKind::polygon;
  int n = 0;  // polygon only
  std::string tag() const;
  // "polygon-5", "E7", "E8"
  static SurfaceFamily parse(const std::string& s);
};

// n in {q, 2q, 2^k}, q > 3 prime, k > 2
bool is_supported_polygon(int n);

enum class HeightNormalization { first_entry_one, lowest_horizontal_mu };
const char* normalization_name(HeightNormalization n);

struct SurfaceModel {
  BipartiteIntersectionGraph graph;  // black part = horizontal curves
  NumberRingElement mu;
  RootInterval mu_root{0, 0, IntPolynomial{}};
  std::vector<NumberRingElement> heights;  // per graph vertex, first_entry_one state
  HeightNormalization normalization = HeightNormalization::first_entry_one;
  std::vector<CylinderDatum> horizontal, vertical;
  IntMatrix cylinder_intersection;  // horizontal x vertical core-curve intersections
  int genus = 0;
  std::vector<int> zero_partition;
  std::string family_tag;
  bool pi1_flag = false;  // the single-crossing hypothesis, asserted by the source for each family
  bool quotient_applied = false;
  bool staircase = false;
  int lowest_horizontal = 0;  // index into horizontal
  int anchor_vertex = -1;     // graph vertex the inductive lift starts from
};

SurfaceModel build_surface(const SurfaceFamily& family);

// One cylinder per vertex, no quotient. Genus and partition are taken as given
// and cross-checked against rank(Q). staircase is set when the graph is a path.
SurfaceModel model_from_graph(const BipartiteIntersectionGraph& g, int genus, std::vector<int> partition,
                              std::string tag = "custom");

// Same model with heights and circumferences rescaled to the requested state.
SurfaceModel renormalized(const SurfaceModel& m, HeightNormalization target);

bool staircase_parity_check(const SurfaceModel& m);

// Integer-polynomial lifts in an indeterminate t, produced by walking a path-shaped
// graph from its anchor leaf. Empty when the graph is not a path.
std::vector<IntPolynomial> inductive_height_lifts(const SurfaceModel& m);

struct HolonomyBasis {
  NumberRingElement x;  // horizontal vector (x, 0)
  NumberRingElement y;  // vertical vector (0, y)
  std::string gamma, delta;  // core curves realising them
};

struct HolonomyCheck {
  std::optional<HolonomyBasis> basis;
  std::string failure;  // names the offending core curve
  bool ok() const { return basis.has_value(); }
};

HolonomyCheck holonomy_basis_check(const SurfaceModel& m);
bool cylinder_bound_check(const SurfaceModel& m, int zeros);
bool core_curve_span_check(const SurfaceModel& m);

}  // namespace veechfib
