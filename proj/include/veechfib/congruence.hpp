#pragma once

// Level-p congruence covers: degree, cusps, genus, twisting, and a brute-force
// matrix-group closure used to confirm the degree at small field sizes.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "veechfib/finite_field.hpp"
#include "veechfib/polynomial.hpp"

namespace veechfib {

struct OrbifoldSignature {
  int base_genus = 0;
  std::vector<long> orbifold_orders;
  long cusp_count = 0;
  // 2 - 2b - sum(1 - 1/n_i) - cusps
  Rational euler_characteristic() const;
};

// Rejects orders < 2, negative counts and non-hyperbolic signatures.
OrbifoldSignature make_signature(int base_genus, std::vector<long> orbifold_orders, long cusp_count);

struct DegreeResult {
  Integer group_order;
  Integer degree;
  std::string group_label;  // "PSL(2,125)", "SL(2,5)", ...
  bool exceptional = false;  // (p, g) = (3, 2)
};

// Degree of the level-p congruence cover whose image is SL(2, F_{p^g}) (or the
// binary icosahedral group when (p, g) = (3, 2)). Throws inadmissible_prime when
// alpha_minpoly is reducible mod p.
DegreeResult congruence_degree(const IntPolynomial& alpha_minpoly, std::uint64_t p, int g, bool contains_minus_I);

using Matrix2 = std::array<FFElement, 4>;  // row-major a b / c d


struct MatrixGroupSpec {
  std::shared_ptr<const FiniteFieldSpec> field;
  std::vector<Matrix2> generators;
};

// Validates determinant 1 and a common field.
MatrixGroupSpec make_matrix_group(std::shared_ptr<const FiniteFieldSpec> field, std::vector<Matrix2> generators);

// [[1, lambda], [0, 1]] and [[1, 0], [1, 1]].
MatrixGroupSpec unipotent_pair(std::shared_ptr<const FiniteFieldSpec> field, const FFElement& lambda);

constexpr std::uint64_t kDefaultClosureCap = 10'000'000;

// Exact order by breadth-first closure. Throws cap_exceeded beyond cap elements.
std::uint64_t group_closure_order(const MatrixGroupSpec& spec, std::uint64_t cap = kDefaultClosureCap);

// Order of the image of a cusp generator mod p. The generator is a nontrivial
// unipotent U with (U - I)^2 = 0, so U^p = I; override replaces that for
// hypothetical families.
// Degree read off from the closure of [[1, a], [0, 1]], [[1, 0], [1, 1]] over
// F_p[x]/(alpha_minpoly), a the class of x, instead of from the theorem. Only
// feasible while the closure stays under cap.
DegreeResult closure_congruence_degree(const IntPolynomial& alpha_minpoly, std::uint64_t p, bool contains_minus_I,
                                       std::uint64_t cap = kDefaultClosureCap);

long cusp_image_order(std::uint64_t p, std::optional<long> override_order = std::nullopt);

struct CoverData {
  Integer degree;
  Integer base_genus;
  Integer cusp_count;
  std::vector<Integer> cusps_per_orbit;   // cover cusps above each base cusp
  std::vector<Integer> per_cusp_twists;   // twisting of each cusp in that orbit
  Integer total_twisting;                 // sum of cusps_per_orbit[i] * per_cusp_twists[i]
  Rational base_euler_characteristic;     // chi_orb of the base orbifold
};

// Genus and cusps from chi(cover) = d * chi_orb, cusps = sum d / ord. Twisting is left empty.
CoverData cover_from_euler_characteristic(const Rational& chi_orb, const Integer& d,
                                          const std::vector<long>& cusp_image_orders);

// Same, with a full signature. Each orbifold point must map to an element of its
// full order (torsion-free congruence subgroup); otherwise inconsistent_cover_data.
CoverData riemann_hurwitz_cover(const OrbifoldSignature& sig, const Integer& d,
                                const std::vector<long>& orbifold_image_orders,
                                const std::vector<long>& cusp_image_orders);

// Fills per_cusp_twists and total_twisting: a cover cusp over base cusp c twists
// ord_c * T_c / k_c times. Throws invalid_root_data when that is not an integer.
void apply_cover_twisting(CoverData& cover, const std::vector<long>& cusp_image_orders,
                          const std::vector<Integer>& base_twists, const std::vector<long>& roots);

// T = sum over base cusps of (d / ord_c) * ord_c * T_c / k_c.
Integer cover_twisting(const std::vector<Integer>& cusp_count_per_orbit, const std::vector<long>& image_orders,
                       const std::vector<Integer>& base_twists, const std::vector<long>& roots);

}  // namespace veechfib
