#pragma once

// Characteristic numbers of the total space of a semistable fibration over a
// compactified congruence cover, evaluated in exact rationals.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "veechfib/polynomial.hpp"

namespace veechfib {

// (1/12) sum m(m+2)/(m+1)
Rational kappa_mu(const std::vector<int>& partition);

// 4(g-1)(b-1) + T
Integer euler_characteristic(long g, const Integer& b, const Integer& T);

// -2 kappa chi(B) - 2T/3
Rational signature(const Rational& kappa, const Rational& chi_B, const Integer& T);

// -6 kappa chi(B) + 8(g-1)(b-1)
Rational c1_squared(const Rational& kappa, const Rational& chi_B, long g, const Integer& b);

struct DerivedCharacteristics {
  Integer c1_squared, c2, chi_O;
  std::optional<Integer> p_g;  // needs b1
  std::optional<Integer> b2, b2_plus, b2_minus;
};

// c1^2 = 3 sigma + 2e, chi_O by Noether, p_g = chi_O - 1 + b1/2, b2 = e - 2 + 2 b1.
// Throws inconsistency on any divisibility or parity failure.
DerivedCharacteristics derived_characteristics(const Integer& e, const Integer& sigma,
                                               std::optional<Integer> b1);

struct BmyCheck {
  Rational slack;  // e/3 - sigma
  bool strict = false;
};
BmyCheck bmy_check(const Integer& e, const Integer& sigma);

// (g - 1) |Delta| < 2T
bool bmy_sufficient(long g, const Integer& cusp_count, const Integer& T);

// 12 kappa <= 3g - 3 with equality exactly for the all-ones partition.
bool kappa_bound_check(const std::vector<int>& partition);

// chi(B) / (2(m + 1)); the sign is the one giving -3 for the double pentagon.
Rational section_self_intersection(const Rational& chi_B, int m);

// "odd" when some value is an odd integer, "unknown" otherwise.
std::string intersection_form_parity(const std::vector<Rational>& self_intersections);

struct KodairaInput {
  long g = 0;
  Integer b = 0;
  std::optional<long> elliptic_level;  // genus-one fibres over a level-m modular curve
  Integer chi_O = 0;                   // used to name E(n)
  bool minimality_override = false;    // minimality proved by other means (double pentagon)
};

struct KodairaResult {
  std::string tag;
  std::string name;  // "E(1)", "K3 = E(2)", ... or empty
};

KodairaResult kodaira_classify(const KodairaInput& in);

struct FibrationInput {
  long g = 0;                 // fibre genus
  std::vector<int> partition;  // zero orders of the fibre form
  Integer b = 0;              // base genus
  Integer cusp_count = 0;
  Integer T = 0;              // total twisting
  bool pi1_flag = false;      // pi_1 of the total space equals that of the closed base
  std::optional<long> elliptic_level;
  bool minimality_override = false;
};

struct FibrationInvariants {
  long fiber_genus = 0;
  Integer base_genus, cusp_count, twisting;
  Rational kappa_mu, chi_B;
  Integer euler, signature, c1_squared, c2, chi_O;
  std::optional<Integer> p_g, b1, b2, b2_plus, b2_minus;
  Rational bmy_slack;
  bool bmy_strict = false;
  bool bmy_sufficient = false;
  bool noether_line = false;
  std::string kodaira_tag, kodaira_name;
  std::vector<Rational> zero_section_self_intersections;
  std::string intersection_form_parity;
  std::map<std::string, std::string> formulas;  // field name -> formula used
};

// Every identity (Noether, Hirzebruch, c2 = e) is asserted before returning.
FibrationInvariants compute_invariants(const FibrationInput& in);

}  // namespace veechfib
