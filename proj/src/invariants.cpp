#include "veechfib/invariants.hpp"

#include "veechfib/error.hpp"

namespace veechfib {

Rational kappa_mu(const std::vector<int>& partition) {
  Rational k = 0;
  for (int m : partition) {
    if (m < 1) fail(ErrorKind::invalid_argument, "zero orders must be positive");
    k += make_rational(m * (m + 2), m + 1);
  }
  k /= 12;
  return k;
}

Integer euler_characteristic(long g, const Integer& b, const Integer& T) {
  if (g < 1 || b < 0 || T < 0) fail(ErrorKind::invalid_argument, "need g >= 1, b >= 0, T >= 0");
  return 4 * Integer(g - 1) * (b - 1) + T;
}

Rational signature(const Rational& kappa, const Rational& chi_B, const Integer& T) {
  Rational s = -2 * kappa * chi_B - make_rational(2 * T, 3);
  s.canonicalize();
  return s;
}

Rational c1_squared(const Rational& kappa, const Rational& chi_B, long g, const Integer& b) {
  Rational c = -6 * kappa * chi_B + Rational(8 * Integer(g - 1) * (b - 1));
  c.canonicalize();
  return c;
}

DerivedCharacteristics derived_characteristics(const Integer& e, const Integer& sigma, std::optional<Integer> b1) {
  DerivedCharacteristics d;
  d.c2 = e;
  d.c1_squared = 3 * sigma + 2 * e;
  Integer sum = d.c1_squared + d.c2;
  if (sum % 12 != 0)
    fail(ErrorKind::inconsistency, "c1^2 + c2 = " + sum.get_str() + " is not divisible by 12");
  d.chi_O = sum / 12;
  if (b1) {
    if (*b1 < 0 || *b1 % 2 != 0) fail(ErrorKind::inconsistency, "first Betti number must be even and nonnegative");
    d.p_g = d.chi_O - 1 + *b1 / 2;
    Integer b2 = e - 2 + 2 * *b1;
    if (b2 < 0) fail(ErrorKind::inconsistency, "negative second Betti number");
    if ((b2 + sigma) % 2 != 0) fail(ErrorKind::inconsistency, "b2 and sigma have different parity");
    d.b2 = b2;
    d.b2_plus = (b2 + sigma) / 2;
    d.b2_minus = (b2 - sigma) / 2;
    if (*d.b2_plus < 0 || *d.b2_minus < 0) fail(ErrorKind::inconsistency, "|sigma| exceeds b2");
  }
  return d;
}

BmyCheck bmy_check(const Integer& e, const Integer& sigma) {
  Rational slack = make_rational(e, 3) - Rational(sigma);
  slack.canonicalize();
  return {slack, slack > 0};
}

bool bmy_sufficient(long g, const Integer& cusp_count, const Integer& T) { return Integer(g - 1) * cusp_count < 2 * T; }

bool kappa_bound_check(const std::vector<int>& partition) {
  if (partition.empty()) fail(ErrorKind::invalid_argument, "partition must be nonempty");
  long sum = 0;
  bool all_ones = true;
  for (int m : partition) {
    sum += m;
    all_ones = all_ones && m == 1;
  }
  if (sum % 2 != 0) fail(ErrorKind::invalid_argument, "partition must sum to 2g - 2");
  long g = sum / 2 + 1;
  Rational lhs = 12 * kappa_mu(partition);
  Rational rhs = 3 * g - 3;
  return lhs <= rhs && ((lhs == rhs) == all_ones);
}

Rational section_self_intersection(const Rational& chi_B, int m) {
  if (m < 1) fail(ErrorKind::invalid_argument, "zero order must be positive");
  Rational s = chi_B / (2 * (m + 1));
  s.canonicalize();
  return s;
}

std::string intersection_form_parity(const std::vector<Rational>& values) {
  for (const auto& v : values)
    if (is_integral(v) && v.get_num() % 2 != 0) return "odd";
  return "unknown";
}

KodairaResult kodaira_classify(const KodairaInput& in) {
  if (in.g == 1) {
    long m = in.elliptic_level.value_or(0);
    if (m == 3) return {"elliptic-surface/rational-beauville", "E(1)"};
    if (m == 4) return {"elliptic-surface/k3", "E(2)"};
    std::string name = in.b == 0 ? "E(" + in.chi_O.get_str() + ")" : "";
    return {"elliptic-surface/proper-elliptic", name};
  }
  if (in.g >= 2 && in.b >= 1) return {"minimal-general-type", ""};
  if (in.g >= 2 && in.minimality_override) return {"minimal-general-type", ""};
  if (in.g >= 2) return {"undetermined-base-genus-0", ""};
  fail(ErrorKind::invalid_argument, "fibre genus must be positive");
}

FibrationInvariants compute_invariants(const FibrationInput& in) {
  FibrationInvariants r;
  r.fiber_genus = in.g;
  r.base_genus = in.b;
  r.cusp_count = in.cusp_count;
  r.twisting = in.T;
  r.kappa_mu = kappa_mu(in.partition);
  r.chi_B = Rational(2 - 2 * in.b - in.cusp_count);
  r.formulas["kappa_mu"] = "(1/12) sum m(m+2)/(m+1)";
  r.formulas["chi_B"] = "2 - 2b - cusps";

  r.euler = euler_characteristic(in.g, in.b, in.T);
  r.formulas["euler"] = "4(g-1)(b-1) + T";
  Rational sig = signature(r.kappa_mu, r.chi_B, in.T);
  if (!is_integral(sig)) fail(ErrorKind::inconsistency, "signature " + to_string(sig) + " is not an integer");
  r.signature = sig.get_num();
  r.formulas["signature"] = "-2 kappa chi(B) - 2T/3";

  Rational c1 = c1_squared(r.kappa_mu, r.chi_B, in.g, in.b);
  if (!is_integral(c1)) fail(ErrorKind::inconsistency, "c1^2 = " + to_string(c1) + " is not an integer");
  std::optional<Integer> b1;
  if (in.pi1_flag) b1 = 2 * in.b;
  auto d = derived_characteristics(r.euler, r.signature, b1);
  if (d.c1_squared != c1.get_num())
    fail(ErrorKind::inconsistency, "c1^2 from the fibration (" + to_string(c1) + ") disagrees with 3 sigma + 2e (" +
                                       d.c1_squared.get_str() + ")");
  r.c1_squared = d.c1_squared;
  r.c2 = d.c2;
  r.chi_O = d.chi_O;
  r.formulas["c1_squared"] = "-6 kappa chi(B) + 8(g-1)(b-1) = 3 sigma + 2e";
  r.formulas["c2"] = "e";
  r.formulas["chi_O"] = "(c1^2 + c2)/12";
  r.b1 = b1;
  r.p_g = d.p_g;
  r.b2 = d.b2;
  r.b2_plus = d.b2_plus;
  r.b2_minus = d.b2_minus;
  if (b1) {
    r.formulas["b1"] = "2b (pi_1 of the total space is that of the closed base)";
    r.formulas["p_g"] = "chi_O - 1 + b1/2";
    r.formulas["b2"] = "e - 2 + 2 b1";
    r.formulas["b2_plus"] = "(b2 + sigma)/2";
    r.formulas["b2_minus"] = "(b2 - sigma)/2";
  }

  // identities, checked rather than assumed
  if (12 * r.chi_O != r.c1_squared + r.c2) fail(ErrorKind::inconsistency, "Noether's formula fails");
  if (3 * r.signature != r.c1_squared - 2 * r.c2) fail(ErrorKind::inconsistency, "Hirzebruch's formula fails");

  auto bmy = bmy_check(r.euler, r.signature);
  r.bmy_slack = bmy.slack;
  r.bmy_strict = bmy.strict;
  r.bmy_sufficient = bmy_sufficient(in.g, in.cusp_count, in.T);
  r.formulas["bmy_slack"] = "e/3 - sigma";
  r.formulas["bmy_sufficient"] = "(g-1) cusps < 2T";
  r.noether_line = r.p_g.has_value() && r.c1_squared == 2 * *r.p_g - 4;
  r.formulas["noether_line"] = "c1^2 = 2 p_g - 4";

  auto k = kodaira_classify({in.g, in.b, in.elliptic_level, r.chi_O, in.minimality_override});
  r.kodaira_tag = k.tag;
  r.kodaira_name = k.name;

  for (int m : in.partition) r.zero_section_self_intersections.push_back(section_self_intersection(r.chi_B, m));
  r.formulas["zero_section_self_intersections"] = "chi(B) / (2(m+1))";
  r.intersection_form_parity = intersection_form_parity(r.zero_section_self_intersections);
  return r;
}

}  // namespace veechfib
