#include "veechfib/serialize.hpp"

namespace veechfib {

Json exact(const Integer& z) { return z.get_str(); }
Json exact(const Rational& q) { return to_string(q); }

namespace {

template <class T>
Json optional_exact(const std::optional<T>& v) {
  return v ? exact(*v) : Json(nullptr);
}

Json in_mu(const NumberRingElement& x) { return to_string(x.residue(), "mu"); }

Json cylinder(const CylinderDatum& c) {
  Json j;
  j["core_curve"] = c.core_curve;
  j["direction"] = direction_name(c.direction);
  j["height"] = in_mu(c.height);
  j["circumference"] = in_mu(c.circumference);
  j["twist_count"] = c.twist_count;
  j["vertices"] = c.vertices;
  return j;
}

}  // namespace

Json to_json(const Prototype& p) { return Json{{"w", p.w}, {"h", p.h}, {"t", p.t}, {"e", p.e}}; }

Json to_json(const SurfaceModel& m) {
  Json j;
  j["family"] = m.family_tag;
  j["genus"] = m.genus;
  j["zero_partition"] = m.zero_partition;
  j["mu_minimal_polynomial"] = to_string(m.mu.modulus(), "mu");
  j["mu_interval"] = Json::array({exact(m.mu_root.lower()), exact(m.mu_root.upper())});
  j["height_normalization"] = normalization_name(m.normalization);
  j["quotient_applied"] = m.quotient_applied;
  j["staircase"] = m.staircase;
  j["pi1_flag"] = m.pi1_flag;
  Json graph;
  graph["black_labels"] = m.graph.black_labels;
  graph["white_labels"] = m.graph.white_labels;
  graph["intersections"] = m.graph.intersections;
  j["graph"] = graph;
  Json heights = Json::array();
  for (const auto& h : m.heights) heights.push_back(in_mu(h));
  j["vertex_heights"] = heights;
  Json hs = Json::array(), vs = Json::array();
  for (const auto& c : m.horizontal) hs.push_back(cylinder(c));
  for (const auto& c : m.vertical) vs.push_back(cylinder(c));
  j["horizontal"] = hs;
  j["vertical"] = vs;
  j["cylinder_intersection"] = m.cylinder_intersection;
  j["lowest_horizontal"] = m.horizontal.empty() ? Json(nullptr) : Json(m.horizontal[m.lowest_horizontal].core_curve);
  return j;
}

Json to_json(const StructuralChecks& c) {
  Json j{{"staircase_parity", c.parity},
         {"holonomy_basis", c.holonomy},
         {"cylinder_bound", c.cylinder_bound},
         {"homology_span", c.homology_span}};
  if (!c.holonomy_failure.empty()) j["holonomy_failure"] = c.holonomy_failure;
  return j;
}

Json to_json(const DegreeResult& d) {
  return Json{{"group_label", d.group_label},
              {"group_order", exact(d.group_order)},
              {"degree", exact(d.degree)},
              {"exceptional", d.exceptional}};
}

Json to_json(const CoverData& c) {
  Json j;
  j["degree"] = exact(c.degree);
  j["base_genus"] = exact(c.base_genus);
  j["cusp_count"] = exact(c.cusp_count);
  Json per = Json::array(), tw = Json::array();
  for (const auto& v : c.cusps_per_orbit) per.push_back(exact(v));
  for (const auto& v : c.per_cusp_twists) tw.push_back(exact(v));
  j["cusps_per_orbit"] = per;
  j["per_cusp_twists"] = tw;
  j["total_twisting"] = exact(c.total_twisting);
  j["base_euler_characteristic"] = exact(c.base_euler_characteristic);
  j["formulas"] = Json{{"base_genus", "2 - 2b - cusps = d * chi_orb"},
                       {"cusp_count", "sum over base cusps of d / ord"},
                       {"total_twisting", "sum over base cusps of d * T_c / k_c"}};
  return j;
}

Json to_json(const FibrationInvariants& f) {
  Json j;
  j["fiber_genus"] = f.fiber_genus;
  j["base_genus"] = exact(f.base_genus);
  j["cusp_count"] = exact(f.cusp_count);
  j["twisting"] = exact(f.twisting);
  j["kappa_mu"] = exact(f.kappa_mu);
  j["chi_B"] = exact(f.chi_B);
  j["euler"] = exact(f.euler);
  j["signature"] = exact(f.signature);
  j["c1_squared"] = exact(f.c1_squared);
  j["c2"] = exact(f.c2);
  j["chi_O"] = exact(f.chi_O);
  j["p_g"] = optional_exact(f.p_g);
  j["b1"] = optional_exact(f.b1);
  j["b2"] = optional_exact(f.b2);
  j["b2_plus"] = optional_exact(f.b2_plus);
  j["b2_minus"] = optional_exact(f.b2_minus);
  j["bmy_slack"] = exact(f.bmy_slack);
  j["bmy_strict"] = f.bmy_strict;
  j["bmy_sufficient"] = f.bmy_sufficient;
  j["noether_line"] = f.noether_line;
  j["kodaira_tag"] = f.kodaira_tag;
  if (!f.kodaira_name.empty()) j["kodaira_name"] = f.kodaira_name;
  Json s = Json::array();
  for (const auto& v : f.zero_section_self_intersections) s.push_back(exact(v));
  j["zero_section_self_intersections"] = s;
  j["intersection_form_parity"] = f.intersection_form_parity;
  j["formulas"] = f.formulas;
  return j;
}

Json to_json(const FamilyResult& r) {
  Json j;
  j["family"] = r.spec.tag;
  j["kind"] = family_kind_name(r.spec.kind);
  if (r.spec.kind == FamilyKind::elliptic)
    j["m"] = r.spec.parameter;
  else
    j["p"] = r.p;
  j["fiber_genus"] = r.spec.fiber_genus;
  j["zero_partition"] = r.spec.zero_partition;
  if (r.spec.kind != FamilyKind::elliptic) j["alpha_minimal_polynomial"] = to_string(r.spec.alpha_minpoly);
  j["contains_minus_I"] = r.spec.contains_minus_I;
  if (r.spec.signature) {
    Json sig;
    sig["base_genus"] = r.spec.signature->base_genus;
    sig["orbifold_orders"] = r.spec.signature->orbifold_orders;
    sig["cusp_count"] = r.spec.signature->cusp_count;
    sig["euler_characteristic"] = exact(r.spec.signature->euler_characteristic());
    j["orbifold_signature"] = sig;
  }
  if (r.spec.kind == FamilyKind::weierstrass) {
    Json ps = Json::array();
    for (const auto& p : r.spec.prototypes) ps.push_back(to_json(p));
    j["prototypes"] = ps;
  }
  Json bt = Json::array();
  for (const auto& t : r.spec.base_twists) bt.push_back(exact(t));
  j["base_twists"] = bt;
  j["roots"] = r.spec.roots;
  j["degree"] = to_json(r.degree);
  j["cover"] = to_json(r.cover);
  j["invariants"] = to_json(r.invariants);
  if (r.checks) j["structural_checks"] = to_json(*r.checks);
  if (r.genus_positivity) j["genus_positivity"] = *r.genus_positivity;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const ClosedForm& c) {
  return Json{{"base_genus", exact(c.base_genus)},
              {"cusps", exact(c.cusps)},
              {"euler", exact(c.euler)},
              {"signature", exact(c.signature)}};
}

}  // namespace veechfib
