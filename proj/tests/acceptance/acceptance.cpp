// One line per acceptance criterion. With arguments, runs only the listed
// criteria; exit status is nonzero when any of them fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "veechfib/cli.hpp"
#include "veechfib/families.hpp"
#include "veechfib/finite_field.hpp"

using namespace veechfib;

namespace {

// Wall-clock budgets, in seconds.
constexpr double kHeadlineBudget = 1.0;     // per CLI invocation
constexpr double kClosureBudget = 30.0;     // per field
constexpr double kTableBudget = 10.0;       // whole criterion
constexpr double kPrototypeBudget = 5.0;    // whole criterion
constexpr double kStructuralBudget = 60.0;  // whole criterion

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> problems;
  std::string summary;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      problems.push_back(what);
    }
  }
};

Integer power(long p, long g) {
  Integer q = 1;
  for (long k = 0; k < g; ++k) q *= p;
  return q;
}

bool valid_discriminant(long D) {
  long r = 0;
  while (r * r < D) ++r;
  return D >= 5 && r * r != D && (D % 4 == 0 || D % 4 == 1);
}

// 1 ------------------------------------------------------------------------
Outcome headline() {
  Outcome o;
  for (std::vector<std::string> args :
       {std::vector<std::string>{"weierstrass", "--D", "5", "--p", "3"},
        std::vector<std::string>{"polygon", "--n", "5", "--p", "3"}}) {
    std::ostringstream out, err;
    auto t0 = Clock::now();
    int code = run_cli(args, out, err);
    double dt = seconds_since(t0);
    std::string label = args[0];
    o.expect(code == 0, label + " exited " + std::to_string(code));
    if (code != 0) continue;
    auto j = nlohmann::json::parse(out.str());
    auto& c = j["cover"];
    auto& inv = j["invariants"];
    o.expect(c["degree"] == "60", label + " d");
    o.expect(c["base_genus"] == "0", label + " base genus");
    o.expect(c["cusp_count"] == "20", label + " cusps");
    o.expect(c["total_twisting"] == "120", label + " T");
    o.expect(inv["euler"] == "116", label + " e");
    o.expect(inv["signature"] == "-72", label + " sigma");
    o.expect(inv["c1_squared"] == "16", label + " c1^2");
    o.expect(inv["chi_O"] == "11", label + " chi_O");
    o.expect(inv["p_g"] == "10", label + " p_g");
    o.expect(inv["noether_line"] == true, label + " Noether line");
    o.expect(inv["zero_section_self_intersections"] == nlohmann::json::array({"-3"}), label + " S^2");
    o.expect(dt < kHeadlineBudget, label + " took " + std::to_string(dt) + " s");
  }
  o.summary = "both routes give d=60 b=0 cusps=20 T=120 e=116 sigma=-72 c1^2=16 chi_O=11 p_g=10 S^2=-3";
  return o;
}

// 2 ------------------------------------------------------------------------
Outcome dickson() {
  Outcome o;
  // F_9: alpha-bar is the reduction of mu^2, mu a root of x^2 - x - 1
  auto mod = std::make_shared<const IntPolynomial>(parse_int_polynomial("x^2-x-1"));
  auto mu = NumberRingElement::generator(mod);
  auto alpha = mu * mu;
  auto f9 = std::make_shared<const FiniteFieldSpec>(3, *mod);
  std::vector<Word> res;
  for (const auto& c : alpha.coordinates()) {
    if (c.get_den() != 1) o.expect(false, "mu^2 has a non-integral coordinate");
    res.push_back(mod_reduce(c.get_num(), 3));
  }
  struct Case {
    std::string name;
    MatrixGroupSpec spec;
    std::uint64_t expected;
  };
  std::vector<Case> cases;
  cases.push_back({"F_9", unipotent_pair(f9, FFElement(f9, res)), 120});
  // F_25 and F_49 from the alpha polynomials of polygon-8 and polygon-5, lambda = the class of x
  auto f25 = std::make_shared<const FiniteFieldSpec>(5, polygon_spec(8).alpha_minpoly);
  auto f49 = std::make_shared<const FiniteFieldSpec>(7, polygon_spec(5).alpha_minpoly);
  cases.push_back({"F_25", unipotent_pair(f25, FFElement::generator(f25)), 15600});
  cases.push_back({"F_49", unipotent_pair(f49, FFElement::generator(f49)), 117600});
  std::ostringstream s;
  for (const auto& c : cases) {
    auto t0 = Clock::now();
    auto n = group_closure_order(c.spec);
    double dt = seconds_since(t0);
    o.expect(n == c.expected, c.name + " closure " + std::to_string(n) + " != " + std::to_string(c.expected));
    o.expect(dt < kClosureBudget, c.name + " took " + std::to_string(dt) + " s");
    s << c.name << "=" << n << " ";
  }
  o.summary = s.str() + "(alpha-bar over F_9 is mu-bar^2)";
  return o;
}

// 3 ------------------------------------------------------------------------
Outcome tables() {
  Outcome o;
  auto t0 = Clock::now();
  int compared = 0, skipped = 0;
  std::vector<std::string> mismatched;
  auto compare = [&](const std::string& label, const ClosedForm& cf, const FamilyResult& r) {
    ++compared;
    auto field = [&](const char* name, const Rational& want, const Integer& got) {
      if (want != Rational(got)) {
        mismatched.push_back(label + " " + name);
        o.expect(false, label + " " + name + ": closed form " + to_string(want) + ", pipeline " + got.get_str());
      }
    };
    field("genus", cf.base_genus, r.cover.base_genus);
    field("cusps", cf.cusps, r.cover.cusp_count);
    field("e", cf.euler, r.invariants.euler);
    field("sigma", cf.signature, r.invariants.signature);
  };
  for (int n : {5, 7, 8, 10, 11, 13, 14, 16, 22, 26, 32}) {
    auto spec = polygon_spec(n);
    for (const auto& ap : admissible_primes(spec, 13)) {
      // the closed forms assume d = |PSL(2, p^g)|, which (p, g) = (3, 2) does not give
      if (ap.exceptional) {
        ++skipped;
        continue;
      }
      auto r = evaluate(spec, ap.p);
      compare(spec.tag + " p=" + std::to_string(ap.p), polygon_closed_form(n, ap.p, r.cover.degree), r);
    }
  }
  for (auto which : {SurfaceKind::E7, SurfaceKind::E8}) {
    auto spec = sporadic_spec(which);
    for (const auto& ap : admissible_primes(spec, 13)) {
      auto r = evaluate(spec, ap.p);
      compare(spec.tag + " p=" + std::to_string(ap.p), sporadic_closed_form(which, ap.p, r.cover.degree), r);
    }
  }
  double dt = seconds_since(t0);
  o.expect(dt < kTableBudget, "took " + std::to_string(dt) + " s");
  std::ostringstream s;
  s << compared << " instances compared, " << skipped << " exceptional (p,g)=(3,2) skipped, " << mismatched.size()
    << " field mismatches";
  if (!mismatched.empty()) {
    bool all_2q_sigma = std::all_of(mismatched.begin(), mismatched.end(), [](const std::string& m) {
      return m.ends_with(" sigma") && (m.starts_with("polygon-10 ") || m.starts_with("polygon-14 ") ||
                                       m.starts_with("polygon-22 ") || m.starts_with("polygon-26 "));
    });
    if (all_2q_sigma)
      s << "; every mismatch is the n=2q signature, where the closed form -d(q^2+2q+3)/(3q) disagrees with "
           "-2 kappa chi(B) - 2T/3 = -d(3q^2+2q+3)/(6q) evaluated on the same b, cusps and T";
  }
  o.summary = s.str();
  return o;
}

// 4 ------------------------------------------------------------------------
Outcome sporadic() {
  Outcome o;
  std::ostringstream s;
  for (auto which : {SurfaceKind::E7, SurfaceKind::E8}) {
    auto spec = sporadic_spec(which);
    Rational expected = which == SurfaceKind::E7 ? Rational(-35, 9) : Rational(-64, 15);
    int seen = 0;
    for (const auto& ap : admissible_primes(spec, 30)) {
      if (seen == 2) break;
      auto r = evaluate(spec, ap.p);
      Rational got = make_rational(r.invariants.signature, r.cover.degree);
      o.expect(got == expected, spec.tag + " p=" + std::to_string(ap.p) + " sigma/d = " + to_string(got));
      s << spec.tag << "@" << ap.p << "=" << to_string(got) << " ";
      ++seen;
    }
    o.expect(seen == 2, spec.tag + " has fewer than two admissible primes below 30");
  }
  o.summary = s.str();
  return o;
}

// 5 ------------------------------------------------------------------------
Outcome elliptic() {
  Outcome o;
  const struct {
    long m, e, sigma;
    const char* tag;
  } rows[] = {{3, 12, -8, "elliptic-surface/rational-beauville"},
              {4, 24, -16, "elliptic-surface/k3"},
              {5, 60, -40, "elliptic-surface/proper-elliptic"}};
  std::ostringstream s;
  for (const auto& row : rows) {
    auto r = elliptic_family(row.m);
    std::string l = "m=" + std::to_string(row.m);
    o.expect(r.invariants.euler == row.e, l + " e");
    o.expect(r.invariants.signature == row.sigma, l + " sigma");
    o.expect(r.invariants.kodaira_tag == row.tag, l + " tag " + r.invariants.kodaira_tag);
    s << l << ":(" << r.invariants.euler.get_str() << "," << r.invariants.signature.get_str() << ","
      << r.invariants.kodaira_tag << ") ";
  }
  o.summary = s.str();
  return o;
}

// 6 ------------------------------------------------------------------------
Outcome prototype_counts() {
  Outcome o;
  auto t0 = Clock::now();
  o.expect(enumerate_prototypes(5).size() == 1, "|P_5|");
  o.expect(enumerate_prototypes(8).size() == 2, "|P_8|");
  int checked = 0;
  for (long D = 5; D <= 100; ++D) {
    if (!valid_discriminant(D) || D % 8 == 1) continue;
    // independent four-fold loop
    std::size_t brute = 0;
    for (long e = -D; e <= D; ++e)
      for (long w = 1; w <= D; ++w)
        for (long h = 1; h <= D; ++h) {
          if (e * e + 4 * w * h != D || h + e >= w) continue;
          long g = std::gcd(w, h);
          for (long t = 0; t < g; ++t)
            if (std::gcd(g, std::gcd(t, e)) == 1) ++brute;
        }
    o.expect(enumerate_prototypes(D).size() == brute, "D=" + std::to_string(D));
    ++checked;
  }
  double dt = seconds_since(t0);
  o.expect(dt < kPrototypeBudget, "took " + std::to_string(dt) + " s");
  o.summary = "|P_5|=1, |P_8|=2, " + std::to_string(checked) + " discriminants match brute force";
  return o;
}

// 7 ------------------------------------------------------------------------
Outcome structural() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<SurfaceFamily> fams;
  for (int n = 3; n <= 40; ++n)
    if (is_supported_polygon(n)) fams.push_back({SurfaceKind::polygon, n});
  fams.push_back({SurfaceKind::E7, 0});
  fams.push_back({SurfaceKind::E8, 0});
  for (const auto& f : fams) {
    auto m = build_surface(f);
    auto c = run_structural_checks(m);
    o.expect(c.parity, f.tag() + " parity");
    o.expect(c.holonomy, f.tag() + " holonomy: " + c.holonomy_failure);
    o.expect(c.cylinder_bound, f.tag() + " cylinder bound");
    o.expect(c.homology_span, f.tag() + " homology span");
  }
  double dt = seconds_since(t0);
  o.expect(dt < kStructuralBudget, "took " + std::to_string(dt) + " s");
  o.summary = std::to_string(fams.size()) + " surfaces (polygons n<=40, E7, E8), four checks each";
  return o;
}

// 8 ------------------------------------------------------------------------
Outcome identities() {
  Outcome o;
  int instances = 0, primitive = 0, level_families = 0;
  auto check_instance = [&](const FamilyResult& r, bool algebraically_primitive) {
    ++instances;
    const auto& f = r.invariants;
    std::string l = r.spec.tag + " p=" + std::to_string(r.p);
    o.expect(12 * f.chi_O == f.c1_squared + f.c2, l + " Noether");
    o.expect(3 * f.signature == f.c1_squared - 2 * f.c2, l + " Hirzebruch");
    o.expect(f.c2 == f.euler, l + " c2 = e");
    Rational chi = 2 - 2 * Rational(r.cover.base_genus) - Rational(r.cover.cusp_count);
    o.expect(chi / Rational(r.cover.degree) == r.cover.base_euler_characteristic, l + " Riemann-Hurwitz round trip");
    if (algebraically_primitive) {
      ++primitive;
      o.expect(Rational(f.signature) < Rational(f.euler, 3), l + " strict BMY");
    }
  };
  CurveDataStore data;
  data.set_plugin(zeta_plugin());
  std::vector<FamilySpec> specs;
  for (int n = 5; n <= 40; ++n)
    if (is_supported_polygon(n)) specs.push_back(polygon_spec(n));
  specs.push_back(sporadic_spec(SurfaceKind::E7));
  specs.push_back(sporadic_spec(SurfaceKind::E8));
  for (long D = 5; D <= 60; ++D)
    if (valid_discriminant(D) && D % 8 != 1) specs.push_back(weierstrass_spec(D));
  for (const auto& spec : specs) {
    std::vector<Rational> ratios;
    for (const auto& ap : admissible_primes(spec, 13)) {
      if (ap.exceptional) continue;
      auto r = evaluate(spec, ap.p, &data);
      check_instance(r, true);
      if (ap.p == 5 || ap.p == 7 || ap.p == 11) ratios.push_back(make_rational(r.invariants.signature, r.cover.degree));
    }
    if (ratios.size() >= 2) {
      ++level_families;
      for (const auto& q : ratios) o.expect(q == ratios.front(), spec.tag + " sigma/d depends on p");
    }
  }
  for (long m = 3; m <= 12; ++m) check_instance(elliptic_family(m), false);
  // kappa bound, exhaustive over partitions of 2g - 2
  int partitions = 0;
  for (int g = 2; g <= 8; ++g) {
    std::function<void(int, int, std::vector<int>&)> walk = [&](int left, int top, std::vector<int>& cur) {
      if (left == 0) {
        ++partitions;
        Rational k12 = 12 * kappa_mu(cur);
        bool ones = std::all_of(cur.begin(), cur.end(), [](int x) { return x == 1; });
        o.expect(k12 <= 3 * g - 3 && ((k12 == 3 * g - 3) == ones), "kappa bound g=" + std::to_string(g));
        return;
      }
      for (int k = std::min(left, top); k >= 1; --k) {
        cur.push_back(k);
        walk(left - k, k, cur);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    walk(2 * g - 2, 2 * g - 2, cur);
  }
  // scatter points satisfy the same identities
  auto sc = chern_scatter(5, 60, 5, data);
  for (const auto& pt : sc.points) o.expect(pt.c1_squared < 3 * pt.c2, "scatter D=" + std::to_string(pt.D));
  o.expect(level_families >= 10, "too few families with two levels among 5, 7, 11");
  std::ostringstream s;
  s << instances << " instances (" << primitive << " algebraically primitive), " << partitions
    << " partitions, sigma/d level check on " << level_families << " families, " << sc.points.size()
    << " scatter points";
  o.summary = s.str();
  return o;
}

// 9 ------------------------------------------------------------------------
Outcome admissibility() {
  Outcome o;
  int checked = 0;
  for (long D = 5; D <= 60; ++D) {
    if (!valid_discriminant(D)) continue;
    auto [w, e] = weierstrass_parameters(D);
    auto alpha = weierstrass_alpha(w, e);
    for (long p = 3; p <= 50; p += 2) {
      if (!is_prime(static_cast<std::uint64_t>(p)) || D % p == 0) continue;
      bool qnr = is_quadratic_nonresidue(D, p);
      bool irr = is_irreducible_mod_p(alpha, p);
      o.expect(qnr == irr, "D=" + std::to_string(D) + " p=" + std::to_string(p));
      ++checked;
    }
  }
  o.summary = std::to_string(checked) + " (D, p) pairs agree";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"double pentagon headline numbers", headline},
      {"Dickson closure oracle", dickson},
      {"closed-form consistency", tables},
      {"sporadic sigma/d constants", sporadic},
      {"elliptic series", elliptic},
      {"prototype counts", prototype_counts},
      {"structural lemma suite", structural},
      {"identity suite", identities},
      {"admissible-prime criterion", admissibility},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);

  bool all = true;
  for (int k : selected) {
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::cerr << "no criterion " << k << '\n';
      return 2;
    }
    const auto& [name, fn] = criteria[k - 1];
    auto t0 = Clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.problems.push_back(std::string("threw: ") + e.what());
    }
    double dt = seconds_since(t0);
    all = all && out.pass;
    std::printf("criterion %d: %s  %s [%.2fs] %s\n", k, out.pass ? "PASS" : "FAIL", name.c_str(), dt,
                out.summary.c_str());
    for (const auto& p : out.problems) std::printf("    - %s\n", p.c_str());
  }
  return all ? 0 : 1;
}
