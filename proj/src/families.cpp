#include "veechfib/families.hpp"

#include <cmath>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

#include "veechfib/error.hpp"
#include "veechfib/finite_field.hpp"

namespace veechfib {

const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::weierstrass: return "weierstrass";
    case FamilyKind::polygon: return "polygon";
    case FamilyKind::sporadic: return "sporadic";
    case FamilyKind::elliptic: return "elliptic";
  }
  return "?";
}

// ---------------------------------------------------------------- curve data

CurveDataStore::CurveDataStore() {
  rows_[5] = {5, make_rational(-3, 10), std::nullopt};
  rows_[8] = {8, make_rational(-3, 4), std::nullopt};
}

void CurveDataStore::insert(ExternalCurveData row) {
  if (row.chi_C >= 0) fail(ErrorKind::invalid_argument, "chi(C_D) must be negative for D = " + std::to_string(row.D));
  if (row.e2 && *row.e2 < 0) fail(ErrorKind::invalid_argument, "e2 must be nonnegative");
  rows_[row.D] = std::move(row);
}

void CurveDataStore::load_csv_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.emplace_back();
    if (!f.empty() && f[0] == "D") continue;  // header
    if (f.size() < 3 || f.size() > 4)
      fail(ErrorKind::invalid_argument, "curve data line " + std::to_string(lineno) + ": expected D,chi_num,chi_den,e2");
    try {
      ExternalCurveData row;
      row.D = std::stol(f[0]);
      row.chi_C = make_rational(Integer(f[1]), Integer(f[2]));
      if (f.size() == 4 && !f[3].empty()) row.e2 = std::stol(f[3]);
      insert(std::move(row));
    } catch (const std::invalid_argument&) {
      fail(ErrorKind::invalid_argument, "curve data line " + std::to_string(lineno) + " is malformed");
    }
  }
}

void CurveDataStore::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::missing_external_data, "cannot open curve data file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  load_csv_text(buf.str());
}

std::optional<ExternalCurveData> CurveDataStore::find(long D) const {
  auto it = rows_.find(D);
  if (it != rows_.end()) return it->second;
  if (plugin_) {
    if (auto chi = plugin_(D)) return ExternalCurveData{D, *chi, std::nullopt};
  }
  return std::nullopt;
}

ExternalCurveData CurveDataStore::lookup(long D) const {
  auto r = find(D);
  if (!r)
    fail(ErrorKind::missing_external_data,
         "no chi(C_D) for D = " + std::to_string(D) + "; supply it with --data or enable the zeta plug-in");
  return *r;
}

namespace {

long sigma1(long n) {
  long s = 0;
  for (long d = 1; d * d <= n; ++d)
    if (n % d == 0) s += d + (d * d == n ? 0 : n / d);
  return s;
}

int kronecker(long D0, long p) {
  if (p == 2) {
    if (D0 % 2 == 0) return 0;
    long r = ((D0 % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  long r = ((D0 % p) + p) % p;
  if (r == 0) return 0;
  return powmod(static_cast<Word>(r), static_cast<Word>((p - 1) / 2), static_cast<Word>(p)) == 1 ? 1 : -1;
}

}  // namespace

Rational quadratic_zeta_minus_one(long D) {
  validate_discriminant(D);
  // D = f^2 D0 with D0 fundamental
  long s = D;
  for (long k = 2; k * k <= s; ++k)
    while (s % (k * k) == 0) {
      s /= k * k;
    }
  long D0 = (s % 4 == 1) ? s : 4 * s;
  long f2 = D / D0;
  long f = std::lround(std::sqrt(static_cast<double>(f2)));
  if (f * f * D0 != D) fail(ErrorKind::inconsistency, "failed to split off the conductor of " + std::to_string(D));
  long total = 0;
  long B = static_cast<long>(std::sqrt(static_cast<double>(D0))) + 1;
  for (long b = -B; b <= B; ++b)
    if (b * b < D0 && (D0 - b * b) % 4 == 0) total += sigma1((D0 - b * b) / 4);
  Rational z = make_rational(total, 60);
  Rational scale = Rational(Integer(f) * f * f);
  long n = f;
  for (long p = 2; p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    scale *= 1 - make_rational(kronecker(D0, p), Integer(p) * p);
  }
  z *= scale;
  z.canonicalize();
  return z;
}

Rational zeta_curve_euler_characteristic(long D) {
  Rational c = -9 * quadratic_zeta_minus_one(D);
  c.canonicalize();
  return c;
}

CurveDataStore::Plugin zeta_plugin() {
  return [](long D) -> std::optional<Rational> { return zeta_curve_euler_characteristic(D); };
}

// ---------------------------------------------------------------- specs

StructuralChecks run_structural_checks(const SurfaceModel& m) {
  StructuralChecks c;
  c.parity = staircase_parity_check(m);
  auto h = holonomy_basis_check(m);
  c.holonomy = h.ok();
  c.holonomy_failure = h.failure;
  c.cylinder_bound = cylinder_bound_check(m, static_cast<int>(m.zero_partition.size()));
  c.homology_span = core_curve_span_check(m);
  return c;
}

namespace {

std::shared_ptr<const SurfaceModel> cached_surface(const SurfaceFamily& fam) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const SurfaceModel>> cache;
  std::string key = fam.tag();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto model = std::make_shared<const SurfaceModel>(build_surface(fam));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, model).first->second;
}

Integer twist_sum(const std::vector<CylinderDatum>& cyls) {
  Integer s = 0;
  for (const auto& c : cyls) s += c.twist_count;
  return s;
}

void fill_from_model(FamilySpec& s, std::shared_ptr<const SurfaceModel> m, bool single_cusp) {
  s.model = m;
  s.fiber_genus = m->genus;
  s.zero_partition = m->zero_partition;
  s.pi1_flag = m->pi1_flag;
  auto mp = element_minimal_polynomial(m->mu * m->mu);
  if (!mp.integral) fail(ErrorKind::inconsistency, "mu^2 is not an algebraic integer");
  s.alpha_minpoly = mp.integer();
  if (s.alpha_minpoly.degree() != s.fiber_genus)
    fail(ErrorKind::inconsistency, s.tag + ": trace field degree differs from the genus");
  // the horizontal and vertical multitwists; with one cusp they are conjugate
  s.base_twists = {twist_sum(m->horizontal)};
  if (!single_cusp) s.base_twists.push_back(twist_sum(m->vertical));
  s.roots.assign(s.base_twists.size(), 1);
}

}  // namespace

FamilySpec weierstrass_spec(long D, const SpinPredicate& spin) {
  FamilySpec s;
  s.kind = FamilyKind::weierstrass;
  s.tag = "weierstrass-" + std::to_string(D);
  s.parameter = D;
  auto wp = weierstrass_parameters(D);
  s.prototypes = enumerate_prototypes(D, spin);
  s.alpha_minpoly = weierstrass_alpha(wp.w, wp.e);
  s.contains_minus_I = true;
  s.fiber_genus = 2;
  s.zero_partition = {2};
  for (const auto& p : s.prototypes) s.base_twists.push_back(prototype_twisting(p));
  s.roots.assign(s.base_twists.size(), 1);  // no fractional multitwists for nonsquare D
  s.pi1_flag = true;
  return s;
}

FamilySpec polygon_spec(int n) {
  FamilySpec s;
  s.kind = FamilyKind::polygon;
  s.tag = "polygon-" + std::to_string(n);
  s.parameter = n;
  auto m = cached_surface({SurfaceKind::polygon, n});
  s.contains_minus_I = true;
  if (n % 2 == 1)
    s.signature = make_signature(0, {2, n}, 1);
  else
    s.signature = make_signature(0, {n / 2}, 2);
  fill_from_model(s, m, n % 2 == 1);
  return s;
}

FamilySpec sporadic_spec(SurfaceKind which) {
  if (which != SurfaceKind::E7 && which != SurfaceKind::E8)
    fail(ErrorKind::unsupported_family, "sporadic family must be E7 or E8");
  FamilySpec s;
  s.kind = FamilyKind::sporadic;
  bool e7 = which == SurfaceKind::E7;
  s.tag = e7 ? "E7" : "E8";
  s.parameter = e7 ? 7 : 8;
  s.contains_minus_I = false;
  s.signature = make_signature(0, {e7 ? 9L : 15L}, 2);
  fill_from_model(s, cached_surface({which, 0}), false);
  return s;
}

FamilySpec elliptic_spec(long m) {
  if (m < 3) fail(ErrorKind::invalid_argument, "elliptic level must be at least 3");
  FamilySpec s;
  s.kind = FamilyKind::elliptic;
  s.tag = "elliptic-" + std::to_string(m);
  s.parameter = m;
  s.signature = make_signature(0, {2, 3}, 1);
  s.contains_minus_I = true;
  s.fiber_genus = 1;
  s.base_twists = {1};  // I_1 fibre at the cusp of the modular curve
  s.roots = {1};
  s.pi1_flag = true;
  return s;
}

FamilySpec family_spec_from_tag(const std::string& tag) {
  auto number_after = [&](const std::string& prefix) -> std::optional<long> {
    if (tag.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      std::size_t used = 0;
      long v = std::stol(tag.substr(prefix.size()), &used);
      if (used == tag.size() - prefix.size()) return v;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::invalid_argument, "bad family tag '" + tag + "'");
  };
  if (tag == "E7") return sporadic_spec(SurfaceKind::E7);
  if (tag == "E8") return sporadic_spec(SurfaceKind::E8);
  if (auto D = number_after("weierstrass-")) return weierstrass_spec(*D);
  if (auto n = number_after("polygon-")) return polygon_spec(static_cast<int>(*n));
  if (auto m = number_after("elliptic-")) return elliptic_spec(*m);
  fail(ErrorKind::invalid_argument,
       "unknown family '" + tag + "' (expected weierstrass-D, polygon-n, E7, E8 or elliptic-m)");
}

// ---------------------------------------------------------------- evaluation

Integer modular_index(long m) {
  if (m < 3) fail(ErrorKind::invalid_argument, "level must be at least 3");
  Rational idx = Rational(Integer(m) * m * m);
  long n = m;
  for (long p = 2; p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    idx *= 1 - make_rational(1, Integer(p) * p);
  }
  idx /= 2;
  idx.canonicalize();
  if (!is_integral(idx)) fail(ErrorKind::inconsistency, "modular index is not an integer");
  return idx.get_num();
}

FamilyResult evaluate(const FamilySpec& spec, long p, const CurveDataStore* data, DegreeMode mode) {
  FamilyResult r;
  r.spec = spec;
  r.p = p;
  FibrationInput in;
  in.g = spec.fiber_genus;
  in.partition = spec.zero_partition;
  in.pi1_flag = spec.pi1_flag;

  std::vector<long> cusp_orders;
  if (spec.kind == FamilyKind::elliptic) {
    long m = spec.parameter;
    r.p = m;
    Integer d = modular_index(m);
    r.degree = {2 * d, d, "PSL(2,Z/" + std::to_string(m) + ")", false};
    cusp_orders = {cusp_image_order(0, m)};
    r.cover = riemann_hurwitz_cover(*spec.signature, d, spec.signature->orbifold_orders, cusp_orders);
    in.elliptic_level = m;
  } else {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
      fail(ErrorKind::invalid_argument, "level p must be an odd prime, got " + std::to_string(p));
    auto up = static_cast<std::uint64_t>(p);
    r.degree = congruence_degree(spec.alpha_minpoly, up, static_cast<int>(spec.fiber_genus), spec.contains_minus_I);
    if (mode == DegreeMode::closure) {
      auto by_closure = closure_congruence_degree(spec.alpha_minpoly, up, spec.contains_minus_I);
      if (by_closure.group_order != r.degree.group_order)
        r.notes.push_back("closure of the generator pair has order " + by_closure.group_order.get_str() +
                          ", not the " + r.degree.group_order.get_str() + " the theorem rule assigns");
      r.degree = by_closure;
      r.notes.push_back("degree taken from the brute-force closure");
    } else if (r.degree.exceptional) {
      r.notes.push_back("(p, g) = (3, 2): degree taken as " + r.degree.degree.get_str() +
                        " from the order-120 subgroup of SL(2,9); the closure option checks this per instance");
    }
    cusp_orders.assign(spec.base_twists.size(), cusp_image_order(static_cast<std::uint64_t>(p)));
    if (spec.kind == FamilyKind::weierstrass) {
      if (!data) fail(ErrorKind::missing_external_data, "Weierstrass families need curve data");
      auto ext = data->lookup(spec.parameter);
      r.cover = cover_from_euler_characteristic(ext.chi_C, r.degree.degree, cusp_orders);
      // |P_D|/2 + e2/4 - |P_D|/(2p) >= 1, with e2 >= 0 as a fallback lower bound
      Rational n = Rational(Integer(static_cast<long>(spec.prototypes.size())));
      Rational base = n / 2 - n / (2 * p);
      if (ext.e2)
        r.genus_positivity = base + make_rational(*ext.e2, 4) >= 1;
      else if (base >= 1)
        r.genus_positivity = true;
    } else {
      r.cover =
          riemann_hurwitz_cover(*spec.signature, r.degree.degree, spec.signature->orbifold_orders, cusp_orders);
    }
    if (spec.model) {
      r.checks = run_structural_checks(*spec.model);
      if (!r.checks->all())
        fail(ErrorKind::inconsistency, spec.tag + ": structural check failed" +
                                           (r.checks->holonomy_failure.empty() ? "" : ": " + r.checks->holonomy_failure));
    }
    bool double_pentagon = p == 3 && ((spec.kind == FamilyKind::polygon && spec.parameter == 5) ||
                                      (spec.kind == FamilyKind::weierstrass && spec.parameter == 5));
    if (double_pentagon) {
      in.minimality_override = true;
      r.notes.push_back("minimality of the double pentagon fibration is proved directly, not by the genus >= 1 base criterion");
    }
  }
  apply_cover_twisting(r.cover, cusp_orders, spec.base_twists, spec.roots);
  in.b = r.cover.base_genus;
  in.cusp_count = r.cover.cusp_count;
  in.T = r.cover.total_twisting;
  r.invariants = compute_invariants(in);
  return r;
}

FamilyResult weierstrass_family(long D, long p, const CurveDataStore& data, DegreeMode mode,
                                const SpinPredicate& spin) {
  auto spec = weierstrass_spec(D, spin);
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
    fail(ErrorKind::invalid_argument, "level p must be an odd prime, got " + std::to_string(p));
  if (D % p == 0 || !is_quadratic_nonresidue(Integer(D), static_cast<std::uint64_t>(p)))
    fail(ErrorKind::inadmissible_prime, "D = " + std::to_string(D) + " is not a quadratic nonresidue mod " + std::to_string(p));
  return evaluate(spec, p, &data, mode);
}

FamilyResult polygon_family(int n, long p, DegreeMode mode) { return evaluate(polygon_spec(n), p, nullptr, mode); }
FamilyResult sporadic_family(SurfaceKind which, long p, DegreeMode mode) {
  return evaluate(sporadic_spec(which), p, nullptr, mode);
}
FamilyResult elliptic_family(long m) { return evaluate(elliptic_spec(m), m); }

std::vector<AdmissiblePrime> admissible_primes(const FamilySpec& spec, long bound) {
  if (bound < 3) fail(ErrorKind::invalid_argument, "bound must be at least 3");
  if (spec.kind == FamilyKind::elliptic) fail(ErrorKind::inapplicable, "elliptic levels are not restricted to primes");
  std::vector<AdmissiblePrime> out;
  for (long p = 3; p <= bound; p += 2) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    if (is_irreducible_mod_p(spec.alpha_minpoly, static_cast<std::uint64_t>(p)))
      out.push_back({p, p == 3 && spec.fiber_genus == 2});
  }
  return out;
}

// ---------------------------------------------------------------- closed forms

ClosedForm polygon_closed_form(int n, long p, const Integer& d) {
  if (!is_supported_polygon(n)) fail(ErrorKind::unsupported_family, "unsupported polygon " + std::to_string(n));
  Rational D(d), P(p), half = make_rational(1, 2);
  ClosedForm c;
  if (n % 2 == 1) {
    Rational q(n);
    Rational bracket = half - 1 / q - 1 / P;
    c.base_genus = 1 + D / 2 * bracket;
    c.cusps = D / P;
    c.euler = D * ((q - 3) * bracket + (q - 1) / 2);
    c.signature = -D * (q * q - 1) / (4 * q);
  } else if ((n & (n - 1)) == 0) {
    Rational N(n);
    Rational bracket = half - 1 / N - 1 / P;
    c.base_genus = 1 + D * bracket;
    c.cusps = 2 * D / P;
    c.euler = D * ((N - 4) * bracket + N / 2);
    c.signature = -D * (N / 4 + make_rational(1, 3));
  } else {
    Rational q(n / 2);
    Rational bracket = half - 1 / (2 * q) - 1 / P;
    c.base_genus = 1 + D * bracket;
    c.cusps = 2 * D / P;
    c.euler = D * ((2 * q - 6) * bracket + q);
    c.signature = -D * (q * q + 2 * q + 3) / (3 * q);
  }
  for (auto* v : {&c.base_genus, &c.cusps, &c.euler, &c.signature}) v->canonicalize();
  return c;
}

ClosedForm sporadic_closed_form(SurfaceKind which, long p, const Integer& d) {
  Rational D(d), P(p);
  ClosedForm c;
  if (which == SurfaceKind::E7) {
    c.base_genus = 1 + D / 2 * (make_rational(8, 9) - 2 / P);
    c.euler = D * (make_rational(95, 9) - 8 / P);
    c.signature = -make_rational(35, 9) * D;
  } else if (which == SurfaceKind::E8) {
    c.base_genus = 1 + D / 2 * (make_rational(14, 15) - 2 / P);
    c.euler = D * (make_rational(68, 5) - 12 / P);
    c.signature = -make_rational(64, 15) * D;
  } else {
    fail(ErrorKind::unsupported_family, "sporadic closed forms exist for E7 and E8 only");
  }
  c.cusps = 2 * D / P;
  for (auto* v : {&c.base_genus, &c.cusps, &c.euler, &c.signature}) v->canonicalize();
  return c;
}

ClosedForm weierstrass_closed_form(long D, long p, const Integer& d, const Rational& chi_C) {
  auto ps = enumerate_prototypes(D);
  Rational dd(d), P(p), n(Integer(static_cast<long>(ps.size())));
  Rational T = 0;
  for (const auto& pr : ps) {
    // (1 + h/w) lcm(1, w/h), the lcm being the numerator of w/h in lowest terms
    Rational ratio = make_rational(pr.w, pr.h);
    T += (1 + 1 / ratio) * Rational(ratio.get_num());
  }
  T *= dd;
  ClosedForm c;
  c.cusps = dd / P * n;
  c.base_genus = 1 - dd / (2 * P) * n - dd / 2 * chi_C;
  c.euler = -2 * (dd * chi_C + dd / P * n) + T;
  c.signature = -4 * dd / 9 * chi_C - make_rational(2, 3) * T;
  for (auto* v : {&c.base_genus, &c.cusps, &c.euler, &c.signature}) v->canonicalize();
  return c;
}

// ---------------------------------------------------------------- scatter

Scatter chern_scatter(long lo, long hi, long p, const CurveDataStore& data) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) fail(ErrorKind::invalid_argument, "p must be an odd prime");
  if (lo > hi) fail(ErrorKind::invalid_argument, "empty discriminant range");
  Scatter s;
  for (long D = std::max(lo, 5L); D <= hi; ++D) {
    long r = D % 4;
    if (r != 0 && r != 1) continue;
    try {
      validate_discriminant(D);
    } catch (const Error&) {
      s.skipped.push_back({D, "square discriminant"});
      continue;
    }
    if (D % 8 == 1) {
      s.skipped.push_back({D, "D = 1 mod 8 needs a spin choice"});
      continue;
    }
    if (D % p == 0 || !is_quadratic_nonresidue(Integer(D), static_cast<std::uint64_t>(p))) {
      s.skipped.push_back({D, "D is not a nonresidue mod p"});
      continue;
    }
    try {
      auto res = weierstrass_family(D, p, data);
      s.points.push_back({D, res.invariants.c2, res.invariants.c1_squared});
    } catch (const Error& e) {
      s.skipped.push_back({D, std::string(kind_name(e.kind())) + ": " + e.what()});
    }
  }
  return s;
}

}  // namespace veechfib
