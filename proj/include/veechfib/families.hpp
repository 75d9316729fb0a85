#pragma once

// End-to-end evaluation of the Weierstrass, regular-polygon, E7/E8 and
// genus-one elliptic families at a prime level, plus the closed-form tables the
// pipeline is checked against.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "veechfib/congruence.hpp"
#include "veechfib/invariants.hpp"
#include "veechfib/prototypes.hpp"
#include "veechfib/thurston_veech.hpp"

namespace veechfib {

enum class FamilyKind { weierstrass, polygon, sporadic, elliptic };
const char* family_kind_name(FamilyKind k);

struct FamilySpec {
  FamilyKind kind = FamilyKind::polygon;
  std::string tag;  // "weierstrass-5", "polygon-7", "E7", "elliptic-4"
  long parameter = 0;  // D, n or m; 7/8 for E7/E8
  std::optional<OrbifoldSignature> signature;  // absent for Weierstrass (chi comes from data)
  IntPolynomial alpha_minpoly;
  bool contains_minus_I = true;
  long fiber_genus = 0;
  std::vector<int> zero_partition;
  std::vector<Integer> base_twists;  // per base cusp
  std::vector<long> roots;           // k_c per base cusp
  bool pi1_flag = false;
  std::vector<Prototype> prototypes;  // Weierstrass only
  std::shared_ptr<const SurfaceModel> model;  // polygon and sporadic only
};

struct ExternalCurveData {
  long D = 0;
  Rational chi_C;
  std::optional<long> e2;
};

// chi(C_D) and e2(C_D) by discriminant. D = 5 and 8 are built in; more rows come
// from CSV "D,chi_num,chi_den,e2" (e2 may be empty) or from a plug-in.
class CurveDataStore {
 public:
  using Plugin = std::function<std::optional<Rational>(long D)>;
  CurveDataStore();
  void load_csv(const std::string& path);
  void load_csv_text(const std::string& text);
  void set_plugin(Plugin plugin) { plugin_ = std::move(plugin); }
  void insert(ExternalCurveData row);
  std::optional<ExternalCurveData> find(long D) const;
  // Throws missing_external_data.
  ExternalCurveData lookup(long D) const;

 private:
  std::map<long, ExternalCurveData> rows_;
  Plugin plugin_;
};

// Dedekind zeta value zeta_{O_D}(-1) of the quadratic order of discriminant D.
Rational quadratic_zeta_minus_one(long D);
// -9 zeta_{O_D}(-1); matches -3/10 and -3/4 at D = 5, 8.
Rational zeta_curve_euler_characteristic(long D);
CurveDataStore::Plugin zeta_plugin();

struct StructuralChecks {
  bool parity = false;
  bool holonomy = false;
  bool cylinder_bound = false;
  bool homology_span = false;
  std::string holonomy_failure;
  bool all() const { return parity && holonomy && cylinder_bound && homology_span; }
};
StructuralChecks run_structural_checks(const SurfaceModel& m);

FamilySpec weierstrass_spec(long D, const SpinPredicate& spin = {});
FamilySpec polygon_spec(int n);
FamilySpec sporadic_spec(SurfaceKind which);
FamilySpec elliptic_spec(long m);
FamilySpec family_spec_from_tag(const std::string& tag);  // inverse of FamilySpec::tag

// theorem: SL(2, F_{p^g}), with the F_9 case always the order-120 subgroup.
// closure: the brute-force closure of the generator pair decides.
enum class DegreeMode { theorem, closure };

struct FamilyResult {
  FamilySpec spec;
  long p = 0;  // level
  DegreeResult degree;
  CoverData cover;
  FibrationInvariants invariants;
  std::optional<StructuralChecks> checks;
  std::optional<bool> genus_positivity;  // Weierstrass, when e2 is known
  std::vector<std::string> notes;
};

FamilyResult weierstrass_family(long D, long p, const CurveDataStore& data, DegreeMode mode = DegreeMode::theorem,
                                const SpinPredicate& spin = {});
FamilyResult polygon_family(int n, long p, DegreeMode mode = DegreeMode::theorem);
FamilyResult sporadic_family(SurfaceKind which, long p, DegreeMode mode = DegreeMode::theorem);
FamilyResult elliptic_family(long m);
FamilyResult evaluate(const FamilySpec& spec, long p, const CurveDataStore* data = nullptr,
                      DegreeMode mode = DegreeMode::theorem);

// index of Gamma(m) in PSL(2, Z), m >= 3
Integer modular_index(long m);

struct AdmissiblePrime {
  long p;
  bool exceptional;
};
std::vector<AdmissiblePrime> admissible_primes(const FamilySpec& spec, long bound);

// Closed forms for base genus, cusps, e and sigma, written out independently of the pipeline.
struct ClosedForm {
  Rational base_genus, cusps, euler, signature;
};
ClosedForm polygon_closed_form(int n, long p, const Integer& d);
ClosedForm sporadic_closed_form(SurfaceKind which, long p, const Integer& d);
ClosedForm weierstrass_closed_form(long D, long p, const Integer& d, const Rational& chi_C);

struct ScatterPoint {
  long D;
  Integer c2, c1_squared;
};
struct ScatterSkip {
  long D;
  std::string reason;
};
struct Scatter {
  std::vector<ScatterPoint> points;
  std::vector<ScatterSkip> skipped;
};
// Discriminants D in [lo, hi]; skips squares, D = 1 mod 8, D with p | D or D a
// residue mod p, and rows whose data is missing or inconsistent.
Scatter chern_scatter(long lo, long hi, long p, const CurveDataStore& data);

}  // namespace veechfib
