#include "veechfib/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "veechfib/error.hpp"
#include "veechfib/serialize.hpp"

namespace veechfib {

namespace {

enum class Format { json, csv, table };

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void emit(const Json& j, Format f, std::ostream& out) {
  if (f == Format::json) {
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  if (f == Format::csv) {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_cell(k) << ',' << csv_cell(v) << '\n';
    return;
  }
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(w) + 2) << k << v << '\n';
}

// One row with the table column names for a family evaluation.
void emit_family(const FamilyResult& r, Format f, std::ostream& out) {
  if (f != Format::csv) {
    emit(to_json(r), f, out);
    return;
  }
  const auto& inv = r.invariants;
  out << "family,p,d,genus,cusps,T,e,sigma,c1_squared,chi_O,p_g,kodaira\n";
  out << r.spec.tag << ',' << r.p << ',' << r.cover.degree.get_str() << ',' << r.cover.base_genus.get_str() << ','
      << r.cover.cusp_count.get_str() << ',' << r.cover.total_twisting.get_str() << ',' << inv.euler.get_str() << ','
      << inv.signature.get_str() << ',' << inv.c1_squared.get_str() << ',' << inv.chi_O.get_str() << ','
      << (inv.p_g ? inv.p_g->get_str() : "") << ',' << inv.kodaira_tag << '\n';
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "table") return Format::table;
  fail(ErrorKind::invalid_argument, "unknown format '" + s + "'");
}

std::string decimal(const Rational& q, int digits) {
  // exact long division, truncated toward zero
  Integer num = q.get_num(), den = q.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  Integer ip = num / den, r = num % den;
  std::string s = (neg ? "-" : "") + ip.get_str() + ".";
  for (int i = 0; i < digits; ++i) {
    r *= 10;
    s += static_cast<char>('0' + static_cast<int>(Integer(r / den).get_si()));
    r %= den;
  }
  return s;
}

struct VerifyRow {
  std::string name, expected, got, formula;
  bool pass;
};

void add_row(std::vector<VerifyRow>& rows, std::string name, const std::string& expected, const std::string& got,
             std::string formula) {
  rows.push_back({std::move(name), expected, got, std::move(formula), expected == got});
}

std::vector<VerifyRow> verification_rows() {
  std::vector<VerifyRow> rows;
  CurveDataStore data;
  auto headline = [&](const std::string& label, const FamilyResult& r) {
    const auto& inv = r.invariants;
    add_row(rows, label + " d", "60", r.cover.degree.get_str(), "|PSL(2,5)|");
    add_row(rows, label + " base genus", "0", r.cover.base_genus.get_str(), "2 - 2b - cusps = d chi_orb");
    add_row(rows, label + " cusps", "20", r.cover.cusp_count.get_str(), "d / p");
    add_row(rows, label + " T", "120", r.cover.total_twisting.get_str(), "sum d T_c / k_c");
    add_row(rows, label + " e", "116", inv.euler.get_str(), "4(g-1)(b-1) + T");
    add_row(rows, label + " sigma", "-72", inv.signature.get_str(), "-2 kappa chi(B) - 2T/3");
    add_row(rows, label + " c1^2", "16", inv.c1_squared.get_str(), "3 sigma + 2e");
    add_row(rows, label + " chi_O", "11", inv.chi_O.get_str(), "(c1^2 + c2)/12");
    add_row(rows, label + " p_g", "10", inv.p_g ? inv.p_g->get_str() : "n/a", "chi_O - 1 + b1/2");
    add_row(rows, label + " Noether line", "true", inv.noether_line ? "true" : "false", "c1^2 = 2 p_g - 4");
    add_row(rows, label + " zero section S^2", "-3", to_string(inv.zero_section_self_intersections.at(0)),
            "chi(B) / (2(m+1))");
  };
  headline("weierstrass D=5 p=3", weierstrass_family(5, 3, data));
  headline("polygon n=5 p=3", polygon_family(5, 3));

  add_row(rows, "kappa (2)", "2/9", to_string(kappa_mu({2})), "(1/12) sum m(m+2)/(m+1)");
  add_row(rows, "kappa (1,3)", "7/16", to_string(kappa_mu({1, 3})), "(1/12) sum m(m+2)/(m+1)");
  add_row(rows, "kappa (6)", "4/7", to_string(kappa_mu({6})), "(1/12) sum m(m+2)/(m+1)");

  auto f9 = std::make_shared<const FiniteFieldSpec>(3, IntPolynomial{-1, -1, 1});
  // lambda = x + 1 is the image of mu^2 = phi^2 in F_9 = F_3[x]/(x^2 - x - 1)
  add_row(rows, "closure over F_9", "120",
          std::to_string(group_closure_order(unipotent_pair(f9, FFElement(f9, {1, 1})))), "BFS closure");

  add_row(rows, "|P_5|", "1", std::to_string(enumerate_prototypes(5).size()), "prototype enumeration");
  add_row(rows, "|P_8|", "2", std::to_string(enumerate_prototypes(8).size()), "prototype enumeration");

  const std::pair<long, std::pair<const char*, const char*>> elliptic[] = {
      {3, {"12", "-8"}}, {4, {"24", "-16"}}, {5, {"60", "-40"}}};
  for (const auto& [m, es] : elliptic) {
    auto r = elliptic_family(m);
    add_row(rows, "elliptic m=" + std::to_string(m) + " e", es.first, r.invariants.euler.get_str(), "T = index");
    add_row(rows, "elliptic m=" + std::to_string(m) + " sigma", es.second, r.invariants.signature.get_str(), "-2T/3");
  }

  for (auto which : {SurfaceKind::E7, SurfaceKind::E8}) {
    auto spec = sporadic_spec(which);
    std::string expected = which == SurfaceKind::E7 ? "-35/9" : "-64/15";
    int done = 0;
    for (const auto& ap : admissible_primes(spec, 13)) {
      if (done == 2) break;
      auto r = evaluate(spec, ap.p);
      add_row(rows, spec.tag + " p=" + std::to_string(ap.p) + " sigma/d", expected,
              to_string(make_rational(r.invariants.signature, r.cover.degree)), "table constant");
      ++done;
    }
  }

  for (int n : {5, 7, 8, 10, 11, 13, 14, 16, 22, 26, 32}) {
    auto spec = polygon_spec(n);
    for (const auto& ap : admissible_primes(spec, 13)) {
      if (ap.exceptional) continue;  // closed forms assume d = |PSL(2, p^g)|
      auto r = evaluate(spec, ap.p);
      auto cf = polygon_closed_form(n, ap.p, r.cover.degree);
      std::string label = "polygon n=" + std::to_string(n) + " p=" + std::to_string(ap.p);
      add_row(rows, label + " genus", to_string(cf.base_genus), r.cover.base_genus.get_str(), "closed form");
      add_row(rows, label + " cusps", to_string(cf.cusps), r.cover.cusp_count.get_str(), "closed form");
      add_row(rows, label + " e", to_string(cf.euler), r.invariants.euler.get_str(), "closed form");
      add_row(rows, label + " sigma", to_string(cf.signature), r.invariants.signature.get_str(), "closed form");
    }
  }
  return rows;
}

int do_verify(Format f, std::ostream& out) {
  auto rows = verification_rows();
  bool all = true;
  Json j = Json::array();
  for (const auto& r : rows) {
    all = all && r.pass;
    j.push_back(Json{{"check", r.name}, {"expected", r.expected}, {"got", r.got}, {"formula", r.formula},
                     {"status", r.pass ? "PASS" : "FAIL"}});
  }
  if (f == Format::json) {
    out << Json{{"all_pass", all}, {"rows", j}}.dump(2) << '\n';
  } else if (f == Format::csv) {
    out << "check,expected,got,status,formula\n";
    for (const auto& r : rows)
      out << csv_cell(r.name) << ',' << csv_cell(r.expected) << ',' << csv_cell(r.got) << ','
          << (r.pass ? "PASS" : "FAIL") << ',' << csv_cell(r.formula) << '\n';
  } else {
    std::size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.name.size());
    for (const auto& r : rows)
      out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(w) + 2) << r.name
          << "expected " << r.expected << ", got " << r.got << "  [" << r.formula << "]\n";
  }
  return all ? 0 : 1;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stol(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      fail(ErrorKind::invalid_argument, "not an integer list: '" + s + "'");
    }
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of congruence Veech fibrations", "veechfib"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));

  long D = 0, p = 0, n = 0, m = 0, bound = 0, lo = 5, hi = 60;
  std::string data_path, family, which, modulus, lambda, normalization = "first-entry-one";
  bool zeta = false, closure = false;
  std::uint64_t cap = kDefaultClosureCap;
  int base_genus = 0;
  long cusps = 0;
  std::string orders, cusp_orders, twists, roots, degree;

  auto* c_proto = app.add_subcommand("prototypes", "enumerate prototypes of discriminant D");
  c_proto->add_option("--D", D)->required();

  auto add_data = [&](CLI::App* c) {
    c->add_option("--data", data_path, "CSV D,chi_num,chi_den,e2");
    c->add_flag("--zeta", zeta, "compute missing chi(C_D) from the quadratic zeta value");
  };
  auto* c_weier = app.add_subcommand("weierstrass", "genus-2 Weierstrass family at level p");
  c_weier->add_option("--D", D)->required();
  c_weier->add_option("--p", p)->required();
  c_weier->add_flag("--degree-from-closure", closure, "take the cover degree from the brute-force group closure");
  add_data(c_weier);

  auto* c_poly = app.add_subcommand("polygon", "regular polygon family at level p");
  c_poly->add_option("--n", n)->required();
  c_poly->add_option("--p", p)->required();
  c_poly->add_flag("--degree-from-closure", closure, "take the cover degree from the brute-force group closure");

  auto* c_spor = app.add_subcommand("sporadic", "E7 or E8 family at level p");
  c_spor->add_option("--which", which)->required()->check(CLI::IsMember({"E7", "E8"}));
  c_spor->add_option("--p", p)->required();
  c_spor->add_flag("--degree-from-closure", closure, "take the cover degree from the brute-force group closure");

  auto* c_ell = app.add_subcommand("elliptic", "genus-one fibration over the level-m modular curve");
  c_ell->add_option("--m", m)->required();

  auto* c_cover = app.add_subcommand("cover", "Riemann-Hurwitz for a cover of an orbifold");
  c_cover->add_option("--base-genus", base_genus);
  c_cover->add_option("--orders", orders, "orbifold orders, comma separated");
  c_cover->add_option("--cusps", cusps)->required();
  c_cover->add_option("--degree", degree)->required();
  c_cover->add_option("--cusp-orders", cusp_orders, "image order per cusp, comma separated")->required();
  c_cover->add_option("--twists", twists, "base twists T_c per cusp");
  c_cover->add_option("--roots", roots, "root orders k_c per cusp (default 1)");

  auto* c_group = app.add_subcommand("group-order", "order of <[[1,l],[0,1]], [[1,0],[1,1]]> in SL(2, F_p[x]/f)");
  c_group->add_option("--p", p)->required();
  c_group->add_option("--modulus", modulus)->required();
  c_group->add_option("--lambda", lambda, "field element as a polynomial in x (default x)");
  c_group->add_option("--cap", cap);

  auto* c_tv = app.add_subcommand("tv-build", "Thurston-Veech model and structural checks");
  c_tv->add_option("--family", family, "polygon-n, E7 or E8")->required();
  c_tv->add_option("--normalization", normalization)
      ->check(CLI::IsMember({"first-entry-one", "lowest-horizontal-mu"}));

  auto* c_primes = app.add_subcommand("primes", "admissible primes up to a bound");
  c_primes->add_option("--family", family, "weierstrass-D, polygon-n, E7 or E8")->required();
  c_primes->add_option("--bound", bound)->required();

  auto* c_scatter = app.add_subcommand("scatter", "Chern numbers (c2, c1^2) of Weierstrass fibrations");
  c_scatter->add_option("--from", lo);
  c_scatter->add_option("--to", hi);
  c_scatter->add_option("--p", p)->required();
  add_data(c_scatter);

  auto* c_verify = app.add_subcommand("verify", "regression table of known values");

  std::vector<std::string> argv_store{"veechfib"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Format f = parse_format(format);
    DegreeMode mode = closure ? DegreeMode::closure : DegreeMode::theorem;
    auto load_data = [&]() {
      CurveDataStore store;
      if (!data_path.empty()) store.load_csv(data_path);
      if (zeta) store.set_plugin(zeta_plugin());
      return store;
    };
    if (c_proto->parsed()) {
      auto ps = enumerate_prototypes(D);
      if (f == Format::csv) {
        out << prototypes_csv(D, ps);
      } else {
        Json j;
        j["D"] = D;
        j["count"] = ps.size();
        Json arr = Json::array();
        for (const auto& pr : ps) {
          Json e = to_json(pr);
          e["twisting"] = exact(prototype_twisting(pr));
          arr.push_back(e);
        }
        j["prototypes"] = arr;
        emit(j, f, out);
      }
    } else if (c_weier->parsed()) {
      emit_family(weierstrass_family(D, p, load_data(), mode), f, out);
    } else if (c_poly->parsed()) {
      emit_family(polygon_family(static_cast<int>(n), p, mode), f, out);
    } else if (c_spor->parsed()) {
      emit_family(sporadic_family(which == "E7" ? SurfaceKind::E7 : SurfaceKind::E8, p, mode), f, out);
    } else if (c_ell->parsed()) {
      emit_family(elliptic_family(m), f, out);
    } else if (c_cover->parsed()) {
      auto sig = make_signature(base_genus, parse_long_list(orders), cusps);
      Integer d;
      if (d.set_str(degree, 10) != 0) fail(ErrorKind::invalid_argument, "degree must be an integer");
      auto co = parse_long_list(cusp_orders);
      auto cover = riemann_hurwitz_cover(sig, d, sig.orbifold_orders, co);
      if (!twists.empty()) {
        std::vector<Integer> bt;
        for (long t : parse_long_list(twists)) bt.emplace_back(t);
        auto rt = roots.empty() ? std::vector<long>(bt.size(), 1) : parse_long_list(roots);
        apply_cover_twisting(cover, co, bt, rt);
      }
      Json j = to_json(cover);
      if (twists.empty()) {
        j.erase("per_cusp_twists");
        j.erase("total_twisting");
      }
      emit(j, f, out);
    } else if (c_group->parsed()) {
      if (p < 2) fail(ErrorKind::invalid_argument, "p must be prime");
      auto field = std::make_shared<const FiniteFieldSpec>(static_cast<std::uint64_t>(p), parse_int_polynomial(modulus));
      FFElement l = lambda.empty() ? FFElement::generator(field) : parse_field_element(field, lambda);
      auto order = group_closure_order(unipotent_pair(field, l), cap);
      if (f == Format::json)
        out << Json{{"p", p}, {"modulus", to_string(field->integer_modulus())}, {"field_order", field->order()},
                    {"order", order}}
                   .dump(2)
            << '\n';
      else
        emit(Json{{"field_order", field->order()}, {"order", order}}, f, out);
    } else if (c_tv->parsed()) {
      auto model = build_surface(SurfaceFamily::parse(family));
      auto checks = run_structural_checks(model);
      auto shown = renormalized(model, normalization == "first-entry-one" ? HeightNormalization::first_entry_one
                                                                          : HeightNormalization::lowest_horizontal_mu);
      Json j = to_json(shown);
      j["structural_checks"] = to_json(checks);
      emit(j, f, out);
    } else if (c_primes->parsed()) {
      auto spec = family_spec_from_tag(family);
      auto primes = admissible_primes(spec, bound);
      if (f == Format::csv) {
        out << "p,exceptional\n";
        for (const auto& ap : primes) out << ap.p << ',' << (ap.exceptional ? "true" : "false") << '\n';
      } else {
        Json arr = Json::array();
        for (const auto& ap : primes) arr.push_back(Json{{"p", ap.p}, {"exceptional", ap.exceptional}});
        emit(Json{{"family", spec.tag}, {"alpha_minimal_polynomial", to_string(spec.alpha_minpoly)}, {"primes", arr}},
             f, out);
      }
    } else if (c_scatter->parsed()) {
      auto sc = chern_scatter(lo, hi, p, load_data());
      if (f == Format::csv) {
        out << "D,c2,c1sq,c1sq_over_c2\n";
        for (const auto& pt : sc.points)
          out << pt.D << ',' << pt.c2.get_str() << ',' << pt.c1_squared.get_str() << ','
              << decimal(make_rational(pt.c1_squared, pt.c2), 12) << '\n';
      } else {
        Json pts = Json::array(), skipped = Json::array();
        for (const auto& pt : sc.points)
          pts.push_back(Json{{"D", pt.D}, {"c2", exact(pt.c2)}, {"c1sq", exact(pt.c1_squared)}});
        for (const auto& s : sc.skipped) skipped.push_back(Json{{"D", s.D}, {"reason", s.reason}});
        emit(Json{{"p", p},
                  {"points", pts},
                  {"skipped", skipped},
                  {"reference_lines", Json{{"bmy", "c1sq = 3*c2"}, {"noether", "c1sq = (c2 - 36)/5"}}}},
             f, out);
      }
    } else if (c_verify->parsed()) {
      return do_verify(f, out);
    }
  } catch (const Error& e) {
    err << Json{{"error", kind_name(e.kind())}, {"message", e.what()}}.dump() << '\n';
    return is_mathematical(e.kind()) ? 1 : 2;
  }
  return 0;
}

}  // namespace veechfib
