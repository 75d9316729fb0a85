#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "veechfib/cli.hpp"

using namespace veechfib;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_CASE("cli: weierstrass headline") {
  auto r = run({"weierstrass", "--D", "5", "--p", "3"});
  REQUIRE(r.code == 0);
  auto j = parse(r.out);
  CHECK(j["invariants"]["euler"] == "116");
  CHECK(j["invariants"]["signature"] == "-72");
  CHECK(j["cover"]["degree"] == "60");
}

TEST_CASE("cli: group order") {
  auto r = run({"group-order", "--p", "3", "--modulus", "x^2-x-1", "--lambda", "x+1"});
  REQUIRE(r.code == 0);
  CHECK(parse(r.out)["order"] == 120);
  auto g = run({"group-order", "--p", "5", "--modulus", "x^2-x+2"});
  REQUIRE(g.code == 0);
  CHECK(parse(g.out)["order"] == 15600);
  auto capped = run({"group-order", "--p", "7", "--modulus", "x^2-x+3", "--cap", "100"});
  CHECK(capped.code == 1);
  CHECK(parse(capped.err)["error"] == "cap-exceeded");
}

TEST_CASE("cli: elliptic") {
  auto r = run({"elliptic", "--m", "4"});
  REQUIRE(r.code == 0);
  auto j = parse(r.out);
  CHECK(j["invariants"]["euler"] == "24");
  CHECK(j["invariants"]["signature"] == "-16");
  CHECK(j["invariants"]["kodaira_tag"] == "elliptic-surface/k3");
}

TEST_CASE("cli: exit codes") {
  auto bad = run({"polygon", "--n", "5"});
  CHECK(bad.code == 2);
  auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  auto unsupported = run({"polygon", "--n", "9", "--p", "5"});
  CHECK(unsupported.code == 2);
  CHECK(parse(unsupported.err)["error"] == "unsupported-family");
  auto inconsistent = run({"weierstrass", "--D", "8", "--p", "3"});
  CHECK(inconsistent.code == 1);
  CHECK(parse(inconsistent.err)["error"] == "inconsistent-cover-data");
  auto closure = run({"weierstrass", "--D", "8", "--p", "3", "--degree-from-closure"});
  CHECK(closure.code == 0);
  auto nonint = run({"cover", "--base-genus", "0", "--orders", "4", "--cusps", "2", "--degree", "60",
                     "--cusp-orders", "3,3"});
  CHECK(nonint.code == 1);
  auto format = run({"--format", "yaml", "elliptic", "--m", "3"});
  CHECK(format.code == 2);
}

TEST_CASE("cli: formats") {
  auto csv = run({"--format", "csv", "polygon", "--n", "7", "--p", "3"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("family,p,d,genus,cusps,T,e,sigma,c1_squared,chi_O,p_g,kodaira\n", 0) == 0);
  CHECK(csv.out.find("polygon-7,3,9828,118,3276,29484,30420,-16848,") != std::string::npos);
  auto table = run({"--format", "table", "elliptic", "--m", "5"});
  CHECK(table.code == 0);
  CHECK(!table.out.empty());
  auto protos = run({"--format", "csv", "prototypes", "--D", "8"});
  CHECK(protos.out == "D,w,h,t,e,twisting\n8,1,1,0,-2,2\n8,2,1,0,0,3\n");
}

TEST_CASE("cli: remaining subcommands") {
  auto tv = run({"tv-build", "--family", "E8"});
  REQUIRE(tv.code == 0);
  auto j = parse(tv.out);
  CHECK(j["genus"] == 4);
  CHECK(j["mu_minimal_polynomial"] == "mu^8-7*mu^6+14*mu^4-8*mu^2+1");
  for (const auto& [k, v] : j["structural_checks"].items()) CHECK(v == true);

  auto primes = run({"primes", "--family", "weierstrass-5", "--bound", "20"});
  REQUIRE(primes.code == 0);
  auto pj = parse(primes.out)["primes"];
  REQUIRE(pj.size() == 4);
  CHECK(pj[0]["exceptional"] == true);

  auto spor = run({"sporadic", "--which", "E7", "--p", "5"});
  REQUIRE(spor.code == 0);
  CHECK(parse(spor.out)["invariants"]["euler"] == "17490200");

  auto cover = run({"cover", "--base-genus", "0", "--orders", "2,5", "--cusps", "1", "--degree", "60",
                    "--cusp-orders", "3", "--twists", "2"});
  REQUIRE(cover.code == 0);
  auto cj = parse(cover.out);
  CHECK(cj["base_genus"] == "0");
  CHECK(cj["cusp_count"] == "20");
  CHECK(cj["total_twisting"] == "120");

  auto scatter = run({"--format", "csv", "scatter", "--from", "5", "--to", "30", "--p", "5", "--zeta"});
  REQUIRE(scatter.code == 0);
  CHECK(scatter.out.rfind("D,c2,c1sq,c1sq_over_c2\n", 0) == 0);
}

TEST_CASE("cli: output is deterministic") {
  auto a = run({"polygon", "--n", "11", "--p", "3"});
  auto b = run({"polygon", "--n", "11", "--p", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
