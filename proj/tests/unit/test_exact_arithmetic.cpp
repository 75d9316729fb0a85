#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "veechfib/cyclotomic.hpp"
#include "veechfib/finite_field.hpp"
#include "veechfib/number_field.hpp"
#include "veechfib/roots.hpp"

using namespace veechfib;

namespace {

IntPolynomial P(const char* s) { return parse_int_polynomial(s); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::inconsistency;
}

// Oracle: a polynomial of degree <= 3 over F_p is irreducible iff it has no root.
bool no_roots_mod(const IntPolynomial& f, long p) {
  for (long r = 0; r < p; ++r)
    if (mod_reduce(f.eval(Integer(r)), static_cast<Word>(p)) == 0) return false;
  return true;
}

// Oracle: product of (x - 2cos(2 pi k / (2n))) over k coprime to 2n, 0 < k < n, in doubles.
std::vector<double> two_cos_conjugates(long n) {
  std::vector<double> r;
  for (long k = 1; k < n; ++k)
    if (std::gcd(k, 2 * n) == 1) r.push_back(2 * std::cos(std::numbers::pi * k / n));
  return r;
}

}  // namespace

TEST_CASE("polynomial parse and print round trip") {
  CHECK(to_string(P("x^2-x-1")) == "x^2-x-1");
  CHECK(to_string(P("x^6 - 6*x^4 + 9*x^2 - 3")) == "x^6-6*x^4+9*x^2-3");
  CHECK(P("3") == IntPolynomial{3});
  CHECK(P("-x") == IntPolynomial{0, -1});
  CHECK(kind_of([] { P("x^^2"); }) == ErrorKind::invalid_argument);
}

TEST_CASE("rationals are kept in lowest terms") {
  Rational q = make_rational(6, -4);
  CHECK(to_string(q) == "-3/2");
  CHECK(q.get_den() > 0);
  CHECK(parse_rational("-3/10") == Rational(-3, 10));
}

TEST_CASE("minpoly of 2cos(pi/n): listed values") {
  CHECK(minpoly_two_cos(3) == P("x-1"));
  CHECK(minpoly_two_cos(5) == P("x^2-x-1"));
  CHECK(minpoly_two_cos(18) == P("x^6-6*x^4+9*x^2-3"));
  CHECK(minpoly_two_cos(30) == P("x^8-7*x^6+14*x^4-8*x^2+1"));
  CHECK(kind_of([] { minpoly_two_cos(2); }) == ErrorKind::invalid_argument);
}

TEST_CASE("minpoly of 2cos(pi/n): degree, monic, largest root, n in [3,60]") {
  for (long n = 3; n <= 60; ++n) {
    CAPTURE(n);
    auto f = minpoly_two_cos(n);
    CHECK(f.degree() == euler_phi(2 * n) / 2);
    CHECK(f.is_monic());
    auto iv = isolate_largest_real_root(f).refined(Rational(1, 1000000000000L));
    double v = 2 * std::cos(std::numbers::pi / n);
    CHECK(iv.lower() <= Rational(v + 1e-12));
    CHECK(Rational(v - 1e-12) <= iv.upper());
    // independent oracle: coefficients agree with the product of the conjugates
    auto roots = two_cos_conjugates(n);
    std::vector<double> c{1.0};
    for (double r : roots) {
      std::vector<double> next(c.size() + 1, 0.0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= r * c[i];
      }
      c = next;
    }
    REQUIRE(c.size() == f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(c[i] - f.coeff(i).get_d()) < 1e-6);
  }
}

TEST_CASE("element minimal polynomial") {
  auto m5 = std::make_shared<const IntPolynomial>(P("x^2-x-1"));
  auto mu = NumberRingElement::generator(m5);
  auto a = element_minimal_polynomial(mu * mu);
  CHECK(a.integral);
  CHECK(a.integer() == P("x^2-3*x+1"));
  CHECK(element_minimal_polynomial(mu).integer() == *m5);

  auto m7 = std::make_shared<const IntPolynomial>(P("x^3-x^2-2*x+1"));
  auto mu7 = NumberRingElement::generator(m7);
  auto b = element_minimal_polynomial(mu7 * mu7);
  CHECK(b.integer() == P("x^3-5*x^2+6*x-1"));
  // annihilates the element inside the ring
  CHECK(evaluate_at(b.polynomial, mu7 * mu7).is_zero());

  auto half = Rational(1, 2) * mu;
  auto h = element_minimal_polynomial(half);
  CHECK_FALSE(h.integral);
  CHECK(evaluate_at(h.polynomial, half).is_zero());
}

TEST_CASE("number ring elements refuse mixed moduli") {
  auto m5 = std::make_shared<const IntPolynomial>(P("x^2-x-1"));
  auto m8 = std::make_shared<const IntPolynomial>(P("x^2-2"));
  auto a = NumberRingElement::generator(m5);
  auto b = NumberRingElement::generator(m8);
  CHECK(kind_of([&] { (void)(a + b); }) == ErrorKind::mixed_modulus);
  CHECK(a * a.inverse() == NumberRingElement::from_rational(m5, 1));
}

TEST_CASE("power-order membership") {
  auto m5 = std::make_shared<const IntPolynomial>(P("x^2-x-1"));
  auto mu = NumberRingElement::generator(m5);
  auto s = mu * mu;
  CHECK(coordinates_in_power_order(mu, s).has_value());  // mu = s - 1
  CHECK_FALSE(coordinates_in_power_order(Rational(1, 2) * mu, s).has_value());
}

TEST_CASE("irreducibility mod p") {
  CHECK(is_irreducible_mod_p(P("x^2-x-1"), 3));
  CHECK_FALSE(is_irreducible_mod_p(P("x^2-x-1"), 5));
  CHECK(is_irreducible_mod_p(P("x^3-5*x^2+6*x-1"), 3));
  CHECK(kind_of([] { is_irreducible_mod_p(P("3*x^2+1"), 3); }) == ErrorKind::invalid_argument);
  // no-root oracle for cubics
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L})
    for (const char* f : {"x^3-5*x^2+6*x-1", "x^3-6*x^2+9*x-3", "x^3-x-1", "x^2+1", "x^2-3*x+1"}) {
      CAPTURE(p);
      CAPTURE(f);
      CHECK(is_irreducible_mod_p(P(f), p) == no_roots_mod(P(f), p));
    }
}

TEST_CASE("quadratic nonresidue and agreement with irreducibility of x^2 - D") {
  CHECK(is_quadratic_nonresidue(5, 3));
  CHECK_FALSE(is_quadratic_nonresidue(5, 11));
  CHECK(is_quadratic_nonresidue(8, 3));
  CHECK(kind_of([] { is_quadratic_nonresidue(15, 5); }) == ErrorKind::invalid_argument);
  for (long D = 2; D <= 100; ++D)
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
      if (D % p == 0) continue;
      CHECK(is_quadratic_nonresidue(D, p) == is_irreducible_mod_p(IntPolynomial{-D, 0, 1}, p));
    }
}

TEST_CASE("largest real root isolation") {
  auto one = isolate_largest_real_root(P("x-1"));
  CHECK(one.lower() <= 1);
  CHECK(1 <= one.upper());
  auto phi = isolate_largest_real_root(P("x^2-x-1"));
  CHECK(Rational(3, 2) <= phi.lower());
  CHECK(phi.upper() <= Rational(17, 10));
  CHECK(phi.width() <= default_root_width());
  CHECK(kind_of([] { isolate_largest_real_root(P("x^2+1")); }) == ErrorKind::no_real_root);
  auto chain = sturm_chain(to_rational(P("x^3-x")));
  CHECK(count_roots(chain, -2, 2) == 3);
}

TEST_CASE("finite field: Frobenius fixes every element") {
  std::mt19937_64 rng(20261015);
  for (auto [p, mod] : {std::pair{3L, "x^2-x-1"}, std::pair{5L, "x^2-x+2"}, std::pair{7L, "x^3-x+2"}}) {
    CAPTURE(p);
    auto f = std::make_shared<const FiniteFieldSpec>(p, P(mod));
    for (int i = 0; i < 100; ++i) {
      auto a = FFElement::from_index(f, rng() % f->order());
      CHECK(a.pow(f->order()) == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == FFElement::one(f));
    }
  }
  CHECK(kind_of([] { FiniteFieldSpec(5, P("x^2-x-1")); }) == ErrorKind::invalid_argument);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(10) == P("x^4-x^3+x^2-x+1"));
  CHECK(cyclotomic_polynomial(1) == P("x-1"));
  for (long n = 1; n <= 40; ++n) CHECK(cyclotomic_polynomial(n).degree() == euler_phi(n));
}
