#pragma once

// Dense univariate polynomials over Z and Q, coefficients in ascending degree.

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <type_traits>
#include <vector>

#include "veechfib/error.hpp"

namespace veechfib {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);
bool is_integral(const Rational& q);
Integer floor_div(const Integer& a, const Integer& b);

template <class C>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Polynomial constant(const C& v) { return Polynomial(std::vector<C>{v}); }
  static Polynomial monomial(const C& v, std::size_t k) {
    std::vector<C> c(k + 1, C(0));
    c[k] = v;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(C(1), 1); }

  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C(0); }
  C leading() const { return c_.empty() ? C(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  // gmpxx expression templates are not constructible from int and fall through to the C overload
  template <class V>
    requires std::is_constructible_v<V, int>
  V eval(const V& x) const {
    V acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

  C eval(const C& x) const { return eval<C>(x); }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<C> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return Polynomial(std::move(d));
  }

  // p(-x)
  Polynomial reflect() const {
    std::vector<C> d = c_;
    for (std::size_t k = 1; k < d.size(); k += 2) d[k] = -d[k];
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    std::vector<C> d = c_;
    for (auto& v : d) v = -v;
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<C> d(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) d[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) d[k] += b.c_[k];
    return Polynomial(std::move(d));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<C> d(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(d));
  }
  friend Polynomial operator*(const C& s, const Polynomial& a) {
    std::vector<C> d = a.c_;
    for (auto& v : d) v *= s;
    return Polynomial(std::move(d));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(C(1)), b = *this;
    while (k) {
      if (k & 1u) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<C> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);
// Throws invalid_argument unless every coefficient is an integer.
IntPolynomial to_integer(const RatPolynomial& p);
bool has_integer_coefficients(const RatPolynomial& p);

// Euclidean division over Q. Throws invalid_argument on division by zero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial rem(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial monic(const RatPolynomial& p);
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);
// Product of the distinct irreducible factors, made monic.
RatPolynomial squarefree_part(const RatPolynomial& p);
// Exact quotient a/b; throws inconsistency if b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
bool divides(const IntPolynomial& b, const IntPolynomial& a);

// "x^2-x-1" style rendering and parsing (variable name configurable on output).
std::string to_string(const IntPolynomial& p, const std::string& var = "x");
std::string to_string(const RatPolynomial& p, const std::string& var = "x");
IntPolynomial parse_int_polynomial(const std::string& text);

}  // namespace veechfib
