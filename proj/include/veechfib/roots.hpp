#pragma once

// Real root isolation by Sturm sequences over exact rationals.

#include "veechfib/polynomial.hpp"

namespace veechfib {

// 10^-20
Rational default_root_width();

class RootInterval {
 public:
  RootInterval(Rational lower, Rational upper, IntPolynomial poly)
      : lower_(std::move(lower)), upper_(std::move(upper)), poly_(std::move(poly)) {}

  const Rational& lower() const { return lower_; }
  const Rational& upper() const { return upper_; }
  const IntPolynomial& polynomial() const { return poly_; }
  Rational width() const { return upper_ - lower_; }
  bool is_exact() const { return lower_ == upper_; }
  bool contains(const Rational& v) const { return lower_ <= v && v <= upper_; }
  double midpoint() const;

  // Bisect until width <= w. The interval keeps exactly one root of the polynomial.
  RootInterval refined(const Rational& w) const;

 private:
  Rational lower_, upper_;
  IntPolynomial poly_;
};

// Sturm chain of the squarefree part of f.
std::vector<RatPolynomial> sturm_chain(const RatPolynomial& f);
// Number of distinct real roots in (a, b].
int count_roots(const std::vector<RatPolynomial>& chain, const Rational& a, const Rational& b);
// Strict bound: every real root has absolute value < bound.
Rational cauchy_bound(const RatPolynomial& f);

RootInterval isolate_largest_real_root(const IntPolynomial& f, const Rational& width = default_root_width());

}  // namespace veechfib
