#include "veechfib/roots.hpp"

#include <cmath>

namespace veechfib {

Rational default_root_width() {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 20);
  return make_rational(1, den);
}

std::vector<RatPolynomial> sturm_chain(const RatPolynomial& f) {
  std::vector<RatPolynomial> chain;
  RatPolynomial a = squarefree_part(f);
  RatPolynomial b = a.derivative();
  chain.push_back(a);
  while (!b.is_zero()) {
    chain.push_back(b);
    RatPolynomial r = -rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return chain;
}

namespace {

int sign_of(const Rational& v) { return sgn(v); }

int variations(const std::vector<RatPolynomial>& chain, const Rational& x) {
  int v = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int count_roots(const std::vector<RatPolynomial>& chain, const Rational& a, const Rational& b) {
  return variations(chain, a) - variations(chain, b);
}

Rational cauchy_bound(const RatPolynomial& f) {
  Rational m = 0;
  for (int k = 0; k < f.degree(); ++k) {
    Rational r = abs(f.coeffs()[k] / f.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

double RootInterval::midpoint() const { return Rational((lower_ + upper_) / 2).get_d(); }

namespace {

// Bisection step on (lo, hi] holding exactly one root r, with f(lo) != 0.
// Returns a narrower interval keeping the same property, or collapses to
// [m, m] when the midpoint is the root.
void bisect(const std::vector<RatPolynomial>& chain, Rational& lo, Rational& hi) {
  const RatPolynomial& f = chain.front();
  Rational mid = (lo + hi) / 2;
  if (f.eval(mid) == 0) {
    if (count_roots(chain, mid, hi) == 0) {
      lo = hi = mid;
      return;
    }
    // root r lies above mid; nudge mid upward to a non-root
    Rational step = (hi - mid) / 2;
    while (f.eval(Rational(mid + step)) == 0) step /= 2;
    mid += step;
  }
  if (count_roots(chain, mid, hi) >= 1)
    lo = mid;
  else
    hi = mid;
}

}  // namespace

RootInterval RootInterval::refined(const Rational& w) const {
  if (w <= 0) fail(ErrorKind::invalid_argument, "refinement width must be positive");
  if (is_exact() || width() <= w) return *this;
  auto chain = sturm_chain(to_rational(poly_));
  Rational lo = lower_, hi = upper_;
  // the stored closed interval has f(lo) != 0, so (lo, hi] holds the same root
  while (lo != hi && hi - lo > w) bisect(chain, lo, hi);
  return RootInterval(lo, hi, poly_);
}

RootInterval isolate_largest_real_root(const IntPolynomial& f, const Rational& width) {
  if (f.degree() < 1) fail(ErrorKind::no_real_root, "constant polynomial has no real root");
  RatPolynomial rf = to_rational(f);
  auto chain = sturm_chain(rf);
  Rational hi = cauchy_bound(rf);
  Rational lo = -hi;
  int total = count_roots(chain, lo, hi);
  if (total == 0) fail(ErrorKind::no_real_root, to_string(f) + " has no real root");
  // shrink lo until (lo, hi] holds exactly the largest root
  const RatPolynomial& sf = chain.front();
  while (count_roots(chain, lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (sf.eval(mid) == 0 && count_roots(chain, mid, hi) == 0) {
      lo = hi = mid;
      break;
    }
    if (sf.eval(mid) == 0) {
      Rational step = (hi - mid) / 2;
      while (sf.eval(mid + step) == 0) step /= 2;
      mid += step;
    }
    if (count_roots(chain, mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  while (lo != hi && hi - lo > width) bisect(chain, lo, hi);
  return RootInterval(lo, hi, f);
}

}  // namespace veechfib
