#pragma once

// Integer prototypes (w, h, t, e) for genus-2 Weierstrass curves of discriminant D.

#include <functional>
#include <string>
#include <vector>

#include "veechfib/polynomial.hpp"

namespace veechfib {

struct Prototype {
  long w = 0, h = 0, t = 0, e = 0;
  long discriminant() const { return e * e + 4 * w * h; }
  friend auto operator<=>(const Prototype&, const Prototype&) = default;
};

// Chooses one spin class when D = 1 mod 8. No built-in formula is provided.
using SpinPredicate = std::function<bool(const Prototype&)>;

// Throws invalid_discriminant unless D >= 5, D = 0 or 1 mod 4, D not a square.
void validate_discriminant(long D);

// Independent re-check of the five defining constraints.
bool is_valid_prototype(const Prototype& p, long D);

// Sorted lexicographically by (w, h, t, e). Throws spin_required for D = 1 mod 8
// when no predicate is given.
std::vector<Prototype> enumerate_prototypes(long D, const SpinPredicate& spin = {});

// a + b where w/h = a/b in lowest terms.
Integer prototype_twisting(const Prototype& p);

// Standard parameters: e = 0 for even D and e = -1 for odd D, w = (D - e^2)/4.
// That sign makes (w, 1, 0, e) itself a prototype (h + e < w).
struct WeierstrassParameters {
  long w, e;
};
WeierstrassParameters weierstrass_parameters(long D);

// x^2 + (e - 2w)x + w(w - e - 1), the minimal polynomial of lambda + (w - e).
IntPolynomial weierstrass_alpha(long w, long e);

// CSV with header D,w,h,t,e,twisting.
std::string prototypes_csv(long D, const std::vector<Prototype>& ps);

}  // namespace veechfib
