#pragma once

// Elements of Q[x]/(m) for a monic integer modulus m. Arithmetic between
// elements with different moduli is refused rather than coerced.

#include <memory>
#include <optional>
#include <vector>

#include "veechfib/polynomial.hpp"

namespace veechfib {

class NumberRingElement {
 public:
  NumberRingElement() = default;
  // Reduces residue modulo the modulus. modulus must be monic of degree >= 1.
  NumberRingElement(std::shared_ptr<const IntPolynomial> modulus, const RatPolynomial& residue);

  static NumberRingElement generator(std::shared_ptr<const IntPolynomial> modulus);
  static NumberRingElement from_rational(std::shared_ptr<const IntPolynomial> modulus, const Rational& v);

  const IntPolynomial& modulus() const { return *mod_; }
  const std::shared_ptr<const IntPolynomial>& modulus_ptr() const { return mod_; }
  const RatPolynomial& residue() const { return res_; }
  int field_degree() const { return mod_->degree(); }
  bool is_zero() const { return res_.is_zero(); }
  // residue coordinates padded to the field degree
  std::vector<Rational> coordinates() const;

  NumberRingElement operator-() const;
  friend NumberRingElement operator+(const NumberRingElement& a, const NumberRingElement& b);
  friend NumberRingElement operator-(const NumberRingElement& a, const NumberRingElement& b);
  friend NumberRingElement operator*(const NumberRingElement& a, const NumberRingElement& b);
  friend NumberRingElement operator*(const Rational& s, const NumberRingElement& a);
  friend bool operator==(const NumberRingElement& a, const NumberRingElement& b);
  friend bool operator!=(const NumberRingElement& a, const NumberRingElement& b) { return !(a == b); }

  // Inverse via the extended Euclidean algorithm; requires gcd(residue, modulus) = 1.
  NumberRingElement inverse() const;
  NumberRingElement pow(unsigned k) const;
  friend NumberRingElement operator/(const NumberRingElement& a, const NumberRingElement& b) {
    return a * b.inverse();
  }

  // Matrix of multiplication by this element in the power basis (column j = this * x^j).
  std::vector<std::vector<Rational>> multiplication_matrix() const;

 private:
  void check_same(const NumberRingElement& o) const;
  std::shared_ptr<const IntPolynomial> mod_;
  RatPolynomial res_;
};

// Substitute an element into a polynomial, evaluating inside the ring.
NumberRingElement evaluate_at(const RatPolynomial& f, const NumberRingElement& at);
NumberRingElement evaluate_at(const IntPolynomial& f, const NumberRingElement& at);

struct ElementMinimalPolynomial {
  RatPolynomial polynomial;  // monic
  bool integral = false;     // every coefficient an integer
  IntPolynomial integer() const { return to_integer(polynomial); }
};

// Characteristic polynomial of the multiplication matrix, reduced to its
// squarefree part. Exact for elements of a field (irreducible modulus).
ElementMinimalPolynomial element_minimal_polynomial(const NumberRingElement& elem);

// Characteristic polynomial det(xI - M) of a square rational matrix.
RatPolynomial characteristic_polynomial(const std::vector<std::vector<Rational>>& m);

// Coordinates of elem in the Z-basis 1, s, ..., s^(k-1) of Z[s], k = degree of
// s over Q. Empty when elem is not in Z[s].
std::optional<std::vector<Integer>> coordinates_in_power_order(const NumberRingElement& elem,
                                                                const NumberRingElement& s);

// Sign of the real embedding fixed by a root interval of the modulus. elem must be nonzero.
class RootInterval;
int sign_at_root(const NumberRingElement& elem, const RootInterval& root);
double approximate(const NumberRingElement& elem, const RootInterval& root);

}  // namespace veechfib
