#pragma once

// Small finite fields F_p[x]/(f) with word-size coefficients.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "veechfib/polynomial.hpp"

namespace veechfib {

using Word = std::uint64_t;

bool is_prime(std::uint64_t n);
Word mod_reduce(const Integer& v, Word p);
Word powmod(Word b, Word e, Word p);

// Polynomials over F_p, ascending, trimmed. Internal helpers exposed for tests.
namespace fp {
using Poly = std::vector<Word>;
Poly reduce(const IntPolynomial& f, Word p);
Poly mul(const Poly& a, const Poly& b, Word p);
Poly mod(Poly a, const Poly& m, Word p);
Poly sub(const Poly& a, const Poly& b, Word p);
Poly gcd(Poly a, Poly b, Word p);
Poly powmod(Poly base, std::uint64_t e, const Poly& m, Word p);
}  // namespace fp

// Distinct-degree criterion. Throws invalid_argument when p divides the leading coefficient.
bool is_irreducible_mod_p(const IntPolynomial& f, std::uint64_t p);

// Euler's criterion. Throws invalid_argument when p | D or p is not an odd prime.
bool is_quadratic_nonresidue(const Integer& D, std::uint64_t p);

class FiniteFieldSpec {
 public:
  // Verifies p prime, modulus monic and irreducible mod p.
  FiniteFieldSpec(std::uint64_t p, const IntPolynomial& modulus);

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return static_cast<int>(mod_.size()) - 1; }
  std::uint64_t order() const { return q_; }
  const std::vector<Word>& modulus() const { return mod_; }
  const IntPolynomial& integer_modulus() const { return imod_; }
  friend bool operator==(const FiniteFieldSpec& a, const FiniteFieldSpec& b) {
    return a.p_ == b.p_ && a.mod_ == b.mod_;
  }

 private:
  std::uint64_t p_, q_;
  std::vector<Word> mod_;  // reduced mod p, monic
  IntPolynomial imod_;
};

class FFElement {
 public:
  FFElement(std::shared_ptr<const FiniteFieldSpec> spec, std::vector<Word> residue);
  static FFElement zero(std::shared_ptr<const FiniteFieldSpec> spec);
  static FFElement one(std::shared_ptr<const FiniteFieldSpec> spec);
  static FFElement from_integer(std::shared_ptr<const FiniteFieldSpec> spec, long v);
  // The class of x, i.e. a root of the modulus.
  static FFElement generator(std::shared_ptr<const FiniteFieldSpec> spec);
  // Element whose base-p digits are the residue coefficients.
  static FFElement from_index(std::shared_ptr<const FiniteFieldSpec> spec, std::uint64_t index);

  const FiniteFieldSpec& spec() const { return *spec_; }
  const std::shared_ptr<const FiniteFieldSpec>& spec_ptr() const { return spec_; }
  const std::vector<Word>& residue() const { return res_; }
  std::uint64_t index() const;
  bool is_zero() const;

  FFElement operator-() const;
  friend FFElement operator+(const FFElement& a, const FFElement& b);
  friend FFElement operator-(const FFElement& a, const FFElement& b);
  friend FFElement operator*(const FFElement& a, const FFElement& b);
  friend bool operator==(const FFElement& a, const FFElement& b);
  friend bool operator!=(const FFElement& a, const FFElement& b) { return !(a == b); }
  FFElement pow(std::uint64_t e) const;
  FFElement inverse() const;

 private:
  void check_same(const FFElement& o) const;
  std::shared_ptr<const FiniteFieldSpec> spec_;
  std::vector<Word> res_;  // length = degree
};

// Element written as an integer polynomial in x, e.g. "x+1"; coefficients are reduced mod p.
FFElement parse_field_element(const std::shared_ptr<const FiniteFieldSpec>& f, const std::string& text);

}  // namespace veechfib
