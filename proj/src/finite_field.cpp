#include "veechfib/finite_field.hpp"

#include <string>

namespace veechfib {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Word mod_reduce(const Integer& v, Word p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

Word powmod(Word b, Word e, Word p) {
  unsigned __int128 r = 1, x = b % p;
  while (e) {
    if (e & 1u) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<Word>(r);
}

namespace {

constexpr std::uint64_t kMaxPrime = (1ull << 31);

void check_prime(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
  if (p >= kMaxPrime) fail(ErrorKind::invalid_argument, "prime too large for word arithmetic");
}

Word inv_mod(Word a, Word p) { return powmod(a, p - 2, p); }

}  // namespace

namespace fp {

static void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(const IntPolynomial& f, Word p) {
  Poly r;
  for (const auto& c : f.coeffs()) r.push_back(mod_reduce(c, p));
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, Word p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly mod(Poly a, const Poly& m, Word p) {
  trim(a);
  if (m.empty()) fail(ErrorKind::invalid_argument, "reduction modulo zero polynomial");
  Word li = inv_mod(m.back(), p);
  std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    Word f = a.back() * li % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = (a[shift + j] + (p - f) * m[j]) % p;
    trim(a);
  }
  return a;
}

Poly sub(const Poly& a, const Poly& b, Word p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

Poly gcd(Poly a, Poly b, Word p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Word li = inv_mod(a.back(), p);
    for (auto& v : a) v = v * li % p;
  }
  return a;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m, Word p) {
  Poly r{1};
  base = mod(std::move(base), m, p);
  while (e) {
    if (e & 1u) r = mod(mul(r, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

}  // namespace fp

bool is_irreducible_mod_p(const IntPolynomial& f, std::uint64_t p) {
  check_prime(p);
  if (f.degree() < 1) fail(ErrorKind::invalid_argument, "irreducibility test needs a nonconstant polynomial");
  if (mod_reduce(f.leading(), p) == 0)
    fail(ErrorKind::invalid_argument, "p = " + std::to_string(p) + " divides the leading coefficient of " + to_string(f));
  fp::Poly g = fp::reduce(f, p);
  Word li = inv_mod(g.back(), p);
  for (auto& v : g) v = v * li % p;
  std::size_t n = g.size() - 1;
  if (n == 1) return true;
  const fp::Poly x{0, 1};
  fp::Poly h = x;  // x^(p^k) mod g
  for (std::size_t k = 1; k <= n; ++k) {
    h = fp::powmod(h, p, g, p);
    if (k <= n / 2) {
      fp::Poly d = fp::gcd(g, fp::sub(h, x, p), p);
      if (d.size() > 1) return false;
    }
  }
  return fp::mod(fp::sub(h, x, p), g, p).empty();
}

bool is_quadratic_nonresidue(const Integer& D, std::uint64_t p) {
  check_prime(p);
  if (p == 2) fail(ErrorKind::invalid_argument, "quadratic residue test needs an odd prime");
  Word d = mod_reduce(D, p);
  if (d == 0) fail(ErrorKind::invalid_argument, std::to_string(p) + " divides D = " + D.get_str());
  return powmod(d, (p - 1) / 2, p) == p - 1;
}

FiniteFieldSpec::FiniteFieldSpec(std::uint64_t p, const IntPolynomial& modulus) : p_(p), imod_(modulus) {
  check_prime(p);
  if (!modulus.is_monic()) fail(ErrorKind::invalid_argument, "field modulus must be monic");
  if (!is_irreducible_mod_p(modulus, p))
    fail(ErrorKind::invalid_argument, to_string(modulus) + " is reducible mod " + std::to_string(p));
  mod_ = fp::reduce(modulus, p);
  q_ = 1;
  for (int i = 0; i < degree(); ++i) {
    if (q_ > (~0ull) / p) fail(ErrorKind::invalid_argument, "field order overflows 64 bits");
    q_ *= p;
  }
}

FFElement::FFElement(std::shared_ptr<const FiniteFieldSpec> spec, std::vector<Word> residue)
    : spec_(std::move(spec)) {
  Word p = spec_->characteristic();
  for (auto& v : residue) v %= p;
  fp::Poly r = fp::mod(std::move(residue), spec_->modulus(), p);
  r.resize(spec_->degree(), 0);
  res_ = std::move(r);
}

FFElement FFElement::zero(std::shared_ptr<const FiniteFieldSpec> spec) { return FFElement(std::move(spec), {}); }
FFElement FFElement::one(std::shared_ptr<const FiniteFieldSpec> spec) { return FFElement(std::move(spec), {1}); }

FFElement FFElement::from_integer(std::shared_ptr<const FiniteFieldSpec> spec, long v) {
  Word p = spec->characteristic();
  long r = v % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return FFElement(std::move(spec), {static_cast<Word>(r)});
}

FFElement FFElement::generator(std::shared_ptr<const FiniteFieldSpec> spec) { return FFElement(std::move(spec), {0, 1}); }

FFElement FFElement::from_index(std::shared_ptr<const FiniteFieldSpec> spec, std::uint64_t index) {
  if (index >= spec->order()) fail(ErrorKind::invalid_argument, "field element index out of range");
  std::vector<Word> r;
  Word p = spec->characteristic();
  for (int i = 0; i < spec->degree(); ++i) {
    r.push_back(index % p);
    index /= p;
  }
  return FFElement(std::move(spec), std::move(r));
}

std::uint64_t FFElement::index() const {
  std::uint64_t v = 0;
  Word p = spec_->characteristic();
  for (auto it = res_.rbegin(); it != res_.rend(); ++it) v = v * p + *it;
  return v;
}

bool FFElement::is_zero() const {
  for (auto v : res_)
    if (v) return false;
  return true;
}

void FFElement::check_same(const FFElement& o) const {
  if (spec_ != o.spec_ && !(*spec_ == *o.spec_))
    fail(ErrorKind::invalid_argument, "arithmetic between elements of different finite fields");
}

FFElement FFElement::operator-() const { return FFElement(spec_, fp::sub({}, res_, spec_->characteristic())); }

FFElement operator+(const FFElement& a, const FFElement& b) {
  a.check_same(b);
  Word p = a.spec_->characteristic();
  std::vector<Word> r(a.res_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.res_[i] + b.res_[i]) % p;
  return FFElement(a.spec_, std::move(r));
}

FFElement operator-(const FFElement& a, const FFElement& b) { return a + (-b); }

FFElement operator*(const FFElement& a, const FFElement& b) {
  a.check_same(b);
  Word p = a.spec_->characteristic();
  return FFElement(a.spec_, fp::mod(fp::mul(a.res_, b.res_, p), a.spec_->modulus(), p));
}

bool operator==(const FFElement& a, const FFElement& b) {
  a.check_same(b);
  return a.res_ == b.res_;
}

FFElement FFElement::pow(std::uint64_t e) const {
  FFElement r = one(spec_), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FFElement FFElement::inverse() const {
  if (is_zero()) fail(ErrorKind::invalid_argument, "inverse of zero in finite field");
  return pow(spec_->order() - 2);
}

FFElement parse_field_element(const std::shared_ptr<const FiniteFieldSpec>& f, const std::string& text) {
  IntPolynomial poly = parse_int_polynomial(text);
  std::vector<Word> res;
  for (const auto& c : poly.coeffs()) res.push_back(mod_reduce(c, f->characteristic()));
  return FFElement(f, res);
}

}  // namespace veechfib
