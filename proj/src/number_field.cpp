#include "veechfib/number_field.hpp"

#include "veechfib/linalg.hpp"
#include "veechfib/roots.hpp"

namespace veechfib {

NumberRingElement::NumberRingElement(std::shared_ptr<const IntPolynomial> modulus, const RatPolynomial& residue)
    : mod_(std::move(modulus)) {
  if (!mod_ || mod_->degree() < 1 || !mod_->is_monic())
    fail(ErrorKind::invalid_argument, "number ring modulus must be monic of degree >= 1");
  res_ = residue.degree() >= mod_->degree() ? rem(residue, to_rational(*mod_)) : residue;
}

NumberRingElement NumberRingElement::generator(std::shared_ptr<const IntPolynomial> modulus) {
  return NumberRingElement(std::move(modulus), RatPolynomial::x());
}

NumberRingElement NumberRingElement::from_rational(std::shared_ptr<const IntPolynomial> modulus, const Rational& v) {
  return NumberRingElement(std::move(modulus), RatPolynomial::constant(v));
}

std::vector<Rational> NumberRingElement::coordinates() const {
  std::vector<Rational> c(mod_->degree(), Rational(0));
  for (std::size_t k = 0; k < res_.coeffs().size(); ++k) c[k] = res_.coeffs()[k];
  return c;
}

void NumberRingElement::check_same(const NumberRingElement& o) const {
  if (!mod_ || !o.mod_) fail(ErrorKind::invalid_argument, "uninitialised number ring element");
  if (mod_ != o.mod_ && *mod_ != *o.mod_)
    fail(ErrorKind::mixed_modulus, "arithmetic between Q[x]/(" + to_string(*mod_) + ") and Q[x]/(" +
                                       to_string(*o.mod_) + ")");
}

NumberRingElement NumberRingElement::operator-() const { return NumberRingElement(mod_, -res_); }

NumberRingElement operator+(const NumberRingElement& a, const NumberRingElement& b) {
  a.check_same(b);
  return NumberRingElement(a.mod_, a.res_ + b.res_);
}

NumberRingElement operator-(const NumberRingElement& a, const NumberRingElement& b) {
  a.check_same(b);
  return NumberRingElement(a.mod_, a.res_ - b.res_);
}

NumberRingElement operator*(const NumberRingElement& a, const NumberRingElement& b) {
  a.check_same(b);
  return NumberRingElement(a.mod_, a.res_ * b.res_);
}

NumberRingElement operator*(const Rational& s, const NumberRingElement& a) {
  return NumberRingElement(a.mod_, s * a.res_);
}

bool operator==(const NumberRingElement& a, const NumberRingElement& b) {
  a.check_same(b);
  return a.res_ == b.res_;
}

NumberRingElement NumberRingElement::inverse() const {
  if (res_.is_zero()) fail(ErrorKind::invalid_argument, "inverse of zero in number ring");
  // s*res + t*mod = g; only s is tracked
  RatPolynomial r0 = to_rational(*mod_), r1 = res_;
  RatPolynomial s0, s1 = RatPolynomial::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0)
    fail(ErrorKind::invalid_argument, "element is a zero divisor modulo " + to_string(*mod_));
  return NumberRingElement(mod_, Rational(1) / r0.leading() * s0);
}

NumberRingElement NumberRingElement::pow(unsigned k) const {
  NumberRingElement r = from_rational(mod_, 1), b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

std::vector<std::vector<Rational>> NumberRingElement::multiplication_matrix() const {
  int n = mod_->degree();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  NumberRingElement col = *this;
  NumberRingElement x = generator(mod_);
  for (int j = 0; j < n; ++j) {
    auto c = col.coordinates();
    for (int i = 0; i < n; ++i) m[i][j] = c[i];
    col = col * x;
  }
  return m;
}

NumberRingElement evaluate_at(const RatPolynomial& f, const NumberRingElement& at) {
  NumberRingElement acc = NumberRingElement::from_rational(at.modulus_ptr(), 0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    acc = acc * at + NumberRingElement::from_rational(at.modulus_ptr(), *it);
  return acc;
}

NumberRingElement evaluate_at(const IntPolynomial& f, const NumberRingElement& at) {
  return evaluate_at(to_rational(f), at);
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
RatPolynomial characteristic_polynomial(const std::vector<std::vector<Rational>>& a) {
  std::size_t n = a.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    // m <- A*m + c[n-k+1] I
    std::vector<std::vector<Rational>> am(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) am[i][j] += a[i][l] * m[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return RatPolynomial(std::move(c));
}

ElementMinimalPolynomial element_minimal_polynomial(const NumberRingElement& elem) {
  RatPolynomial chi = characteristic_polynomial(elem.multiplication_matrix());
  ElementMinimalPolynomial out;
  out.polynomial = squarefree_part(chi);
  out.integral = has_integer_coefficients(out.polynomial);
  return out;
}

std::optional<std::vector<Integer>> coordinates_in_power_order(const NumberRingElement& elem,
                                                                const NumberRingElement& s) {
  int k = element_minimal_polynomial(s).polynomial.degree();
  int n = elem.field_degree();
  RatMatrix a(n, std::vector<Rational>(k, Rational(0)));
  NumberRingElement pw = NumberRingElement::from_rational(s.modulus_ptr(), 1);
  for (int j = 0; j < k; ++j) {
    auto c = pw.coordinates();
    for (int i = 0; i < n; ++i) a[i][j] = c[i];
    pw = pw * s;
  }
  auto sol = solve(std::move(a), elem.coordinates());
  if (!sol) return std::nullopt;
  std::vector<Integer> out;
  for (const auto& v : *sol) {
    if (!is_integral(v)) return std::nullopt;
    out.push_back(v.get_num());
  }
  return out;
}

int sign_at_root(const NumberRingElement& elem, const RootInterval& root) {
  if (elem.is_zero()) return 0;
  const RatPolynomial& r = elem.residue();
  if (r.degree() == 0) return sgn(r.leading());
  if (root.is_exact()) return sgn(r.eval(root.lower()));
  auto chain = sturm_chain(r);
  RootInterval iv = root;
  for (;;) {
    if (iv.is_exact()) return sgn(r.eval(iv.lower()));
    if (r.eval(iv.lower()) != 0 && count_roots(chain, iv.lower(), iv.upper()) == 0)
      return sgn(r.eval(iv.lower()));
    iv = iv.refined(iv.width() / 1024);
  }
}

double approximate(const NumberRingElement& elem, const RootInterval& root) {
  RootInterval iv = root.refined(make_rational(1, Integer("1000000000000000000000000")));
  return Rational(elem.residue().eval(Rational((iv.lower() + iv.upper()) / 2))).get_d();
}

}  // namespace veechfib
