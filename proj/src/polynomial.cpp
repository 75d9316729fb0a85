#include "veechfib/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace veechfib {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::invalid_argument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::invalid_argument, "not a rational: '" + s + "'");
  }
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

bool has_integer_coefficients(const RatPolynomial& p) {
  for (const auto& v : p.coeffs())
    if (v.get_den() != 1) return false;
  return true;
}

IntPolynomial to_integer(const RatPolynomial& p) {
  if (!has_integer_coefficients(p))
    fail(ErrorKind::invalid_argument, "polynomial has non-integer coefficients: " + to_string(p));
  std::vector<Integer> c;
  for (const auto& v : p.coeffs()) c.push_back(v.get_num());
  return IntPolynomial(std::move(c));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) fail(ErrorKind::invalid_argument, "polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {RatPolynomial(), a};
  std::vector<Rational> q(a.degree() - db + 1, Rational(0));
  Rational lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational f = r[k] / lead;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
  }
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial rem(const RatPolynomial& a, const RatPolynomial& b) { return divmod(a, b).second; }

RatPolynomial monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return Rational(1) / p.leading() * p;
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = rem(a, b);
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

RatPolynomial squarefree_part(const RatPolynomial& p) {
  if (p.degree() <= 0) return monic(p);
  return monic(divmod(p, gcd(p, p.derivative())).first);
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero() || !has_integer_coefficients(q))
    fail(ErrorKind::inconsistency, to_string(b) + " does not divide " + to_string(a) + " over Z");
  return to_integer(q);
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  return divmod(to_rational(a), to_rational(b)).second.is_zero();
}

namespace {

template <class C>
std::string render(const Polynomial<C>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    C c = p.coeffs()[k];
    if (c == 0) continue;
    bool neg = c < 0;
    C a = neg ? C(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    bool unit = (a == 1);
    if (!unit || k == 0) os << to_string(a);
    if (k >= 1) {
      if (!unit) os << "*";
      os << var;
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, const std::string& var) { return render(p, var); }
std::string to_string(const RatPolynomial& p, const std::string& var) { return render(p, var); }

// Accepts sums of terms c, c*x, c*x^k, x^k, -x, with optional spaces. Any
// single-letter variable name is allowed.
IntPolynomial parse_int_polynomial(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) fail(ErrorKind::invalid_argument, "empty polynomial");
  std::vector<Integer> coeffs;
  auto bad = [&]() { fail(ErrorKind::invalid_argument, "cannot parse polynomial '" + text + "'"); };
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      bad();
    }
    Integer c = 1;
    bool have_digits = false;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      c = Integer(s.substr(i, j - i));
      have_digits = true;
      i = j;
    }
    unsigned long deg = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_digits) bad();
      ++i;
    }
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) bad();
        deg = std::stoul(s.substr(i, k - i));
        i = k;
      }
    } else if (!have_digits) {
      bad();
    }
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, Integer(0));
    coeffs[deg] += sign * c;
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace veechfib
