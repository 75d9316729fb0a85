#include "veechfib/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace veechfib {

long euler_phi(long n) {
  if (n < 1) fail(ErrorKind::invalid_argument, "phi needs n >= 1");
  long r = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

IntPolynomial cyclotomic_polynomial(long n) {
  if (n < 1) fail(ErrorKind::invalid_argument, "cyclotomic index must be >= 1");
  static std::mutex mu;
  static std::map<long, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d
  IntPolynomial f = IntPolynomial::monomial(Integer(1), n) - IntPolynomial::constant(Integer(1));
  for (long d = 1; d < n; ++d)
    if (n % d == 0) f = exact_quotient(f, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(n, f);
  return f;
}

IntPolynomial minpoly_two_cos_two_pi_over(long N) {
  if (N < 1) fail(ErrorKind::invalid_argument, "N must be >= 1");
  if (N == 1) return IntPolynomial{-2, 1};
  if (N == 2) return IntPolynomial{2, 1};
  // Phi_N is palindromic of even degree 2k: Phi_N(x)/x^k = a_0 + sum a_j (x^j + x^-j),
  // and x^j + x^-j = D_j(y) with D_0 = 2, D_1 = y, D_j = y D_{j-1} - D_{j-2}.
  IntPolynomial phi = cyclotomic_polynomial(N);
  int k = phi.degree() / 2;
  IntPolynomial y = IntPolynomial::x();
  IntPolynomial d_prev = IntPolynomial{2}, d_cur = y;
  IntPolynomial psi = IntPolynomial::constant(phi.coeff(k));
  for (int j = 1; j <= k; ++j) {
    psi += phi.coeff(k + j) * d_cur;
    IntPolynomial next = y * d_cur - d_prev;
    d_prev = d_cur;
    d_cur = next;
  }
  return psi;
}

IntPolynomial minpoly_two_cos(long n) {
  if (n < 3) fail(ErrorKind::invalid_argument, "minpoly_two_cos needs n >= 3, got " + std::to_string(n));
  return minpoly_two_cos_two_pi_over(2 * n);
}

}  // namespace veechfib
