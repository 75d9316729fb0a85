#include "veechfib/prototypes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "veechfib/error.hpp"

namespace veechfib {

namespace {

bool is_square(long n) {
  if (n < 0) return false;
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

}  // namespace

void validate_discriminant(long D) {
  if (D < 5) fail(ErrorKind::invalid_discriminant, "D = " + std::to_string(D) + " must be at least 5");
  long r = ((D % 4) + 4) % 4;
  if (r != 0 && r != 1) fail(ErrorKind::invalid_discriminant, "D = " + std::to_string(D) + " is not 0 or 1 mod 4");
  if (is_square(D)) fail(ErrorKind::invalid_discriminant, "D = " + std::to_string(D) + " is a square");
}

bool is_valid_prototype(const Prototype& p, long D) {
  if (p.w <= 0 || p.h <= 0) return false;
  if (p.e * p.e + 4 * p.w * p.h != D) return false;
  if (p.t < 0 || p.t >= std::gcd(p.w, p.h)) return false;
  if (p.h + p.e >= p.w) return false;
  return std::gcd(std::gcd(p.w, p.h), std::gcd(p.t, std::abs(p.e))) == 1;
}

std::vector<Prototype> enumerate_prototypes(long D, const SpinPredicate& spin) {
  validate_discriminant(D);
  if (D % 8 == 1 && !spin)
    fail(ErrorKind::spin_required,
         "D = " + std::to_string(D) + " = 1 mod 8 has two spin components; supply a spin predicate");
  std::vector<Prototype> out;
  for (long e = 0; e * e < D; ++e) {
    if ((D - e * e) % 4 != 0) continue;
    long wh = (D - e * e) / 4;
    for (long sign : {-1L, 1L}) {
      if (e == 0 && sign == 1) continue;
      long ee = sign * e;
      for (long w = 1; w <= wh; ++w) {
        if (wh % w) continue;
        long h = wh / w;
        if (h + ee >= w) continue;
        long g = std::gcd(w, h);
        for (long t = 0; t < g; ++t) {
          Prototype p{w, h, t, ee};
          if (std::gcd(g, std::gcd(t, e)) != 1) continue;
          if (spin && !spin(p)) continue;
          out.push_back(p);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer prototype_twisting(const Prototype& p) {
  long g = std::gcd(p.w, p.h);
  return Integer(p.w / g + p.h / g);
}

WeierstrassParameters weierstrass_parameters(long D) {
  validate_discriminant(D);
  long e = D % 2 == 0 ? 0 : -1;
  return {(D - e * e) / 4, e};
}

IntPolynomial weierstrass_alpha(long w, long e) { return IntPolynomial{w * (w - e - 1), e - 2 * w, 1}; }

std::string prototypes_csv(long D, const std::vector<Prototype>& ps) {
  std::ostringstream os;
  os << "D,w,h,t,e,twisting\n";
  for (const auto& p : ps)
    os << D << ',' << p.w << ',' << p.h << ',' << p.t << ',' << p.e << ',' << prototype_twisting(p).get_str() << '\n';
  return os.str();
}

}  // namespace veechfib
