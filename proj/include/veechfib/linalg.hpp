#pragma once

// Exact dense linear algebra over Q.

#include <optional>
#include <vector>

#include "veechfib/polynomial.hpp"

namespace veechfib {

using RatMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<long>>;

RatMatrix to_rational(const IntMatrix& m);
int rank(RatMatrix m);
int rank(const IntMatrix& m);
// One solution of A x = b, or nothing when inconsistent.
std::optional<std::vector<Rational>> solve(RatMatrix a, std::vector<Rational> b);

}  // namespace veechfib
