#include "veechfib/linalg.hpp"

namespace veechfib {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r;
  for (const auto& row : m) {
    std::vector<Rational> rr;
    for (long v : row) rr.emplace_back(v);
    r.push_back(std::move(rr));
  }
  return r;
}

namespace {

// Row-reduce in place, returning pivot columns.
std::vector<std::size_t> eliminate(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(RatMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(eliminate(m, m.front().size()).size());
}

int rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::optional<std::vector<Rational>> solve(RatMatrix a, std::vector<Rational> b) {
  if (a.size() != b.size()) fail(ErrorKind::invalid_argument, "solve: dimension mismatch");
  std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  auto pivots = eliminate(a, cols);
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (a[r][cols] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

}  // namespace veechfib
