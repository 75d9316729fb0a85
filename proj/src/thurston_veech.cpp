#include "veechfib/thurston_veech.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "veechfib/cyclotomic.hpp"
#include "veechfib/finite_field.hpp"

namespace veechfib {

IntMatrix BipartiteIntersectionGraph::adjacency() const {
  int n = vertex_count();
  IntMatrix a(n, std::vector<long>(n, 0));
  for (int i = 0; i < black_count; ++i)
    for (int j = 0; j < white_count; ++j) {
      a[i][black_count + j] = intersections[i][j];
      a[black_count + j][i] = intersections[i][j];
    }
  return a;
}

BipartiteIntersectionGraph BipartiteIntersectionGraph::transposed() const {
  IntMatrix t(white_count, std::vector<long>(black_count, 0));
  for (int i = 0; i < black_count; ++i)
    for (int j = 0; j < white_count; ++j) t[j][i] = intersections[i][j];
  return make_graph(std::move(t), white_labels, black_labels);
}

BipartiteIntersectionGraph make_graph(IntMatrix q, std::vector<int> black_labels, std::vector<int> white_labels) {
  BipartiteIntersectionGraph g;
  g.black_count = static_cast<int>(q.size());
  if (g.black_count == 0) fail(ErrorKind::invalid_argument, "intersection matrix is empty");
  g.white_count = static_cast<int>(q.front().size());
  if (g.white_count == 0) fail(ErrorKind::invalid_argument, "intersection matrix has no columns");
  for (const auto& row : q) {
    if (static_cast<int>(row.size()) != g.white_count) fail(ErrorKind::invalid_argument, "ragged intersection matrix");
    for (long v : row)
      if (v < 0) fail(ErrorKind::invalid_argument, "negative intersection number");
  }
  g.intersections = std::move(q);
  if (black_labels.empty())
    for (int i = 0; i < g.black_count; ++i) black_labels.push_back(i + 1);
  if (white_labels.empty())
    for (int j = 0; j < g.white_count; ++j) white_labels.push_back(g.black_count + j + 1);
  g.black_labels = std::move(black_labels);
  g.white_labels = std::move(white_labels);
  // connectivity by union-find over nonzero entries
  int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (int i = 0; i < g.black_count; ++i)
    for (int j = 0; j < g.white_count; ++j)
      if (g.intersections[i][j] != 0) parent[find(i)] = find(g.black_count + j);
  for (int v = 1; v < n; ++v)
    if (find(v) != find(0))
      fail(ErrorKind::invalid_argument, "intersection graph is disconnected (the curves do not fill)");
  return g;
}

BipartiteIntersectionGraph coxeter_graph(CoxeterKind kind, int rank) {
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  if (kind == CoxeterKind::A) {
    if (rank < 2) fail(ErrorKind::invalid_argument, "A(k) needs k >= 2");
    n = rank;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  } else {
    n = kind == CoxeterKind::E7 ? 7 : 8;
    edges = {{1, 3}, {3, 4}, {2, 4}, {4, 5}};
    for (int v = 5; v < n; ++v) edges.emplace_back(v, v + 1);
  }
  // two-colour by BFS from the reference vertex
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int ref = kind == CoxeterKind::A ? 1 : 2;
  std::vector<int> colour(n + 1, -1);
  std::vector<int> queue{ref};
  colour[ref] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int w : adj[queue[k]])
      if (colour[w] < 0) {
        colour[w] = 1 - colour[queue[k]];
        queue.push_back(w);
      }
  std::vector<int> blacks, whites;
  for (int v = 1; v <= n; ++v) (colour[v] == 0 ? blacks : whites).push_back(v);
  IntMatrix q(blacks.size(), std::vector<long>(whites.size(), 0));
  for (auto [a, b] : edges) {
    int x = colour[a] == 0 ? a : b, y = colour[a] == 0 ? b : a;
    auto bi = std::find(blacks.begin(), blacks.end(), x) - blacks.begin();
    auto wi = std::find(whites.begin(), whites.end(), y) - whites.begin();
    q[bi][wi] = 1;
  }
  return make_graph(std::move(q), blacks, whites);
}

namespace {

RatMatrix to_rat(const IntMatrix& m) { return to_rational(m); }

bool certified_irreducible(const IntPolynomial& f) {
  if (f.degree() <= 1) return true;
  for (std::uint64_t p = 3; p < 400; p += 2) {
    if (!is_prime(p) || mod_reduce(f.leading(), p) == 0) continue;
    if (is_irreducible_mod_p(f, p)) return true;
  }
  return false;
}

bool has_root_in(const IntPolynomial& f, const RootInterval& iv) {
  RatPolynomial rf = to_rational(f);
  if (iv.is_exact()) return rf.eval(iv.lower()) == 0;
  auto chain = sturm_chain(rf);
  return rf.eval(iv.lower()) == 0 || count_roots(chain, iv.lower(), iv.upper()) > 0;
}

IntPolynomial substitute_square(const IntPolynomial& f) {
  std::vector<Integer> c(2 * f.coeffs().size() - 1, Integer(0));
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) c[2 * k] = f.coeffs()[k];
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial largest_root_minimal_polynomial(const IntPolynomial& charpoly, const RootInterval& largest,
                                              const IntPolynomial* square_charpoly) {
  IntPolynomial s = to_integer(squarefree_part(to_rational(charpoly)));
  RootInterval iv = largest.refined(make_rational(1, Integer("1000000000000000000000000000000")));
  // Kronecker: a root of absolute value <= 2 of a monic integer polynomial whose
  // roots are all real is 2cos(2*pi/N); bracket N numerically and verify exactly.
  if (iv.upper() <= 2) {
    double mu = iv.midpoint();
    double est = mu >= 2.0 ? 1.0 : 2.0 * M_PI / std::acos(std::clamp(mu / 2.0, -1.0, 1.0));
    long centre = std::lround(est);
    for (long d = 0; d <= 3; ++d)
      for (long N : {centre - d, centre + d}) {
        if (N < 1) continue;
        IntPolynomial psi = minpoly_two_cos_two_pi_over(N);
        if (divides(psi, s) && has_root_in(psi, iv)) return psi;
      }
  }
  if (has_root_in(s, iv) && certified_irreducible(s)) return s;
  if (square_charpoly) {
    IntPolynomial t = to_integer(squarefree_part(to_rational(*square_charpoly)));
    IntPolynomial cand = substitute_square(t);
    if (certified_irreducible(t) && certified_irreducible(cand) && divides(cand, s) && has_root_in(cand, iv))
      return cand;
  }
  fail(ErrorKind::unsupported_family,
       "could not isolate the irreducible factor of " + to_string(charpoly) +
           " carrying the largest root without general factorisation");
}

PerronFrobeniusData perron_frobenius(const BipartiteIntersectionGraph& g) {
  IntMatrix a = g.adjacency();
  int n = g.vertex_count();
  RatPolynomial chi = characteristic_polynomial(to_rat(a));
  IntPolynomial ichi = to_integer(chi);
  RootInterval top = isolate_largest_real_root(ichi);
  // Q Q^T carries mu^2; used when mu's own factor needs a second route
  IntMatrix qqt(g.black_count, std::vector<long>(g.black_count, 0));
  for (int i = 0; i < g.black_count; ++i)
    for (int k = 0; k < g.black_count; ++k)
      for (int j = 0; j < g.white_count; ++j) qqt[i][k] += g.intersections[i][j] * g.intersections[k][j];
  IntPolynomial sq = to_integer(characteristic_polynomial(to_rat(qqt)));
  auto mod = std::make_shared<const IntPolynomial>(largest_root_minimal_polynomial(ichi, top, &sq));
  RootInterval mu_root = isolate_largest_real_root(*mod);
  NumberRingElement mu = NumberRingElement::generator(mod);
  NumberRingElement zero = NumberRingElement::from_rational(mod, 0);

  // kernel of A - mu I, sparse Gaussian elimination over Q(mu)
  std::vector<std::vector<NumberRingElement>> m(n, std::vector<NumberRingElement>(n, zero));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[i][j]) m[i][j] = NumberRingElement::from_rational(mod, a[i][j]);
  for (int i = 0; i < n; ++i) m[i][i] = m[i][i] - mu;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int p = row;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    NumberRingElement inv = m[row][col].inverse();
    for (int j = col; j < n; ++j)
      if (!m[row][j].is_zero()) m[row][j] = m[row][j] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      NumberRingElement f = m[r][col];
      for (int j = col; j < n; ++j)
        if (!m[row][j].is_zero()) m[r][j] = m[r][j] - f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivot_col.size()) != n - 1)
    fail(ErrorKind::inconsistency, "Perron-Frobenius eigenspace is not one-dimensional");
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<NumberRingElement> h(n, zero);
  h[free_col] = NumberRingElement::from_rational(mod, 1);
  for (int r = 0; r < n - 1; ++r) h[pivot_col[r]] = -m[r][free_col];
  if (h[0].is_zero()) fail(ErrorKind::inconsistency, "Perron-Frobenius vector has a zero entry");
  NumberRingElement scale = h[0].inverse();
  for (auto& v : h) v = v * scale;

  for (int i = 0; i < n; ++i) {
    NumberRingElement lhs = zero;
    for (int j = 0; j < n; ++j)
      if (a[i][j]) lhs = lhs + Rational(a[i][j]) * h[j];
    if (lhs != mu * h[i]) fail(ErrorKind::inconsistency, "Q h = mu h fails exactly");
    if (sign_at_root(h[i], mu_root) <= 0) fail(ErrorKind::inconsistency, "Perron-Frobenius vector is not positive");
  }
  return {mu, mu_root, std::move(h)};
}

const char* direction_name(Direction d) { return d == Direction::horizontal ? "horizontal" : "vertical"; }

const char* normalization_name(HeightNormalization n) {
  return n == HeightNormalization::first_entry_one ? "first-entry-one" : "lowest-horizontal-mu";
}

std::string SurfaceFamily::tag() const {
  switch (kind) {
    case SurfaceKind::polygon: return "polygon-" + std::to_string(n);
    case SurfaceKind::E7: return "E7";
    case SurfaceKind::E8: return "E8";
    case SurfaceKind::custom: return "custom";
  }
  return "custom";
}

SurfaceFamily SurfaceFamily::parse(const std::string& s) {
  if (s == "E7") return {SurfaceKind::E7, 0};
  if (s == "E8") return {SurfaceKind::E8, 0};
  const std::string pre = "polygon-";
  if (s.rfind(pre, 0) == 0) {
    try {
      return {SurfaceKind::polygon, std::stoi(s.substr(pre.size()))};
    } catch (const std::exception&) {
    }
  }
  fail(ErrorKind::invalid_argument, "unknown surface family '" + s + "' (expected polygon-<n>, E7 or E8)");
}

bool is_supported_polygon(int n) {
  if (n < 5) return false;
  if (n % 2 == 1) return is_prime(n);
  if ((n & (n - 1)) == 0) return n >= 8;
  return n % 4 == 2 && is_prime(n / 2) && n / 2 > 3;
}

namespace {

int vertex_degree(const BipartiteIntersectionGraph& g, int v) {
  int d = 0;
  if (v < g.black_count) {
    for (long x : g.intersections[v]) d += static_cast<int>(x);
  } else {
    for (int i = 0; i < g.black_count; ++i) d += static_cast<int>(g.intersections[i][v - g.black_count]);
  }
  return d;
}

std::vector<int> neighbours(const BipartiteIntersectionGraph& g, int v) {
  std::vector<int> out;
  if (v < g.black_count) {
    for (int j = 0; j < g.white_count; ++j)
      if (g.intersections[v][j]) out.push_back(g.black_count + j);
  } else {
    for (int i = 0; i < g.black_count; ++i)
      if (g.intersections[i][v - g.black_count]) out.push_back(i);
  }
  return out;
}

bool is_path(const BipartiteIntersectionGraph& g) {
  int leaves = 0, edges = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = vertex_degree(g, v);
    if (d > 2) return false;
    if (static_cast<int>(neighbours(g, v).size()) != d) return false;  // multi-edges
    leaves += d == 1;
    edges += d;
  }
  return edges / 2 == g.vertex_count() - 1 && (g.vertex_count() == 1 || leaves == 2);
}

// Graph vertex used for the base case: the horizontal neighbour of a vertical
// leaf if there is one (that vertical then has height 1), otherwise a horizontal leaf.
std::pair<int, int> choose_anchor(const BipartiteIntersectionGraph& g) {
  for (int v = g.black_count; v < g.vertex_count(); ++v)
    if (vertex_degree(g, v) == 1) return {neighbours(g, v).front(), v};
  for (int v = 0; v < g.black_count; ++v)
    if (vertex_degree(g, v) == 1) return {v, v};
  return {0, 0};
}

void fill_cylinders(SurfaceModel& m, const std::vector<std::vector<int>>& hclasses,
                    const std::vector<std::vector<int>>& vclasses) {
  m.horizontal.clear();
  m.vertical.clear();
  auto make = [&](Direction d, const std::vector<int>& cls, int idx) {
    CylinderDatum c;
    c.direction = d;
    c.height = m.heights[cls.front()];
    c.circumference = m.mu * c.height;
    c.twist_count = 1;
    c.core_curve = std::string(d == Direction::horizontal ? "H" : "V") + std::to_string(idx + 1);
    c.vertices = cls;
    return c;
  };
  for (std::size_t k = 0; k < hclasses.size(); ++k) m.horizontal.push_back(make(Direction::horizontal, hclasses[k], k));
  for (std::size_t k = 0; k < vclasses.size(); ++k) m.vertical.push_back(make(Direction::vertical, vclasses[k], k));
  // core-curve intersections; an involution acting freely on crossing points halves the count
  int div = m.quotient_applied ? 2 : 1;
  m.cylinder_intersection.assign(hclasses.size(), std::vector<long>(vclasses.size(), 0));
  for (std::size_t a = 0; a < hclasses.size(); ++a)
    for (std::size_t b = 0; b < vclasses.size(); ++b) {
      long s = 0;
      for (int u : hclasses[a])
        for (int w : vclasses[b]) s += m.graph.intersections[u][w - m.graph.black_count];
      if (s % div) fail(ErrorKind::inconsistency, "involution quotient produced a fractional intersection count");
      m.cylinder_intersection[a][b] = s / div;
    }
  // the bottom step of a staircase is its shortest horizontal cylinder
  m.lowest_horizontal = 0;
  for (std::size_t k = 1; k < m.horizontal.size(); ++k)
    if (sign_at_root(m.horizontal[k].height - m.horizontal[m.lowest_horizontal].height, m.mu_root) < 0)
      m.lowest_horizontal = static_cast<int>(k);
}

void cross_check_genus(const SurfaceModel& m) {
  int r = rank(m.cylinder_intersection);
  if (r != m.genus)
    fail(ErrorKind::inconsistency, m.family_tag + ": genus " + std::to_string(m.genus) +
                                       " disagrees with rank(Q) = " + std::to_string(r));
  int sum = 0;
  for (int z : m.zero_partition) {
    if (z < 1) fail(ErrorKind::invalid_argument, "zero orders must be positive");
    sum += z;
  }
  if (sum != 2 * m.genus - 2) fail(ErrorKind::inconsistency, m.family_tag + ": zero partition does not sum to 2g-2");
}

}  // namespace

SurfaceModel model_from_graph(const BipartiteIntersectionGraph& g, int genus, std::vector<int> partition,
                              std::string tag) {
  SurfaceModel m;
  m.graph = g;
  auto pf = perron_frobenius(g);
  m.mu = pf.mu;
  m.mu_root = pf.mu_root;
  m.heights = pf.heights;
  m.genus = genus;
  m.zero_partition = std::move(partition);
  m.family_tag = std::move(tag);
  m.staircase = is_path(g);
  m.anchor_vertex = choose_anchor(g).second;
  std::vector<std::vector<int>> hc, vc;
  for (int v = 0; v < g.black_count; ++v) hc.push_back({v});
  for (int v = g.black_count; v < g.vertex_count(); ++v) vc.push_back({v});
  fill_cylinders(m, hc, vc);
  cross_check_genus(m);
  return m;
}

SurfaceModel build_surface(const SurfaceFamily& family) {
  SurfaceModel m;
  m.family_tag = family.tag();
  m.pi1_flag = true;
  m.staircase = true;
  BipartiteIntersectionGraph g;
  if (family.kind == SurfaceKind::E7 || family.kind == SurfaceKind::E8) {
    g = coxeter_graph(family.kind == SurfaceKind::E7 ? CoxeterKind::E7 : CoxeterKind::E8);
    m.genus = family.kind == SurfaceKind::E7 ? 3 : 4;
    m.zero_partition = family.kind == SurfaceKind::E7 ? std::vector<int>{1, 3} : std::vector<int>{6};
  } else if (family.kind == SurfaceKind::polygon) {
    int n = family.n;
    if (!is_supported_polygon(n))
      fail(ErrorKind::unsupported_family, "polygon-" + std::to_string(n) +
                                              " is not supported: n must be q, 2q (q > 3 prime) or 2^k (k > 2)");
    g = coxeter_graph(CoxeterKind::A, n - 1);
    if (n % 2 == 0) {
      // horizontal = the part not containing the middle vertex n/2
      bool middle_black = (n / 2) % 2 == 1;
      if (middle_black) g = g.transposed();
    }
    if (n % 2 == 1) {
      m.genus = (n - 1) / 2;
      m.zero_partition = {2 * m.genus - 2};
    } else if ((n & (n - 1)) == 0) {
      m.genus = n / 4;
      m.zero_partition = {2 * m.genus - 2};
    } else {
      m.genus = (n / 2 - 1) / 2;
      m.zero_partition = {m.genus - 1, m.genus - 1};
    }
  } else {
    fail(ErrorKind::unsupported_family, "build_surface takes polygon-n, E7 or E8");
  }
  m.graph = g;
  auto pf = perron_frobenius(g);
  m.mu = pf.mu;
  m.mu_root = pf.mu_root;
  m.heights = pf.heights;
  m.anchor_vertex = choose_anchor(g).second;

  std::vector<std::vector<int>> hc, vc;
  if (family.kind == SurfaceKind::polygon && family.n % 2 == 0) {
    // pair diagram vertex i with n - i; the middle vertex is fixed
    int n = family.n;
    m.quotient_applied = true;
    auto classes = [&](int first, int count, const std::vector<int>& labels) {
      std::vector<std::vector<int>> out;
      for (int k = 0; k < count; ++k) {
        int lab = labels[k];
        if (lab > n - lab) continue;
        std::vector<int> cls{first + k};
        if (lab != n - lab) {
          auto it = std::find(labels.begin(), labels.end(), n - lab);
          if (it == labels.end()) fail(ErrorKind::inconsistency, "rotation does not preserve the bipartition");
          cls.push_back(first + static_cast<int>(it - labels.begin()));
        }
        out.push_back(cls);
      }
      return out;
    };
    hc = classes(0, g.black_count, g.black_labels);
    vc = classes(g.black_count, g.white_count, g.white_labels);
    for (const auto& cls : hc)
      if (cls.size() == 2 && m.heights[cls[0]] != m.heights[cls[1]])
        fail(ErrorKind::inconsistency, "paired cylinders have different heights");
    for (const auto& cls : vc)
      if (cls.size() == 2 && m.heights[cls[0]] != m.heights[cls[1]])
        fail(ErrorKind::inconsistency, "paired cylinders have different heights");
  } else {
    for (int v = 0; v < g.black_count; ++v) hc.push_back({v});
    for (int v = g.black_count; v < g.vertex_count(); ++v) vc.push_back({v});
  }
  fill_cylinders(m, hc, vc);
  cross_check_genus(m);
  return m;
}

SurfaceModel renormalized(const SurfaceModel& m, HeightNormalization target) {
  if (m.normalization == target) return m;
  SurfaceModel out = m;
  NumberRingElement factor;
  if (target == HeightNormalization::lowest_horizontal_mu) {
    factor = m.mu * m.horizontal[m.lowest_horizontal].height.inverse();
  } else {
    factor = m.heights.front().inverse();
  }
  for (auto& h : out.heights) h = factor * h;
  for (auto* list : {&out.horizontal, &out.vertical})
    for (auto& c : *list) {
      c.height = factor * c.height;
      c.circumference = factor * c.circumference;
    }
  out.normalization = target;
  return out;
}

std::vector<IntPolynomial> inductive_height_lifts(const SurfaceModel& m) {
  const auto& g = m.graph;
  if (!is_path(g)) return {};
  // walk from the anchor leaf: h_next = t*h_cur - h_prev
  int n = g.vertex_count();
  std::vector<IntPolynomial> lift(n);
  std::vector<int> order{m.anchor_vertex};
  std::vector<bool> seen(n, false);
  seen[m.anchor_vertex] = true;
  while (static_cast<int>(order.size()) < n) {
    int next = -1;
    for (int w : neighbours(g, order.back()))
      if (!seen[w]) next = w;
    if (next < 0) return {};
    seen[next] = true;
    order.push_back(next);
  }
  IntPolynomial t = IntPolynomial::x();
  bool anchor_vertical = m.anchor_vertex >= g.black_count;
  // vertical leaf starts at 1 (its neighbour is then t); a horizontal leaf starts at t
  lift[order[0]] = anchor_vertical ? IntPolynomial{1} : t;
  if (n > 1) lift[order[1]] = t * lift[order[0]];
  for (int k = 2; k < n; ++k) lift[order[k]] = t * lift[order[k - 1]] - lift[order[k - 2]];
  return lift;
}

namespace {

bool only_parity(const IntPolynomial& p, int parity) {
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    if (p.coeffs()[k] != 0 && static_cast<int>(k % 2) != parity) return false;
  return true;
}

}  // namespace

bool staircase_parity_check(const SurfaceModel& model) {
  if (!model.staircase) fail(ErrorKind::inapplicable, model.family_tag + " is not staircase-shaped");
  SurfaceModel m = renormalized(model, HeightNormalization::lowest_horizontal_mu);
  NumberRingElement s = m.mu * m.mu;
  NumberRingElement mu_inv = m.mu.inverse();
  // odd lift: h/mu in Z[mu^2]; even lift: h in Z[mu^2]
  for (const auto& c : m.horizontal)
    if (!coordinates_in_power_order(c.height * mu_inv, s)) return false;
  for (const auto& c : m.vertical)
    if (!coordinates_in_power_order(c.height, s)) return false;
  // For path-shaped staircases the lifts from the inductive walk must have the
  // right parity and reduce to the same heights.
  auto lifts = inductive_height_lifts(m);
  if (!lifts.empty()) {
    for (int v = 0; v < m.graph.vertex_count(); ++v) {
      int parity = v < m.graph.black_count ? 1 : 0;
      if (!only_parity(lifts[v], parity)) return false;
      // the walk fixes its own scale, so compare ratios against the anchor
      if (evaluate_at(lifts[v], m.mu) * m.heights[m.anchor_vertex] !=
          m.heights[v] * evaluate_at(lifts[m.anchor_vertex], m.mu))
        return false;
    }
  }
  return true;
}

HolonomyCheck holonomy_basis_check(const SurfaceModel& model) {
  SurfaceModel m = renormalized(model, HeightNormalization::lowest_horizontal_mu);
  NumberRingElement s = m.mu * m.mu;
  HolonomyCheck out;
  auto pick = [&](const std::vector<CylinderDatum>& list, int preferred, std::string& offending) -> int {
    std::vector<int> order;
    if (preferred >= 0) order.push_back(preferred);
    for (int k = 0; k < static_cast<int>(list.size()); ++k)
      if (k != preferred) order.push_back(k);
    for (int k : order) {
      NumberRingElement inv = list[k].circumference.inverse();
      bool all = true;
      for (const auto& c : list)
        if (!coordinates_in_power_order(c.circumference * inv, s)) {
          if (offending.empty()) offending = c.core_curve;
          all = false;
          break;
        }
      if (all) return k;
    }
    return -1;
  };
  std::string bad_h, bad_v;
  int gk = pick(m.horizontal, m.lowest_horizontal, bad_h);
  int dk = pick(m.vertical, -1, bad_v);
  if (gk < 0) {
    out.failure = "horizontal core curve " + bad_h + " is outside the Z[mu^2]-span of every horizontal basis candidate";
    return out;
  }
  if (dk < 0) {
    out.failure = "vertical core curve " + bad_v + " is outside the Z[mu^2]-span of every vertical basis candidate";
    return out;
  }
  out.basis = HolonomyBasis{m.horizontal[gk].circumference, m.vertical[dk].circumference, m.horizontal[gk].core_curve,
                            m.vertical[dk].core_curve};
  return out;
}

bool cylinder_bound_check(const SurfaceModel& m, int zeros) {
  int lo = m.genus, hi = m.genus + zeros - 1;
  auto ok = [&](std::size_t k) { return static_cast<int>(k) >= lo && static_cast<int>(k) <= hi; };
  return ok(m.horizontal.size()) && ok(m.vertical.size());
}

bool core_curve_span_check(const SurfaceModel& m) {
  std::size_t h = m.horizontal.size(), v = m.vertical.size();
  IntMatrix j(h + v, std::vector<long>(h + v, 0));
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = 0; b < v; ++b) {
      j[a][h + b] = m.cylinder_intersection[a][b];
      j[h + b][a] = -m.cylinder_intersection[a][b];
    }
  return rank(j) == 2 * m.genus;
}

}  // namespace veechfib
