#include "veechfib/congruence.hpp"

#include <unordered_set>

#include "veechfib/error.hpp"

namespace veechfib {

Rational OrbifoldSignature::euler_characteristic() const {
  Rational chi = 2 - 2 * base_genus - cusp_count;
  for (long n : orbifold_orders) chi -= 1 - make_rational(1, n);
  return chi;
}

OrbifoldSignature make_signature(int base_genus, std::vector<long> orbifold_orders, long cusp_count) {
  if (base_genus < 0 || cusp_count < 0) fail(ErrorKind::invalid_argument, "negative genus or cusp count");
  for (long n : orbifold_orders)
    if (n < 2) fail(ErrorKind::invalid_argument, "orbifold orders must be at least 2");
  OrbifoldSignature s{base_genus, std::move(orbifold_orders), cusp_count};
  if (s.euler_characteristic() >= 0)
    fail(ErrorKind::invalid_argument, "signature is not hyperbolic (chi_orb = " + to_string(s.euler_characteristic()) + ")");
  return s;
}

DegreeResult congruence_degree(const IntPolynomial& alpha_minpoly, std::uint64_t p, int g, bool contains_minus_I) {
  if (p < 3 || !is_prime(p)) fail(ErrorKind::invalid_argument, "level must be an odd prime, got " + std::to_string(p));
  if (alpha_minpoly.degree() != g)
    fail(ErrorKind::invalid_argument, "minimal polynomial " + to_string(alpha_minpoly) + " does not have degree g = " +
                                          std::to_string(g));
  if (mod_reduce(alpha_minpoly.leading(), p) == 0 || !is_irreducible_mod_p(alpha_minpoly, p))
    fail(ErrorKind::inadmissible_prime, to_string(alpha_minpoly) + " is reducible mod " + std::to_string(p));
  DegreeResult r;
  if (p == 3 && g == 2) {
    // Dickson: the two unipotents over F_9 generate a copy of SL(2,5) only
    r.exceptional = true;
    r.group_order = 120;
    r.degree = contains_minus_I ? 60 : 120;
    r.group_label = contains_minus_I ? "PSL(2,5)" : "SL(2,5)";
    return r;
  }
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(g));
  r.group_order = q * (q * q - 1);
  r.degree = contains_minus_I ? Integer(r.group_order / 2) : r.group_order;
  r.group_label = std::string(contains_minus_I ? "PSL" : "SL") + "(2," + q.get_str() + ")";
  return r;
}

MatrixGroupSpec make_matrix_group(std::shared_ptr<const FiniteFieldSpec> field, std::vector<Matrix2> generators) {
  if (generators.empty()) fail(ErrorKind::invalid_argument, "matrix group needs at least one generator");
  auto one = FFElement::one(field);
  for (const auto& m : generators) {
    for (const auto& x : m)
      if (!(x.spec() == *field)) fail(ErrorKind::invalid_argument, "generator entry lies in a different field");
    if (m[0] * m[3] - m[1] * m[2] != one) fail(ErrorKind::invalid_argument, "generator does not have determinant 1");
  }
  return {std::move(field), std::move(generators)};
}

MatrixGroupSpec unipotent_pair(std::shared_ptr<const FiniteFieldSpec> field, const FFElement& lambda) {
  auto zero = FFElement::zero(field), one = FFElement::one(field);
  return make_matrix_group(field, {Matrix2{one, lambda, zero, one}, Matrix2{one, zero, one, one}});
}

namespace {

// Field arithmetic on element indices through lookup tables.
struct IndexedField {
  std::uint64_t q;
  std::vector<std::uint32_t> add, mul;
  explicit IndexedField(const std::shared_ptr<const FiniteFieldSpec>& f) : q(f->order()) {
    std::vector<FFElement> el;
    el.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) el.push_back(FFElement::from_index(f, i));
    add.resize(q * q);
    mul.resize(q * q);
    for (std::uint64_t i = 0; i < q; ++i)
      for (std::uint64_t j = 0; j < q; ++j) {
        add[i * q + j] = static_cast<std::uint32_t>((el[i] + el[j]).index());
        mul[i * q + j] = static_cast<std::uint32_t>((el[i] * el[j]).index());
      }
  }
  std::uint32_t a(std::uint32_t x, std::uint32_t y) const { return add[x * q + y]; }
  std::uint32_t m(std::uint32_t x, std::uint32_t y) const { return mul[x * q + y]; }
};

using IMat = std::array<std::uint32_t, 4>;

}  // namespace

std::uint64_t group_closure_order(const MatrixGroupSpec& spec, std::uint64_t cap) {
  const std::uint64_t q = spec.field->order();
  if (q > 4096) fail(ErrorKind::cap_exceeded, "field of order " + std::to_string(q) + " is beyond brute-force scale");
  IndexedField F(spec.field);
  std::vector<IMat> gens;
  for (const auto& g : spec.generators)
    gens.push_back({static_cast<std::uint32_t>(g[0].index()), static_cast<std::uint32_t>(g[1].index()),
                    static_cast<std::uint32_t>(g[2].index()), static_cast<std::uint32_t>(g[3].index())});
  auto mult = [&](const IMat& x, const IMat& y) {
    return IMat{F.a(F.m(x[0], y[0]), F.m(x[1], y[2])), F.a(F.m(x[0], y[1]), F.m(x[1], y[3])),
                F.a(F.m(x[2], y[0]), F.m(x[3], y[2])), F.a(F.m(x[2], y[1]), F.m(x[3], y[3]))};
  };
  // With det = 1 a matrix is fixed by (a, b, c) when a != 0 and by (d, c) when a = 0.
  auto key = [&](const IMat& x) -> std::uint64_t {
    return x[0] != 0 ? (x[0] * q + x[1]) * q + x[2] : x[3] * q + x[2];
  };
  const bool use_bitmap = q * q * q <= (1ull << 28);
  std::vector<bool> bitmap(use_bitmap ? q * q * q : 0, false);
  std::unordered_set<std::uint64_t> hashed;
  auto insert = [&](const IMat& x) {
    std::uint64_t k = key(x);
    if (use_bitmap) {
      if (bitmap[k]) return false;
      bitmap[k] = true;
      return true;
    }
    return hashed.insert(k).second;
  };
  IMat id{1, 0, 0, 1};
  std::vector<IMat> frontier{id};
  insert(id);
  std::uint64_t count = 1;
  while (!frontier.empty()) {
    std::vector<IMat> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        IMat y = mult(x, g);
        if (insert(y)) {
          if (++count > cap) fail(ErrorKind::cap_exceeded, "group closure exceeded " + std::to_string(cap) + " elements");
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return count;
}

DegreeResult closure_congruence_degree(const IntPolynomial& alpha_minpoly, std::uint64_t p, bool contains_minus_I,
                                       std::uint64_t cap) {
  if (mod_reduce(alpha_minpoly.leading(), p) == 0 || !is_irreducible_mod_p(alpha_minpoly, p))
    fail(ErrorKind::inadmissible_prime, to_string(alpha_minpoly) + " is reducible mod " + std::to_string(p));
  auto field = std::make_shared<const FiniteFieldSpec>(p, alpha_minpoly);
  std::uint64_t order = group_closure_order(unipotent_pair(field, FFElement::generator(field)), cap);
  Integer q(static_cast<unsigned long>(field->order()));
  DegreeResult r;
  r.group_order = Integer(static_cast<unsigned long>(order));
  // every group met here (SL(2,q), SL(2,5), SL(2,3)) contains -I
  r.degree = contains_minus_I ? Integer(r.group_order / 2) : r.group_order;
  std::string prefix = contains_minus_I ? "PSL" : "SL";
  if (r.group_order == q * (q * q - 1)) {
    r.group_label = prefix + "(2," + q.get_str() + ")";
  } else if (order == 120) {
    r.group_label = prefix + "(2,5)";
    r.exceptional = true;
  } else {
    r.group_label = "subgroup of order " + r.group_order.get_str();
    r.exceptional = true;
  }
  return r;
}

long cusp_image_order(std::uint64_t p, std::optional<long> override_order) {
  if (override_order) {
    if (*override_order < 1) fail(ErrorKind::invalid_argument, "cusp image order must be positive");
    return *override_order;
  }
  if (p < 3 || !is_prime(p)) fail(ErrorKind::invalid_argument, "level must be an odd prime");
  return static_cast<long>(p);
}

CoverData cover_from_euler_characteristic(const Rational& chi_orb, const Integer& d,
                                          const std::vector<long>& cusp_image_orders) {
  if (d <= 0) fail(ErrorKind::invalid_argument, "cover degree must be positive");
  CoverData c;
  c.degree = d;
  c.base_euler_characteristic = chi_orb;
  c.cusp_count = 0;
  for (long ord : cusp_image_orders) {
    if (ord < 1) fail(ErrorKind::invalid_argument, "cusp image order must be positive");
    if (d % ord != 0)
      fail(ErrorKind::inconsistent_cover_data,
           "degree " + d.get_str() + " is not divisible by cusp image order " + std::to_string(ord));
    c.cusps_per_orbit.push_back(d / ord);
    c.cusp_count += d / ord;
  }
  Rational chi = Rational(d) * chi_orb;
  Rational b = (Rational(2) - Rational(c.cusp_count) - chi) / 2;
  b.canonicalize();
  if (!is_integral(b) || b < 0)
    fail(ErrorKind::inconsistent_cover_data,
         "Riemann-Hurwitz gives base genus " + to_string(b) + " (chi = " + to_string(chi) + ", cusps = " +
             c.cusp_count.get_str() + ")");
  c.base_genus = b.get_num();
  return c;
}

CoverData riemann_hurwitz_cover(const OrbifoldSignature& sig, const Integer& d,
                                const std::vector<long>& orbifold_image_orders,
                                const std::vector<long>& cusp_image_orders) {
  if (orbifold_image_orders.size() != sig.orbifold_orders.size())
    fail(ErrorKind::invalid_argument, "one image order per orbifold point is required");
  if (static_cast<long>(cusp_image_orders.size()) != sig.cusp_count)
    fail(ErrorKind::invalid_argument, "one image order per cusp is required");
  for (std::size_t i = 0; i < orbifold_image_orders.size(); ++i) {
    long ord = orbifold_image_orders[i];
    if (ord != sig.orbifold_orders[i])
      fail(ErrorKind::inconsistent_cover_data, "orbifold point of order " + std::to_string(sig.orbifold_orders[i]) +
                                                   " maps to order " + std::to_string(ord) +
                                                   "; the cover would not be a surface");
    if (d % ord != 0)
      fail(ErrorKind::inconsistent_cover_data, "degree not divisible by orbifold order " + std::to_string(ord));
  }
  return cover_from_euler_characteristic(sig.euler_characteristic(), d, cusp_image_orders);
}

void apply_cover_twisting(CoverData& cover, const std::vector<long>& cusp_image_orders,
                          const std::vector<Integer>& base_twists, const std::vector<long>& roots) {
  if (cusp_image_orders.size() != cover.cusps_per_orbit.size() || base_twists.size() != roots.size() ||
      roots.size() != cusp_image_orders.size())
    fail(ErrorKind::invalid_argument, "twisting data must have one entry per base cusp");
  cover.per_cusp_twists.clear();
  cover.total_twisting = 0;
  for (std::size_t c = 0; c < roots.size(); ++c) {
    if (roots[c] < 1 || base_twists[c] < 1) fail(ErrorKind::invalid_argument, "twists and roots must be positive");
    Integer num = Integer(cusp_image_orders[c]) * base_twists[c];
    if (num % roots[c] != 0)
      fail(ErrorKind::invalid_root_data, "cusp " + std::to_string(c + 1) + ": " + num.get_str() +
                                             " twists are not divisible by the root order " + std::to_string(roots[c]));
    Integer tw = num / roots[c];
    cover.per_cusp_twists.push_back(tw);
    cover.total_twisting += cover.cusps_per_orbit[c] * tw;
  }
}

Integer cover_twisting(const std::vector<Integer>& cusp_count_per_orbit, const std::vector<long>& image_orders,
                       const std::vector<Integer>& base_twists, const std::vector<long>& roots) {
  CoverData c;
  c.cusps_per_orbit = cusp_count_per_orbit;
  apply_cover_twisting(c, image_orders, base_twists, roots);
  return c.total_twisting;
}

}  // namespace veechfib
