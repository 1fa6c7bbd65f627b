#include "lexgb/instances.hpp"

#include <limits>
#include <random>
#include <set>

namespace lexgb {

namespace {

// Uniform integer in [0, bound) from a 64-bit engine by rejection, so the
// stream is identical on every standard library.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

Fp power(const Fp& base, std::uint32_t e) { return base.pow(e); }

Fp evaluate_monomial(const Monomial& m, const Point& pt, const PrimeField& field) {
  return power(field.make(pt[0]), m.x) * power(field.make(pt[1]), m.y) *
         power(field.make(pt[2]), m.z);
}

}  // namespace

PointSet random_points(std::size_t n, std::uint64_t seed, const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  const std::uint64_t cube = p * p * p;
  if (n < 1 || n > cube) {
    throw InvalidArgument("random_points: n=" + std::to_string(n) + " outside [1, " +
                          std::to_string(cube) + "]");
  }
  std::mt19937_64 rng(seed);
  PointSet out{field.modulus(), {}, seed};
  std::set<Point> seen;
  while (out.points.size() < n) {
    Point pt{static_cast<std::uint32_t>(draw(rng, p)), static_cast<std::uint32_t>(draw(rng, p)),
             static_cast<std::uint32_t>(draw(rng, p))};
    if (seen.insert(pt).second) out.points.push_back(pt);
  }
  return out;
}

FpBasis vanishing_ideal(const PointSet& ps) {
  const PrimeField field(ps.p);
  const std::size_t n = ps.points.size();
  if (n == 0) throw InvalidArgument("vanishing_ideal: empty point set");
  {
    std::set<Point> distinct;
    for (const auto& pt : ps.points) {
      if (pt[0] >= ps.p || pt[1] >= ps.p || pt[2] >= ps.p) {
        throw InvalidArgument("vanishing_ideal: coordinate not reduced modulo p");
      }
      if (!distinct.insert(pt).second) throw InvalidArgument("vanishing_ideal: repeated point");
    }
  }

  // Echelon rows over the evaluation space. Row k holds the evaluation of a
  // combination of standard monomials, normalized to 1 at `pivot`, and has
  // zeros at the pivots of all earlier rows.
  struct Row {
    std::vector<Fp> eval;
    std::size_t pivot;
    std::vector<Fp> combo;  // coefficients on standard[0..]
  };
  std::vector<Monomial> standard;
  std::vector<Row> rows;
  std::vector<FpPolynomial> basis;
  std::vector<Monomial> leads;

  // Candidates are processed in ascending lex order; every new candidate is
  // a multiple of the current one, so the sequence is strictly increasing.
  std::set<Monomial> candidates{Monomial::one()};
  while (!candidates.empty()) {
    const Monomial m = *candidates.begin();
    candidates.erase(candidates.begin());
    bool covered = false;
    for (const auto& l : leads) covered = covered || l.divides(m);
    if (covered) continue;

    std::vector<Fp> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = evaluate_monomial(m, ps.points[k], field);
    std::vector<Fp> combo(standard.size(), field.zero());
    for (const auto& row : rows) {
      const Fp c = v[row.pivot];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] -= c * row.eval[k];
      for (std::size_t k = 0; k < row.combo.size(); ++k) combo[k] -= c * row.combo[k];
    }

    std::size_t pivot = 0;
    while (pivot < n && v[pivot].is_zero()) ++pivot;
    if (pivot == n) {
      // m + sum combo_k * standard_k vanishes on every point.
      std::vector<FpPolynomial::TermType> terms{{m, field.one()}};
      for (std::size_t k = 0; k < combo.size(); ++k) terms.push_back({standard[k], combo[k]});
      basis.push_back(FpPolynomial::from_terms(std::move(terms)));
      leads.push_back(m);
      continue;
    }
    const Fp inv = v[pivot].inverse();
    for (auto& e : v) e *= inv;
    combo.push_back(field.one());
    for (auto& e : combo) e *= inv;
    standard.push_back(m);
    rows.push_back({std::move(v), pivot, std::move(combo)});
    candidates.insert(Monomial{m.x + 1, m.y, m.z});
    candidates.insert(Monomial{m.x, m.y + 1, m.z});
    candidates.insert(Monomial{m.x, m.y, m.z + 1});
  }
  return FpBasis::adopt(std::move(basis), true);
}

std::string_view to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::vanishing_points:
      return "vanishing-points";
    case InstanceKind::squared_vanishing:
      return "squared-vanishing";
    case InstanceKind::random_triangular:
      return "random-triangular";
  }
  return "unknown";
}

InstanceKind instance_kind_from_string(std::string_view s) {
  if (s == "vanishing-points") return InstanceKind::vanishing_points;
  if (s == "squared-vanishing") return InstanceKind::squared_vanishing;
  if (s == "random-triangular") return InstanceKind::random_triangular;
  throw ParseError("unknown instance kind '" + std::string(s) + "'");
}

FpBasis triangular_instance(const FpPolynomial& f1, const FpPolynomial& f2,
                            const FpPolynomial& f3) {
  if (f1.is_zero() || !f1.in_x() || f1.is_constant()) {
    throw InvalidArgument("triangular_instance: f1 must be a nonconstant polynomial in x");
  }
  if (f2.is_zero() || !f2.in_xy() || !f2.lm().in_xy() || f2.lm().x != 0 || f2.lm().y == 0) {
    throw InvalidArgument("triangular_instance: f2 must have a pure power of y as head");
  }
  if (f3.is_zero() || f3.lm().x != 0 || f3.lm().y != 0 || f3.lm().z == 0) {
    throw InvalidArgument("triangular_instance: f3 must have a pure power of z as head");
  }
  FpBasis g = buchberger(std::vector<FpPolynomial>{f1, f2, f3});
  g.set_radical_by_construction(false);
  return g;
}

FpBasis squared_vanishing_instance(const PointSet& points) {
  FpBasis v = vanishing_ideal(points);
  std::vector<FpPolynomial> products;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i; j < v.size(); ++j) products.push_back(v[i] * v[j]);
  }
  FpBasis g = buchberger(products);
  g.set_radical_by_construction(false);
  return g;
}

namespace {

FpBasis random_triangular(std::uint64_t seed, std::uint32_t degree_bound,
                          const PrimeField& field) {
  std::mt19937_64 rng(seed);
  auto degree = [&] { return 1 + static_cast<std::uint32_t>(draw(rng, degree_bound)); };
  // Lower terms are present with probability 1/2 and uniform otherwise.
  auto coeff = [&] {
    if (draw(rng, 2) == 0) return field.zero();
    return field.make(static_cast<std::int64_t>(draw(rng, field.modulus())));
  };
  const std::uint32_t d1 = degree(), d2 = degree(), d3 = degree();
  std::vector<FpPolynomial::TermType> t1{{{d1, 0, 0}, field.one()}};
  for (std::uint32_t a = 0; a < d1; ++a) t1.push_back({{a, 0, 0}, coeff()});
  std::vector<FpPolynomial::TermType> t2{{{0, d2, 0}, field.one()}};
  for (std::uint32_t b = 0; b < d2; ++b) {
    for (std::uint32_t a = 0; a < d1; ++a) t2.push_back({{a, b, 0}, coeff()});
  }
  std::vector<FpPolynomial::TermType> t3{{{0, 0, d3}, field.one()}};
  for (std::uint32_t c = 0; c < d3; ++c) {
    for (std::uint32_t b = 0; b < d2; ++b) {
      for (std::uint32_t a = 0; a < d1; ++a) t3.push_back({{a, b, c}, coeff()});
    }
  }
  return triangular_instance(FpPolynomial::from_terms(std::move(t1)),
                             FpPolynomial::from_terms(std::move(t2)),
                             FpPolynomial::from_terms(std::move(t3)));
}

}  // namespace

FpBasis nonradical_instance(const InstanceRecipe& recipe) {
  const PrimeField field(recipe.p);
  if (recipe.kind == InstanceKind::vanishing_points) {
    throw InvalidArgument("nonradical_instance: vanishing-points recipes are radical");
  }
  if (recipe.kind == InstanceKind::random_triangular && recipe.degree_bound == 0) {
    throw InvalidArgument("nonradical_instance: degree bound must be positive");
  }
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    const std::uint64_t seed = recipe.seed + static_cast<std::uint64_t>(attempt);
    FpBasis g = recipe.kind == InstanceKind::squared_vanishing
                    ? squared_vanishing_instance(random_points(recipe.points, seed, field))
                    : random_triangular(seed, recipe.degree_bound, field);
    if (!g.unit_ideal()) return g;
  }
  throw Error("nonradical_instance: every draw degenerated to the unit ideal");
}

Instance make_instance(const InstanceRecipe& recipe) {
  Instance inst{recipe, std::nullopt, {}};
  if (recipe.kind == InstanceKind::vanishing_points) {
    inst.points = random_points(recipe.points, recipe.seed, PrimeField(recipe.p));
    inst.basis = vanishing_ideal(*inst.points);
  } else {
    if (recipe.kind == InstanceKind::squared_vanishing) {
      inst.points = random_points(recipe.points, recipe.seed, PrimeField(recipe.p));
    }
    inst.basis = nonradical_instance(recipe);
  }
  return inst;
}

}  // namespace lexgb
