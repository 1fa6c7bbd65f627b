#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexgb/field.hpp"
#include "lexgb/groebner.hpp"

namespace lexgb {

/// Point of F_p^3 as canonical residues (x, y, z).
using Point = std::array<std::uint32_t, 3>;

struct PointSet {
  std::uint32_t p = PrimeField::kDefaultModulus;
  std::vector<Point> points;
  std::uint64_t seed = 0;

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// n distinct uniformly drawn points of F_p^3, deterministic in `seed`.
PointSet random_points(std::size_t n, std::uint64_t seed, const PrimeField& field);

/// Reduced monic lex Gröbner basis of the ideal of polynomials vanishing on
/// `points` (Buchberger–Möller). The result is flagged radical.
FpBasis vanishing_ideal(const PointSet& points);

enum class InstanceKind { vanishing_points, squared_vanishing, random_triangular };

std::string_view to_string(InstanceKind k);
InstanceKind instance_kind_from_string(std::string_view s);

/// Everything needed to rebuild an instance.
struct InstanceRecipe {
  InstanceKind kind = InstanceKind::vanishing_points;
  std::uint32_t p = PrimeField::kDefaultModulus;
  std::uint64_t seed = 0;
  /// Number of points for the vanishing kinds.
  std::size_t points = 1;
  /// Upper bound on each of deg_x f1, deg_y f2, deg_z f3 for random-triangular.
  std::uint32_t degree_bound = 3;

  friend bool operator==(const InstanceRecipe&, const InstanceRecipe&) = default;
};

/// Basis of <f1(x), f2(x,y), f3(x,y,z)> with f2 monic in y and f3 monic in
/// z; not flagged radical.
FpBasis triangular_instance(const FpPolynomial& f1, const FpPolynomial& f2,
                            const FpPolynomial& f3);

/// The square of the vanishing ideal of `points`; not flagged radical.
FpBasis squared_vanishing_instance(const PointSet& points);

/// Builds a non-radical recipe (squared-vanishing or random-triangular).
/// Degenerate draws are retried with an incremented seed, at most
/// kMaxRetries times.
FpBasis nonradical_instance(const InstanceRecipe& recipe);

inline constexpr int kMaxRetries = 10;

struct Instance {
  InstanceRecipe recipe;
  std::optional<PointSet> points;
  FpBasis basis;
};

/// Rebuilds an instance of any kind from its recipe.
Instance make_instance(const InstanceRecipe& recipe);

}  // namespace lexgb
