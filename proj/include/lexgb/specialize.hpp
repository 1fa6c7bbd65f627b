#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lexgb/groebner.hpp"
#include "lexgb/instances.hpp"
#include "lexgb/report.hpp"

namespace lexgb {

/// A univariate polynomial over F_p had fewer roots in F_p (with
/// multiplicity) than its degree.
class NonSplitError : public Error {
 public:
  NonSplitError(char variable, std::size_t factor_degree, std::string partial)
      : Error("polynomial in " + std::string(1, variable) +
              " does not split over F_p: root-free factor of degree " +
              std::to_string(factor_degree) + (partial.empty() ? "" : " (" + partial + ")")),
        variable_(variable),
        factor_degree_(factor_degree) {}

  char variable() const { return variable_; }
  std::size_t factor_degree() const { return factor_degree_; }

 private:
  char variable_;
  std::size_t factor_degree_;
};

/// Substitutes x = alpha; the result lies in k[y,z].
inline FpPolynomial specialize_x(const FpPolynomial& p, const Fp& alpha) {
  return p.specialize_x(alpha);
}

/// All roots in F_p, ascending, by a full scan of the residues. `f` must be
/// nonzero and involve at most one variable.
std::vector<Fp> roots_univariate(const FpPolynomial& f);

/// Degree of the factor of `f` left after removing every F_p-rational
/// linear factor with its multiplicity; 0 when `f` splits.
std::size_t non_split_degree(const FpPolynomial& f);

/// Common zeros (alpha, beta) in F_p^2 of g_1..g_ell2, ascending.
std::vector<std::pair<Fp, Fp>> elimination_solutions(const FpBasis& g);

/// For every root alpha of g_1 and g != g_1 in the basis: g(alpha,y,z) = 0 or
/// lc1(g)(alpha) != 0; when nonzero, lt(g(alpha,y,z)) = lc1(g)(alpha)*lm1(g);
/// and the nonzero images form a Gröbner basis. Asserted for radical bases.
CheckReport check_specialization_stability(const FpBasis& g);

/// For every common zero (alpha, beta) of the elimination ideal and every
/// z-involving g: g(alpha,beta,z) = 0 or its z-degree equals alpha_z(g).
/// Asserted for radical bases.
CheckReport check_gianni_kalkbrener(const FpBasis& g);

/// For consecutive g_i, g_{i+1} with lc1(g_i) != 1 and a root alpha of
/// lc1(g_i) that is not a root of lc1(g_{i+1}): g_i(alpha,y,z) = 0 and
/// g_{i+1} lies in <x - alpha, lc2(g_{i+1})(alpha,y)>. Skipped when no such
/// pair exists; asserted for radical bases.
CheckReport check_root_separation(const FpBasis& g);

/// All F_p-rational zeros of a zero-dimensional basis by back substitution
/// x -> y -> z, sorted ascending. Throws NonSplitError if an eliminant met
/// along the way does not split over F_p.
PointSet solve_system(const FpBasis& g);

}  // namespace lexgb
