#include <gtest/gtest.h>

#include "lexgb/specialize.hpp"
#include "lexgb/structure.hpp"
#include "oracle.hpp"
#include "util.hpp"

using lexgb::Fp;
using lexgb::PrimeField;
using lexgb::Verdict;
using testutil::basis;
using testutil::P;

namespace {

const lexgb::FpBasis& worked() {
  static const lexgb::FpBasis g = lexgb::vanishing_ideal(testutil::worked_points());
  return g;
}

std::vector<std::uint32_t> values(const std::vector<Fp>& v) {
  std::vector<std::uint32_t> out;
  for (const auto& a : v) out.push_back(a.value());
  return out;
}

std::vector<std::string> image_texts(const lexgb::FpBasis& g, const Fp& alpha) {
  std::vector<std::string> out;
  for (const auto& e : g.elements()) {
    auto img = lexgb::specialize_x(e, alpha);
    if (!img.is_zero()) out.push_back(to_string(img));
  }
  return out;
}

}  // namespace

TEST(Roots, OverF7) {
  PrimeField f7(7);
  EXPECT_EQ(values(lexgb::roots_univariate(P("x^2 - x", f7))), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_TRUE(lexgb::roots_univariate(P("x^2 + 1", f7)).empty());
  EXPECT_EQ(values(lexgb::roots_univariate(P("x", f7))), (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(values(lexgb::roots_univariate(P("z^3 - z", f7))), (std::vector<std::uint32_t>{0, 1, 6}));
  EXPECT_THROW(lexgb::roots_univariate(lexgb::FpPolynomial()), lexgb::ZeroPolynomial);
  EXPECT_THROW(lexgb::roots_univariate(P("x*y + 1", f7)), lexgb::InvalidArgument);
}

TEST(Roots, AgreeWithRawScan) {
  testutil::Rng rng(99);
  PrimeField f(101);
  for (int k = 0; k < 200; ++k) {
    std::vector<lexgb::Term<Fp>> t;
    std::uint32_t deg = 1 + rng.below(5);
    for (std::uint32_t e = 0; e <= deg; ++e) t.push_back({{e, 0, 0}, f.make(rng.below(101))});
    t.push_back({{deg, 0, 0}, f.one()});
    auto poly = lexgb::FpPolynomial::from_terms(t);
    if (poly.is_zero()) continue;
    std::vector<std::int64_t> expected = oracle::roots_by_scan(poly, 101);
    std::vector<std::int64_t> got;
    for (const auto& r : lexgb::roots_univariate(poly)) got.push_back(r.value());
    EXPECT_EQ(got, expected);
  }
}

TEST(NonSplitDegree, Examples) {
  PrimeField f7(7);
  EXPECT_EQ(lexgb::non_split_degree(P("x^2 - x", f7)), 0u);
  EXPECT_EQ(lexgb::non_split_degree(P("x^2 + 1", f7)), 2u);
  EXPECT_EQ(lexgb::non_split_degree(P("(x^2 + 1)*(x - 3)^2", f7)), 2u);
  EXPECT_EQ(lexgb::non_split_degree(P("(x - 2)^3", f7)), 0u);
  EXPECT_EQ(lexgb::non_split_degree(P("y^3 - 2", f7)), 3u);
}

TEST(Specialize, Examples) {
  const auto& f = testutil::f101();
  EXPECT_TRUE(lexgb::specialize_x(P("x*y - y"), f.one()).is_zero());
  EXPECT_EQ(lexgb::specialize_x(P("x*z - z"), f.zero()), P("-z"));
  for (const auto& a : lexgb::roots_univariate(P("x^2 - x")))
    EXPECT_TRUE(lexgb::specialize_x(P("x^2 - x"), a).is_zero());
}

TEST(Specialize, WorkedInstanceImages) {
  const auto& f = testutil::f101();
  EXPECT_EQ(image_texts(worked(), f.one()), (std::vector<std::string>{"y", "z^2 - z"}));
  EXPECT_EQ(image_texts(worked(), f.zero()), (std::vector<std::string>{"y", "-z", "z^2 - z"}));
}

TEST(EliminationSolutions, WorkedInstance) {
  auto sols = lexgb::elimination_solutions(worked());
  ASSERT_EQ(sols.size(), 2u);
  EXPECT_EQ(sols[0].first.value(), 0u);
  EXPECT_EQ(sols[0].second.value(), 0u);
  EXPECT_EQ(sols[1].first.value(), 1u);
  EXPECT_EQ(sols[1].second.value(), 0u);
}

TEST(SpecializationStability, WorkedInstancePasses) {
  auto r = lexgb::check_specialization_stability(worked());
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_TRUE(r.witnesses.empty());
}

TEST(SpecializationStability, UnitLeadingCoefficientsAlwaysTakeTheNonvanishingBranch) {
  auto g = basis({"x^2 - x", "y - x", "z - x"}, true);
  EXPECT_EQ(lexgb::check_specialization_stability(g).verdict, Verdict::pass);
}

TEST(SpecializationStability, FlagsNonzeroImageWithVanishingLc1) {
  // lc1(x*z + y) = x vanishes at the root 0 of x^2 - x but the image is y.
  auto g = basis({"x^2 - x", "y^2", "x*z + y", "z^2"}, true);
  auto r = lexgb::check_specialization_stability(g);
  EXPECT_EQ(r.verdict, Verdict::fail);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses.front().indices, (std::vector<std::size_t>{3}));
  auto obs = lexgb::check_specialization_stability(basis({"x^2 - x", "y^2", "x*z + y", "z^2"}));
  EXPECT_EQ(obs.verdict, Verdict::observed);
  EXPECT_FALSE(*obs.observed_holds);
}

TEST(GianniKalkbrener, WorkedInstance) {
  auto r = lexgb::check_gianni_kalkbrener(worked());
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.note, "2 elimination solutions");
  EXPECT_EQ(lexgb::check_gianni_kalkbrener(basis({"x", "y", "z"}, true)).verdict, Verdict::pass);
}

TEST(GianniKalkbrener, FlagsDegreeDrop) {
  // At (0,0) the image of x*z^2 + z is z, of z-degree 1 rather than 2.
  auto g = basis({"x^2 - x", "y", "x*z^2 + z", "z^3"}, true);
  auto r = lexgb::check_gianni_kalkbrener(g);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(r.witnesses.front().indices, (std::vector<std::size_t>{3}));
}

TEST(RootSeparation, WorkedInstance) {
  auto r = lexgb::check_root_separation(worked());
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.note, "3 cases");
}

TEST(RootSeparation, FirstElementCountsWithItsOwnLc1) {
  // lc1(x) = x has the root 0, which is not a root of lc1(y) = 1.
  auto r = lexgb::check_root_separation(basis({"x", "y", "z"}, true));
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.note, "1 cases");
}

TEST(RootSeparation, SkippedWithoutQualifyingRoots) {
  PrimeField f7(7);
  auto g = lexgb::FpBasis::adopt(testutil::polys({"x^2 + 1", "y", "z"}, f7), true);
  auto r = lexgb::check_root_separation(g);
  EXPECT_EQ(r.verdict, Verdict::skipped);
  EXPECT_FALSE(r.note.empty());
  EXPECT_EQ(r, lexgb::check_root_separation(g));
}

TEST(RootSeparation, FlagsNonvanishingSpecialization) {
  // lc1(x*y + y) = x + 1 has the root 100 but x*y + y + 1 does not vanish there.
  auto g = basis({"x^2 - 1", "x*y + y + 1", "y^2", "z"}, true);
  auto r = lexgb::check_root_separation(g);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(r.witnesses.front().indices, (std::vector<std::size_t>{2}));
}

TEST(Solve, Examples) {
  EXPECT_EQ(lexgb::solve_system(worked()).points, testutil::worked_points().points);
  EXPECT_EQ(lexgb::solve_system(basis({"x", "y", "z"})).points,
            (std::vector<lexgb::Point>{{0, 0, 0}}));
  EXPECT_EQ(lexgb::solve_system(basis({"x^2 - x", "y - x", "z - x"})).points,
            (std::vector<lexgb::Point>{{0, 0, 0}, {1, 1, 1}}));
}

TEST(Solve, NonSplitDiagnostic) {
  PrimeField f7(7);
  auto g = lexgb::buchberger(testutil::polys({"x^2 + 1", "y", "z"}, f7));
  try {
    lexgb::solve_system(g);
    FAIL() << "expected a non-split error";
  } catch (const lexgb::NonSplitError& e) {
    EXPECT_EQ(e.variable(), 'x');
    EXPECT_EQ(e.factor_degree(), 2u);
  }
}

TEST(Solve, NotZeroDimensional) {
  EXPECT_THROW(lexgb::solve_system(basis({"x^2 - 1", "z - x"})), lexgb::NotZeroDimensional);
}

TEST(Solve, RoundTripOnRandomPointSets) {
  PrimeField f(101);
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    auto ps = lexgb::random_points(1 + seed % 8, seed, f);
    auto sorted = ps.points;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(lexgb::solve_system(lexgb::vanishing_ideal(ps)).points, sorted) << "seed " << seed;
  }
}

TEST(Solve, SquaredInstanceHasTheSameZeros) {
  PrimeField f(101);
  auto ps = lexgb::random_points(4, 3, f);
  auto sorted = ps.points;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(lexgb::solve_system(lexgb::squared_vanishing_instance(ps)).points, sorted);
}
