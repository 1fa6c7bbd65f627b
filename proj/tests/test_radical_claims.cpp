#include <gtest/gtest.h>

#include <set>

#include "lexgb/parse.hpp"
#include "lexgb/specialize.hpp"
#include "lexgb/structure.hpp"
#include "util.hpp"

// Radical instances on which the content, membership and specialization
// claims do not hold. Each was found by the grid property test and checked
// independently with a computer algebra system. The checker must report
// them as failures with the right witnesses.

using lexgb::CheckReport;
using lexgb::Verdict;

namespace {

lexgb::FpBasis grid_basis(std::vector<lexgb::Point> pts) {
  return lexgb::vanishing_ideal(lexgb::PointSet{101, std::move(pts), 0});
}

std::vector<std::vector<std::size_t>> witness_indices(const CheckReport& r) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& w : r.witnesses) out.push_back(w.indices);
  return out;
}

// Vanishing ideal of a subset of {0,1,2}^3 over Q: the three cubics cut out
// the grid, and one product of linear forms removes each excluded point.
std::vector<lexgb::QPolynomial> grid_generators(const std::set<lexgb::Point>& keep) {
  lexgb::RationalField q;
  auto others = [](char v, std::uint32_t a) {
    std::string s;
    for (std::uint32_t b = 0; b < 3; ++b) {
      if (b != a) s += std::string(s.empty() ? "" : "*") + "(" + v + " - " + std::to_string(b) + ")";
    }
    return s;
  };
  std::vector<lexgb::QPolynomial> gens{lexgb::parse_polynomial("x*(x - 1)*(x - 2)", q),
                                       lexgb::parse_polynomial("y*(y - 1)*(y - 2)", q),
                                       lexgb::parse_polynomial("z*(z - 1)*(z - 2)", q)};
  for (std::uint32_t a = 0; a < 3; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) {
      for (std::uint32_t c = 0; c < 3; ++c) {
        if (keep.count({a, b, c})) continue;
        gens.push_back(lexgb::parse_polynomial(
            others('x', a) + "*" + others('y', b) + "*" + others('z', c), q));
      }
    }
  }
  return gens;
}

const std::vector<lexgb::Point> kContentCase = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}, {1, 0, 0},
                                                {1, 1, 1}, {1, 2, 1}, {2, 0, 0}, {2, 0, 2}};
const std::vector<lexgb::Point> kMembershipCase = {{0, 0, 0}, {1, 0, 0}, {1, 2, 2}, {2, 0, 2},
                                                   {2, 1, 2}, {2, 2, 0}, {2, 2, 2}};
const std::vector<lexgb::Point> kDegreeDropCase = {{0, 0, 2}, {0, 1, 2}, {0, 2, 2}, {1, 1, 0},
                                                   {1, 1, 2}, {1, 2, 0}, {1, 2, 1}, {1, 2, 2},
                                                   {2, 1, 0}, {2, 1, 1}};

}  // namespace

TEST(RadicalClaims, ContentDivisibilityFailsOnGridPoints) {
  auto g = grid_basis(kContentCase);
  ASSERT_TRUE(g.radical_by_construction());
  EXPECT_EQ(testutil::texts(g),
            (std::vector<std::string>{"x^3 - 3*x^2 + 2*x", "x^2*y - x*y", "y^3 - 3*y^2 + 2*y",
                                      "x*z - 2*z - 48*x*y^2 - 3*y^2 + 45*x*y + 7*y",
                                      "y*z - x*y^2 + y^2 + 2*x*y - 3*y",
                                      "z^2 - 2*z - x*y^2 - 50*y^2 + 2*x*y + 50*y"}));
  auto r = lexgb::check_radical_content(g);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(witness_indices(r), (std::vector<std::vector<std::size_t>>{{4}}));

  auto image = g[3].specialize_x(testutil::f101().make(2));
  EXPECT_EQ(to_string(image), "2*y^2 - 4*y");
  EXPECT_EQ(lexgb::check_specialization_stability(g).verdict, Verdict::fail);
  EXPECT_EQ(lexgb::check_root_separation(g).verdict, Verdict::fail);

  // The unconditional claims still hold.
  EXPECT_EQ(lexgb::check_componentwise_divisibility(g).verdict, Verdict::pass);
  EXPECT_EQ(lexgb::check_lc1_divides_lc2(g).verdict, Verdict::pass);
  EXPECT_EQ(lexgb::check_same_z_divisibility(g).verdict, Verdict::pass);
}

TEST(RadicalClaims, ContentCounterexampleHoldsOverRationals) {
  auto g = lexgb::buchberger(
      grid_generators({kContentCase.begin(), kContentCase.end()}));
  g.set_radical_by_construction(true);
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(to_string(g[3]), "x*z - 2*z + 5/2*x*y^2 - 3*y^2 - 11/2*x*y + 7*y");
  auto r = lexgb::check_radical_content(g);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(witness_indices(r), (std::vector<std::vector<std::size_t>>{{4}}));
  EXPECT_EQ(to_string(g[3].specialize_x(lexgb::Rational(2))), "2*y^2 - 4*y");
}

TEST(RadicalClaims, MembershipFailsOnGridPoints) {
  auto g = grid_basis(kMembershipCase);
  ASSERT_EQ(g.size(), 7u);
  EXPECT_EQ(to_string(g[5]), "y*z - 2*z - 2*x*y + 2*y + 2*x^2 - 2*x");
  auto r = lexgb::check_membership_lc2(g);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(witness_indices(r), (std::vector<std::vector<std::size_t>>{{6}}));
  // Nothing else fails on this instance.
  EXPECT_EQ(lexgb::check_radical_content(g).verdict, Verdict::pass);
  EXPECT_EQ(lexgb::check_specialization_stability(g).verdict, Verdict::pass);
  EXPECT_EQ(lexgb::check_gianni_kalkbrener(g).verdict, Verdict::pass);
}

TEST(RadicalClaims, MembershipCounterexampleHoldsOverRationals) {
  auto g = lexgb::buchberger(
      grid_generators({kMembershipCase.begin(), kMembershipCase.end()}));
  g.set_radical_by_construction(true);
  auto r = lexgb::check_membership_lc2(g);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(witness_indices(r), (std::vector<std::vector<std::size_t>>{{6}}));
}

// The image of g9 at (0, 2) is nonzero and drops in z-degree because its
// leading coefficient y - 2 vanishes there.
TEST(RadicalClaims, SpecializedImageCanDropDegree) {
  auto g = grid_basis(kDegreeDropCase);
  ASSERT_EQ(g.size(), 10u);
  EXPECT_EQ(to_string(g[8]), "y*z^2 - 2*z^2 - 2*y*z - x*z + 5*z - x^2 + 3*x - 2");
  const auto& f = testutil::f101();
  EXPECT_EQ(to_string(g[8].specialize_xy(f.make(0), f.make(2))), "z - 2");
  auto r = lexgb::check_gianni_kalkbrener(g);
  EXPECT_EQ(r.verdict, Verdict::fail);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses.front().indices.front(), 9u);
}
