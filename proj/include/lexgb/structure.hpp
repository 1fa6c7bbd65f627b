#pragma once

// Structural checks on lex Gröbner bases of zero-dimensional ideals in
// k[x,y,z]: divisibility relations among the k[x]-leading coefficients lc1,
// their relation to the k[x,y]-leading coefficients lc2, and the membership
// g_i in <lc2(g_i), g_1> for radical ideals. Each check returns a witnessed
// CheckReport. Checks whose claim needs a radical ideal report `observed`
// on bases that are not radical by construction.

#include <string>
#include <variant>
#include <vector>

#include "lexgb/groebner.hpp"
#include "lexgb/report.hpp"

namespace lexgb {

namespace check_names {
inline constexpr const char* kPrecheck = "groebner_precheck";
inline constexpr const char* kStructureFacts = "structure_facts";
inline constexpr const char* kLazard = "lazard";
inline constexpr const char* kSameZDivisibility = "same_z_divisibility";
inline constexpr const char* kComponentwiseDivisibility = "componentwise_divisibility";
inline constexpr const char* kLc1DividesLc2 = "lc1_divides_lc2";
inline constexpr const char* kRadicalContent = "radical_content";
inline constexpr const char* kMembershipLc2 = "membership_lc2";
inline constexpr const char* kSpecializationStability = "specialization_stability";
inline constexpr const char* kGianniKalkbrener = "gianni_kalkbrener";
inline constexpr const char* kRootSeparation = "root_separation";
inline constexpr const char* kImplicationAudit = "implication_audit";
}  // namespace check_names

namespace detail {

template <Coefficient K>
bool x_divides(const Polynomial<K>& d, const Polynomial<K>& e) {
  return univariate_divides(d, e).has_value();
}

template <Coefficient K>
std::string pair_detail(const char* label, const Polynomial<K>& di, const Polynomial<K>& ej) {
  return std::string(label) + ": " + to_string(di) + " does not divide " + to_string(ej);
}

inline std::string g(std::size_t i) { return "g" + std::to_string(i + 1); }

}  // namespace detail

/// Validates that the basis is sorted, minimal, monic, reduced and passes
/// the Buchberger criterion.
template <Coefficient K>
CheckReport check_groebner_precheck(const GroebnerBasis<K>& g) {
  CheckReport r;
  r.name = check_names::kPrecheck;
  for (auto& issue : validate_basis(g)) r.witnesses.push_back({{}, std::move(issue)});
  conclude(r, true);
  return r;
}

/// The three shape facts of a zero-dimensional lex basis.
template <Coefficient K>
CheckReport check_structure_facts(const GroebnerBasis<K>& g) {
  CheckReport r;
  r.name = check_names::kStructureFacts;
  if (g.unit_ideal()) {
    r.verdict = Verdict::skipped;
    r.note = "unit ideal";
    return r;
  }
  StructureFacts f = structure_facts(g);
  for (const auto& m : f.missing) r.witnesses.push_back({{}, m});
  for (const auto& a : f.anomalies) r.witnesses.push_back({{}, a});
  if (f.zero_dim) {
    r.note = "ell2=" + std::to_string(*f.ell2 + 1) + " d_s=" + std::to_string(f.d_s);
  }
  conclude(r, true);
  return r;
}

/// Bivariate structure theorem on a lex basis f_1 < ... < f_r of a
/// zero-dimensional ideal of k[x,y]: lc1(f_i) divides lc1(f_j) for i >= j,
/// and lc1(f_i) divides f_i.
template <Coefficient K>
CheckReport check_lazard(const GroebnerBasis<K>& g2) {
  CheckReport r;
  r.name = check_names::kLazard;
  const auto& f = g2.elements();
  for (const auto& p : f) {
    if (!p.in_xy()) throw InvalidArgument("check_lazard expects a basis in k[x,y]");
  }
  std::vector<Polynomial<K>> lc1;
  for (const auto& p : f) lc1.push_back(p.staged_leading().lc1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!detail::x_divides(lc1[i], lc1[j])) {
        r.witnesses.push_back({{i + 1, j + 1}, detail::pair_detail("lc1 chain", lc1[i], lc1[j])});
      }
    }
    auto q = content_divide(lc1[i], f[i]);
    if (auto* nd = std::get_if<NotDivisible<K>>(&q)) {
      r.witnesses.push_back({{i + 1},
                             "lc1 " + to_string(lc1[i]) + " does not divide the coefficient " +
                                 to_string(nd->coefficient) + " of " + nd->yz.to_string()});
    }
  }
  conclude(r, true);
  return r;
}

/// For j < i with alpha_z(j) = alpha_z(i): lc1(g_i) divides lc1(g_j).
/// Pairs with z exponent 0 are included.
template <Coefficient K>
CheckReport check_same_z_divisibility(const GroebnerBasis<K>& g) {
  CheckReport r;
  r.name = check_names::kSameZDivisibility;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto lci = g[i].staged_leading().lc1;
    for (std::size_t j = 0; j < i; ++j) {
      if (g.alpha(j).alpha_z != g.alpha(i).alpha_z) continue;
      ++pairs;
      auto lcj = g[j].staged_leading().lc1;
      if (!detail::x_divides(lci, lcj)) {
        r.witnesses.push_back({{i + 1, j + 1}, detail::pair_detail("same z exponent", lci, lcj)});
      }
    }
  }
  r.note = std::to_string(pairs) + " pairs";
  conclude(r, true);
  return r;
}

/// For j < i with alpha_y(j) <= alpha_y(i) and alpha_z(j) <= alpha_z(i):
/// lc1(g_i) divides lc1(g_j).
template <Coefficient K>
CheckReport check_componentwise_divisibility(const GroebnerBasis<K>& g) {
  CheckReport r;
  r.name = check_names::kComponentwiseDivisibility;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto lci = g[i].staged_leading().lc1;
    for (std::size_t j = 0; j < i; ++j) {
      if (g.alpha(j).alpha_y > g.alpha(i).alpha_y || g.alpha(j).alpha_z > g.alpha(i).alpha_z) {
        continue;
      }
      ++pairs;
      auto lcj = g[j].staged_leading().lc1;
      if (!detail::x_divides(lci, lcj)) {
        r.witnesses.push_back({{i + 1, j + 1}, detail::pair_detail("componentwise", lci, lcj)});
      }
    }
  }
  r.note = std::to_string(pairs) + " pairs";
  conclude(r, true);
  return r;
}

/// For i > 1: lc1(g_i) divides lc2(g_i) in k[x,y].
template <Coefficient K>
CheckReport check_lc1_divides_lc2(const GroebnerBasis<K>& g) {
  CheckReport r;
  r.name = check_names::kLc1DividesLc2;
  for (std::size_t i = 1; i < g.size(); ++i) {
    auto s = g[i].staged_leading();
    if (std::holds_alternative<NotDivisible<K>>(content_divide(s.lc1, s.lc2))) {
      r.witnesses.push_back({{i + 1}, detail::pair_detail("lc1 into lc2", s.lc1, s.lc2)});
    }
  }
  conclude(r, true);
  return r;
}

/// For i > 1: lc1(g_i) divides g_i. Asserted only for radical bases.
template <Coefficient K>
CheckReport check_radical_content(const GroebnerBasis<K>& g) {
  CheckReport r;
  r.name = check_names::kRadicalContent;
  for (std::size_t i = 1; i < g.size(); ++i) {
    auto lc1 = g[i].staged_leading().lc1;
    auto q = content_divide(lc1, g[i]);
    if (auto* nd = std::get_if<NotDivisible<K>>(&q)) {
      r.witnesses.push_back({{i + 1},
                             "lc1 " + to_string(lc1) + " does not divide the coefficient " +
                                 to_string(nd->coefficient) + " of " + nd->yz.to_string()});
    }
  }
  if (!g.radical_by_construction()) r.note = "ideal not radical by construction";
  conclude(r, g.radical_by_construction());
  return r;
}

/// For i > ell2: g_i lies in <lc2(g_i), g_1>, decided by a normal form
/// modulo a Gröbner basis of that ideal. Asserted only for radical bases.
template <Coefficient K>
CheckReport check_membership_lc2(const GroebnerBasis<K>& g) {
  CheckReport r;
  r.name = check_names::kMembershipLc2;
  auto l2 = g.ell2();
  if (!l2) throw NotZeroDimensional("check_membership_lc2: no pure power of y");
  for (std::size_t i = *l2 + 1; i < g.size(); ++i) {
    auto lc2 = g[i].staged_leading().lc2;
    auto h = buchberger(std::vector<Polynomial<K>>{lc2, g.front()});
    auto nf = normal_form(g[i], h);
    if (!nf.is_zero()) {
      r.witnesses.push_back({{i + 1}, detail::g(i) + " has normal form " + to_string(nf) +
                                          " modulo <" + to_string(lc2) + ", g1>"});
    }
  }
  if (!g.radical_by_construction()) r.note = "ideal not radical by construction";
  conclude(r, g.radical_by_construction());
  return r;
}

/// The componentwise condition covers every equal-z pair, so a passing
/// componentwise report must come with a passing same-z report.
inline CheckReport check_implication_audit(const CheckReport& componentwise,
                                           const CheckReport& same_z) {
  CheckReport r;
  r.name = check_names::kImplicationAudit;
  if (componentwise.verdict == Verdict::pass && same_z.verdict != Verdict::pass) {
    r.witnesses.push_back({{}, "componentwise divisibility passed but same-z divisibility did not"});
  }
  conclude(r, true);
  return r;
}

}  // namespace lexgb
