#include "lexgb/verify.hpp"

#include <algorithm>
#include <functional>

#include "lexgb/specialize.hpp"
#include "lexgb/structure.hpp"

namespace lexgb {

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      check_names::kPrecheck,
      check_names::kStructureFacts,
      check_names::kLazard,
      check_names::kSameZDivisibility,
      check_names::kComponentwiseDivisibility,
      check_names::kLc1DividesLc2,
      check_names::kRadicalContent,
      check_names::kMembershipLc2,
      check_names::kSpecializationStability,
      check_names::kGianniKalkbrener,
      check_names::kRootSeparation,
      check_names::kImplicationAudit,
      check_names::kVanishing,
      check_names::kRoundTrip,
      check_names::kQuotientDimension,
      check_names::kIdempotence,
  };
  return names;
}

namespace {

bool wanted(const CheckFilter& filter, const std::string& name) {
  return filter.empty() || filter.count(name) > 0;
}

CheckReport skipped(const std::string& name, const std::string& why) {
  CheckReport r;
  r.name = name;
  r.verdict = Verdict::skipped;
  r.note = why;
  return r;
}

}  // namespace

std::vector<CheckReport> verify_all(const FpBasis& g, const CheckFilter& filter) {
  std::vector<CheckReport> out;
  auto emit = [&](CheckReport r) {
    if (wanted(filter, r.name)) out.push_back(std::move(r));
  };
  auto skip_rest = [&](std::size_t from, const std::string& why) {
    const auto& names = all_check_names();
    for (std::size_t k = from; k < names.size(); ++k) {
      if (names[k] == check_names::kVanishing) break;
      emit(skipped(names[k], why));
    }
  };

  CheckReport pre = check_groebner_precheck(g);
  const bool pre_ok = !pre.failed();
  emit(std::move(pre));
  if (!pre_ok) {
    skip_rest(1, "basis failed the Groebner precheck");
    return out;
  }
  if (g.unit_ideal()) {
    skip_rest(1, "unit ideal");
    return out;
  }
  CheckReport facts = check_structure_facts(g);
  const bool zero_dim = structure_facts(g).zero_dim;
  const bool facts_ok = !facts.failed();
  emit(std::move(facts));
  if (!zero_dim || !facts_ok) {
    skip_rest(2, zero_dim ? "structure facts failed" : "ideal is not zero-dimensional");
    return out;
  }

  if (wanted(filter, check_names::kLazard)) emit(check_lazard(elimination_basis(g)));
  CheckReport same_z = check_same_z_divisibility(g);
  CheckReport componentwise = check_componentwise_divisibility(g);
  CheckReport audit = check_implication_audit(componentwise, same_z);
  emit(std::move(same_z));
  emit(std::move(componentwise));

  const std::vector<std::pair<const char*, std::function<CheckReport(const FpBasis&)>>> rest = {
      {check_names::kLc1DividesLc2, check_lc1_divides_lc2<Fp>},
      {check_names::kRadicalContent, check_radical_content<Fp>},
      {check_names::kMembershipLc2, check_membership_lc2<Fp>},
      {check_names::kSpecializationStability, check_specialization_stability},
      {check_names::kGianniKalkbrener, check_gianni_kalkbrener},
      {check_names::kRootSeparation, check_root_separation},
  };
  for (const auto& [name, run] : rest) {
    if (wanted(filter, name)) emit(run(g));
  }
  emit(std::move(audit));
  return out;
}

std::vector<CheckReport> verify_instance(const Instance& instance, const CheckFilter& filter) {
  const FpBasis& g = instance.basis;
  std::vector<CheckReport> out = verify_all(g, filter);

  if (instance.points && wanted(filter, check_names::kVanishing) &&
      instance.recipe.kind == InstanceKind::vanishing_points) {
    CheckReport r;
    r.name = check_names::kVanishing;
    const PrimeField field(instance.points->p);
    for (const auto& pt : instance.points->points) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g[i].evaluate(field.make(pt[0]), field.make(pt[1]), field.make(pt[2])).is_zero()) {
          r.witnesses.push_back({{i + 1}, "nonzero at (" + std::to_string(pt[0]) + "," +
                                              std::to_string(pt[1]) + "," +
                                              std::to_string(pt[2]) + ")"});
        }
      }
    }
    conclude(r, true);
    out.push_back(std::move(r));
  }

  if (instance.recipe.kind == InstanceKind::vanishing_points && instance.points) {
    const bool zero_dim = !g.unit_ideal() && structure_facts(g).zero_dim;
    if (wanted(filter, check_names::kRoundTrip)) {
      CheckReport r;
      r.name = check_names::kRoundTrip;
      if (!zero_dim) {
        r.witnesses.push_back({{}, "basis is not zero-dimensional"});
      } else {
        try {
          PointSet solved = solve_system(g);
          std::vector<Point> expected = instance.points->points;
          std::sort(expected.begin(), expected.end());
          if (solved.points != expected) {
            r.witnesses.push_back({{}, std::to_string(solved.points.size()) +
                                           " solutions for " + std::to_string(expected.size()) +
                                           " generating points"});
          }
        } catch (const NonSplitError& e) {
          r.witnesses.push_back({{}, e.what()});
        }
      }
      conclude(r, true);
      out.push_back(std::move(r));
    }
    if (wanted(filter, check_names::kQuotientDimension)) {
      CheckReport r;
      r.name = check_names::kQuotientDimension;
      if (!zero_dim) {
        r.witnesses.push_back({{}, "basis is not zero-dimensional"});
      } else {
        std::size_t dim = quotient_dimension(g);
        if (dim != instance.points->points.size()) {
          r.witnesses.push_back({{}, "quotient dimension " + std::to_string(dim) + " for " +
                                         std::to_string(instance.points->points.size()) +
                                         " points"});
        }
      }
      conclude(r, true);
      out.push_back(std::move(r));
    }
  }

  if (wanted(filter, check_names::kIdempotence)) {
    CheckReport r;
    r.name = check_names::kIdempotence;
    FpBasis again = buchberger(g.elements());
    if (again.elements() != g.elements()) {
      r.witnesses.push_back({{}, "recomputing the basis changed it"});
    }
    conclude(r, true);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lexgb
