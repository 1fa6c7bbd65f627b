#pragma once

#include <set>
#include <string>
#include <vector>

#include "lexgb/instances.hpp"
#include "lexgb/report.hpp"

namespace lexgb {

/// Names accepted by a check filter; an empty filter runs everything.
using CheckFilter = std::set<std::string>;

/// Every check name, in the order verify_all runs them.
const std::vector<std::string>& all_check_names();

/// Instance-level checks available when provenance is known.
namespace check_names {
inline constexpr const char* kVanishing = "vanishing_at_points";
inline constexpr const char* kRoundTrip = "solve_round_trip";
inline constexpr const char* kQuotientDimension = "quotient_dimension";
inline constexpr const char* kIdempotence = "buchberger_idempotence";
}  // namespace check_names

/// Runs every structural check in a fixed order. Checks whose claims need a
/// radical ideal are gated on the basis's provenance flag. If the basis
/// fails the Gröbner precheck or is not zero-dimensional the remaining
/// checks are reported as skipped.
std::vector<CheckReport> verify_all(const FpBasis& g, const CheckFilter& filter = {});

/// verify_all plus engine oracles that need the instance's provenance:
/// vanishing at the generating points, solve round trip, quotient dimension
/// against the point count, and Buchberger idempotence.
std::vector<CheckReport> verify_instance(const Instance& instance, const CheckFilter& filter = {});

}  // namespace lexgb
