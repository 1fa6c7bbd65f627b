#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lexgb/json_io.hpp"
#include "lexgb/verify.hpp"

namespace lexgb {

struct CampaignConfig {
  std::uint32_t p = PrimeField::kDefaultModulus;
  std::size_t radical = 200;
  std::size_t nonradical = 50;
  std::size_t min_points = 1;
  std::size_t max_points = 8;
  std::uint32_t degree_bound = 3;
  std::uint64_t seed = 7;
  CheckFilter checks;
  unsigned jobs = 1;

  /// Throws InvalidArgument unless p is prime and 1 <= min <= max <= 12.
  void validate() const;
};

struct InstanceResult {
  std::size_t index = 0;
  InstanceRecipe recipe;
  bool radical = false;
  std::vector<CheckReport> reports;
};

struct VerdictCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::size_t observed = 0;
  std::size_t observed_holds = 0;
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<InstanceResult> instances;  // radical first, then non-radical
  std::map<std::string, VerdictCounts> radical_counts;
  std::map<std::string, VerdictCounts> nonradical_counts;

  bool any_failure() const;
};

/// Recipe of the campaign's i-th radical / non-radical instance. Instance
/// seeds are master seed + global index; the point count is derived from
/// the instance seed.
InstanceRecipe radical_recipe(const CampaignConfig& c, std::size_t i);
InstanceRecipe nonradical_recipe(const CampaignConfig& c, std::size_t i);

/// Generates and verifies every instance. With jobs > 1 instances run on a
/// thread pool; results are stored and aggregated in instance order.
CampaignResult run_campaign(const CampaignConfig& config);

/// Deterministic summary: per-check counts for each population, observed
/// pass rates, and the replay recipe of every failing instance.
json campaign_summary(const CampaignResult& result);

}  // namespace lexgb
