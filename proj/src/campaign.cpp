#include "lexgb/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace lexgb {

void CampaignConfig::validate() const {
  PrimeField check(p);
  if (min_points < 1 || min_points > max_points || max_points > 12) {
    throw InvalidArgument("point-count range must satisfy 1 <= min <= max <= 12");
  }
  if (degree_bound < 1) throw InvalidArgument("degree bound must be positive");
  if (jobs < 1) throw InvalidArgument("jobs must be at least 1");
}

bool CampaignResult::any_failure() const {
  return std::any_of(instances.begin(), instances.end(),
                     [](const InstanceResult& r) { return any_failed(r.reports); });
}

namespace {

// splitmix64 finalizer; maps an instance seed to its point count.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::size_t point_count(const CampaignConfig& c, std::uint64_t seed) {
  return c.min_points + mix(seed) % (c.max_points - c.min_points + 1);
}

InstanceResult run_one(const CampaignConfig& c, std::size_t index) {
  InstanceResult r;
  r.index = index;
  r.radical = index < c.radical;
  r.recipe = r.radical ? radical_recipe(c, index) : nonradical_recipe(c, index - c.radical);
  try {
    r.reports = verify_instance(make_instance(r.recipe), c.checks);
  } catch (const std::exception& e) {
    CheckReport err;
    err.name = "instance_error";
    err.witnesses.push_back({{}, e.what()});
    conclude(err, true);
    r.reports = {err};
  }
  return r;
}

}  // namespace

InstanceRecipe radical_recipe(const CampaignConfig& c, std::size_t i) {
  InstanceRecipe r;
  r.kind = InstanceKind::vanishing_points;
  r.p = c.p;
  r.seed = c.seed + i;
  r.points = point_count(c, r.seed);
  return r;
}

InstanceRecipe nonradical_recipe(const CampaignConfig& c, std::size_t i) {
  InstanceRecipe r;
  r.kind = i % 2 == 0 ? InstanceKind::squared_vanishing : InstanceKind::random_triangular;
  r.p = c.p;
  r.seed = c.seed + c.radical + i;
  r.points = point_count(c, r.seed);
  r.degree_bound = c.degree_bound;
  return r;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  config.validate();
  CampaignResult result;
  result.config = config;
  const std::size_t total = config.radical + config.nonradical;
  result.instances.resize(total);

  if (config.jobs <= 1 || total <= 1) {
    for (std::size_t i = 0; i < total; ++i) result.instances[i] = run_one(config, i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < total; i = next++) result.instances[i] = run_one(config, i);
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<std::size_t>(config.jobs, total);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const auto& inst : result.instances) {
    auto& counts = inst.radical ? result.radical_counts : result.nonradical_counts;
    for (const auto& rep : inst.reports) {
      auto& c = counts[rep.name];
      switch (rep.verdict) {
        case Verdict::pass:
          ++c.pass;
          break;
        case Verdict::fail:
          ++c.fail;
          break;
        case Verdict::skipped:
          ++c.skipped;
          break;
        case Verdict::observed:
          ++c.observed;
          if (rep.observed_holds.value_or(false)) ++c.observed_holds;
          break;
      }
    }
  }
  return result;
}

namespace {

json counts_to_json(const std::map<std::string, VerdictCounts>& counts) {
  json out = json::object();
  // Report in run order, then anything unexpected (e.g. instance_error).
  std::vector<std::string> order = all_check_names();
  for (const auto& [name, _] : counts) {
    if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
  }
  for (const auto& name : order) {
    auto it = counts.find(name);
    if (it == counts.end()) continue;
    const VerdictCounts& c = it->second;
    json entry = {{"pass", c.pass}, {"fail", c.fail}, {"skipped", c.skipped},
                  {"observed", c.observed}};
    if (c.observed > 0) {
      entry["observed_holds"] = c.observed_holds;
      entry["observed_rate"] = static_cast<double>(c.observed_holds) / c.observed;
    }
    out[name] = std::move(entry);
  }
  return out;
}

}  // namespace

json campaign_summary(const CampaignResult& result) {
  const CampaignConfig& c = result.config;
  json checks = json::array();
  for (const auto& name : c.checks) checks.push_back(name);
  json config = {{"p", c.p},
                 {"radical", c.radical},
                 {"nonradical", c.nonradical},
                 {"min_points", c.min_points},
                 {"max_points", c.max_points},
                 {"degree_bound", c.degree_bound},
                 {"seed", c.seed},
                 {"checks", std::move(checks)}};
  json counterexamples = json::array();
  for (const auto& inst : result.instances) {
    for (const auto& rep : inst.reports) {
      if (!rep.failed()) continue;
      counterexamples.push_back({{"index", inst.index},
                                 {"recipe", recipe_to_json(inst.recipe)},
                                 {"check", rep.name},
                                 {"witnesses", report_to_json(rep)["witnesses"]}});
    }
  }
  return {{"config", std::move(config)},
          {"radical", {{"instances", c.radical}, {"checks", counts_to_json(result.radical_counts)}}},
          {"nonradical",
           {{"instances", c.nonradical}, {"checks", counts_to_json(result.nonradical_counts)}}},
          {"counterexamples", std::move(counterexamples)},
          {"verdict", result.any_failure() ? "fail" : "pass"}};
}

}  // namespace lexgb
