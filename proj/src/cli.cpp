#include "lexgb/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <sstream>

#include "lexgb/campaign.hpp"
#include "lexgb/json_io.hpp"
#include "lexgb/specialize.hpp"
#include "lexgb/verify.hpp"

namespace lexgb {

namespace {

struct Options {
  std::uint64_t prime = PrimeField::kDefaultModulus;
  std::uint64_t seed = 0;
  std::uint64_t campaign_seed = 7;
  std::size_t n = 0;
  std::string kind = "squared-vanishing";
  std::uint32_t degree_bound = 3;
  std::string input;
  std::string output;
  bool text = false;
  std::string checks;
  std::size_t radical = 200;
  std::size_t nonradical = 50;
  std::size_t min_points = 1;
  std::size_t max_points = 8;
  unsigned jobs = 1;
  std::string reports;
};

void emit(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
  }
}

CheckFilter parse_filter(const std::string& list) {
  CheckFilter filter;
  std::stringstream ss(list);
  std::string name;
  const auto& known = all_check_names();
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw InvalidArgument("unknown check '" + name + "'");
    }
    filter.insert(name);
  }
  return filter;
}

// An input file is a point set, a generator list, a recipe or a basis.
struct LoadedInput {
  std::optional<Instance> instance;  // when provenance is known
  FpBasis basis;
  json source;
};

LoadedInput load_input(const std::string& path) {
  const json j = read_json_file(path);
  LoadedInput in;
  if (!j.is_object()) throw ParseError(path + ": expected a JSON object");
  if (j.contains("elements")) {
    in.basis = basis_from_json(j);
    in.source = {{"source", "basis"}, {"path", path}};
  } else if (j.contains("kind")) {
    InstanceRecipe recipe = recipe_from_json(j);
    in.instance = make_instance(recipe);
    in.basis = in.instance->basis;
    in.source = recipe_to_json(recipe);
  } else if (j.contains("points")) {
    PointSet ps = points_from_json(j);
    InstanceRecipe recipe;
    recipe.kind = InstanceKind::vanishing_points;
    recipe.p = ps.p;
    recipe.seed = ps.seed;
    recipe.points = ps.points.size();
    FpBasis g = vanishing_ideal(ps);
    in.instance = Instance{recipe, ps, g};
    in.basis = std::move(g);
    in.source = {{"source", "points"}, {"path", path}, {"p", ps.p}, {"seed", ps.seed}};
  } else if (j.contains("generators")) {
    PrimeField field;
    auto gens = generators_from_json(j, field);
    in.basis = buchberger(gens);
    in.source = {{"source", "generators"}, {"path", path}};
  } else {
    throw ParseError(path + ": expected one of 'elements', 'kind', 'points', 'generators'");
  }
  return in;
}

std::uint32_t modulus_of(const FpBasis& g) { return g.front().lc().modulus(); }

int cmd_gen_points(const Options& o, std::ostream& out, std::ostream& err) {
  PointSet ps = random_points(o.n, o.seed, PrimeField(o.prime));
  emit(points_to_json(ps), o.output, out);
  (o.output.empty() ? err : out) << "seed " << o.seed << '\n';
  return kExitOk;
}

int cmd_gen_ideal(const Options& o, std::ostream& out, std::ostream& err) {
  InstanceRecipe r;
  r.kind = instance_kind_from_string(o.kind);
  r.p = PrimeField(o.prime).modulus();
  r.seed = o.seed;
  r.points = o.n == 0 ? 1 : o.n;
  r.degree_bound = o.degree_bound;
  make_instance(r);  // rejects recipes that cannot be built
  emit(recipe_to_json(r), o.output, out);
  (o.output.empty() ? err : out) << "seed " << o.seed << '\n';
  return kExitOk;
}

int cmd_gb(const Options& o, std::ostream& out) {
  LoadedInput in = load_input(o.input);
  emit(basis_to_json(in.basis, modulus_of(in.basis), o.text), o.output, out);
  return kExitOk;
}

void print_reports(const std::vector<CheckReport>& reports, std::ostream& out) {
  for (const auto& r : reports) {
    out << std::left << std::setw(28) << r.name << ' ' << to_string(r.verdict);
    if (r.observed_holds) out << (*r.observed_holds ? " (holds)" : " (does not hold)");
    if (!r.note.empty()) out << "  [" << r.note << ']';
    out << '\n';
    for (const auto& w : r.witnesses) out << "    - " << w.detail << '\n';
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  LoadedInput in = load_input(o.input);
  CheckFilter filter = parse_filter(o.checks);
  std::vector<CheckReport> reports =
      in.instance ? verify_instance(*in.instance, filter) : verify_all(in.basis, filter);
  const bool failed = any_failed(reports);
  json report = {{"instance", in.source},
                 {"checks", reports_to_json(reports)},
                 {"verdict", failed ? "fail" : "pass"}};
  if (o.output.empty() && !o.text) {
    out << report.dump(2) << '\n';
  } else if (!o.output.empty()) {
    write_json_file(o.output, report);
  }
  if (o.text) print_reports(reports, out);
  return failed ? kExitCheckFailed : kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  LoadedInput in = load_input(o.input);
  try {
    emit(points_to_json(solve_system(in.basis)), o.output, out);
  } catch (const NonSplitError& e) {
    err << "solve: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const NotZeroDimensional& e) {
    err << "solve: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_campaign(const Options& o, std::ostream& out) {
  CampaignConfig c;
  c.p = PrimeField(o.prime).modulus();
  c.radical = o.radical;
  c.nonradical = o.nonradical;
  c.min_points = o.min_points;
  c.max_points = o.max_points;
  c.degree_bound = o.degree_bound;
  c.seed = o.campaign_seed;
  c.checks = parse_filter(o.checks);
  c.jobs = o.jobs;
  CampaignResult result = run_campaign(c);
  json summary = campaign_summary(result);
  emit(summary, o.output, out);
  if (!o.reports.empty()) {
    json all = json::array();
    for (const auto& inst : result.instances) {
      all.push_back({{"instance", recipe_to_json(inst.recipe)},
                     {"checks", reports_to_json(inst.reports)}});
    }
    write_json_file(o.reports, all);
  }
  if (!o.output.empty()) {
    out << "radical " << c.radical << ", non-radical " << c.nonradical << ": "
        << summary["verdict"].get<std::string>() << ", " << summary["counterexamples"].size()
        << " failing checks\n";
  }
  return result.any_failure() ? kExitCheckFailed : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lexicographic Groebner bases of zero-dimensional ideals in k[x,y,z]", "lexgb"};
  app.require_subcommand(1);

  auto add_prime = [&o](CLI::App* sub) {
    sub->add_option("--prime", o.prime, "prime modulus p")->capture_default_str();
  };
  auto add_seed = [](CLI::App* sub, std::uint64_t& seed) {
    sub->add_option("--seed", seed, "random seed")->capture_default_str();
  };
  auto add_output = [&o](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "output file (stdout when omitted)");
  };

  auto* gen_points = app.add_subcommand("gen-points", "draw random distinct points of F_p^3");
  gen_points->add_option("--n", o.n, "number of points")->required()->check(CLI::PositiveNumber);
  add_prime(gen_points);
  add_seed(gen_points, o.seed);
  add_output(gen_points);

  auto* gen_ideal = app.add_subcommand("gen-ideal", "write an instance recipe");
  gen_ideal->add_option("--kind", o.kind, "vanishing-points | squared-vanishing | random-triangular")
      ->capture_default_str();
  gen_ideal->add_option("--n", o.n, "number of points for the vanishing kinds");
  gen_ideal->add_option("--degree-bound", o.degree_bound, "degree bound for random-triangular")
      ->capture_default_str();
  add_prime(gen_ideal);
  add_seed(gen_ideal, o.seed);
  add_output(gen_ideal);

  auto* gb = app.add_subcommand("gb", "compute the reduced lex Groebner basis of an input file");
  gb->add_option("input", o.input, "points, generators, recipe or basis file")->required();
  gb->add_flag("--text", o.text, "include readable polynomials");
  add_output(gb);

  auto* verify = app.add_subcommand("verify", "run the structural checks");
  verify->add_option("input", o.input, "basis, recipe or points file")->required();
  verify->add_option("--checks", o.checks, "comma-separated checks to run (default: all)");
  verify->add_flag("--text", o.text, "print a readable report");
  add_output(verify);

  auto* solve = app.add_subcommand("solve", "list the F_p-rational solutions");
  solve->add_option("input", o.input, "basis, recipe or points file")->required();
  add_output(solve);

  auto* campaign = app.add_subcommand("campaign", "generate and verify seeded instances");
  campaign->add_option("--radical", o.radical, "radical instances")->capture_default_str();
  campaign->add_option("--nonradical", o.nonradical, "non-radical instances")->capture_default_str();
  campaign->add_option("--min-points", o.min_points)->capture_default_str();
  campaign->add_option("--max-points", o.max_points)->capture_default_str();
  campaign->add_option("--degree-bound", o.degree_bound)->capture_default_str();
  campaign->add_option("--checks", o.checks, "comma-separated checks to run (default: all)");
  campaign->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  campaign->add_option("--reports", o.reports, "also write every per-instance report here");
  add_prime(campaign);
  add_seed(campaign, o.campaign_seed);
  add_output(campaign);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (gen_points->parsed()) return cmd_gen_points(o, out, err);
    if (gen_ideal->parsed()) return cmd_gen_ideal(o, out, err);
    if (gb->parsed()) return cmd_gb(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (solve->parsed()) return cmd_solve(o, out, err);
    if (campaign->parsed()) return cmd_campaign(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace lexgb
