#include "commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "discbound/errors.hpp"
#include "discbound/methods.hpp"
#include "discbound/refinement.hpp"
#include "discbound/verify.hpp"
#include "sample_io.hpp"
#include "scenario.hpp"

namespace discbound::cli {

namespace {

constexpr std::string_view kValidMethods =
    "box, nest, hoeffding, maurer-pontil, merged-nest, nearly-uniform";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Method method_or_throw(const std::string& name) {
  if (auto m = parse_method(name)) return *m;
  throw UsageError("unknown method '" + name + "'; valid methods: " + std::string(kValidMethods));
}

Side side_or_throw(const std::string& name) {
  if (auto s = parse_side(name)) return *s;
  throw UsageError("unknown side '" + name + "'; valid sides: lower, upper, two");
}

std::vector<Method> methods_or_throw(const std::vector<std::string>& names) {
  std::vector<Method> out;
  for (const auto& name : names) {
    if (name == "all") {
      for (Method m : {Method::box, Method::nest, Method::hoeffding, Method::maurer_pontil}) {
        out.push_back(m);
      }
    } else {
      out.push_back(method_or_throw(name));
    }
  }
  return out;
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

// Accepts plain integers and inclusive ranges start:stop:step.
std::vector<std::int64_t> parse_n_grid(const std::vector<std::string>& tokens) {
  std::vector<std::int64_t> grid;
  for (const auto& token : tokens) {
    const auto c1 = token.find(':');
    if (c1 == std::string::npos) {
      grid.push_back(parse_int(token, "n"));
      continue;
    }
    const auto c2 = token.find(':', c1 + 1);
    const std::string_view view(token);
    const auto start = parse_int(view.substr(0, c1), "n range start");
    const auto stop = parse_int(view.substr(c1 + 1, c2 == std::string::npos ? std::string::npos
                                                                             : c2 - c1 - 1),
                                "n range stop");
    const auto step = c2 == std::string::npos ? 1 : parse_int(view.substr(c2 + 1), "n range step");
    if (step < 1 || stop < start) throw UsageError("invalid n range '" + token + "'");
    for (auto n = start; n <= stop; n += step) grid.push_back(n);
  }
  return grid;
}

std::vector<double> generated_values(const std::string& shape_name, std::size_t m,
                                     double power_scale) {
  const auto shape = parse_value_shape(shape_name);
  if (!shape) {
    throw UsageError("unknown value shape '" + shape_name +
                     "'; valid shapes: linear, exponential, power");
  }
  if (m < 2) throw UsageError("--m must be at least 2");
  return make_values(*shape, m, power_scale);
}

void print_bound_row(std::ostream& out, const BoundInterval& b, const CategorizedSample& s) {
  out << to_string(b.method) << ',' << to_string(b.side) << ',' << s.total() << ',' << s.size()
      << ',' << format_real(b.lower) << ',' << format_real(b.upper) << '\n';
}

// ---------------------------------------------------------------------------

struct BoundArgs {
  std::string input;
  double delta = 0.05;
  std::vector<std::string> methods;
  std::string side = "two";
  std::optional<std::size_t> merged_categories;
  std::optional<std::size_t> allowed_failures;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const Side side = side_or_throw(a.side);
  const auto methods =
      methods_or_throw(a.methods.empty() ? std::vector<std::string>{"all"} : a.methods);
  const RawSample raw = read_sample_file(a.input);
  const CategorizedSample sample = normalize_sample(raw.counts, raw.values);

  // Compute every row before printing so a failure leaves no partial table.
  std::vector<BoundInterval> rows;
  for (Method method : methods) {
    MethodConfig config{.method = method, .side = side};
    if (method == Method::merged_nest) {
      if (!a.merged_categories) throw UsageError("merged-nest needs --merged-categories");
      config.merged_categories = *a.merged_categories;
    }
    if (method == Method::nearly_uniform) {
      if (!a.allowed_failures) throw UsageError("nearly-uniform needs --allowed-failures");
      config.allowed_failures = *a.allowed_failures;
    }
    rows.push_back(compute_bound(config, sample, a.delta));
  }
  out << "method,side,n,m,lower,upper\n";
  for (const auto& b : rows) print_bound_row(out, b, sample);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  std::string counts = "balanced";
  std::string values = "linear";
  double power_scale = 20.0;
  std::size_t m = 10;
  std::vector<std::string> n_grid;
  double delta = 0.05;
  std::string side = "two";
  std::vector<std::string> methods;
  std::vector<std::size_t> merged_categories;
  std::vector<std::size_t> allowed_failures;
  std::string out_path;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  SweepScenario sc;
  const auto counts = parse_count_shape(a.counts);
  if (!counts) throw UsageError("unknown count shape '" + a.counts + "'; valid: balanced, doubling");
  const auto values = parse_value_shape(a.values);
  if (!values) {
    throw UsageError("unknown value shape '" + a.values + "'; valid: linear, exponential, power");
  }
  sc.counts = *counts;
  sc.values = *values;
  sc.power_scale = a.power_scale;
  sc.m = a.m;
  sc.n_grid = parse_n_grid(a.n_grid);
  sc.delta = a.delta;
  sc.side = side_or_throw(a.side);
  sc.methods = methods_or_throw(a.methods.empty() ? std::vector<std::string>{"all"} : a.methods);
  sc.merged_categories = a.merged_categories;
  sc.allowed_failures = a.allowed_failures;
  sc.validate();

  std::ostringstream csv;
  run_sweep(sc, csv);
  if (a.out_path.empty() || a.out_path == "-") {
    out << csv.str();
    return kExitOk;
  }
  std::ofstream file(a.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write '" + a.out_path + "'");
  file << csv.str();
  file.flush();
  if (!file) throw IoError("failed writing '" + a.out_path + "'");
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct MergePlanArgs {
  std::string input;
  std::string values = "power";
  std::size_t m = 0;
  double power_scale = 20.0;
  std::size_t clusters = 0;
};

int cmd_merge_plan(const MergePlanArgs& a, std::ostream& out) {
  std::vector<double> values;
  if (!a.input.empty()) {
    values = read_values_file(a.input);
  } else {
    if (a.m == 0) throw UsageError("merge-plan needs --input or --m with --values");
    values = generated_values(a.values, a.m, a.power_scale);
  }
  const Clustering plan = merge_plan(values, a.clusters);
  std::size_t index = 0;
  for (const auto& c : plan.clusters) {
    out << "cluster " << ++index << ": categories " << c.first + 1 << '-' << c.last + 1
        << ", values [" << format_real(values[c.first]) << ", " << format_real(values[c.last])
        << "], range " << format_real(values[c.last] - values[c.first]) << '\n';
  }
  out << "clusters: " << plan.cluster_count() << '\n';
  out << "max_range: " << format_real(plan.max_range) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct CoverageArgs {
  std::string method = "nest";
  std::string side = "two";
  std::optional<std::size_t> merged_categories;
  std::size_t allowed_failures = 0;
  std::string distribution = "uniform";
  std::vector<double> probs;
  std::string values = "linear";
  std::vector<double> value_list;
  std::size_t m = 0;
  double power_scale = 20.0;
  std::int64_t n = 100;
  double delta = 0.05;
  std::int64_t trials = 20000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

int cmd_coverage(const CoverageArgs& a, std::ostream& out) {
  if (a.trials < 1) throw UsageError("--trials must be positive");
  if (a.n < 1) throw UsageError("--n must be positive");

  std::vector<double> values;
  if (!a.value_list.empty()) {
    values = a.value_list;
  } else {
    const std::size_t m = a.m != 0 ? a.m : a.probs.size();
    values = generated_values(a.values, m, a.power_scale);
  }

  std::optional<TrueDistribution> dist;
  if (!a.probs.empty()) {
    dist.emplace(a.probs, values);
  } else if (a.distribution == "uniform") {
    dist.emplace(TrueDistribution::uniform(values));
  } else {
    throw UsageError("unknown distribution '" + a.distribution + "'; use uniform or --probs");
  }

  MethodConfig config{.method = method_or_throw(a.method), .side = side_or_throw(a.side)};
  if (a.merged_categories) config.merged_categories = *a.merged_categories;
  config.allowed_failures = a.allowed_failures;

  const CoverageReport r = coverage_estimate(config, *dist, a.n, a.delta,
                                             static_cast<std::uint64_t>(a.trials), a.seed,
                                             a.threads);
  const bool pass = coverage_ok(r);
  out << "method: " << r.method.describe() << '\n'
      << "n: " << a.n << '\n'
      << "m: " << dist->size() << '\n'
      << "true_mean: " << format_real(dist->true_mean()) << '\n'
      << "trials: " << r.trials << '\n'
      << "failures: " << r.failures << '\n'
      << "failure_rate: " << format_real(r.failure_rate) << '\n'
      << "delta: " << format_real(r.delta) << '\n'
      << "seed: " << r.seed << '\n'
      << "tolerance: " << format_real(coverage_tolerance(r.delta, r.trials)) << '\n'
      << "verdict: " << (pass ? "pass" : "fail") << '\n';
  return pass ? kExitOk : kExitCoverage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distribution-free PAC bounds on the mean of a discrete distribution", "discbound"};
  app.require_subcommand(1);

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Mean bounds for a sample file");
  bound_cmd->add_option("input", bound.input, "CSV (value,count) or JSON sample file")->required();
  bound_cmd->add_option("--delta", bound.delta, "Failure probability budget")->capture_default_str();
  bound_cmd->add_option("--method", bound.methods, "Bound method (repeatable, or 'all')")
      ->delimiter(',');
  bound_cmd->add_option("--side", bound.side, "lower, upper or two")->capture_default_str();
  bound_cmd->add_option("--merged-categories", bound.merged_categories,
                        "Category count after merging (merged-nest)");
  bound_cmd->add_option("--allowed-failures", bound.allowed_failures,
                        "Tolerated frequency-bound failures (nearly-uniform)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Bounds over a grid of sample sizes, as CSV");
  sweep_cmd->add_option("--counts", sweep.counts, "balanced or doubling")->capture_default_str();
  sweep_cmd->add_option("--values", sweep.values, "linear, exponential or power")
      ->capture_default_str();
  sweep_cmd->add_option("--power-scale", sweep.power_scale, "Exponent scale for power values")
      ->capture_default_str();
  sweep_cmd->add_option("--m", sweep.m, "Number of categories")->capture_default_str();
  sweep_cmd->add_option("--n", sweep.n_grid, "Sample sizes: list and/or start:stop:step")
      ->delimiter(',')
      ->required();
  sweep_cmd->add_option("--delta", sweep.delta, "Failure probability budget")
      ->capture_default_str();
  sweep_cmd->add_option("--side", sweep.side, "lower, upper or two")->capture_default_str();
  sweep_cmd->add_option("--method", sweep.methods, "Bound method (repeatable, or 'all')")
      ->delimiter(',');
  sweep_cmd->add_option("--merged-categories", sweep.merged_categories,
                        "Merged category counts for merged-nest")
      ->delimiter(',');
  sweep_cmd->add_option("--allowed-failures", sweep.allowed_failures,
                        "Allowed failure counts for nearly-uniform")
      ->delimiter(',');
  sweep_cmd->add_option("--out", sweep.out_path, "Output CSV path (default: stdout)");

  MergePlanArgs plan;
  auto* plan_cmd = app.add_subcommand("merge-plan", "Optimal contiguous category merging");
  plan_cmd->add_option("--input", plan.input, "Values file (CSV or JSON)");
  plan_cmd->add_option("--values", plan.values, "Generated values: linear, exponential, power")
      ->capture_default_str();
  plan_cmd->add_option("--m", plan.m, "Number of generated values");
  plan_cmd->add_option("--power-scale", plan.power_scale, "Exponent scale for power values")
      ->capture_default_str();
  plan_cmd->add_option("--merged-categories", plan.clusters, "Number of clusters h")->required();

  CoverageArgs cov;
  auto* cov_cmd = app.add_subcommand("coverage", "Monte Carlo failure rate of a bound method");
  cov_cmd->add_option("--method", cov.method, "Bound method")->capture_default_str();
  cov_cmd->add_option("--side", cov.side, "lower, upper or two")->capture_default_str();
  cov_cmd->add_option("--merged-categories", cov.merged_categories,
                      "Category count after merging (default m/2)");
  cov_cmd->add_option("--allowed-failures", cov.allowed_failures,
                      "Tolerated frequency-bound failures")
      ->capture_default_str();
  cov_cmd->add_option("--distribution", cov.distribution, "uniform (ignored with --probs)")
      ->capture_default_str();
  cov_cmd->add_option("--probs", cov.probs, "Explicit category probabilities")->delimiter(',');
  cov_cmd->add_option("--values", cov.values, "Generated values: linear, exponential, power")
      ->capture_default_str();
  cov_cmd->add_option("--value-list", cov.value_list, "Explicit category values")->delimiter(',');
  cov_cmd->add_option("--m", cov.m, "Number of categories for generated distributions");
  cov_cmd->add_option("--power-scale", cov.power_scale, "Exponent scale for power values")
      ->capture_default_str();
  cov_cmd->add_option("--n", cov.n, "Observations per trial")->capture_default_str();
  cov_cmd->add_option("--delta", cov.delta, "Failure probability budget")->capture_default_str();
  cov_cmd->add_option("--trials", cov.trials, "Monte Carlo trials")->capture_default_str();
  cov_cmd->add_option("--seed", cov.seed, "RNG seed")->capture_default_str();
  cov_cmd->add_option("--threads", cov.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("discbound");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) err << app.get_subcommands().front()->help();
    return kExitUsage;
  }

  try {
    if (*bound_cmd) return cmd_bound(bound, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    if (*plan_cmd) return cmd_merge_plan(plan, out);
    if (*cov_cmd) return cmd_coverage(cov, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // ValidationError and DomainError both derive from std::logic_error.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace discbound::cli
