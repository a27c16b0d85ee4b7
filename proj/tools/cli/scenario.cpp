#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "discbound/errors.hpp"
#include "discbound/methods.hpp"
#include "discbound/sample.hpp"
#include "sample_io.hpp"

namespace discbound::cli {

std::optional<CountShape> parse_count_shape(std::string_view text) {
  if (text == "balanced") return CountShape::balanced;
  if (text == "doubling" || text == "unbalanced") return CountShape::doubling;
  return std::nullopt;
}

std::optional<ValueShape> parse_value_shape(std::string_view text) {
  if (text == "linear") return ValueShape::linear;
  if (text == "exponential") return ValueShape::exponential;
  if (text == "power") return ValueShape::power;
  return std::nullopt;
}

std::string_view to_string(CountShape shape) {
  return shape == CountShape::balanced ? "balanced" : "doubling";
}

std::string_view to_string(ValueShape shape) {
  switch (shape) {
    case ValueShape::linear: return "linear";
    case ValueShape::exponential: return "exponential";
    case ValueShape::power: return "power";
  }
  return "?";
}

std::vector<std::int64_t> make_counts(CountShape shape, std::size_t m, std::int64_t n) {
  if (m < 2) throw ValidationError("counts: need at least two categories");
  if (n < 1) throw ValidationError("counts: n must be positive");

  // Relative weights scaled so the largest is 1; doubling weights underflow
  // gracefully for very large m.
  std::vector<double> weight(m, 1.0);
  if (shape == CountShape::doubling) {
    for (std::size_t i = 0; i < m; ++i) {
      weight[i] = std::ldexp(1.0, static_cast<int>(i) - static_cast<int>(m - 1));
    }
  }
  const double total_weight = std::accumulate(weight.begin(), weight.end(), 0.0);

  std::vector<std::int64_t> counts(m);
  std::vector<double> remainder(m);
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double ideal = static_cast<double>(n) * weight[i] / total_weight;
    counts[i] = static_cast<std::int64_t>(std::floor(ideal));
    remainder[i] = ideal - static_cast<double>(counts[i]);
    assigned += counts[i];
  }
  if (shape == CountShape::balanced && n % static_cast<std::int64_t>(m) == 0) {
    std::fill(counts.begin(), counts.end(), n / static_cast<std::int64_t>(m));
    return counts;
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t r = 0; assigned < n; ++r) {
    ++counts[order[r % m]];
    ++assigned;
  }
  return counts;
}

std::vector<double> make_values(ValueShape shape, std::size_t m, double power_scale) {
  std::vector<double> v(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto idx = static_cast<double>(i);
    switch (shape) {
      case ValueShape::linear: v[i] = idx; break;
      case ValueShape::exponential: v[i] = std::ldexp(1.0, static_cast<int>(i)); break;
      case ValueShape::power: v[i] = std::exp2(power_scale * idx / static_cast<double>(m)); break;
    }
  }
  return v;
}

void SweepScenario::validate() const {
  if (m < 2) throw ValidationError("sweep: m must be at least 2");
  if (n_grid.empty()) throw ValidationError("sweep: empty n grid");
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("sweep: delta must lie in (0, 1)");
  if (methods.empty()) throw ValidationError("sweep: no methods selected");
  if (values == ValueShape::power && !(power_scale > 0.0 && std::isfinite(power_scale))) {
    throw ValidationError("sweep: power scale must be positive");
  }
  for (std::int64_t n : n_grid) {
    if (n < 1) throw ValidationError("sweep: n must be positive");
    if (counts == CountShape::balanced && n < static_cast<std::int64_t>(m)) {
      throw ValidationError("sweep: balanced scenarios need n >= m, got n=" + std::to_string(n));
    }
  }
  for (Method method : methods) {
    if (method == Method::merged_nest) {
      if (merged_categories.empty()) {
        throw ValidationError("sweep: merged-nest needs --merged-categories");
      }
      for (std::size_t h : merged_categories) {
        if (h < 2 || h > m) throw ValidationError("sweep: merged categories must lie in [2, m]");
      }
    }
    if (method == Method::nearly_uniform) {
      if (allowed_failures.empty()) {
        throw ValidationError("sweep: nearly-uniform needs --allowed-failures");
      }
      for (std::size_t a : allowed_failures) {
        if (a > m - 2) throw ValidationError("sweep: allowed failures must lie in [0, m-2]");
      }
    }
  }
}

std::string SweepScenario::name() const {
  return std::string(to_string(counts)) + "-" + std::string(to_string(values));
}

void run_sweep(const SweepScenario& scenario, std::ostream& out) {
  scenario.validate();
  const auto values = make_values(scenario.values, scenario.m, scenario.power_scale);
  const std::string name = scenario.name();

  auto emit = [&](Method method, std::int64_t n, const std::string& param,
                  const BoundInterval& b) {
    out << name << ',' << to_string(method) << ',' << scenario.m << ',' << n << ',' << param
        << ',' << format_real(b.lower) << ',' << format_real(b.upper) << '\n';
  };

  out << "scenario,method,m,n,param,lower,upper\n";
  for (std::int64_t n : scenario.n_grid) {
    const CategorizedSample sample(make_counts(scenario.counts, scenario.m, n), values);
    for (Method method : scenario.methods) {
      MethodConfig config{.method = method, .side = scenario.side};
      if (method == Method::merged_nest) {
        for (std::size_t h : scenario.merged_categories) {
          config.merged_categories = h;
          emit(method, n, std::to_string(h), compute_bound(config, sample, scenario.delta));
        }
      } else if (method == Method::nearly_uniform) {
        for (std::size_t a : scenario.allowed_failures) {
          config.allowed_failures = a;
          emit(method, n, std::to_string(a), compute_bound(config, sample, scenario.delta));
        }
      } else {
        emit(method, n, "", compute_bound(config, sample, scenario.delta));
      }
    }
  }
}

}  // namespace discbound::cli
