#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discbound/bound_interval.hpp"

namespace discbound::cli {

enum class CountShape { balanced, doubling };
enum class ValueShape { linear, exponential, power };

std::optional<CountShape> parse_count_shape(std::string_view text);
std::optional<ValueShape> parse_value_shape(std::string_view text);
std::string_view to_string(CountShape shape);
std::string_view to_string(ValueShape shape);

/// Counts summing exactly to n. Balanced weights are equal; doubling
/// weights are 2^(i-1) / (2^m - 1). Ideal shares are rounded by largest
/// remainder, ties going to the lower category index, so balanced counts
/// are exactly n/m whenever m divides n.
std::vector<std::int64_t> make_counts(CountShape shape, std::size_t m, std::int64_t n);

/// linear: 0..m-1; exponential: 2^0..2^(m-1); power: 2^(scale (i-1) / m).
std::vector<double> make_values(ValueShape shape, std::size_t m, double power_scale = 20.0);

struct SweepScenario {
  CountShape counts = CountShape::balanced;
  ValueShape values = ValueShape::linear;
  double power_scale = 20.0;
  std::size_t m = 10;
  std::vector<std::int64_t> n_grid;
  double delta = 0.05;
  Side side = Side::two_sided;
  std::vector<Method> methods;
  std::vector<std::size_t> merged_categories;  // one row per h for merged-nest
  std::vector<std::size_t> allowed_failures;   // one row per a for nearly-uniform

  /// Throws ValidationError when the scenario cannot be evaluated.
  void validate() const;
  /// e.g. "balanced-linear".
  [[nodiscard]] std::string name() const;
};

/// Writes `scenario,method,m,n,param,lower,upper` rows, n-major then method
/// order, refinement parameters in the given order. Output is a pure
/// function of the scenario.
void run_sweep(const SweepScenario& scenario, std::ostream& out);

}  // namespace discbound::cli
