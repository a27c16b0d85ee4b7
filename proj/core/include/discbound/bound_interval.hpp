#pragma once

#include <optional>
#include <string_view>

namespace discbound {

enum class Side { lower, upper, two_sided };

enum class Method { box, nest, hoeffding, maurer_pontil, merged_nest, nearly_uniform };

[[nodiscard]] std::string_view to_string(Side side) noexcept;
[[nodiscard]] std::string_view to_string(Method method) noexcept;

/// Accepts "lower", "upper", "two" and "two-sided".
[[nodiscard]] std::optional<Side> parse_side(std::string_view text) noexcept;
/// Accepts the names printed by to_string(Method).
[[nodiscard]] std::optional<Method> parse_method(std::string_view text) noexcept;

/// Bounds on the mean p*.v holding jointly with probability at least 1 - delta.
///
/// A one-sided result carries the trivial support endpoint on its open side
/// (min value for upper-only, max value for lower-only).
struct BoundInterval {
  double lower = 0.0;
  double upper = 0.0;
  double delta = 0.0;
  Method method = Method::nest;
  Side side = Side::two_sided;

  [[nodiscard]] double width() const noexcept { return upper - lower; }
};

}  // namespace discbound
