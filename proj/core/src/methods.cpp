#include "discbound/methods.hpp"

#include <algorithm>

#include "discbound/box.hpp"
#include "discbound/concentration.hpp"
#include "discbound/errors.hpp"
#include "discbound/nest.hpp"
#include "discbound/refinement.hpp"

namespace discbound {

std::string_view to_string(Side side) noexcept {
  switch (side) {
    case Side::lower: return "lower";
    case Side::upper: return "upper";
    case Side::two_sided: return "two";
  }
  return "?";
}

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::box: return "box";
    case Method::nest: return "nest";
    case Method::hoeffding: return "hoeffding";
    case Method::maurer_pontil: return "maurer-pontil";
    case Method::merged_nest: return "merged-nest";
    case Method::nearly_uniform: return "nearly-uniform";
  }
  return "?";
}

std::optional<Side> parse_side(std::string_view text) noexcept {
  if (text == "lower") return Side::lower;
  if (text == "upper") return Side::upper;
  if (text == "two" || text == "two-sided") return Side::two_sided;
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view text) noexcept {
  for (Method m : {Method::box, Method::nest, Method::hoeffding, Method::maurer_pontil,
                   Method::merged_nest, Method::nearly_uniform}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

void MethodConfig::validate() const {
  if (method == Method::merged_nest && merged_categories == 1) {
    throw ValidationError("merged-nest needs at least two merged categories");
  }
}

std::string MethodConfig::describe() const {
  std::string out(to_string(method));
  if (method == Method::merged_nest) {
    out += "(h=" + (merged_categories == 0 ? std::string("m/2") : std::to_string(merged_categories)) + ")";
  } else if (method == Method::nearly_uniform) {
    out += "(a=" + std::to_string(allowed_failures) + ")";
  }
  out += "/";
  out += to_string(side);
  return out;
}

namespace {

BoundInterval one_sided_view(BoundInterval b, const CategorizedSample& s, Side side) {
  b.side = side;
  if (side == Side::upper) b.lower = s.min_value();
  if (side == Side::lower) b.upper = s.max_value();
  return b;
}

}  // namespace

BoundInterval compute_bound(const MethodConfig& config, const CategorizedSample& s, double delta) {
  config.validate();
  switch (config.method) {
    case Method::box:
      return box_bounds(s, delta, config.side);
    case Method::nest:
      return nest_bounds(s, delta, config.side);
    case Method::hoeffding:
      return one_sided_view(hoeffding_bounds(s, delta), s, config.side);
    case Method::maurer_pontil:
      return one_sided_view(maurer_pontil_bounds(s, delta), s, config.side);
    case Method::merged_nest: {
      const std::size_t h = config.merged_categories == 0
                                ? std::max<std::size_t>(2, s.size() / 2)
                                : config.merged_categories;
      return merged_nest_bounds(s, delta, h, config.side);
    }
    case Method::nearly_uniform:
      return nearly_uniform_nest_bounds(s, delta, config.allowed_failures, config.side);
  }
  throw ValidationError("unknown method");
}

}  // namespace discbound
