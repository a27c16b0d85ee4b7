#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "discbound/sample.hpp"

namespace discbound::cli {

/// Malformed input file. The message names the line and field when known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rows as read from disk, before sorting and merging equal values.
struct RawSample {
  std::vector<std::int64_t> counts;
  std::vector<double> values;
};

/// CSV with header `value,count`, one category per row. Blank lines are
/// skipped; CRLF line endings are accepted.
RawSample read_sample_csv(std::istream& in, std::string_view source);

/// JSON object {"values": [...], "counts": [...]}.
RawSample read_sample_json(std::istream& in, std::string_view source);

/// Picks JSON when the path ends in .json or the first non-blank byte is
/// '{', CSV otherwise.
RawSample read_sample_file(const std::filesystem::path& path);

/// Values only, for merge planning: a `value` or `value,count` CSV, or JSON
/// with a "values" array. Sorted and de-duplicated.
std::vector<double> read_values_file(const std::filesystem::path& path);

/// Writes the `value,count` CSV accepted by read_sample_csv.
void write_sample_csv(std::ostream& out, const CategorizedSample& s);

/// 17 significant digits in the C locale, so output is byte-stable.
std::string format_real(double x);

}  // namespace discbound::cli
