#include "sample_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace discbound::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string where(std::string_view source, std::size_t line, std::string_view field) {
  std::string out(source);
  out += ":" + std::to_string(line);
  if (!field.empty()) {
    out += ", field '";
    out += field;
    out += "'";
  }
  return out;
}

double parse_real(std::string_view text, std::string_view source, std::size_t line,
                  std::string_view field) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() ||
      !std::isfinite(x)) {
    throw ParseError(where(source, line, field) + ": expected a finite number, got '" +
                     std::string(text) + "'");
  }
  return x;
}

std::int64_t parse_count(std::string_view text, std::string_view source, std::size_t line,
                         std::string_view field) {
  std::int64_t k = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || k < 0) {
    throw ParseError(where(source, line, field) + ": expected a nonnegative integer, got '" +
                     std::string(text) + "'");
  }
  return k;
}

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::filesystem::path& path, std::string_view text) {
  if (path.extension() == ".json") return true;
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text[first] == '{';
}

}  // namespace

RawSample read_sample_csv(std::istream& in, std::string_view source) {
  RawSample raw;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const auto fields = split_commas(body);
    if (!header_seen) {
      if (fields.size() != 2 || fields[0] != "value" || fields[1] != "count") {
        throw ParseError(where(source, line_no, "") + ": expected header 'value,count'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 2) {
      throw ParseError(where(source, line_no, "") + ": expected 2 fields, got " +
                       std::to_string(fields.size()));
    }
    raw.values.push_back(parse_real(fields[0], source, line_no, "value"));
    raw.counts.push_back(parse_count(fields[1], source, line_no, "count"));
  }
  if (!header_seen) throw ParseError(std::string(source) + ": empty input");
  return raw;
}

RawSample read_sample_json(std::istream& in, std::string_view source) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(source) + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("values") || !doc.contains("counts")) {
    throw ParseError(std::string(source) + ": expected an object with 'values' and 'counts'");
  }
  RawSample raw;
  const auto& values = doc["values"];
  const auto& counts = doc["counts"];
  if (!values.is_array()) throw ParseError(std::string(source) + ", field 'values': not an array");
  if (!counts.is_array()) throw ParseError(std::string(source) + ", field 'counts': not an array");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_number()) {
      throw ParseError(std::string(source) + ", field 'values[" + std::to_string(i) +
                       "]': expected a number");
    }
    raw.values.push_back(values[i].get<double>());
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (!counts[i].is_number_integer() || counts[i].get<std::int64_t>() < 0) {
      throw ParseError(std::string(source) + ", field 'counts[" + std::to_string(i) +
                       "]': expected a nonnegative integer");
    }
    raw.counts.push_back(counts[i].get<std::int64_t>());
  }
  return raw;
}

RawSample read_sample_file(const std::filesystem::path& path) {
  const std::string text = read_all(path);
  std::istringstream in(text);
  if (looks_like_json(path, text)) return read_sample_json(in, path.string());
  return read_sample_csv(in, path.string());
}

std::vector<double> read_values_file(const std::filesystem::path& path) {
  const std::string text = read_all(path);
  std::vector<double> values;
  if (looks_like_json(path, text)) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array()) {
      throw ParseError(path.string() + ": expected an object with a 'values' array");
    }
    for (const auto& v : doc["values"]) {
      if (!v.is_number()) throw ParseError(path.string() + ", field 'values': non-numeric entry");
      values.push_back(v.get<double>());
    }
  } else {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::size_t width = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string_view body = trim(line);
      if (body.empty()) continue;
      const auto fields = split_commas(body);
      if (!header_seen) {
        if (fields.empty() || fields[0] != "value" || fields.size() > 2 ||
            (fields.size() == 2 && fields[1] != "count")) {
          throw ParseError(where(path.string(), line_no, "") +
                           ": expected header 'value' or 'value,count'");
        }
        header_seen = true;
        width = fields.size();
        continue;
      }
      if (fields.size() != width) {
        throw ParseError(where(path.string(), line_no, "") + ": expected " +
                         std::to_string(width) + " fields");
      }
      values.push_back(parse_real(fields[0], path.string(), line_no, "value"));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

void write_sample_csv(std::ostream& out, const CategorizedSample& s) {
  out << "value,count\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << format_real(s.values()[i]) << ',' << s.counts()[i] << '\n';
  }
}

std::string format_real(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  return std::string(buf.data(), ec == std::errc{} ? ptr : buf.data());
}

}  // namespace discbound::cli
