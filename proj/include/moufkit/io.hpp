#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "abelext.hpp"
#include "error.hpp"
#include "loop.hpp"

namespace moufkit {

/// Raised when a file cannot be opened or written.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the `.loop` text format into a raw table without validating loop
/// axioms. Line 1 is n, then n rows of n decimal entries; lines starting with
/// '#' are comments; the text must end with a newline.
inline std::vector<std::vector<std::int64_t>> parse_loop_text(std::string_view text) {
  if (text.empty() || text.back() != '\n') throw loop_error(errc::parse_error, "missing trailing newline");
  std::vector<std::vector<std::int64_t>> rows;
  std::int64_t n = -1;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    auto where = [&] { return "line " + std::to_string(line_no); };
    std::vector<std::int64_t> values;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && line[i] >= '0' && line[i] <= '9') ++i;
      if (start == i) throw loop_error(errc::parse_error, where() + ": unexpected character '" + std::string(1, line[i]) + "'");
      if (i - start > 9) throw loop_error(errc::parse_error, where() + ": number too long");
      values.push_back(std::stoll(std::string(line.substr(start, i - start))));
    }
    if (n < 0) {
      if (values.size() != 1) throw loop_error(errc::parse_error, where() + ": expected the order on its own");
      n = values[0];
      if (n <= 0) throw loop_error(errc::parse_error, "order must be positive");
      if (static_cast<std::size_t>(n) > max_loop_order)
        throw loop_error(errc::order_too_large, "order " + std::to_string(n) + " exceeds 65536");
      continue;
    }
    if (values.empty()) throw loop_error(errc::parse_error, where() + ": empty line");
    if (rows.size() == static_cast<std::size_t>(n)) throw loop_error(errc::parse_error, where() + ": more than n rows");
    if (values.size() != static_cast<std::size_t>(n))
      throw loop_error(errc::parse_error, where() + ": row has " + std::to_string(values.size()) + " entries, expected " +
                                              std::to_string(n));
    rows.push_back(std::move(values));
  }
  if (n < 0) throw loop_error(errc::parse_error, "missing order line");
  if (rows.size() != static_cast<std::size_t>(n))
    throw loop_error(errc::parse_error, "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
  return rows;
}

inline FiniteLoop parse_loop(std::string_view text) { return FiniteLoop::from_table(parse_loop_text(text)); }

inline std::string serialize_loop(const FiniteLoop& q) {
  const std::size_t n = q.order();
  std::string out = std::to_string(n) + "\n";
  out.reserve(n * n * 4);
  for (std::size_t a = 0; a < n; ++a) {
    auto row = q.row(static_cast<element>(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (b) out += ' ';
      out += std::to_string(row[b]);
    }
    out += '\n';
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write " + path);
  out << text;
  if (!out) throw io_error("write failed for " + path);
}

inline FiniteLoop read_loop_file(const std::string& path) { return parse_loop(read_text_file(path)); }

namespace detail {

inline nlohmann::json table_json(const FiniteLoop& q) {
  auto rows = nlohmann::json::array();
  for (std::size_t a = 0; a < q.order(); ++a) {
    auto r = q.row(static_cast<element>(a));
    rows.push_back(std::vector<element>(r.begin(), r.end()));
  }
  return rows;
}

inline FiniteLoop table_from_json(const nlohmann::json& j) {
  return FiniteLoop::from_table(j.get<std::vector<std::vector<std::int64_t>>>());
}

}  // namespace detail

/// Extension data as JSON: {"schema": 1, "factor": rows, "kernel": rows,
/// "phi": [perm per cell], "psi": [perm per cell], "theta": [elements]},
/// cells ordered r * |F| + s. Keys come out sorted.
inline nlohmann::json extension_to_json(const ExtensionData& d) {
  nlohmann::json j;
  j["schema"] = 1;
  j["factor"] = detail::table_json(d.factor);
  j["kernel"] = detail::table_json(d.kernel);
  auto maps = [](const std::vector<ElementMap>& v) {
    auto a = nlohmann::json::array();
    for (const auto& m : v) a.push_back(m.images());
    return a;
  };
  j["phi"] = maps(d.phi);
  j["psi"] = maps(d.psi);
  j["theta"] = d.theta;
  return j;
}

inline ExtensionData extension_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<int>() != 1) throw loop_error(errc::parse_error, "unsupported extension schema");
    ExtensionData d{detail::table_from_json(j.at("factor")), detail::table_from_json(j.at("kernel")), {}, {}, {}};
    for (const auto& p : j.at("phi")) d.phi.emplace_back(p.get<std::vector<element>>());
    for (const auto& p : j.at("psi")) d.psi.emplace_back(p.get<std::vector<element>>());
    d.theta = j.at("theta").get<std::vector<element>>();
    if (auto v = extension_data_violation(d)) throw loop_error(errc::invalid_extension_data, *v);
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw loop_error(errc::parse_error, e.what());
  }
}

inline std::string serialize_extension(const ExtensionData& d) { return extension_to_json(d).dump() + "\n"; }

}  // namespace moufkit
