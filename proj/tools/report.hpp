#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace entkit::cli {

using ReportValue = std::variant<double, std::int64_t, bool, std::string>;

/// One reported figure plus the operation that produced it.
struct ReportEntry {
  std::string key;
  ReportValue value;
  std::string op;
};

/// Ordered tree of entries. The same tree feeds both renderers, so the
/// text and JSON outputs always carry the same values.
struct Report {
  std::string title;
  std::vector<ReportEntry> entries;
  std::vector<Report> sections;

  Report& add(std::string key, ReportValue value, std::string op);
  Report& section(std::string section_title);
};

/// Aligned-column rendering: key, value, [operation]. Doubles print with
/// 17 significant digits so the two output formats agree exactly.
std::string render_text(const Report& report);

nlohmann::json render_json(const Report& report);

/// The exact double formatting used by the text renderer.
std::string format_double(double value);

}  // namespace entkit::cli
