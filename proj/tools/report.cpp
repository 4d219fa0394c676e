#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace entkit::cli {

Report& Report::add(std::string key, ReportValue value, std::string op) {
  entries.push_back({std::move(key), std::move(value), std::move(op)});
  return *this;
}

Report& Report::section(std::string section_title) {
  sections.push_back(Report{std::move(section_title), {}, {}});
  return sections.back();
}

std::string format_double(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

std::string value_text(const ReportValue& value) {
  struct Visitor {
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, value);
}

void render_text_into(const Report& report, int depth, std::ostream& out) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  if (!report.title.empty()) {
    out << indent << report.title << "\n";
  }
  std::size_t key_width = 0;
  std::size_t value_width = 0;
  for (const ReportEntry& entry : report.entries) {
    key_width = std::max(key_width, entry.key.size());
    value_width = std::max(value_width, value_text(entry.value).size());
  }
  for (const ReportEntry& entry : report.entries) {
    const std::string value = value_text(entry.value);
    out << indent << "  " << entry.key
        << std::string(key_width - entry.key.size() + 2, ' ') << value;
    if (!entry.op.empty()) {
      out << std::string(value_width - value.size() + 2, ' ') << "["
          << entry.op << "]";
    }
    out << "\n";
  }
  for (const Report& section : report.sections) {
    render_text_into(section, depth + 1, out);
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  render_text_into(report, 0, out);
  return out.str();
}

nlohmann::json render_json(const Report& report) {
  nlohmann::json j;
  j["title"] = report.title;
  j["entries"] = nlohmann::json::array();
  for (const ReportEntry& entry : report.entries) {
    nlohmann::json e;
    e["key"] = entry.key;
    std::visit([&e](const auto& v) { e["value"] = v; }, entry.value);
    e["op"] = entry.op;
    j["entries"].push_back(std::move(e));
  }
  j["sections"] = nlohmann::json::array();
  for (const Report& section : report.sections) {
    j["sections"].push_back(render_json(section));
  }
  return j;
}

}  // namespace entkit::cli
