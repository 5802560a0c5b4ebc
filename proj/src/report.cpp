#include "waring/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace waring {

std::optional<Format> parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "md") return Format::md;
  return std::nullopt;
}

void ReportDocument::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("report '" + command + "': row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

namespace {

std::string render_json(const ReportDocument& doc) {
  nlohmann::ordered_json j;
  j["command"] = doc.command;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.parameters) j["parameters"][k] = v;
  j["summary"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.summary) j["summary"][k] = v;
  j["columns"] = doc.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < doc.columns.size(); ++i) r[doc.columns[i]] = row[i];
    j["rows"].push_back(std::move(r));
  }
  if (doc.generated_at) j["generated_at"] = *doc.generated_at;
  return j.dump(2) + "\n";
}

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const ReportDocument& doc) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i != 0) os << ',';
      os << csv_cell(cells[i]);
    }
    os << '\n';
  };
  line(doc.columns);
  for (const auto& row : doc.rows) line(row);
  return os.str();
}

std::string md_cell(const std::string& cell) {
  std::string out;
  for (char c : cell) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string render_md(const ReportDocument& doc) {
  std::ostringstream os;
  os << "# " << doc.command << "\n\n";
  if (!doc.parameters.empty()) {
    os << "Parameters:\n\n";
    for (const auto& [k, v] : doc.parameters) os << "- " << k << ": " << md_cell(v) << '\n';
    os << '\n';
  }
  if (!doc.summary.empty()) {
    os << "Summary:\n\n";
    for (const auto& [k, v] : doc.summary) os << "- " << k << ": " << md_cell(v) << '\n';
    os << '\n';
  }
  if (!doc.columns.empty()) {
    os << '|';
    for (const auto& c : doc.columns) os << ' ' << c << " |";
    os << "\n|";
    for (std::size_t i = 0; i < doc.columns.size(); ++i) os << " --- |";
    os << '\n';
    for (const auto& row : doc.rows) {
      os << '|';
      for (const auto& cell : row) os << ' ' << md_cell(cell) << " |";
      os << '\n';
    }
  }
  if (doc.generated_at) os << "\ngenerated_at: " << *doc.generated_at << '\n';
  return os.str();
}

}  // namespace

std::string render(const ReportDocument& doc, Format format) {
  switch (format) {
    case Format::json: return render_json(doc);
    case Format::csv: return render_csv(doc);
    case Format::md: return render_md(doc);
  }
  throw std::invalid_argument("render: unknown format");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace waring
