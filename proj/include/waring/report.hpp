#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace waring {

enum class Format { json, csv, md };

std::optional<Format> parse_format(std::string_view text);

/**
 * A rendered table plus its provenance. All cells are strings: integers as
 * plain decimals, fractions as "p/q" in lowest terms, approximate decimals
 * only in columns whose name ends in "_approx".
 */
struct ReportDocument {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::optional<std::string> generated_at;  // omitted in deterministic mode

  void add_row(std::vector<std::string> row);
};

/// JSON: {"command", "parameters", "summary", "columns", "rows": [{col: cell}], "generated_at"?}.
/// CSV: header line then one line per row (RFC 4180 quoting).
/// Markdown: heading, parameter and summary lists, pipe table.
std::string render(const ReportDocument& doc, Format format);

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

}  // namespace waring
