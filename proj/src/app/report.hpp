#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "app/config.hpp"

namespace ehf::app {

inline constexpr std::string_view kToolName = "ehf";
#ifdef EHF_VERSION
inline constexpr std::string_view kToolVersion = EHF_VERSION;
#else
inline constexpr std::string_view kToolVersion = "0.0.0";
#endif

/// Shortest decimal that round-trips, independent of locale.
std::string format_double(double v);

/// RFC-4180 field quoting: quoted when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view s);

/// CSV document preceded by "# key: value" metadata lines.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_metadata(std::string key, std::string value) { metadata_.emplace_back(std::move(key), std::move(value)); }
  /// Throws Error when the row width differs from the header.
  void add_row(std::vector<std::string> row);
  std::size_t row_count() const noexcept { return rows_.size(); }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> metadata_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// tool, version, command, seed and unit constants.
nlohmann::ordered_json metadata_json(const RunConfig& cfg);
void add_common_metadata(CsvTable& t, const RunConfig& cfg);

}  // namespace ehf::app
