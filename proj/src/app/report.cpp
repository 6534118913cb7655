#include "app/report.hpp"

#include <charconv>
#include <cmath>

namespace ehf::app {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw Error("csv row width does not match the header");
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  for (const auto& [k, v] : metadata_) {
    out += "# ";
    out += k;
    out += ": ";
    out += v;
    out += "\r\n";
  }
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fields[i]);
    }
    out += "\r\n";
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

nlohmann::ordered_json metadata_json(const RunConfig& cfg) {
  nlohmann::ordered_json m;
  m["tool"] = kToolName;
  m["version"] = kToolVersion;
  m["command"] = command_name(cfg.command);
  m["seed"] = cfg.seed;
  m["units"] = {{"hbar", cfg.units.hbar},
                {"elementary_charge", cfg.units.elementary_charge},
                {"electron_mass", cfg.units.electron_mass},
                {"light_speed", cfg.units.light_speed}};
  return m;
}

void add_common_metadata(CsvTable& t, const RunConfig& cfg) {
  t.add_metadata("tool", std::string(kToolName));
  t.add_metadata("version", std::string(kToolVersion));
  t.add_metadata("command", std::string(command_name(cfg.command)));
  t.add_metadata("seed", std::to_string(cfg.seed));
  t.add_metadata("units", "hbar=" + format_double(cfg.units.hbar) +
                              " elementary_charge=" + format_double(cfg.units.elementary_charge) +
                              " electron_mass=" + format_double(cfg.units.electron_mass) +
                              " light_speed=" + format_double(cfg.units.light_speed));
}

}  // namespace ehf::app
