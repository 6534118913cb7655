#include "app/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ehf::app {

using nlohmann::json;

std::string_view command_name(Command c) {
  switch (c) {
    case Command::verify: return "verify";
    case Command::solve1d: return "solve1d";
    case Command::zeeman: return "zeeman";
    case Command::spin_report: return "spin-report";
  }
  return "unknown";
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t{
      {"det_identity", 1e-9},   {"det_1d", 1e-13},         {"null_1d", 1e-12},
      {"null_spinor", 1e-10},   {"nullity", 0.5},          {"schur_factor", 1e-11},
      {"schur_det", 1e-10},     {"pauli_product", 1e-12},  {"spin_commutator", 1e-12},
      {"pauli_kinetic", 1e-12}, {"pauli_hamiltonian", 1e-12}, {"stacked_residual", 1e-8},
      {"pencil_det", 1e-8},
  };
  return t;
}

RunConfig default_config(Command c) {
  RunConfig cfg;
  cfg.command = c;
  cfg.tolerances = default_tolerances();
  return cfg;
}

ZeemanSpec zeeman_preset(std::string_view name) {
  ZeemanSpec z;
  z.preset = std::string(name);
  if (name == "hydrogen") {
    z.m2 = 1836.15267;
  } else if (name == "positronium") {
    z.m2 = 1.0;
  } else if (name == "deuterium-like") {
    z.m2 = 3670.48296788;
  } else {
    throw ConfigError("unknown zeeman preset '" + std::string(name) +
                      "' (expected hydrogen, positronium or deuterium-like)");
  }
  return z;
}

namespace {

struct LineCol {
  std::size_t line = 1;
  std::size_t column = 1;
};

LineCol locate(std::string_view text, std::size_t byte) {
  LineCol lc;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++lc.line;
      lc.column = 1;
    } else {
      ++lc.column;
    }
  }
  return lc;
}

void reject_unknown(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError(std::string(where) + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const auto a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
  }
}

template <class T>
T read(const json& obj, std::string_view where, const char* key, T fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  try {
    if constexpr (std::is_same_v<T, double>) {
      if (!it->is_number()) throw ConfigError("");
    } else if constexpr (std::is_integral_v<T>) {
      if (!it->is_number_integer()) throw ConfigError("");
      if constexpr (std::is_unsigned_v<T>) {
        if (it->is_number_integer() && !it->is_number_unsigned()) throw ConfigError("");
      }
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!it->is_string()) throw ConfigError("");
    }
    return it->get<T>();
  } catch (const std::exception&) {
    throw ConfigError(std::string(where) + "." + key + ": wrong type or out of range");
  }
}

void read_units(const json& j, Units& u) {
  reject_unknown(j, "units", {"hbar", "elementary_charge", "electron_mass", "light_speed"});
  u.hbar = read(j, "units", "hbar", u.hbar);
  u.elementary_charge = read(j, "units", "elementary_charge", u.elementary_charge);
  u.electron_mass = read(j, "units", "electron_mass", u.electron_mass);
  u.light_speed = read(j, "units", "light_speed", u.light_speed);
}

void read_solve(const json& j, SolveSpec& s) {
  reject_unknown(j, "solve1d", {"x_min", "x_max", "n", "mass", "levels", "potential"});
  s.x_min = read(j, "solve1d", "x_min", s.x_min);
  s.x_max = read(j, "solve1d", "x_max", s.x_max);
  s.n = read(j, "solve1d", "n", s.n);
  s.mass = read(j, "solve1d", "mass", s.mass);
  s.levels = read(j, "solve1d", "levels", s.levels);
  if (const auto it = j.find("potential"); it != j.end()) {
    reject_unknown(*it, "solve1d.potential", {"preset", "omega", "samples"});
    s.potential.preset = read(*it, "solve1d.potential", "preset", s.potential.preset);
    s.potential.omega = read(*it, "solve1d.potential", "omega", s.potential.omega);
    if (const auto sm = it->find("samples"); sm != it->end()) {
      if (!sm->is_array()) throw ConfigError("solve1d.potential.samples: expected an array of numbers");
      s.potential.samples.clear();
      for (const auto& v : *sm) {
        if (!v.is_number()) throw ConfigError("solve1d.potential.samples: expected an array of numbers");
        s.potential.samples.push_back(v.get<double>());
      }
    }
  }
}

void read_zeeman(const json& j, ZeemanSpec& z) {
  reject_unknown(j, "zeeman", {"preset", "m1", "m2", "z", "b", "n_max"});
  if (j.contains("preset")) {
    const double b = z.b;
    const int n_max = z.n_max;
    z = zeeman_preset(read(j, "zeeman", "preset", z.preset));
    z.b = b;
    z.n_max = n_max;
  }
  z.m1 = read(j, "zeeman", "m1", z.m1);
  z.m2 = read(j, "zeeman", "m2", z.m2);
  z.z = read(j, "zeeman", "z", z.z);
  z.b = read(j, "zeeman", "b", z.b);
  z.n_max = read(j, "zeeman", "n_max", z.n_max);
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (cfg.particles.empty()) throw ConfigError("particles must list at least one particle count");
  for (const auto n : cfg.particles)
    if (n < 1 || n > 4) throw ConfigError("particle counts must be in 1..4");
  for (const auto& [name, tol] : cfg.tolerances) {
    if (!(tol >= 0.0) || !std::isfinite(tol)) throw ConfigError("tolerance '" + name + "' must be finite and >= 0");
  }
  const auto& u = cfg.units;
  for (const double v : {u.hbar, u.elementary_charge, u.electron_mass, u.light_speed}) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("unit constants must be positive and finite");
  }
  const auto& s = cfg.solve;
  if (!(s.x_max > s.x_min)) throw ConfigError("solve1d: need x_max > x_min");
  if (s.n < 3) throw ConfigError("solve1d: n must be >= 3");
  if (!(s.mass > 0.0)) throw ConfigError("solve1d: mass must be positive");
  if (s.levels < 1) throw ConfigError("solve1d: levels must be >= 1");
  const auto& p = s.potential;
  if (p.preset != "box" && p.preset != "harmonic" && p.preset != "table") {
    throw ConfigError("solve1d: unknown potential preset '" + p.preset + "' (expected box, harmonic or table)");
  }
  if (p.preset == "table" && p.samples.size() != s.n) {
    throw ConfigError("solve1d: table potential has " + std::to_string(p.samples.size()) + " samples for n = " +
                      std::to_string(s.n));
  }
  const auto& z = cfg.zeeman;
  if (!(z.m1 > 0.0) || !(z.m2 > 0.0)) throw ConfigError("zeeman: masses must be positive");
  if (!std::isfinite(z.b) || !std::isfinite(z.z)) throw ConfigError("zeeman: b and z must be finite");
  if (z.n_max < 1) throw ConfigError("zeeman: n_max must be >= 1");
  if (cfg.spin_particles < 1 || cfg.spin_particles > 4) throw ConfigError("spin-report: particles must be in 1..4");
}

RunConfig parse_config(std::string_view text, Command c, std::string_view source) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto lc = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    std::ostringstream msg;
    msg << source << ":" << lc.line << ":" << lc.column << ": parse error: " << e.what();
    throw ConfigError(msg.str());
  }
  RunConfig cfg = default_config(c);
  reject_unknown(j, "config", {"seed", "trials", "particles", "tolerances", "units", "solve1d", "zeeman", "spin_report"});
  cfg.seed = read(j, "config", "seed", cfg.seed);
  cfg.trials = read(j, "config", "trials", cfg.trials);
  if (const auto it = j.find("particles"); it != j.end()) {
    if (!it->is_array()) throw ConfigError("config.particles: expected an array of integers");
    cfg.particles.clear();
    for (const auto& v : *it) {
      if (!v.is_number_unsigned()) throw ConfigError("config.particles: expected an array of positive integers");
      cfg.particles.push_back(v.get<std::size_t>());
    }
  }
  if (const auto it = j.find("tolerances"); it != j.end()) {
    if (!it->is_object()) throw ConfigError("config.tolerances: expected an object");
    for (const auto& [name, value] : it->items()) {
      if (!default_tolerances().contains(name)) throw ConfigError("tolerances: unknown tolerance '" + name + "'");
      if (!value.is_number()) throw ConfigError("tolerances." + name + ": expected a number");
      cfg.tolerances[name] = value.get<double>();
    }
  }
  if (const auto it = j.find("units"); it != j.end()) read_units(*it, cfg.units);
  if (const auto it = j.find("solve1d"); it != j.end()) read_solve(*it, cfg.solve);
  if (const auto it = j.find("zeeman"); it != j.end()) read_zeeman(*it, cfg.zeeman);
  if (const auto it = j.find("spin_report"); it != j.end()) {
    reject_unknown(*it, "spin_report", {"particles"});
    cfg.spin_particles = read(*it, "spin_report", "particles", cfg.spin_particles);
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path, Command c) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), c, path);
}

}  // namespace ehf::app
