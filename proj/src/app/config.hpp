#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ehf/errors.hpp"
#include "ehf/units.hpp"

namespace ehf::app {

/// Malformed or invalid configuration; the tool exits with code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Command { verify, solve1d, zeeman, spin_report };

std::string_view command_name(Command c);

struct PotentialSpec {
  std::string preset = "box";  // box | harmonic | table
  double omega = 1.0;          // harmonic: V = m omega^2 x^2 / 2
  std::vector<double> samples; // table: one value per interior grid point
};

struct SolveSpec {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n = 2000;
  double mass = 1.0;
  std::size_t levels = 5;
  PotentialSpec potential;
};

struct ZeemanSpec {
  std::string preset = "hydrogen";
  double m1 = 1.0;
  double m2 = 1836.15267;
  double z = 1.0;
  double b = 1.0;
  int n_max = 2;
};

struct RunConfig {
  Command command = Command::verify;
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  std::vector<std::size_t> particles{1, 2, 3};
  std::map<std::string, double> tolerances;
  Units units{};
  SolveSpec solve;
  ZeemanSpec zeeman;
  std::size_t spin_particles = 2;
};

/// Every recognised tolerance name with its default.
const std::map<std::string, double>& default_tolerances();

RunConfig default_config(Command c);

/// Masses/charge for a named preset: hydrogen, positronium, deuterium-like.
ZeemanSpec zeeman_preset(std::string_view name);

/// Parses a JSON document on top of the defaults for `c`. Unknown keys, type
/// mismatches and out-of-range values raise ConfigError; syntax errors carry
/// source:line:column.
RunConfig parse_config(std::string_view text, Command c, std::string_view source = "<config>");

RunConfig load_config(const std::string& path, Command c);

/// Range checks shared by file and flag input.
void validate(const RunConfig& cfg);

}  // namespace ehf::app
