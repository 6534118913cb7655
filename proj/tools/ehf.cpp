// ehf: verification suites, 1-D spectra, Zeeman tables and spin reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "app/commands.hpp"
#include "app/config.hpp"

using namespace ehf::app;

namespace {

int emit(const CommandOutput& out, const std::string& path) {
  if (path.empty()) {
    std::cout << out.text;
    std::cout.flush();
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      std::cerr << "ehf: cannot write '" << path << "'\n";
      return kExitConfigError;
    }
    f << out.text;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended-Hamiltonian factorization toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write the report to FILE instead of stdout");

  std::string verify_config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  auto* verify = app.add_subcommand("verify", "Run the randomized verification suites");
  verify->add_option("--config", verify_config, "JSON config file")->check(CLI::ExistingFile);
  verify->add_option("--seed", seed, "Master random seed");
  verify->add_option("--trials", trials, "Samples per suite");

  std::string solve_config;
  auto* solve = app.add_subcommand("solve1d", "Spectrum of the eliminated 1-D operator");
  solve->add_option("--config", solve_config, "JSON config file")->required()->check(CLI::ExistingFile);

  std::string zeeman_preset_name, zeeman_config;
  auto* zeeman = app.add_subcommand("zeeman", "Two-particle Zeeman level table (CSV)");
  auto* preset_opt = zeeman->add_option("--preset", zeeman_preset_name, "hydrogen | positronium | deuterium-like");
  auto* zconfig_opt = zeeman->add_option("--config", zeeman_config, "JSON config file")->check(CLI::ExistingFile);
  preset_opt->excludes(zconfig_opt);
  zeeman->require_option(1);

  std::size_t spin_particles = 2;
  auto* spin = app.add_subcommand("spin-report", "Commutator table of the embedded Pauli matrices");
  spin->add_option("--particles", spin_particles, "Particle count (1..4)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    RunConfig cfg;
    if (*verify) {
      cfg = verify_config.empty() ? default_config(Command::verify) : load_config(verify_config, Command::verify);
      if (seed) cfg.seed = *seed;
      if (trials) cfg.trials = *trials;
    } else if (*solve) {
      cfg = load_config(solve_config, Command::solve1d);
    } else if (*zeeman) {
      if (!zeeman_config.empty()) {
        cfg = load_config(zeeman_config, Command::zeeman);
      } else {
        cfg = default_config(Command::zeeman);
        cfg.zeeman = zeeman_preset(zeeman_preset_name);
      }
    } else {
      cfg = default_config(Command::spin_report);
      cfg.spin_particles = spin_particles;
    }
    validate(cfg);
    return emit(run(cfg), out_path);
  } catch (const ConfigError& e) {
    std::cerr << "ehf: config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ehf::Error& e) {
    std::cerr << "ehf: " << e.what() << "\n";
    return kExitConfigError;
  }
}
