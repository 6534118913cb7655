#include <doctest.h>

#include <json.hpp>
#include <string>

#include "app/commands.hpp"
#include "app/config.hpp"
#include "app/report.hpp"

using namespace ehf::app;

TEST_CASE("csv quoting follows RFC 4180") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  CsvTable t({"x", "y"});
  t.add_metadata("seed", "1");
  t.add_row({"1", "a,b"});
  CHECK(t.str() == "# seed: 1\r\nx,y\r\n1,\"a,b\"\r\n");
  CHECK_THROWS_AS(t.add_row({"1"}), ehf::Error);
}

TEST_CASE("number formatting round-trips") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(0.003646689155663013)) == 0.003646689155663013);
  CHECK(format_double(INFINITY) == "inf");
}

TEST_CASE("config parsing: defaults and overrides") {
  const auto cfg = parse_config(R"({"seed": 9, "trials": 12, "particles": [2],
                                    "tolerances": {"det_identity": 1e-8},
                                    "units": {"light_speed": 10}})",
                                Command::verify);
  CHECK(cfg.seed == 9);
  CHECK(cfg.trials == 12);
  CHECK(cfg.particles == std::vector<std::size_t>{2});
  CHECK(cfg.tolerances.at("det_identity") == 1e-8);
  CHECK(cfg.tolerances.at("schur_det") == 1e-10);
  CHECK(cfg.units.light_speed == 10.0);
}

TEST_CASE("config parsing: errors") {
  CHECK_THROWS_AS(parse_config(R"({"sed": 1})", Command::verify), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"tolerances": {"det_identiy": 1}})", Command::verify), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"trials": 0})", Command::verify), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"trials": -3})", Command::verify), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"trials": "many"})", Command::verify), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"tolerances": {"det_identity": -1}})", Command::verify), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"solve1d": {"potential": {"preset": "morse"}}})", Command::solve1d), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"solve1d": {"n": 5, "potential": {"preset": "table", "samples": [1, 2]}}})",
                               Command::solve1d),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"zeeman": {"preset": "tritium"}})", Command::zeeman), ConfigError);
  CHECK_THROWS_AS(zeeman_preset("tritium"), ConfigError);
}

TEST_CASE("parse errors report line and column") {
  try {
    parse_config("{\n  \"seed\": 1,\n  \"trials\": ]\n}", Command::verify, "cfg.json");
    FAIL("expected a parse error");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.rfind("cfg.json:3:", 0) == 0);
  }
}

TEST_CASE("zeeman presets") {
  CHECK(zeeman_preset("hydrogen").m2 == 1836.15267);
  CHECK(zeeman_preset("positronium").m2 == 1.0);
  CHECK(zeeman_preset("deuterium-like").m2 == 3670.48296788);
  const auto cfg = parse_config(R"({"zeeman": {"preset": "positronium", "b": 3}})", Command::zeeman);
  CHECK(cfg.zeeman.m2 == 1.0);
  CHECK(cfg.zeeman.b == 3.0);
}

TEST_CASE("tolerance rule: zero is impossible") {
  CHECK(within_tolerance(0.0, 1e-12));
  CHECK_FALSE(within_tolerance(0.0, 0.0));
  CHECK_FALSE(within_tolerance(NAN, 1.0));
  CHECK_FALSE(within_tolerance(2e-12, 1e-12));
}

TEST_CASE("verify: default tolerances pass and reports are deterministic") {
  auto cfg = default_config(Command::verify);
  cfg.trials = 10;
  const auto a = run_verify(cfg);
  const auto b = run_verify(cfg);
  CHECK(a.exit_code == kExitOk);
  CHECK(a.text == b.text);
  const auto j = nlohmann::json::parse(a.text);
  CHECK(j["metadata"]["seed"] == 42);
  CHECK(j["pass"] == true);
  cfg.seed = 43;
  CHECK(run_verify(cfg).text != a.text);
}

TEST_CASE("verify: zero tolerances flag every check") {
  auto cfg = default_config(Command::verify);
  cfg.trials = 3;
  cfg.particles = {1};
  for (auto& [name, tol] : cfg.tolerances) tol = 0.0;
  const auto out = run_verify(cfg);
  CHECK(out.exit_code == kExitToleranceViolation);
  const auto j = nlohmann::json::parse(out.text);
  for (const auto& c : j["checks"]) CHECK(c["pass"] == false);
}

TEST_CASE("suite streams are independent of suite order") {
  auto cfg = default_config(Command::verify);
  cfg.trials = 5;
  cfg.particles = {1, 2};
  const auto both = run_verify_checks(cfg);
  cfg.particles = {2};
  const auto only2 = run_verify_checks(cfg);
  // det_identity for N=2 is second in the first run and first in the second.
  CHECK(both[1].name == "det_identity");
  CHECK(only2[0].name == "det_identity");
  CHECK(both[1].max_error == only2[0].max_error);
}

TEST_CASE("solve1d: box and coarse flag") {
  auto cfg = default_config(Command::solve1d);
  cfg.solve.n = 2000;
  cfg.solve.levels = 2;
  const auto out = run_solve1d(cfg);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.text.find("# resolution: ok") != std::string::npos);
  CHECK(out.text.find("level,energy,analytic") != std::string::npos);

  cfg.solve.n = 10;
  const auto coarse = run_solve1d(cfg);
  CHECK(coarse.text.find("# resolution: coarse") != std::string::npos);
  CHECK(coarse.text.find("# determinant: dense") != std::string::npos);
  CHECK(coarse.exit_code == kExitOk);
}

TEST_CASE("zeeman: positronium has zero shifts, hydrogen follows the Larmor formula") {
  auto cfg = default_config(Command::zeeman);
  cfg.zeeman = zeeman_preset("positronium");
  const auto p = run_zeeman(cfg);
  CHECK(p.text.find(",inf,0\r\n") != std::string::npos);
  cfg.zeeman = zeeman_preset("hydrogen");
  cfg.zeeman.n_max = 1;
  const auto h = run_zeeman(cfg);
  CHECK(h.text.find("n,l,m,branch,energy,shift,omega_L,m_L,g_L") != std::string::npos);
  CHECK(h.text.find(",0.003646689155663013,") != std::string::npos);
}

TEST_CASE("spin report") {
  auto cfg = default_config(Command::spin_report);
  cfg.spin_particles = 2;
  const auto out = run_spin_report(cfg);
  CHECK(out.exit_code == kExitOk);
  const auto j = nlohmann::json::parse(out.text);
  CHECK(j["same_site_constant"][1] == 2.0);
  CHECK(j["entries"].size() == 36);
}
