// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance [path-to-ehf-tool]   (CLI criterion runs the tool when given)

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "app/commands.hpp"
#include "app/config.hpp"
#include "ehf/errors.hpp"
#include "ehf/extham.hpp"
#include "ehf/quantize.hpp"
#include "ehf/random.hpp"
#include "ehf/spin.hpp"
#include "ehf/zeeman.hpp"

using namespace ehf;
using linalg::Complex;
using linalg::ComplexMatrix;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [violated]");
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. det G against K^2 for N = 1, 2, 3, through LU and Schur.
Outcome determinant_identity() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 1; n <= 3; ++n) {
    auto g = rng::stream(kSeed, "acceptance/det/" + std::to_string(n));
    double worst = 0.0, worst_power = 0.0;
    for (int t = 0; t < 100; ++t) {
      const auto s = rng::system_sample(g, n);
      const auto gm = extham::build_g_n(s);
      const Complex lu = linalg::det_lu(gm);
      const Complex schur = linalg::block_det_schur(gm, {std::size_t{1} << n});
      const double mk = extham::minus_k(s);
      const double k2 = mk * mk;
      const double floor = std::max(std::abs(k2), 1e-6);
      worst = std::max({worst, std::abs(lu - k2) / floor, std::abs(schur - k2) / floor});
      worst_power = std::max(worst_power, extham::verify_det_identity(s).max_rel_err);
    }
    o.require(worst <= 1e-9, "N=" + std::to_string(n) + " max rel err vs K^2 " + fmt(worst));
    o.detail += " (vs (-K)^" + std::to_string(std::size_t{1} << n) + ": " + fmt(worst_power) + ")";
  }
  const double dt = seconds_since(t0);
  o.require(dt <= 10.0, "runtime " + fmt(dt) + " s");
  return o;
}

// 2. 1-D factorization.
Outcome one_dimensional() {
  Outcome o;
  auto g = rng::stream(kSeed, "acceptance/1d");
  double det_err = 0.0, null_err = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto s = rng::sample_1d(g);
    const double mk = extham::minus_k(s);
    det_err = std::max(det_err, std::abs(linalg::det_lu(extham::build_g_1d(s)) - mk) / std::max(1.0, std::abs(mk)));
    auto on = s;
    on.energy = s.potential + s.momentum * s.momentum / (2.0 * s.mass);
    const auto theta = extham::null_spinor_1d(on, rng::complex(g));
    null_err = std::max(null_err, linalg::norm2(extham::build_g_1d(on) * theta) / linalg::norm2(theta));
  }
  o.require(det_err <= 1e-13, "det vs -K " + fmt(det_err));
  o.require(null_err <= 1e-12, "null residual " + fmt(null_err));
  return o;
}

// 3. Null-space dimension on shell.
Outcome null_space_dimension() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto g = rng::stream(kSeed, "acceptance/null/" + std::to_string(n));
    bool exact = true;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const auto s = extham::put_on_shell(rng::system_sample(g, n));
      const auto gm = extham::build_g_n(s);
      exact = exact && linalg::null_space(gm).size() == (std::size_t{1} << n);
      for (const auto& th : extham::null_spinors_n(s)) {
        worst = std::max(worst, linalg::norm2(gm * th) / (gm.frobenius_norm() * linalg::norm2(th)));
      }
    }
    o.require(exact, "N=" + std::to_string(n) + " nullity 2^N");
    o.require(worst <= 1e-10, "N=" + std::to_string(n) + " spinor residual " + fmt(worst));
  }
  return o;
}

// 4. Partitioned-matrix lemma.
Outcome schur_lemma() {
  Outcome o;
  auto g = rng::stream(kSeed, "acceptance/schur");
  double factor = 0.0, det = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng::uniform_index(g, 4, 12);
    const std::size_t k = rng::uniform_index(g, 1, n - 1);
    const auto m = rng::well_conditioned(g, n);
    factor = std::max(factor, linalg::schur_factor_check(m, {k}) / m.max_abs());
    const Complex lu = linalg::det_lu(m);
    det = std::max(det, std::abs(linalg::block_det_schur(m, {k}) - lu) / std::abs(lu));
  }
  o.require(factor <= 1e-11, "factor residual " + fmt(factor));
  o.require(det <= 1e-10, "block det vs LU " + fmt(det));
  return o;
}

// 5. Spin algebra.
Outcome spin_algebra() {
  Outcome o;
  bool exact = true;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (const auto a : spin::kAxes) {
        const auto s = spin::embed_spin(a, spin::SpinSite(j, n));
        exact = exact && s * s == ComplexMatrix::identity(s.rows()) && s.trace() == Complex(0.0);
      }
  o.require(exact, "idempotent and traceless");
  auto g = rng::stream(kSeed, "acceptance/spin");
  double product = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng::uniform_index(g, 1, 4);
    const std::size_t j = rng::uniform_index(g, 1, n);
    const auto a = rng::vector3(g);
    const auto b = rng::vector3(g);
    product = std::max(product, spin::pauli_product_identity_residual(a, b, spin::SpinSite(j, n)));
  }
  o.require(product <= 1e-12, "product identity " + fmt(product));
  bool cross = true, two_i = true;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto r = spin::commutator_table(n);
    cross = cross && r.cross_site_exact_zero;
    two_i = two_i && r.same_site_constant == Complex(0.0, 2.0) && r.max_relation_residual == 0.0;
  }
  o.require(cross, "cross-site commutators zero");
  o.require(two_i, "same-site constant 2i");
  return o;
}

// 6. Pencil elimination.
Outcome quantization() {
  Outcome o;
  auto g = rng::stream(kSeed, "acceptance/pencil");
  bool guard = true;
  for (int t = 0; t < 5; ++t) {
    const std::size_t n = 30;
    const quantize::Grid1D grid(-1.0, 1.0, n);
    std::vector<double> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rng::uniform(g, -5.0, 5.0));
    const auto p = quantize::coupled_pencil(grid, v, 1.0);
    const auto spectrum = quantize::pencil_spectrum(p, n);
    for (std::size_t k = 0; k < n; ++k) guard = guard && quantize::pencil_root_check(p, spectrum, k).within_guard;
  }
  o.require(guard, "every eigenvalue within the determinant guard");
  auto levels = [](std::size_t n) {
    const quantize::Grid1D grid(0.0, 1.0, n);
    return quantize::pencil_spectrum(quantize::coupled_pencil(grid, std::vector<double>(n, 0.0), 1.0), 3);
  };
  auto exact = [](std::size_t k) { return static_cast<double>(k * k) * std::numbers::pi * std::numbers::pi / 2.0; };
  const double rel = std::abs(levels(2000)[0] - exact(1)) / exact(1);
  o.require(rel <= 1e-5, "box n=2000 rel err " + fmt(rel));
  const auto coarse = levels(99), fine = levels(199);
  for (std::size_t k = 1; k <= 3; ++k) {
    const double ratio = std::abs(coarse[k - 1] - exact(k)) / std::abs(fine[k - 1] - exact(k));
    o.require(ratio >= 3.5 && ratio <= 4.5, "k=" + std::to_string(k) + " convergence ratio " + fmt(ratio));
  }
  return o;
}

// 7. Pauli kinetic identity and full-form equivalence.
Outcome pauli_identities() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  auto g = rng::stream(kSeed, "acceptance/pauli");
  const Units u{};
  double kinetic = 0.0, full = 0.0;
  for (int t = 0; t < 50; ++t) {
    const auto field = quantize::FieldConfig::symmetric_gauge(rng::vector3(g, 2.0));
    const extham::ParticleSpec p{rng::uniform(g, 0.5, 3.0), rng::uniform(g, -2.0, 2.0)};
    kinetic = std::max(kinetic, quantize::pauli_kinetic_identity_residual(field, p, rng::poly_spinor(g, 1, 4, 4), u));

    const std::size_t n = 1 + static_cast<std::size_t>(t % 2);
    quantize::PauliSystem s;
    for (std::size_t k = 0; k < n; ++k) {
      s.particles.push_back({rng::uniform(g, 0.5, 3.0), rng::uniform(g, -2.0, 2.0)});
      s.fields.push_back(quantize::FieldConfig::symmetric_gauge(rng::vector3(g, 2.0)));
    }
    s.potential = rng::polynomial(g, 3 * n, 2, 4);
    full = std::max(full, quantize::pauli_hamiltonian_residual(s, rng::poly_spinor(g, n, 4, 3), u));
  }
  o.require(kinetic <= 1e-12, "kinetic identity " + fmt(kinetic));
  o.require(full <= 1e-12, "full-form equivalence " + fmt(full));
  const double dt = seconds_since(t0);
  o.require(dt <= 30.0, "runtime " + fmt(dt) + " s");
  return o;
}

// 8. Zeeman analysis.
Outcome zeeman_analysis() {
  Outcome o;
  const Units u{};
  const zeeman::ZeemanSystem ps{1.0, 1.0, 1.0, 1.7, u};
  o.require(zeeman::larmor_frequency(ps) == 0.0, "positronium omega_L = 0");

  const double m1 = 1.0, m2 = 1836.15267;
  const zeeman::ZeemanSystem h{m1, m2, 1.0, 1.0, u};
  const auto d = zeeman::decompose_masses(h);
  const double ml_err = std::abs(d.larmor_mass - m1 * m2 / (m2 - m1)) / (m1 * m2 / (m2 - m1));
  const double gl_err = std::abs(zeeman::lamb_g_factor(h) - 1.0 / d.larmor_mass) * d.larmor_mass;
  o.require(ml_err <= 1e-14 && gl_err <= 1e-14, "hydrogen m_L " + fmt(ml_err) + ", g_L " + fmt(gl_err));

  const zeeman::ZeemanSystem heavy{m1, 1e12, 1.0, 1.0, u};
  const double one = u.elementary_charge * 1.0 / (2.0 * m1 * u.light_speed);
  const double lim = std::abs(zeeman::larmor_frequency(heavy) - one) / one;
  o.require(lim <= 1e-11, "heavy-nucleus limit " + fmt(lim));

  bool exact = true;
  const double w = zeeman::larmor_frequency(h);
  for (const auto& r : zeeman::splitting_table(h, 3)) {
    const int k = r.label.branch == 1 ? r.label.m + 1 : r.label.m - 1;
    exact = exact && r.shift == u.hbar * w * k;
  }
  o.require(exact, "shift table exact");

  const quantize::Grid1D grid(0.0, 40.0, 2000);
  const auto e = zeeman::radial_eigenvalues(0, d.reduced, 1.0, grid, 2);
  const double r1 = std::abs(e[0] / zeeman::bohr_energy(1, d.reduced, 1.0) - 1.0);
  const double r2 = std::abs(e[1] / zeeman::bohr_energy(2, d.reduced, 1.0) - 1.0);
  o.require(r1 <= 5e-4 && r2 <= 5e-4, "radial n=1 " + fmt(r1) + ", n=2 " + fmt(r2));
  return o;
}

// 9. Centre-of-mass reduction.
Outcome com_reduction() {
  Outcome o;
  auto g = rng::stream(kSeed, "acceptance/com");
  double com = 0.0, split = 0.0;
  for (int t = 0; t < 30; ++t) {
    const double m1 = rng::uniform(g, 0.1, 10.0);
    const double m2 = rng::uniform(g, 0.1, 2000.0);
    com = std::max(com, zeeman::com_transform_residual(m1, m2, rng::polynomial(g, 6, 4, 6)));
    split = std::max(split, zeeman::vector_potential_split_residual(m1, m2, rng::uniform(g, -3.0, 3.0)));
  }
  o.require(com <= 1e-12, "momentum transform " + fmt(com));
  o.require(split <= 1e-12, "vector potential split " + fmt(split));
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_tool(const std::string& cmd) {
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 10. CLI determinism and exit codes.
Outcome cli_contract(const std::string& tool) {
  Outcome o;
  auto cfg = app::default_config(app::Command::verify);
  cfg.trials = 20;
  const auto a = app::run_verify(cfg);
  const auto b = app::run_verify(cfg);
  o.require(a.text == b.text && a.exit_code == app::kExitOk, "in-process verify deterministic, exit 0");

  auto zero = cfg;
  for (auto& [name, tol] : zero.tolerances) tol = 0.0;
  o.require(app::run_verify(zero).exit_code == app::kExitToleranceViolation, "zero tolerance exit 1");

  bool config_error = false;
  try {
    app::parse_config(R"({"bogus": 1})", app::Command::verify);
  } catch (const app::ConfigError&) {
    config_error = true;
  }
  o.require(config_error, "unknown key rejected");

  if (tool.empty()) {
    o.detail += "; tool path not given, subprocess checks skipped";
    return o;
  }
  const std::string dir = "acceptance_cli";
  std::filesystem::create_directories(dir);
  const int r1 = run_tool(tool + " --out " + dir + "/v1.json verify --seed 5 --trials 15");
  const int r2 = run_tool(tool + " --out " + dir + "/v2.json verify --seed 5 --trials 15");
  const std::string f1 = slurp(dir + "/v1.json"), f2 = slurp(dir + "/v2.json");
  o.require(r1 == 0 && r2 == 0 && !f1.empty() && f1 == f2, "tool verify byte-identical");
  const int z1 = run_tool(tool + " --out " + dir + "/z1.csv zeeman --preset deuterium-like");
  const int z2 = run_tool(tool + " --out " + dir + "/z2.csv zeeman --preset deuterium-like");
  o.require(z1 == 0 && z2 == 0 && slurp(dir + "/z1.csv") == slurp(dir + "/z2.csv"), "tool zeeman byte-identical");
  {
    std::ofstream bad(dir + "/bad.json");
    bad << "{\n  \"seed\": 1,\n  \"trials\": \n}\n";
  }
  o.require(run_tool(tool + " verify --config " + dir + "/bad.json") == 2, "malformed config exit 2");
  o.require(run_tool(tool + " zeeman --preset nonesuch") == 2, "unknown preset exit 2");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string tool = argc > 1 ? argv[1] : "";
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 determinant identity (K^2)", determinant_identity},
      {"2 one-dimensional factorization", one_dimensional},
      {"3 null-space dimension", null_space_dimension},
      {"4 partitioned-matrix lemma", schur_lemma},
      {"5 spin algebra", spin_algebra},
      {"6 quantization elimination", quantization},
      {"7 Pauli identities", pauli_identities},
      {"8 Zeeman analysis", zeeman_analysis},
      {"9 centre-of-mass reduction", com_reduction},
      {"10 CLI determinism and exit codes", [&] { return cli_contract(tool); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
