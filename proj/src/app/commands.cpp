#include "app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "app/report.hpp"
#include "ehf/extham.hpp"
#include "ehf/kernels.hpp"
#include "ehf/linalg.hpp"
#include "ehf/quantize.hpp"
#include "ehf/random.hpp"
#include "ehf/spin.hpp"
#include "ehf/zeeman.hpp"

namespace ehf::app {

using linalg::Complex;
using linalg::ComplexMatrix;
using nlohmann::ordered_json;

bool within_tolerance(double error, double tolerance) {
  return tolerance > 0.0 && std::isfinite(error) && error <= tolerance;
}

namespace {

double tolerance(const RunConfig& cfg, const std::string& name) {
  const auto it = cfg.tolerances.find(name);
  if (it != cfg.tolerances.end()) return it->second;
  return default_tolerances().at(name);
}

CheckResult make_check(const RunConfig& cfg, std::string name, std::size_t particles, std::size_t samples,
                       double error) {
  CheckResult c;
  c.tolerance = tolerance(cfg, name);
  c.name = std::move(name);
  c.particles = particles;
  c.samples = samples;
  c.max_error = error;
  c.pass = within_tolerance(error, c.tolerance);
  return c;
}

std::string suite_name(const char* base, std::size_t n) { return std::string(base) + "/" + std::to_string(n); }

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (const double x : v) m = std::max(m, std::isnan(x) ? INFINITY : x);
  return m;
}

// --- verify suites ---------------------------------------------------------

void det_identity_suite(const RunConfig& cfg, std::size_t n, std::vector<CheckResult>& out) {
  auto g = rng::stream(cfg.seed, suite_name("det_identity", n));
  std::vector<extham::SystemSample> samples;
  for (std::size_t t = 0; t < cfg.trials; ++t) samples.push_back(rng::system_sample(g, n));
  std::vector<double> err(samples.size()), err_k2(samples.size());
  kernels::parallel_for(samples.size(), [&](std::size_t i) {
    const auto r = extham::verify_det_identity(samples[i]);
    err[i] = r.max_rel_err;
    err_k2[i] = r.rel_err_vs_k_squared;
  });
  auto c = make_check(cfg, "det_identity", n, samples.size(), max_of(err));
  c.details["exponent"] = extham::determinant_exponent(n);
  c.details["max_rel_err_vs_k_squared"] = max_of(err_k2);
  out.push_back(std::move(c));
}

void null_space_suite(const RunConfig& cfg, std::size_t n, std::vector<CheckResult>& out) {
  auto g = rng::stream(cfg.seed, suite_name("null_spinor", n));
  std::vector<extham::SystemSample> samples;
  for (std::size_t t = 0; t < cfg.trials; ++t) samples.push_back(extham::put_on_shell(rng::system_sample(g, n)));
  const double expected = static_cast<double>(std::size_t{1} << n);
  std::vector<double> residual(samples.size()), nullity_err(samples.size());
  kernels::parallel_for(samples.size(), [&](std::size_t i) {
    const ComplexMatrix gm = extham::build_g_n(samples[i]);
    const double gnorm = gm.frobenius_norm();
    double worst = 0.0;
    for (const auto& theta : extham::null_spinors_n(samples[i])) {
      const auto r = gm * theta;
      worst = std::max(worst, linalg::norm2(r) / (gnorm * linalg::norm2(theta)));
    }
    residual[i] = worst;
    nullity_err[i] = std::abs(static_cast<double>(linalg::null_space(gm).size()) - expected);
  });
  out.push_back(make_check(cfg, "null_spinor", n, samples.size(), max_of(residual)));
  auto c = make_check(cfg, "nullity", n, samples.size(), max_of(nullity_err));
  c.details["expected_nullity"] = std::size_t{1} << n;
  out.push_back(std::move(c));
}

void one_d_suite(const RunConfig& cfg, std::vector<CheckResult>& out) {
  auto g = rng::stream(cfg.seed, "det_1d");
  std::vector<double> det_err, null_err;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto s = rng::sample_1d(g);
    const double mk = extham::minus_k(s);
    const auto gm = extham::build_g_1d(s);
    // Absolute for |K| < 1, relative above.
    const double scale = std::max(1.0, std::abs(mk));
    const Complex lu = linalg::det_lu(gm);
    const Complex schur = linalg::block_det_schur(gm, linalg::BlockPartition{1});
    det_err.push_back(std::max(std::abs(lu - mk), std::abs(schur - mk)) / scale);

    auto on = s;
    on.energy = s.potential + s.momentum * s.momentum / (2.0 * s.mass);
    const auto theta = extham::null_spinor_1d(on, rng::complex(g));
    const auto gon = extham::build_g_1d(on);
    null_err.push_back(linalg::norm2(gon * theta) / linalg::norm2(theta));
  }
  out.push_back(make_check(cfg, "det_1d", 1, cfg.trials, max_of(det_err)));
  out.push_back(make_check(cfg, "null_1d", 1, cfg.trials, max_of(null_err)));
}

void schur_suite(const RunConfig& cfg, std::vector<CheckResult>& out) {
  auto g = rng::stream(cfg.seed, "schur");
  std::vector<double> factor_err, det_err;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::size_t size = rng::uniform_index(g, 4, 12);
    const std::size_t k = rng::uniform_index(g, 1, size - 1);
    const auto m = rng::well_conditioned(g, size);
    const linalg::BlockPartition part{k};
    factor_err.push_back(linalg::schur_factor_check(m, part) / m.max_abs());
    const Complex lu = linalg::det_lu(m);
    det_err.push_back(std::abs(linalg::block_det_schur(m, part) - lu) / std::abs(lu));
  }
  out.push_back(make_check(cfg, "schur_factor", 0, cfg.trials, max_of(factor_err)));
  out.push_back(make_check(cfg, "schur_det", 0, cfg.trials, max_of(det_err)));
}

void spin_suite(const RunConfig& cfg, std::vector<CheckResult>& out) {
  auto g = rng::stream(cfg.seed, "pauli_product");
  double worst = 0.0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::size_t n = rng::uniform_index(g, 1, spin::kDefaultMaxParticles);
    const std::size_t j = rng::uniform_index(g, 1, n);
    const auto a = rng::vector3(g);
    const auto b = rng::vector3(g);
    worst = std::max(worst, spin::pauli_product_identity_residual(a, b, spin::SpinSite(j, n)));
  }
  out.push_back(make_check(cfg, "pauli_product", 0, cfg.trials, worst));

  double relation = 0.0;
  bool cross_zero = true;
  Complex constant;
  for (std::size_t n = 1; n <= spin::kDefaultMaxParticles; ++n) {
    const auto r = spin::commutator_table(n);
    relation = std::max(relation, r.max_relation_residual);
    cross_zero = cross_zero && r.cross_site_exact_zero;
    constant = r.same_site_constant;
  }
  // A nonzero cross-site commutator is a hard failure regardless of tolerance.
  auto c = make_check(cfg, "spin_commutator", 0, spin::kDefaultMaxParticles, cross_zero ? relation : INFINITY);
  c.details["same_site_constant"] = {constant.real(), constant.imag()};
  c.details["cross_site_exact_zero"] = cross_zero;
  out.push_back(std::move(c));
}

quantize::FieldConfig random_field(rng::Engine& g) {
  if (rng::uniform(g, 0.0, 1.0) < 0.5) return quantize::FieldConfig::symmetric_gauge(rng::vector3(g));
  quantize::FieldConfig::Gauge a{};
  for (auto& row : a)
    for (auto& v : row) v = rng::uniform(g, -1.0, 1.0);
  return quantize::FieldConfig::from_gauge(a);
}

void pauli_suite(const RunConfig& cfg, std::vector<CheckResult>& out) {
  const std::size_t trials = std::min<std::size_t>(cfg.trials, 50);
  auto g = rng::stream(cfg.seed, "pauli_kinetic");
  double kinetic = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto field = random_field(g);
    const extham::ParticleSpec p{rng::uniform(g, 0.5, 3.0), rng::uniform(g, -2.0, 2.0)};
    const auto ps = rng::poly_spinor(g, 1, 4, 4);
    kinetic = std::max(kinetic, quantize::pauli_kinetic_identity_residual(field, p, ps, cfg.units));
  }
  out.push_back(make_check(cfg, "pauli_kinetic", 1, trials, kinetic));

  auto h = rng::stream(cfg.seed, "pauli_hamiltonian");
  double hamiltonian = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = rng::uniform_index(h, 1, 2);
    quantize::PauliSystem s;
    for (std::size_t k = 0; k < n; ++k) {
      s.particles.push_back({rng::uniform(h, 0.5, 3.0), rng::uniform(h, -2.0, 2.0)});
      s.fields.push_back(random_field(h));
    }
    s.potential = rng::polynomial(h, 3 * n, 2, 3);
    const auto ps = rng::poly_spinor(h, n, 3, 3);
    hamiltonian = std::max(hamiltonian, quantize::pauli_hamiltonian_residual(s, ps, cfg.units));
  }
  out.push_back(make_check(cfg, "pauli_hamiltonian", 0, trials, hamiltonian));
}

ordered_json check_json(const CheckResult& c) {
  ordered_json j;
  j["name"] = c.name;
  if (c.particles) j["particles"] = c.particles;
  j["samples"] = c.samples;
  j["max_error"] = c.max_error;
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  for (const auto& [k, v] : c.details.items()) j[k] = v;
  return j;
}

std::string dump(const ordered_json& j) {
  // Non-finite numbers become null in JSON; keep them readable instead.
  return j.dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::replace) + "\n";
}

// --- solve1d -----------------------------------------------------------------

std::vector<double> potential_samples(const SolveSpec& s, const quantize::Grid1D& grid) {
  const auto& p = s.potential;
  if (p.preset == "box") return std::vector<double>(grid.size(), 0.0);
  if (p.preset == "table") return p.samples;
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.point(i);
    v[i] = 0.5 * s.mass * p.omega * p.omega * x * x;
  }
  return v;
}

// Continuum value for the analytic presets; NaN for tables.
double analytic_level(const SolveSpec& s, const Units& u, std::size_t k) {
  const double kk = static_cast<double>(k + 1);
  if (s.potential.preset == "box") {
    const double l = s.x_max - s.x_min;
    return kk * kk * std::numbers::pi * std::numbers::pi * u.hbar * u.hbar / (2.0 * s.mass * l * l);
  }
  if (s.potential.preset == "harmonic") return u.hbar * s.potential.omega * (static_cast<double>(k) + 0.5);
  return NAN;
}

}  // namespace

std::vector<CheckResult> run_verify_checks(const RunConfig& cfg) {
  std::vector<CheckResult> out;
  for (const auto n : cfg.particles) det_identity_suite(cfg, n, out);
  for (const auto n : cfg.particles) null_space_suite(cfg, n, out);
  one_d_suite(cfg, out);
  schur_suite(cfg, out);
  spin_suite(cfg, out);
  pauli_suite(cfg, out);
  return out;
}

CommandOutput run_verify(const RunConfig& cfg) {
  validate(cfg);
  const auto checks = run_verify_checks(cfg);
  ordered_json report;
  report["metadata"] = metadata_json(cfg);
  report["metadata"]["trials"] = cfg.trials;
  report["metadata"]["particles"] = cfg.particles;
  bool all = true;
  report["checks"] = ordered_json::array();
  for (const auto& c : checks) {
    all = all && c.pass;
    report["checks"].push_back(check_json(c));
  }
  report["pass"] = all;
  return {dump(report), all ? kExitOk : kExitToleranceViolation};
}

CommandOutput run_solve1d(const RunConfig& cfg) {
  validate(cfg);
  const auto& s = cfg.solve;
  const quantize::Grid1D grid(s.x_min, s.x_max, s.n);
  const auto pencil = quantize::coupled_pencil(grid, potential_samples(s, grid), s.mass, cfg.units.hbar);
  const auto t = quantize::eliminated_tridiagonal(pencil);
  const std::size_t levels = std::min(s.levels, s.n);
  const bool dense = s.n <= kDenseDeterminantLimit;
  const auto spectrum = linalg::tridiagonal_eigenvalues(t, dense ? s.n : levels);

  const double tol_res = tolerance(cfg, "stacked_residual");
  const double tol_det = tolerance(cfg, "pencil_det");
  const bool analytic = s.potential.preset != "table";

  CsvTable table({"level", "energy", "analytic", "stacked_residual", "det_normalized", "det_within_guard"});
  add_common_metadata(table, cfg);
  table.add_metadata("potential", s.potential.preset);
  table.add_metadata("grid", "x_min=" + format_double(s.x_min) + " x_max=" + format_double(s.x_max) +
                                 " n=" + std::to_string(s.n) + " h=" + format_double(grid.spacing()));
  table.add_metadata("mass", format_double(s.mass));
  table.add_metadata("resolution", s.n < kCoarseGrid ? "coarse" : "ok");
  table.add_metadata("determinant", dense ? "dense" : "skipped (grid larger than " +
                                                          std::to_string(kDenseDeterminantLimit) + ")");

  bool all = true;
  for (std::size_t k = 0; k < levels; ++k) {
    const double e = spectrum[k];
    const auto vec = linalg::tridiagonal_eigenvector(t, e);
    const linalg::ComplexVector psi1(vec.begin(), vec.end());
    const double res = quantize::stacked_residual(pencil, e, psi1);
    all = all && within_tolerance(res, tol_res);
    std::string det_norm, det_guard;
    if (dense) {
      const auto rc = quantize::pencil_root_check(pencil, spectrum, k);
      const double normalized = rc.normalized / std::max(1.0, std::abs(e));
      det_norm = format_double(normalized);
      det_guard = rc.within_guard ? "true" : "false";
      all = all && rc.within_guard && within_tolerance(normalized, tol_det);
    }
    table.add_row({std::to_string(k + 1), format_double(e), analytic ? format_double(analytic_level(s, cfg.units, k)) : "",
                   format_double(res), det_norm, det_guard});
  }
  return {table.str(), all ? kExitOk : kExitToleranceViolation};
}

CommandOutput run_zeeman(const RunConfig& cfg) {
  validate(cfg);
  const auto& zs = cfg.zeeman;
  const zeeman::ZeemanSystem sys{zs.m1, zs.m2, zs.z, zs.b, cfg.units};
  const auto masses = zeeman::decompose_masses(sys);
  const double omega = zeeman::larmor_frequency(sys);
  const double g = zeeman::lamb_g_factor(sys);
  const std::string m_l = masses.larmor_infinite ? "inf" : format_double(masses.larmor_mass);

  CsvTable table({"n", "l", "m", "branch", "energy", "shift", "omega_L", "m_L", "g_L"});
  add_common_metadata(table, cfg);
  table.add_metadata("preset", zs.preset);
  table.add_metadata("masses", "m1=" + format_double(zs.m1) + " m2=" + format_double(zs.m2) +
                                   " reduced=" + format_double(masses.reduced));
  table.add_metadata("field", "b=" + format_double(zs.b) + " z=" + format_double(zs.z));
  for (const auto& row : zeeman::splitting_table(sys, zs.n_max)) {
    table.add_row({std::to_string(row.label.n), std::to_string(row.label.l), std::to_string(row.label.m),
                   std::to_string(row.label.branch), format_double(row.energy), format_double(row.shift),
                   format_double(omega), m_l, format_double(g)});
  }
  return {table.str(), kExitOk};
}

CommandOutput run_spin_report(const RunConfig& cfg) {
  validate(cfg);
  const auto r = spin::commutator_table(cfg.spin_particles);
  ordered_json report;
  report["metadata"] = metadata_json(cfg);
  report["particles"] = r.particles;
  report["same_site_constant"] = {r.same_site_constant.real(), r.same_site_constant.imag()};
  report["half_spin_constant"] = {r.half_spin_constant.real(), r.half_spin_constant.imag()};
  report["matches_unit_constant"] = r.matches_unit_constant;
  report["cross_site_exact_zero"] = r.cross_site_exact_zero;
  report["max_relation_residual"] = r.max_relation_residual;
  report["entries"] = ordered_json::array();
  for (const auto& e : r.entries) {
    ordered_json j;
    j["a"] = static_cast<int>(e.a);
    j["b"] = static_cast<int>(e.b);
    j["j"] = e.j;
    j["k"] = e.k;
    j["coefficient"] = {e.coefficient.real(), e.coefficient.imag()};
    if (e.a != e.b && e.j == e.k) j["target"] = static_cast<int>(e.target);
    j["vanishes"] = e.vanishes;
    j["residual"] = e.residual;
    report["entries"].push_back(std::move(j));
  }
  const bool ok = r.cross_site_exact_zero && within_tolerance(r.max_relation_residual, tolerance(cfg, "spin_commutator"));
  report["pass"] = ok;
  return {dump(report), ok ? kExitOk : kExitToleranceViolation};
}

CommandOutput run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::verify: return run_verify(cfg);
    case Command::solve1d: return run_solve1d(cfg);
    case Command::zeeman: return run_zeeman(cfg);
    case Command::spin_report: return run_spin_report(cfg);
  }
  throw ConfigError("unknown command");
}

}  // namespace ehf::app
