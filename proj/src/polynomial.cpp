#include "ehf/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ehf/errors.hpp"

namespace ehf::poly {

int total_degree(const Exponents& e) noexcept { return std::accumulate(e.begin(), e.end(), 0); }

Polynomial::Polynomial(std::size_t variables, int max_degree) : variables_(variables), max_degree_(max_degree) {
  if (variables > kMaxVariables) {
    throw DimensionError("polynomial: " + std::to_string(variables) + " variables exceeds " +
                         std::to_string(kMaxVariables));
  }
}

Polynomial Polynomial::constant(std::size_t variables, Complex value, int max_degree) {
  Polynomial p(variables, max_degree);
  p.add_term(Exponents{}, value);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index, int max_degree) {
  if (index >= variables) throw DimensionError("polynomial variable index out of range");
  Exponents e{};
  e[index] = 1;
  return monomial(variables, e, 1.0, max_degree);
}

Polynomial Polynomial::linear(std::size_t variables, std::span<const double> coefficients, int max_degree) {
  if (coefficients.size() != variables) throw DimensionError("linear polynomial: coefficient count mismatch");
  Polynomial p(variables, max_degree);
  for (std::size_t i = 0; i < variables; ++i) {
    if (coefficients[i] == 0.0) continue;
    Exponents e{};
    e[i] = 1;
    p.add_term(e, coefficients[i]);
  }
  return p;
}

Polynomial Polynomial::monomial(std::size_t variables, const Exponents& exponents, Complex coefficient,
                                int max_degree) {
  Polynomial p(variables, max_degree);
  for (std::size_t i = variables; i < kMaxVariables; ++i) {
    if (exponents[i] != 0) throw DimensionError("monomial uses a variable beyond the declared count");
  }
  p.add_term(exponents, coefficient);
  return p;
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Complex Polynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Complex{} : it->second;
}

void Polynomial::add_term(const Exponents& e, Complex c) {
  if (c == Complex{}) return;
  if (total_degree(e) > max_degree_) {
    throw DegreeOverflowError("polynomial degree " + std::to_string(total_degree(e)) + " exceeds the cap " +
                              std::to_string(max_degree_));
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= variables_) throw DimensionError("derivative variable index out of range");
  Polynomial d(variables_, max_degree_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents de = e;
    --de[var];
    d.add_term(de, c * static_cast<double>(e[var]));
  }
  return d;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> replacements) const {
  if (replacements.size() != variables_) throw DimensionError("substitute: need one replacement per variable");
  const std::size_t new_vars = variables_ == 0 ? 0 : replacements.front().variables();
  for (const auto& r : replacements) {
    if (r.variables() != new_vars) throw DimensionError("substitute: replacements disagree on variable count");
  }
  // Cache powers of each replacement as they are needed.
  std::vector<std::vector<Polynomial>> powers(variables_);
  auto power = [&](std::size_t var, int k) -> const Polynomial& {
    auto& list = powers[var];
    if (list.empty()) list.push_back(Polynomial::constant(new_vars, 1.0, max_degree_));
    while (static_cast<int>(list.size()) <= k) list.push_back(list.back() * replacements[var]);
    return list[static_cast<std::size_t>(k)];
  };
  Polynomial out(new_vars, max_degree_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(new_vars, c, max_degree_);
    for (std::size_t v = 0; v < variables_; ++v) {
      if (e[v] != 0) term = term * power(v, e[v]);
    }
    out += term;
  }
  return out;
}

Complex Polynomial::evaluate(std::span<const Complex> point) const {
  if (point.size() != variables_) throw DimensionError("evaluate: point dimension mismatch");
  Complex sum{};
  for (const auto& [e, c] : terms_) {
    Complex t = c;
    for (std::size_t v = 0; v < variables_; ++v)
      for (int k = 0; k < e[v]; ++k) t *= point[v];
    sum += t;
  }
  return sum;
}

double Polynomial::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void Polynomial::require_compatible(const Polynomial& b, const char* what) const {
  if (variables_ != b.variables_) {
    throw DimensionError(std::string(what) + ": variable counts differ (" + std::to_string(variables_) + " vs " +
                         std::to_string(b.variables_) + ")");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  require_compatible(b, "polynomial +");
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  require_compatible(b, "polynomial -");
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(Complex s) {
  if (s == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b, "polynomial *");
  Polynomial out(a.variables_, std::min(a.max_degree_, b.max_degree_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (std::size_t v = 0; v < kMaxVariables; ++v) e[v] = static_cast<std::uint8_t>(ea[v] + eb[v]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

double max_coefficient_diff(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables()) throw DimensionError("max_coefficient_diff: variable counts differ");
  double m = 0.0;
  for (const auto& [e, c] : a.terms()) m = std::max(m, std::abs(c - b.coefficient(e)));
  for (const auto& [e, c] : b.terms()) {
    if (a.terms().find(e) == a.terms().end()) m = std::max(m, std::abs(c));
  }
  return m;
}

// ---------------------------------------------------------------------------

PolySpinor PolySpinor::zero(std::size_t particles, int max_degree) {
  PolySpinor ps;
  ps.components.assign(std::size_t{1} << particles, Polynomial(3 * particles, max_degree));
  return ps;
}

int PolySpinor::degree() const noexcept {
  int d = -1;
  for (const auto& c : components) d = std::max(d, c.degree());
  return d;
}

PolySpinor& PolySpinor::operator+=(const PolySpinor& b) {
  if (b.size() != size()) throw DimensionError("spinor +: component counts differ");
  for (std::size_t i = 0; i < size(); ++i) components[i] += b.components[i];
  return *this;
}

PolySpinor& PolySpinor::operator-=(const PolySpinor& b) {
  if (b.size() != size()) throw DimensionError("spinor -: component counts differ");
  for (std::size_t i = 0; i < size(); ++i) components[i] -= b.components[i];
  return *this;
}

PolySpinor& PolySpinor::operator*=(Complex s) {
  for (auto& c : components) c *= s;
  return *this;
}

PolySpinor apply_matrix(const linalg::ComplexMatrix& m, const PolySpinor& ps) {
  if (m.cols() != ps.size()) throw DimensionError("apply_matrix: size mismatch");
  PolySpinor out;
  const int cap = ps.components.empty() ? kDefaultMaxDegree : ps.components.front().max_degree();
  out.components.assign(m.rows(), Polynomial(ps.variables(), cap));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != Complex{}) out.components[i] += m(i, j) * ps.components[j];
  return out;
}

PolySpinor multiply(const Polynomial& p, const PolySpinor& ps) {
  PolySpinor out;
  out.components.reserve(ps.size());
  for (const auto& c : ps.components) out.components.push_back(p * c);
  return out;
}

PolySpinor derivative(const PolySpinor& ps, std::size_t var) {
  PolySpinor out;
  out.components.reserve(ps.size());
  for (const auto& c : ps.components) out.components.push_back(c.derivative(var));
  return out;
}

double max_coefficient_diff(const PolySpinor& a, const PolySpinor& b) {
  if (a.size() != b.size()) throw DimensionError("spinor diff: component counts differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, max_coefficient_diff(a.components[i], b.components[i]));
  return m;
}

}  // namespace ehf::poly
