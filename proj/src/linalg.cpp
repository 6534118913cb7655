#include "ehf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "ehf/errors.hpp"
#include "ehf/kernels.hpp"

namespace ehf::linalg {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
}

// In-place LU with partial pivoting. perm[i] is the original row now at i.
struct LuResult {
  ComplexMatrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;
};

LuResult lu_decompose(ComplexMatrix m) {
  const std::size_t n = m.rows();
  LuResult r{std::move(m), std::vector<std::size_t>(n), 1, false};
  std::iota(r.perm.begin(), r.perm.end(), std::size_t{0});
  auto& a = r.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) {
      r.singular = true;
      continue;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(r.perm[k], r.perm[piv]);
      r.sign = -r.sign;
    }
    const Complex pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a(i, k) / pivot;
      a(i, k) = f;
      if (f == Complex{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return r;
}

double norm_1(const ComplexMatrix& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

struct Blocks {
  ComplexMatrix a, b, c, d;
};

Blocks split(const ComplexMatrix& m, BlockPartition part) {
  require_square(m, "block partition");
  const std::size_t n = m.rows();
  if (part.k == 0 || part.k >= n) {
    throw DimensionError("block partition: need 0 < k < n, got k=" + std::to_string(part.k) +
                         ", n=" + std::to_string(n));
  }
  const std::size_t k = part.k;
  return {m.block(0, 0, k, k), m.block(0, k, k, n - k), m.block(k, 0, n - k, k),
          m.block(k, k, n - k, n - k)};
}

void require_invertible(const ComplexMatrix& d, double max_condition) {
  const double kappa = condition_number_1(d);
  if (!(kappa <= max_condition)) {
    throw SingularBlockError("trailing block D is singular: condition estimate " + std::to_string(kappa) +
                             " exceeds " + std::to_string(max_condition));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("matrix entries: expected " + std::to_string(rows * cols) + ", got " +
                         std::to_string(entries_.size()));
  }
  if (!all_finite()) throw DomainError("matrix entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw DomainError("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                                   std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw DimensionError("block out of range");
  ComplexMatrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

void ComplexMatrix::set_block(std::size_t row0, std::size_t col0, const ComplexMatrix& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) throw DimensionError("set_block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(row0 + i, col0 + j) = b(i, j);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Complex ComplexMatrix::trace() const {
  Complex s{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

double ComplexMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& b) {
  require_same_shape(*this, b, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += b.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& b) {
  require_same_shape(*this, b, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= b.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  kernels::matmul(a, b, out);
  return out;
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> x) {
  if (a.cols() != x.size()) throw DimensionError("matvec: length mismatch");
  ComplexVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s{};
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
  if (!m.is_square()) return false;
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst <= rel_tol * m.max_abs();
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_dimension) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > max_dimension || cols > max_dimension) {
    throw DimensionError("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " exceeds the configured maximum " + std::to_string(max_dimension));
  }
  ComplexMatrix out(rows, cols);
  kernels::kron(a, b, out);
  return out;
}

// ---------------------------------------------------------------------------
// Determinants and solves

Complex det_lu(const ComplexMatrix& m) {
  require_square(m, "det_lu");
  if (m.rows() == 0) return 1.0;
  const auto r = lu_decompose(m);
  if (r.singular) return 0.0;
  Complex det = static_cast<double>(r.sign);
  for (std::size_t i = 0; i < m.rows(); ++i) det *= r.lu(i, i);
  return det;
}

ComplexMatrix lu_solve(const ComplexMatrix& m, const ComplexMatrix& rhs) {
  require_square(m, "lu_solve");
  if (rhs.rows() != m.rows()) throw DimensionError("lu_solve: rhs rows mismatch");
  const auto r = lu_decompose(m);
  if (r.singular) throw SingularBlockError("lu_solve: matrix is exactly singular");
  const std::size_t n = m.rows();
  ComplexMatrix x(n, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    ComplexVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = rhs(r.perm[i], c);
      for (std::size_t j = 0; j < i; ++j) s -= r.lu(i, j) * y[j];
      y[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      Complex s = y[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= r.lu(i, j) * x(j, c);
      x(i, c) = s / r.lu(i, i);
    }
  }
  return x;
}

ComplexMatrix inverse(const ComplexMatrix& m) { return lu_solve(m, ComplexMatrix::identity(m.rows())); }

double condition_number_1(const ComplexMatrix& m) {
  require_square(m, "condition_number_1");
  if (m.rows() == 0) return 1.0;
  if (lu_decompose(m).singular) return std::numeric_limits<double>::infinity();
  const double kappa = norm_1(m) * norm_1(inverse(m));
  return std::isfinite(kappa) ? kappa : std::numeric_limits<double>::infinity();
}

Complex block_det_schur(const ComplexMatrix& m, BlockPartition part, double max_condition) {
  const auto blk = split(m, part);
  require_invertible(blk.d, max_condition);
  const ComplexMatrix dinv_c = lu_solve(blk.d, blk.c);
  return det_lu(blk.d) * det_lu(blk.a - blk.b * dinv_c);
}

SchurFactors schur_factors(const ComplexMatrix& m, BlockPartition part, double max_condition) {
  const auto blk = split(m, part);
  require_invertible(blk.d, max_condition);
  const std::size_t n = m.rows();
  const std::size_t k = part.k;
  const ComplexMatrix dinv = inverse(blk.d);
  const ComplexMatrix b_dinv = blk.b * dinv;

  SchurFactors f{ComplexMatrix::identity(n), ComplexMatrix(n, n), ComplexMatrix::identity(n)};
  f.upper.set_block(0, k, b_dinv);
  f.middle.set_block(0, 0, blk.a - b_dinv * blk.c);
  f.middle.set_block(k, k, blk.d);
  f.lower.set_block(k, 0, dinv * blk.c);
  return f;
}

double schur_factor_check(const ComplexMatrix& m, BlockPartition part, double max_condition) {
  const auto f = schur_factors(m, part, max_condition);
  return max_abs_diff(m, f.upper * f.middle * f.lower);
}

// ---------------------------------------------------------------------------
// Null space

namespace {

struct Echelon {
  ComplexMatrix reduced;               // row-reduced, columns permuted
  std::vector<std::size_t> col_perm;   // reduced column c is original column col_perm[c]
  std::size_t rank = 0;
};

Echelon full_pivot_reduce(const ComplexMatrix& m, double tol) {
  Echelon e{m, std::vector<std::size_t>(m.cols()), 0};
  std::iota(e.col_perm.begin(), e.col_perm.end(), std::size_t{0});
  auto& a = e.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const double threshold = tol * m.max_abs();
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t pr = k, pc = k;
    double best = 0.0;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        const double v = std::abs(a(i, j));
        if (v > best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (best <= threshold || best == 0.0) break;
    if (pr != k)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(k, j), a(pr, j));
    if (pc != k) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, k), a(i, pc));
      std::swap(e.col_perm[k], e.col_perm[pc]);
    }
    const Complex pivot = a(k, k);
    for (std::size_t j = k; j < cols; ++j) a(k, j) /= pivot;
    // Eliminate above and below so the pivot block ends up as the identity.
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k) continue;
      const Complex f = a(i, k);
      if (f == Complex{}) continue;
      for (std::size_t j = k; j < cols; ++j) a(i, j) -= f * a(k, j);
    }
    ++e.rank;
  }
  return e;
}

void orthonormalize(std::vector<ComplexVector>& basis) {
  // Modified Gram-Schmidt, two passes.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < i; ++j) {
        const Complex proj = dot(basis[j], basis[i]);
        for (std::size_t t = 0; t < basis[i].size(); ++t) basis[i][t] -= proj * basis[j][t];
      }
    }
    const double nrm = norm2(basis[i]);
    for (auto& z : basis[i]) z /= nrm;
  }
}

}  // namespace

std::vector<ComplexVector> null_space(const ComplexMatrix& m, double tol) {
  if (!(tol > 0.0)) throw DomainError("null_space: tolerance must be positive");
  const auto e = full_pivot_reduce(m, tol);
  const std::size_t cols = m.cols();
  std::vector<ComplexVector> basis;
  // Reduced form is [I_r, F; ~0, ~0] in permuted columns; each free column f gives
  // the vector with x_f = 1 and x_pivot = -F[:, f].
  for (std::size_t f = e.rank; f < cols; ++f) {
    ComplexVector v(cols);
    v[e.col_perm[f]] = 1.0;
    for (std::size_t r = 0; r < e.rank; ++r) v[e.col_perm[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  orthonormalize(basis);
  return basis;
}

std::size_t numerical_rank(const ComplexMatrix& m, double tol) { return full_pivot_reduce(m, tol).rank; }

// ---------------------------------------------------------------------------
// Hermitian eigensolver

EigenSystem hermitian_eigen(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigen");
  if (!is_hermitian(m, 1e-12)) throw NotHermitianError("hermitian_eigen: input is not Hermitian");
  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  // Symmetrize exactly so rounding in the input cannot bias the rotations.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  const double scale = std::max(a.frobenius_norm(), std::numeric_limits<double>::min());

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-16 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 1e-300) continue;
        // Rotate column/row q by a phase so a(p,q) becomes real and positive.
        const Complex phase = a(p, q) / mag;
        const Complex cphase = std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) a(k, q) *= cphase;
        for (std::size_t k = 0; k < n; ++k) a(q, k) *= phase;
        for (std::size_t k = 0; k < n; ++k) v(k, q) *= cphase;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tridiagonal

ComplexMatrix SymmetricTridiagonal::to_dense() const {
  const std::size_t n = size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = diagonal[i];
    if (i + 1 < n) {
      m(i, i + 1) = off_diagonal[i];
      m(i + 1, i) = off_diagonal[i];
    }
  }
  return m;
}

std::size_t SymmetricTridiagonal::count_below(double x) const {
  const std::size_t n = size();
  constexpr double pivmin = 1e-300;
  std::size_t count = 0;
  double q = diagonal[0] - x;
  for (std::size_t i = 0;;) {
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
    if (++i == n) break;
    const double e = off_diagonal[i - 1];
    q = diagonal[i] - x - e * e / q;
  }
  return count;
}

std::vector<double> SymmetricTridiagonal::apply(std::span<const double> x) const {
  const std::size_t n = size();
  if (x.size() != n) throw DimensionError("tridiagonal apply: length mismatch");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diagonal[i] * x[i];
    if (i > 0) s += off_diagonal[i - 1] * x[i - 1];
    if (i + 1 < n) s += off_diagonal[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

std::vector<double> tridiagonal_eigenvalues(const SymmetricTridiagonal& t, std::size_t count) {
  if (t.size() == 0) return {};
  if (t.off_diagonal.size() + 1 != t.size()) throw DimensionError("tridiagonal: off-diagonal length must be n-1");
  return kernels::tridiagonal_bisection(t, count);
}

std::vector<double> tridiagonal_eigenvector(const SymmetricTridiagonal& t, double eigenvalue) {
  const std::size_t n = t.size();
  if (n == 0) return {};
  const auto [lo, hi] = kernels::gershgorin_bounds(t);
  // Small shift off the eigenvalue keeps the factorization nonsingular.
  const double shift = eigenvalue + 1e-13 * std::max({std::abs(lo), std::abs(hi), 1.0});

  // LU factors of (T - shift I) with partial pivoting (Thomas with row swaps).
  // Row i after elimination has nonzeros at columns i, i+1, i+2.
  std::vector<double> u0(n), u1(n), u2(n), mult(n);
  std::vector<bool> swapped(n, false);
  {
    double d = t.diagonal[0] - shift;
    double up = n > 1 ? t.off_diagonal[0] : 0.0;
    double up2 = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double below = t.off_diagonal[i];
      double nd = t.diagonal[i + 1] - shift;
      double nup = i + 2 < n ? t.off_diagonal[i + 1] : 0.0;
      if (std::abs(below) > std::abs(d)) {
        swapped[i] = true;
        const double f = d / below;
        u0[i] = below;
        u1[i] = nd;
        u2[i] = nup;
        mult[i] = f;
        d = up - f * nd;
        up = up2 - f * nup;
      } else {
        if (d == 0.0) d = 1e-300;
        const double f = below / d;
        u0[i] = d;
        u1[i] = up;
        u2[i] = up2;
        mult[i] = f;
        d = nd - f * up;
        up = nup - f * up2;
      }
      up2 = 0.0;
    }
    if (d == 0.0) d = 1e-300;
    u0[n - 1] = d;
    u1[n - 1] = 0.0;
    u2[n - 1] = 0.0;
  }

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int iter = 0; iter < 4; ++iter) {
    // Forward: apply the row operations to the right-hand side.
    std::vector<double> b = x;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= mult[i] * b[i];
    }
    for (std::size_t i = n; i-- > 0;) {
      double s = b[i];
      if (i + 1 < n) s -= u1[i] * x[i + 1];
      if (i + 2 < n) s -= u2[i] * x[i + 2];
      x[i] = s / u0[i];
    }
    double nrm = 0.0;
    for (double z : x) nrm += z * z;
    nrm = std::sqrt(nrm);
    for (double& z : x) z /= nrm;
  }
  // Fix sign: largest component positive.
  const auto it = std::max_element(x.begin(), x.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
  if (*it < 0)
    for (double& z : x) z = -z;
  return x;
}

}  // namespace ehf::linalg
