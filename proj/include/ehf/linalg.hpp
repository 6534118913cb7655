#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ehf::linalg {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Largest row/column count kron() will produce before refusing. N=4 particles
/// need 2^4 * 5 = 80; anything near this limit means a misconfigured N.
inline constexpr std::size_t kDefaultMaxDimension = 4096;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionError on size mismatch and DomainError on NaN/Inf entries.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix diagonal(std::span<const Complex> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }
  std::span<const Complex> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

  ComplexMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const ComplexMatrix& b);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  /// Largest |entry|; 0 for an empty matrix.
  double max_abs() const noexcept;
  double frobenius_norm() const noexcept;
  bool all_finite() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& b);
  ComplexMatrix& operator-=(const ComplexMatrix& b);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> x);

/// max|a - b| over entries; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max|M - M^dagger| <= tol * max|M|.
bool is_hermitian(const ComplexMatrix& m, double rel_tol = 1e-12);

double norm2(std::span<const Complex> v);
Complex dot(std::span<const Complex> a, std::span<const Complex> b);  // conj(a) . b

/// (a (x) b)[i*rb + p, j*cb + q] = a[i,j] * b[p,q].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t max_dimension = kDefaultMaxDimension);

/// Split index of a square matrix into leading k x k and trailing blocks.
struct BlockPartition {
  std::size_t k = 0;
};

/// Determinant by partial-pivot LU.
Complex det_lu(const ComplexMatrix& m);

/// Solves m * x = rhs (rhs may have several columns) with partial-pivot LU.
ComplexMatrix lu_solve(const ComplexMatrix& m, const ComplexMatrix& rhs);
ComplexMatrix inverse(const ComplexMatrix& m);

/// 1-norm condition number kappa_1 = |m|_1 |m^-1|_1; +inf for an exactly singular m.
double condition_number_1(const ComplexMatrix& m);

/// Condition-number ceiling above which the trailing block counts as singular.
inline constexpr double kSingularBlockCondition = 1e12;

/// |M| = |D| * |A - B D^-1 C|. Throws SingularBlockError when D is singular or
/// its condition number exceeds `max_condition`; callers can fall back to det_lu.
Complex block_det_schur(const ComplexMatrix& m, BlockPartition part,
                        double max_condition = kSingularBlockCondition);

/// The three factors of the partitioned-matrix factorization
/// M = [[I, BD^-1],[0, I]] * diag(A - BD^-1 C, D) * [[I, 0],[D^-1 C, I]].
struct SchurFactors {
  ComplexMatrix upper;
  ComplexMatrix middle;
  ComplexMatrix lower;
};

SchurFactors schur_factors(const ComplexMatrix& m, BlockPartition part,
                           double max_condition = kSingularBlockCondition);

/// max|M - U * Sigma * L| for the factors above.
double schur_factor_check(const ComplexMatrix& m, BlockPartition part,
                          double max_condition = kSingularBlockCondition);

inline constexpr double kDefaultNullTolerance = 1e-10;

/// Orthonormal basis of the numerical null space of m, found by Gaussian
/// elimination with full pivoting. A pivot smaller than tol * max|m| ends the
/// elimination; the remaining columns are free. Empty when m has full column rank.
std::vector<ComplexVector> null_space(const ComplexMatrix& m, double tol = kDefaultNullTolerance);

/// Numerical rank under the same pivot rule as null_space.
std::size_t numerical_rank(const ComplexMatrix& m, double tol = kDefaultNullTolerance);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
/// Throws NotHermitianError when max|M - M^dagger| > 1e-12 max|M|.
EigenSystem hermitian_eigen(const ComplexMatrix& m);

/// Real symmetric tridiagonal matrix: diagonal d[0..n), off-diagonal e[0..n-1).
struct SymmetricTridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;

  std::size_t size() const noexcept { return diagonal.size(); }
  ComplexMatrix to_dense() const;
  /// Number of eigenvalues strictly below x (Sturm sequence count).
  std::size_t count_below(double x) const;
  std::vector<double> apply(std::span<const double> x) const;
};

/// Lowest `count` eigenvalues, ascending, by Sturm bisection.
std::vector<double> tridiagonal_eigenvalues(const SymmetricTridiagonal& t, std::size_t count);

/// Unit eigenvector for a (simple) eigenvalue, by inverse iteration.
std::vector<double> tridiagonal_eigenvector(const SymmetricTridiagonal& t, double eigenvalue);

}  // namespace ehf::linalg
