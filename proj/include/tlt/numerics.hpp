#pragma once

// Dense complex linear algebra for small Hilbert spaces (dimension up to a
// few thousand). Everything here is a value type; no shared mutable state.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlt::num {

using complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Entries in row-major order; throws if the count does not match or an
  /// entry is not finite.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix column(std::size_t j) const;

  /// Largest entry modulus.
  double max_norm() const;
  double frobenius_norm() const;
  complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, complex s) { return a *= s; }
  friend ComplexMatrix operator*(complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complex> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |M - M^dagger|
double hermiticity_defect(const ComplexMatrix& m);

/// Square complex matrix with M = M^dagger to within
/// 1e-12 * max(1, |M|_max). Construction validates and then symmetrizes, so
/// downstream code sees an exactly Hermitian matrix.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(ComplexMatrix m);

  static HermitianOperator zero(std::size_t dim);
  static HermitianOperator identity(std::size_t dim);

  std::size_t dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }

  HermitianOperator& operator+=(const HermitianOperator& other);
  HermitianOperator& operator-=(const HermitianOperator& other);
  HermitianOperator& operator*=(double s);

  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
  friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
  friend HermitianOperator operator*(HermitianOperator a, double s) { return a *= s; }
  friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }

 private:
  ComplexMatrix m_;
};

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b);

/// U^dagger H U for an isometry U (columns orthonormal).
HermitianOperator project(const HermitianOperator& h, const ComplexMatrix& isometry);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::size_t dim, double residual);
  std::size_t dim() const { return dim_; }
  double residual() const { return residual_; }

 private:
  std::size_t dim_;
  double residual_;
};

/// Cyclic complex Jacobi. Eigenvalues ascending; each eigenvector's
/// largest-magnitude component is made real positive (first index wins ties).
EigenDecomposition eigh(const HermitianOperator& m);

/// V f(Lambda) V^dagger
HermitianOperator operator_function(const HermitianOperator& m, const std::function<double(double)>& f);

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

char to_char(Pauli p);
Pauli pauli_from_char(char c);
const ComplexMatrix& pauli_matrix(Pauli p);
ComplexMatrix pauli_string(std::span<const Pauli> labels);

/// Tr[(sigma_l1 x ... x sigma_lk) h] / 2^k, complex-valued.
complex pauli_component(const HermitianOperator& h, std::span<const Pauli> labels);

/// Real part of pauli_component. Throws std::invalid_argument on dimension
/// mismatch.
double pauli_coefficient(const HermitianOperator& h, std::span<const Pauli> labels);

struct PauliTerm {
  std::vector<Pauli> labels;
  double coefficient;
};

/// All 4^k coefficients, labels enumerated lexicographically in I,X,Y,Z order.
std::vector<PauliTerm> pauli_decomposition(const HermitianOperator& h);

}  // namespace tlt::num
