#include "tlt/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

namespace tlt::num {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << what << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match shape");
  }
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::column(std::size_t j) const {
  ComplexMatrix out(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, j);
  return out;
}

double ComplexMatrix::max_norm() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

complex ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream os;
    os << "matrix product: inner dimensions " << a.cols() << " and " << b.rows() << " differ";
    throw std::invalid_argument(os.str());
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const complex aik = a(i, k);
      if (aik == complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t p = b.rows();
  const std::size_t q = b.cols();
  ComplexMatrix out(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const complex aij = a(i, j);
      if (aij == complex{}) continue;
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l) out(i * p + k, j * q + l) = aij * b(k, l);
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b + b * a; }

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("hermiticity_defect: matrix is not square");
  double d = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

// ---------------------------------------------------------------------------

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_square() || m_.empty()) {
    throw std::invalid_argument("HermitianOperator: matrix must be square and non-empty");
  }
  const double defect = hermiticity_defect(m_);
  if (defect > 1e-12 * std::max(1.0, m_.max_norm())) {
    std::ostringstream os;
    os << "HermitianOperator: |M - M^dagger|_max = " << defect << " exceeds tolerance";
    throw std::invalid_argument(os.str());
  }
  const std::size_t n = m_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    m_(i, i) = m_(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const complex avg = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
      m_(i, j) = avg;
      m_(j, i) = std::conj(avg);
    }
  }
}

HermitianOperator HermitianOperator::zero(std::size_t dim) { return HermitianOperator(ComplexMatrix(dim, dim)); }

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  return HermitianOperator(ComplexMatrix::identity(dim));
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
  m_ += other.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& other) {
  m_ -= other.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double s) {
  m_ *= s;
  return *this;
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(kron(a.matrix(), b.matrix()));
}

HermitianOperator project(const HermitianOperator& h, const ComplexMatrix& isometry) {
  if (isometry.rows() != h.dim()) {
    throw std::invalid_argument("project: isometry rows do not match operator dimension");
  }
  return HermitianOperator(isometry.adjoint() * (h.matrix() * isometry));
}

// ---------------------------------------------------------------------------

ConvergenceError::ConvergenceError(std::size_t dim, double residual)
    : std::runtime_error("eigh: Jacobi iteration did not converge (dim " + std::to_string(dim) +
                         ", off-diagonal residual " + std::to_string(residual) + ")"),
      dim_(dim),
      residual_(residual) {}

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

void fix_column_phase(ComplexMatrix& v, std::size_t col) {
  double largest = 0.0;
  for (std::size_t i = 0; i < v.rows(); ++i) largest = std::max(largest, std::abs(v(i, col)));
  if (largest == 0.0) return;
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    if (std::abs(v(i, col)) >= largest * (1.0 - 1e-10)) {
      pivot = i;
      break;
    }
  }
  const complex phase = std::conj(v(pivot, col)) / std::abs(v(pivot, col));
  for (std::size_t i = 0; i < v.rows(); ++i) v(i, col) *= phase;
  v(pivot, col) = std::abs(v(pivot, col));
}

}  // namespace

EigenDecomposition eigh(const HermitianOperator& m) {
  const std::size_t n = m.dim();
  ComplexMatrix a = m.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();

  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-15 * scale) {
      converged = true;
      break;
    }
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const complex apq = a(p, q);
        const double mag = std::abs(apq);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Rotation would be below rounding of the diagonal.
        if (mag == 0.0 || mag < 1e-18 * (std::abs(app) + std::abs(aqq))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        rotated = true;
        const complex phase = apq / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const complex s_pq = s * phase;             // J(p,q)
        const complex s_qp = -s * std::conj(phase); // J(q,p)

        for (std::size_t k = 0; k < n; ++k) {
          const complex akp = a(k, p);
          const complex akq = a(k, q);
          a(k, p) = c * akp + s_qp * akq;
          a(k, q) = s_pq * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const complex apk = a(p, k);
          const complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(s_qp) * aqk;
          a(q, k) = std::conj(s_pq) * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const complex vkp = v(k, p);
          const complex vkq = v(k, q);
          v(k, p) = c * vkp + s_qp * vkq;
          v(k, q) = s_pq * vkp + c * vkq;
        }
      }
    }
    if (!rotated) converged = true;
  }
  if (!converged) {
    const double residual = off_diagonal_norm(a);
    if (residual > 1e-12 * scale) throw ConvergenceError(n, residual);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.eigenvalues[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, c) = v(r, order[c]);
    fix_column_phase(out.eigenvectors, c);
  }
  return out;
}

HermitianOperator operator_function(const HermitianOperator& m, const std::function<double(double)>& f) {
  const auto eig = eigh(m);
  const std::size_t n = m.dim();
  const auto& v = eig.eigenvectors;
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const complex vik = v(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(v(j, k));
    }
  }
  return HermitianOperator(std::move(out));
}

// ---------------------------------------------------------------------------

char to_char(Pauli p) { return static_cast<char>(p); }

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument(std::string("unknown Pauli label '") + c + "'");
  }
}

const ComplexMatrix& pauli_matrix(Pauli p) {
  using namespace std::complex_literals;
  static const ComplexMatrix id(2, 2, {1.0, 0.0, 0.0, 1.0});
  static const ComplexMatrix x(2, 2, {0.0, 1.0, 1.0, 0.0});
  static const ComplexMatrix y(2, 2, {0.0, -1i, 1i, 0.0});
  static const ComplexMatrix z(2, 2, {1.0, 0.0, 0.0, -1.0});
  switch (p) {
    case Pauli::I: return id;
    case Pauli::X: return x;
    case Pauli::Y: return y;
    case Pauli::Z: return z;
  }
  return id;
}

ComplexMatrix pauli_string(std::span<const Pauli> labels) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (Pauli p : labels) out = kron(out, pauli_matrix(p));
  return out;
}

complex pauli_component(const HermitianOperator& h, std::span<const Pauli> labels) {
  const std::size_t k = labels.size();
  const std::size_t dim = std::size_t{1} << k;
  if (k == 0 || k > 20 || h.dim() != dim) {
    std::ostringstream os;
    os << "pauli_coefficient: operator dimension " << h.dim() << " does not match " << k << " Pauli labels";
    throw std::invalid_argument(os.str());
  }
  // Each row of a Pauli string has a single non-zero entry at column i ^ flip.
  std::size_t flip = 0;
  for (std::size_t pos = 0; pos < k; ++pos) {
    if (labels[pos] == Pauli::X || labels[pos] == Pauli::Y) flip |= std::size_t{1} << (k - 1 - pos);
  }
  const auto& m = h.matrix();
  complex sum = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    complex entry = 1.0;
    for (std::size_t pos = 0; pos < k; ++pos) {
      const bool bit = (i >> (k - 1 - pos)) & 1U;
      switch (labels[pos]) {
        case Pauli::I:
        case Pauli::X: break;
        case Pauli::Y: entry *= bit ? complex(0.0, 1.0) : complex(0.0, -1.0); break;
        case Pauli::Z: entry *= bit ? -1.0 : 1.0; break;
      }
    }
    sum += entry * m(i ^ flip, i);
  }
  return sum / static_cast<double>(dim);
}

double pauli_coefficient(const HermitianOperator& h, std::span<const Pauli> labels) {
  return pauli_component(h, labels).real();
}

std::vector<PauliTerm> pauli_decomposition(const HermitianOperator& h) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < h.dim()) ++k;
  if ((std::size_t{1} << k) != h.dim()) {
    throw std::invalid_argument("pauli_decomposition: dimension is not a power of two");
  }
  static constexpr std::array<Pauli, 4> kAll{Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  std::vector<PauliTerm> terms;
  const std::size_t count = std::size_t{1} << (2 * k);
  terms.reserve(count);
  std::vector<Pauli> labels(k);
  for (std::size_t code = 0; code < count; ++code) {
    for (std::size_t pos = 0; pos < k; ++pos) labels[pos] = kAll[(code >> (2 * (k - 1 - pos))) & 3U];
    terms.push_back({labels, pauli_coefficient(h, labels)});
  }
  return terms;
}

}  // namespace tlt::num
