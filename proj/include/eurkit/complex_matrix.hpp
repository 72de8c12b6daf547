#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eurkit/errors.hpp"
#include "eurkit/tolerances.hpp"

namespace eurkit {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense square complex matrix, row-major. The substrate for every state
/// and operator in the library; sized for desk-scale dimensions (<= 81).
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim)
      : dim_(dim), entries_(dim * dim, Complex(0.0, 0.0)) {
    if (dim == 0) throw DimensionError("ComplexMatrix: dim must be >= 1");
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * dim_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }

  const ComplexVector& entries() const noexcept { return entries_; }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  /// max_ij |a_ij - conj(a_ji)|
  double hermiticity_error() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = r; c < dim_; ++c) {
        const double e = std::abs((*this)(r, c) - std::conj((*this)(c, r)));
        if (e > worst) worst = e;
      }
    return worst;
  }

  bool is_hermitian(double tol = kTolHerm) const {
    return hermiticity_error() <= tol;
  }

  double max_abs() const {
    double worst = 0.0;
    for (const Complex& z : entries_) worst = std::max(worst, std::abs(z));
    return worst;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_dim(o, "operator+=");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_dim(o, "operator-=");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (Complex& z : entries_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
    a *= s;
    return a;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_dim(b, "operator*");
    const std::size_t n = a.dim_;
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex(0.0, 0.0)) continue;
        for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }

  friend ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v) {
    if (v.size() != a.dim_)
      throw DimensionError("matrix-vector product: size mismatch");
    ComplexVector out(a.dim_, Complex(0.0, 0.0));
    for (std::size_t r = 0; r < a.dim_; ++r)
      for (std::size_t c = 0; c < a.dim_; ++c) out[r] += a(r, c) * v[c];
    return out;
  }

  bool operator==(const ComplexMatrix& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
  }

  /// max_ij |a_ij - b_ij|
  double max_abs_diff(const ComplexMatrix& o) const {
    require_same_dim(o, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      worst = std::max(worst, std::abs(entries_[i] - o.entries_[i]));
    return worst;
  }

 private:
  void require_same_dim(const ComplexMatrix& o, const char* op) const {
    if (dim_ != o.dim_)
      throw DimensionError(std::string(op) + ": dimension mismatch (" +
                           std::to_string(dim_) + " vs " + std::to_string(o.dim_) + ")");
  }

  std::size_t dim_;
  ComplexVector entries_;
};

inline Complex inner(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) throw DimensionError("inner: size mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

/// |v><v|
inline ComplexMatrix outer(const ComplexVector& v) {
  ComplexMatrix m(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
  return m;
}

/// Kronecker product: entry ((i*b.dim+k),(j*b.dim+l)) = a(i,j) * b(k,l).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

enum class Keep { A, B };

/// Partial trace of a (dim_a * dim_b)-dimensional bipartite operator.
/// Trace and Hermiticity are preserved.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t dim_a,
                                   std::size_t dim_b, Keep keep) {
  if (rho.dim() != dim_a * dim_b)
    throw DimensionError("partial_trace: rho.dim != dim_a * dim_b (" +
                         std::to_string(rho.dim()) + " vs " +
                         std::to_string(dim_a) + "*" + std::to_string(dim_b) + ")");
  if (keep == Keep::A) {
    ComplexMatrix out(dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
      for (std::size_t j = 0; j < dim_a; ++j) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < dim_b; ++k)
          acc += rho(i * dim_b + k, j * dim_b + k);
        out(i, j) = acc;
      }
    return out;
  }
  ComplexMatrix out(dim_b);
  for (std::size_t k = 0; k < dim_b; ++k)
    for (std::size_t l = 0; l < dim_b; ++l) {
      Complex acc = 0.0;
      for (std::size_t i = 0; i < dim_a; ++i)
        acc += rho(i * dim_b + k, i * dim_b + l);
      out(k, l) = acc;
    }
  return out;
}

// Pauli matrices, indexed 1..3 as sigma_x, sigma_y, sigma_z.
inline ComplexMatrix pauli(int i) {
  ComplexMatrix m(2);
  switch (i) {
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw DomainError("pauli: index must be 1, 2 or 3", static_cast<double>(i));
  }
  return m;
}

}  // namespace eurkit
