#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eurkit/complex_matrix.hpp"
#include "eurkit/eig.hpp"
#include "eurkit/errors.hpp"
#include "eurkit/format.hpp"
#include "eurkit/probability.hpp"
#include "eurkit/rng.hpp"
#include "eurkit/tolerances.hpp"

namespace eurkit {

/// Trace-one PSD Hermitian matrix with bipartite dimension labels.
/// Single-party states use dim_b = 1. Validation runs at construction and
/// caches the (descending, clamped) spectrum for the entropy functionals.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, std::size_t dim_a, std::size_t dim_b)
      : matrix_(std::move(matrix)), dim_a_(dim_a), dim_b_(dim_b) {
    if (dim_a == 0 || dim_b == 0 || matrix_.dim() != dim_a * dim_b)
      throw DimensionError("DensityMatrix: dims (" + std::to_string(dim_a) + "," +
                           std::to_string(dim_b) + ") do not match matrix dim " +
                           std::to_string(matrix_.dim()));
    const double herm = matrix_.hermiticity_error();
    if (herm > kTolHerm)
      throw HermiticityError("DensityMatrix: not Hermitian (error " +
                             format_g3(herm) + ")");
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > kTolTrace)
      throw DomainError("DensityMatrix: trace deviates from 1 by " +
                            format_g3(tr - 1.0),
                        tr);
    spectrum_ = hermitian_eigenvalues(matrix_);
    for (double& lam : spectrum_) {
      if (lam < -kTolPsd)
        throw PsdError("DensityMatrix: eigenvalue " + format_g3(lam) +
                       " below -" + format_g3(kTolPsd));
      if (lam < 0.0) lam = 0.0;
    }
  }

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim_a() const noexcept { return dim_a_; }
  std::size_t dim_b() const noexcept { return dim_b_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

  /// Eigenvalues, descending, with negatives in [-kTolPsd, 0) clamped to 0.
  const std::vector<double>& spectrum() const noexcept { return spectrum_; }

 private:
  ComplexMatrix matrix_;
  std::size_t dim_a_;
  std::size_t dim_b_;
  std::vector<double> spectrum_;
};

/// Reduced state on A (a single-party density matrix, dim_b = 1).
inline DensityMatrix marginal_a(const DensityMatrix& rho) {
  return DensityMatrix(
      partial_trace(rho.matrix(), rho.dim_a(), rho.dim_b(), Keep::A), rho.dim_a(), 1);
}

/// Reduced state on B.
inline DensityMatrix marginal_b(const DensityMatrix& rho) {
  return DensityMatrix(
      partial_trace(rho.matrix(), rho.dim_a(), rho.dim_b(), Keep::B), rho.dim_b(), 1);
}

/// |Psi-> = (|01> - |10>)/sqrt(2)
inline ComplexVector singlet_vector() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {0.0, inv_sqrt2, -inv_sqrt2, 0.0};
}

/// Werner family: ((1-p)/4) I_4 + p |Psi-><Psi-|, p in [0, 1].
inline DensityMatrix werner(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError("werner: p must lie in [0,1], got " + format_g17(p), p);
  ComplexMatrix m = ComplexMatrix::identity(4);
  m *= (1.0 - p) / 4.0;
  ComplexMatrix proj = outer(singlet_vector());
  proj *= p;
  m += proj;
  return DensityMatrix(std::move(m), 2, 2);
}

/// Bell-diagonal state (1/4)(I + sum_i r_i sigma_i (x) sigma_i). The
/// correlation vector must lie in the tetrahedron where all four Bell-basis
/// eigenvalues are nonnegative; the thrown DomainError carries the most
/// negative eigenvalue otherwise.
inline DensityMatrix bell_diagonal(double r1, double r2, double r3) {
  const double lam_phi_plus = (1.0 + r1 - r2 + r3) / 4.0;
  const double lam_phi_minus = (1.0 - r1 + r2 + r3) / 4.0;
  const double lam_psi_plus = (1.0 + r1 + r2 - r3) / 4.0;
  const double lam_psi_minus = (1.0 - r1 - r2 - r3) / 4.0;
  double worst = 0.0;
  for (double lam : {lam_phi_plus, lam_phi_minus, lam_psi_plus, lam_psi_minus})
    worst = std::min(worst, lam);
  if (worst < -kTolProbNeg)
    throw DomainError("bell_diagonal: correlation vector outside the Bell tetrahedron, "
                      "eigenvalue " + format_g3(worst),
                      worst);

  ComplexMatrix m = ComplexMatrix::identity(4);
  const double r[3] = {r1, r2, r3};
  for (int i = 1; i <= 3; ++i) {
    ComplexMatrix term = kron(pauli(i), pauli(i));
    term *= r[i - 1];
    m += term;
  }
  m *= 0.25;
  return DensityMatrix(std::move(m), 2, 2);
}

/// One-parameter Bell-diagonal slice r = (1-2p, -p, -p), p in [0, 1].
inline DensityMatrix bell_diagonal_family(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError("bell_diagonal_family: p must lie in [0,1], got " +
                          format_g17(p),
                      p);
  return bell_diagonal(1.0 - 2.0 * p, -p, -p);
}

/// Simplex point from n-1 uniform variates:
///   p_1 = 1 - xi_1^{1/(n-1)},
///   p_k = (1 - xi_k^{1/(n-k)}) (1 - sum_{i<k} p_i),
///   p_n = 1 - sum_{i<n} p_i.
/// The remainder is carried multiplicatively, so entries are nonnegative by
/// construction and the sum stays within 1e-12 of 1.
inline ProbabilityVector simplex_probs_from_uniforms(std::span<const double> xi) {
  const std::size_t n = xi.size() + 1;
  if (n < 2) throw DomainError("simplex_probs_from_uniforms: need n >= 2");
  std::vector<double> p(n);
  double remainder = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    const double x = xi[k - 1];
    if (!(x >= 0.0 && x <= 1.0))
      throw DomainError("simplex_probs_from_uniforms: variate outside [0,1]", x);
    const double root = std::pow(x, 1.0 / static_cast<double>(n - k));
    p[k - 1] = (1.0 - root) * remainder;
    remainder *= root;
  }
  p[n - 1] = remainder;
  return ProbabilityVector(std::move(p));
}

inline ProbabilityVector random_simplex_probs(std::size_t n, Sampler& sampler) {
  if (n < 2) throw DomainError("random_simplex_probs: need n >= 2");
  std::vector<double> xi(n - 1);
  for (double& x : xi) x = sampler.uniform_unit();
  return simplex_probs_from_uniforms(xi);
}

inline ProbabilityVector random_simplex_probs(std::size_t n, const RngStream& rng) {
  Sampler sampler(rng);
  return random_simplex_probs(n, sampler);
}

/// M = D + (U^T + U) + i (L^T - L) from the diagonal / strictly lower /
/// strictly upper parts of a real square matrix given row-major. Hermitian
/// exactly, by construction.
inline ComplexMatrix hermitian_from_real(std::size_t n, std::span<const double> r) {
  if (r.size() != n * n)
    throw DimensionError("hermitian_from_real: need n*n entries");
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = r[i * n + i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex upper(r[i * n + j], r[j * n + i]);
      m(i, j) = upper;
      m(j, i) = std::conj(upper);
    }
  }
  return m;
}

/// Random Hermitian matrix from an n x n real matrix with entries uniform in
/// [-1, 1), drawn row-major.
inline ComplexMatrix random_hermitian(std::size_t n, Sampler& sampler) {
  if (n < 1) throw DomainError("random_hermitian: need n >= 1");
  std::vector<double> r(n * n);
  for (double& x : r) x = sampler.uniform_symmetric();
  return hermitian_from_real(n, r);
}

inline ComplexMatrix random_hermitian(std::size_t n, const RngStream& rng) {
  Sampler sampler(rng);
  return random_hermitian(n, sampler);
}

/// Random bipartite density matrix: eigenvalues from the simplex sampler,
/// eigenvectors from the eigendecomposition of a random Hermitian matrix,
/// both drawn sequentially from the one stream. This is the triangular
/// construction ensemble, not a Haar-uniform one.
inline DensityMatrix random_density(std::size_t dim_a, std::size_t dim_b,
                                    const RngStream& rng) {
  const std::size_t d = dim_a * dim_b;
  if (d < 2) throw DomainError("random_density: total dimension must be >= 2");
  Sampler sampler(rng);
  const ProbabilityVector probs = random_simplex_probs(d, sampler);
  const EigenDecomposition basis = hermitian_eig(random_hermitian(d, sampler));
  ComplexMatrix m(d);
  for (std::size_t nidx = 0; nidx < d; ++nidx) {
    const ComplexVector v = basis.eigenvector(nidx);
    const double pn = probs[nidx];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) += pn * v[i] * std::conj(v[j]);
  }
  return DensityMatrix(std::move(m), dim_a, dim_b);
}

}  // namespace eurkit
