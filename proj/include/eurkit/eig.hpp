#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "eurkit/complex_matrix.hpp"
#include "eurkit/errors.hpp"
#include "eurkit/format.hpp"
#include "eurkit/tolerances.hpp"

namespace eurkit {

/// Result of a Hermitian eigendecomposition. Eigenvalues sorted descending,
/// eigenvectors stored as the matching columns of a unitary matrix.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexVector eigenvector(std::size_t k) const {
    ComplexVector v(eigenvectors.dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = eigenvectors(i, k);
    return v;
  }
};

namespace detail {

// One complex Jacobi rotation annihilating A(p,q). The pivot's phase is
// absorbed first (so the 2x2 subproblem is real symmetric), then a Givens
// rotation with the smaller-magnitude tangent root is applied. The combined
// unitary U differs from identity only in columns p,q:
//   U(p,p) = c        U(p,q) = s
//   U(q,p) = -s*w     U(q,q) = c*w      with w = conj(beta)/|beta|.
// A <- U^H A U, V <- V U.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p,
                          std::size_t q) {
  const std::size_t n = a.dim();
  const Complex beta = a(p, q);
  const double r = std::abs(beta);
  if (r == 0.0) return;
  const Complex w = std::conj(beta) / r;

  const double alpha = a(p, p).real();
  const double gamma = a(q, q).real();
  // Smaller-magnitude root of t^2 + 2*theta*t - 1 = 0, the tangent that
  // annihilates the dephased pivot under G = [[c, s], [-s, c]].
  const double theta = (gamma - alpha) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // Column update A <- A U.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * w * akq;
    a(k, q) = s * akp + c * w * akq;
  }
  // Row update A <- U^H A.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * std::conj(w) * aqk;
    a(q, k) = s * apk + c * std::conj(w) * aqk;
  }
  // The pivot is annihilated by construction; pin it to keep the off-diagonal
  // maximum honest, and keep the rotated diagonal exactly real.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * w * vkq;
    v(k, q) = s * vkp + c * w * vkq;
  }
}

inline double max_offdiag(const ComplexMatrix& a) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = r + 1; c < a.dim(); ++c)
      worst = std::max(worst, std::abs(a(r, c)));
  return worst;
}

}  // namespace detail

/// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// sweeps. Robust and dependency-free at the dimensions this library targets
/// (<= 81). Convergence: max off-diagonal magnitude < kTolEig, hard cap
/// kMaxJacobiSweeps sweeps.
///
/// Deterministic output: fixed sweep order, descending eigenvalue sort with
/// stable tie handling, and a phase convention that makes each eigenvector's
/// largest-magnitude component real and nonnegative.
inline EigenDecomposition hermitian_eig(const ComplexMatrix& h) {
  const double herm = h.hermiticity_error();
  if (herm > kTolHerm)
    throw HermiticityError("hermitian_eig: input is not Hermitian (max |a_ij - conj(a_ji)| = " +
                           format_g3(herm) + ")");

  const std::size_t n = h.dim();
  ComplexMatrix a = h;
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Entries already below the annihilation floor are skipped; the post-sweep
  // off-diagonal maximum remains the loop's authority on convergence.
  const double skip_floor = 0.1 * kTolEig;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (detail::max_offdiag(a) < kTolEig) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > skip_floor) detail::jacobi_rotate(a, v, p, q);
  }
  if (!converged && detail::max_offdiag(a) >= kTolEig)
    throw Error("hermitian_eig: Jacobi iteration did not converge within " +
                std::to_string(kMaxJacobiSweeps) + " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues[k] = a(src, src).real();
    // Phase convention: rotate the column so its largest-magnitude component
    // is real and nonnegative (first maximum wins on exact ties).
    std::size_t imax = 0;
    double amax = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(v(i, src));
      if (m > amax) {
        amax = m;
        imax = i;
      }
    }
    Complex phase(1.0, 0.0);
    if (amax > 0.0) phase = std::conj(v(imax, src)) / amax;
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = phase * v(i, src);
  }
  return out;
}

/// Eigenvalues only, sorted descending.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  return hermitian_eig(h).eigenvalues;
}

}  // namespace eurkit
