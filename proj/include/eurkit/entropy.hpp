#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "eurkit/complex_matrix.hpp"
#include "eurkit/errors.hpp"
#include "eurkit/measurements.hpp"
#include "eurkit/probability.hpp"
#include "eurkit/states.hpp"

namespace eurkit {

namespace detail {

/// -sum p log2 p with 0*log2(0) == 0. Callers guarantee nonnegative entries.
inline double entropy_bits(std::span<const double> p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

}  // namespace detail

inline double shannon(const ProbabilityVector& p) {
  return detail::entropy_bits(p.entries());
}

/// Von Neumann entropy in bits, from the cached clamped spectrum.
inline double von_neumann(const DensityMatrix& rho) {
  return detail::entropy_bits(rho.spectrum());
}

/// S(A|B) = S(AB) - S(B). Negative values witness entanglement.
inline double conditional_entropy(const DensityMatrix& rho_ab) {
  return von_neumann(rho_ab) - von_neumann(marginal_b(rho_ab));
}

/// S(A) + S(B) - S(AB), in [0, 2 min(log2 dA, log2 dB)].
inline double mutual_information(const DensityMatrix& rho_ab) {
  return von_neumann(marginal_a(rho_ab)) + von_neumann(marginal_b(rho_ab)) -
         von_neumann(rho_ab);
}

/// Outcome distribution of measuring A: p_j = <u_j| rho_A |u_j>.
inline ProbabilityVector measurement_probs(const DensityMatrix& rho_ab,
                                           const ProjectiveBasis& basis) {
  if (basis.dim() != rho_ab.dim_a())
    throw DimensionError("measurement_probs: basis dim " +
                         std::to_string(basis.dim()) + " vs dA " +
                         std::to_string(rho_ab.dim_a()));
  const ComplexMatrix rho_a =
      partial_trace(rho_ab.matrix(), rho_ab.dim_a(), rho_ab.dim_b(), Keep::A);
  std::vector<double> p(basis.dim());
  for (std::size_t j = 0; j < basis.dim(); ++j) {
    const ComplexVector& u = basis.vector(j);
    p[j] = inner(u, rho_a * u).real();
  }
  return ProbabilityVector(std::move(p));
}

/// Diagonal density matrix diag(p), a single-party state (dB = 1).
inline DensityMatrix diagonal_state(const ProbabilityVector& p) {
  ComplexMatrix m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, i) = p[i];
  return DensityMatrix(std::move(m), p.size(), 1);
}

/// rho_MB = sum_j (|u_j><u_j| (x) 1_B) rho (|u_j><u_j| (x) 1_B): the
/// classical-quantum state after projectively measuring A in `basis`.
inline DensityMatrix post_measurement_state(const DensityMatrix& rho_ab,
                                            const ProjectiveBasis& basis) {
  const std::size_t da = rho_ab.dim_a();
  const std::size_t db = rho_ab.dim_b();
  if (basis.dim() != da)
    throw DimensionError("post_measurement_state: basis dim " +
                         std::to_string(basis.dim()) + " vs dA " +
                         std::to_string(da));
  const ComplexMatrix& rho = rho_ab.matrix();
  ComplexMatrix out(da * db);
  for (std::size_t j = 0; j < da; ++j) {
    const ComplexVector& u = basis.vector(j);
    // Q_j = <u_j| rho |u_j>_A, a dB x dB block.
    ComplexMatrix q(db);
    for (std::size_t b1 = 0; b1 < db; ++b1)
      for (std::size_t b2 = 0; b2 < db; ++b2) {
        Complex acc = 0.0;
        for (std::size_t a1 = 0; a1 < da; ++a1)
          for (std::size_t a2 = 0; a2 < da; ++a2)
            acc += std::conj(u[a1]) * rho(a1 * db + b1, a2 * db + b2) * u[a2];
        q(b1, b2) = acc;
      }
    out += kron(outer(u), q);
  }
  return DensityMatrix(std::move(out), da, db);
}

/// S(M|B) = S(rho_MB) - S(rho_B): conditional entropy of the dephased state.
inline double measured_conditional(const DensityMatrix& rho_ab,
                                   const ProjectiveBasis& basis) {
  return von_neumann(post_measurement_state(rho_ab, basis)) -
         von_neumann(marginal_b(rho_ab));
}

/// Holevo quantity I(M:B) = S(rho_M) + S(rho_B) - S(rho_MB), where rho_M is
/// the diagonal register state over measurement outcomes.
inline double holevo(const DensityMatrix& rho_ab, const ProjectiveBasis& basis) {
  const DensityMatrix rho_m = diagonal_state(measurement_probs(rho_ab, basis));
  return von_neumann(rho_m) + von_neumann(marginal_b(rho_ab)) -
         von_neumann(post_measurement_state(rho_ab, basis));
}

/// U = sum_m S(M_m|B), the total entropic uncertainty across the set.
inline double uncertainty_sum(const DensityMatrix& rho_ab, const MeasurementSet& ms) {
  double u = 0.0;
  for (const ProjectiveBasis& b : ms.bases()) u += measured_conditional(rho_ab, b);
  return u;
}

}  // namespace eurkit
