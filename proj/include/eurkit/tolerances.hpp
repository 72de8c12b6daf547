#pragma once

// Central numeric tolerances. Every invariant check in the library reads
// from here; tests pin against the same constants.

namespace eurkit {

// Maximum entrywise |a_ij - conj(a_ji)| accepted as Hermitian.
inline constexpr double kTolHerm = 1e-10;

// Jacobi sweep convergence: max off-diagonal magnitude below this stops.
inline constexpr double kTolEig = 1e-12;

// Eigenvalues in [-kTolPsd, 0) are clamped to 0; anything lower is an error.
inline constexpr double kTolPsd = 1e-8;

// |trace - 1| accepted for a density matrix.
inline constexpr double kTolTrace = 1e-10;

// |<u_i|u_j> - delta_ij| accepted for a projective basis.
inline constexpr double kTolOrtho = 1e-10;

// Row/column sum deviation accepted for an overlap matrix.
inline constexpr double kTolStochastic = 1e-10;

// |entry - 1/d| accepted when classifying a basis pair as mutually unbiased.
inline constexpr double kTolMub = 1e-10;

// Probability vectors: sum deviation and negative-entry grace.
inline constexpr double kTolProbSum = 1e-10;
inline constexpr double kTolProbNeg = 1e-12;

// Serialized inputs are gated at a looser tolerance, then canonicalized
// (symmetrized / renormalized / re-orthonormalized) to the in-memory ones.
inline constexpr double kTolIoHerm = 1e-8;
inline constexpr double kTolIoTrace = 1e-8;
inline constexpr double kTolIoOrtho = 1e-8;

// Slack for the bound-ordering chain U >= OSCB >= SCB >= LMF.
inline constexpr double kTolOrdering = 1e-9;

inline constexpr int kMaxJacobiSweeps = 100;

}  // namespace eurkit
