#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "eurkit/complex_matrix.hpp"
#include "eurkit/errors.hpp"
#include "eurkit/format.hpp"
#include "eurkit/tolerances.hpp"

namespace eurkit {

using RealMatrix = std::vector<std::vector<double>>;

/// Orthonormal basis of a d-dimensional space, modeling one projective
/// measurement. Vectors are validated pairwise at construction.
class ProjectiveBasis {
 public:
  ProjectiveBasis(std::vector<ComplexVector> vectors, std::string label)
      : vectors_(std::move(vectors)), label_(std::move(label)) {
    const std::size_t d = vectors_.size();
    if (d == 0) throw DimensionError("ProjectiveBasis: empty basis");
    for (const auto& v : vectors_)
      if (v.size() != d)
        throw DimensionError("ProjectiveBasis: vector length does not match count");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        const Complex g = inner(vectors_[i], vectors_[j]);
        const double expected = (i == j) ? 1.0 : 0.0;
        if (std::abs(g - expected) > kTolOrtho)
          throw DomainError("ProjectiveBasis '" + label_ + "': vectors " +
                                std::to_string(i) + "," + std::to_string(j) +
                                " not orthonormal (|<u_i|u_j>| error " +
                                format_g3(std::abs(g - expected)) + ")",
                            std::abs(g - expected));
      }
  }

  std::size_t dim() const noexcept { return vectors_.size(); }
  const ComplexVector& vector(std::size_t i) const { return vectors_.at(i); }
  const std::vector<ComplexVector>& vectors() const noexcept { return vectors_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::vector<ComplexVector> vectors_;
  std::string label_;
};

/// Entry (j,k) = |<u_j|v_k>|^2. Doubly stochastic for orthonormal inputs.
inline RealMatrix overlap_matrix(const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
  if (b1.dim() != b2.dim())
    throw DimensionError("overlap_matrix: dims " + std::to_string(b1.dim()) + " vs " +
                         std::to_string(b2.dim()));
  const std::size_t d = b1.dim();
  RealMatrix c(d, std::vector<double>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      c[j][k] = std::norm(inner(b1.vector(j), b2.vector(k)));
  return c;
}

inline double max_overlap(const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
  double best = 0.0;
  for (const auto& row : overlap_matrix(b1, b2))
    for (double x : row) best = std::max(best, x);
  return best;
}

/// True iff every overlap entry sits within tol of 1/d.
inline bool is_mub(const ProjectiveBasis& b1, const ProjectiveBasis& b2,
                   double tol = kTolMub) {
  const double target = 1.0 / static_cast<double>(b1.dim());
  for (const auto& row : overlap_matrix(b1, b2))
    for (double x : row)
      if (std::abs(x - target) > tol) return false;
  return true;
}

/// Ordered list of N >= 2 same-dimension bases with all pairwise overlap
/// matrices cached eagerly. Construction rejects any cache entry that is not
/// doubly stochastic, so downstream bound math never sees a bad overlap.
class MeasurementSet {
 public:
  explicit MeasurementSet(std::vector<ProjectiveBasis> bases)
      : bases_(std::move(bases)) {
    const std::size_t n = bases_.size();
    if (n < 2) throw DimensionError("MeasurementSet: need at least 2 bases");
    const std::size_t d = bases_[0].dim();
    for (const auto& b : bases_)
      if (b.dim() != d)
        throw DimensionError("MeasurementSet: basis '" + b.label() +
                             "' has dim " + std::to_string(b.dim()) +
                             ", expected " + std::to_string(d));
    cache_.resize(n, std::vector<RealMatrix>(n));
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t k = 0; k < n; ++k) {
        if (m == k) continue;
        cache_[m][k] = overlap_matrix(bases_[m], bases_[k]);
        validate_doubly_stochastic(cache_[m][k], bases_[m].label(),
                                   bases_[k].label());
      }
  }

  std::size_t count() const noexcept { return bases_.size(); }
  std::size_t dim() const noexcept { return bases_[0].dim(); }
  const ProjectiveBasis& basis(std::size_t m) const { return bases_.at(m); }
  const std::vector<ProjectiveBasis>& bases() const noexcept { return bases_; }

  const RealMatrix& overlap(std::size_t m, std::size_t k) const {
    if (m == k || m >= count() || k >= count())
      throw DimensionError("MeasurementSet::overlap: bad pair (" +
                           std::to_string(m) + "," + std::to_string(k) + ")");
    return cache_[m][k];
  }

  /// Max overlaps c_i over unordered pairs, lexicographic (m,k) with m < k.
  std::vector<double> c_list() const {
    std::vector<double> out;
    for (std::size_t m = 0; m < count(); ++m)
      for (std::size_t k = m + 1; k < count(); ++k) {
        double best = 0.0;
        for (const auto& row : cache_[m][k])
          for (double x : row) best = std::max(best, x);
        out.push_back(best);
      }
    return out;
  }

  bool all_pairs_mub(double tol = kTolMub) const {
    const double target = 1.0 / static_cast<double>(dim());
    for (std::size_t m = 0; m < count(); ++m)
      for (std::size_t k = m + 1; k < count(); ++k)
        for (const auto& row : cache_[m][k])
          for (double x : row)
            if (std::abs(x - target) > tol) return false;
    return true;
  }

 private:
  static void validate_doubly_stochastic(const RealMatrix& c, const std::string& l1,
                                         const std::string& l2) {
    const std::size_t d = c.size();
    for (std::size_t j = 0; j < d; ++j) {
      double row_sum = 0.0;
      double col_sum = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        if (c[j][k] < 0.0 || c[j][k] > 1.0 + kTolStochastic)
          throw DomainError("MeasurementSet: overlap entry outside [0,1] for pair (" +
                                l1 + "," + l2 + ")",
                            c[j][k]);
        row_sum += c[j][k];
        col_sum += c[k][j];
      }
      if (std::abs(row_sum - 1.0) > kTolStochastic ||
          std::abs(col_sum - 1.0) > kTolStochastic)
        throw DomainError("MeasurementSet: overlap matrix for pair (" + l1 + "," +
                              l2 + ") is not doubly stochastic",
                          std::abs(row_sum - 1.0));
    }
  }

  std::vector<ProjectiveBasis> bases_;
  std::vector<std::vector<RealMatrix>> cache_;
};

/// Eigenbases of sigma_x, sigma_y, sigma_z, in that order.
inline MeasurementSet pauli_bases() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i_unit(0.0, 1.0);
  std::vector<ProjectiveBasis> bases;
  bases.emplace_back(std::vector<ComplexVector>{{s, s}, {s, -s}}, "sigma_x");
  bases.emplace_back(std::vector<ComplexVector>{{s, s * i_unit}, {s, -s * i_unit}},
                     "sigma_y");
  bases.emplace_back(std::vector<ComplexVector>{{1.0, 0.0}, {0.0, 1.0}}, "sigma_z");
  return MeasurementSet(std::move(bases));
}

/// The three-dimensional MUB triple (alpha, beta, gamma) built from the cube
/// root of unity eps = exp(2*pi*i/3). Every pairwise overlap is checked
/// against 1/3 at construction; a deviation beyond kTolMub aborts loudly.
inline MeasurementSet qutrit_mub() {
  const double s = 1.0 / std::sqrt(3.0);
  const Complex eps = std::exp(Complex(0.0, 2.0 * std::numbers::pi / 3.0));
  const Complex epc = std::conj(eps);

  std::vector<ProjectiveBasis> bases;
  bases.emplace_back(
      std::vector<ComplexVector>{
          {s, s, s}, {s, s * epc, s * eps}, {s, s * eps, s * epc}},
      "alpha");
  bases.emplace_back(
      std::vector<ComplexVector>{
          {s, s, s * epc}, {s, s * eps, s * eps}, {s, s * epc, s}},
      "beta");
  bases.emplace_back(
      std::vector<ComplexVector>{
          {s, s, s * eps}, {s, s * epc, s * epc}, {s, s * eps, s}},
      "gamma");

  for (std::size_t m = 0; m < bases.size(); ++m)
    for (std::size_t k = m + 1; k < bases.size(); ++k) {
      const RealMatrix c = overlap_matrix(bases[m], bases[k]);
      for (const auto& row : c)
        for (double x : row)
          if (std::abs(x - 1.0 / 3.0) > kTolMub)
            throw MubVerificationError(
                "qutrit_mub: overlap " + format_g17(x) + " between '" +
                bases[m].label() + "' and '" + bases[k].label() +
                "' deviates from 1/3");
    }
  return MeasurementSet(std::move(bases));
}

namespace detail {

/// Chain contraction over the given basis order:
///   v_j <- max_i C^(o0,o1)_{ij}; then v <- v^T C^(ok,ok+1); f = max_j v_j.
inline double f_chain(const MeasurementSet& ms, const std::vector<std::size_t>& order) {
  const std::size_t d = ms.dim();
  const RealMatrix& first = ms.overlap(order[0], order[1]);
  std::vector<double> v(d, 0.0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) v[j] = std::max(v[j], first[i][j]);
  for (std::size_t step = 1; step + 1 < order.size(); ++step) {
    const RealMatrix& c = ms.overlap(order[step], order[step + 1]);
    std::vector<double> next(d, 0.0);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) next[k] += v[j] * c[j][k];
    v = std::move(next);
  }
  return *std::max_element(v.begin(), v.end());
}

}  // namespace detail

/// Chained overlap f of the multi-measurement bound, computed for the bases
/// in their given order. Collapses to max_overlap for N = 2 and to 1/d when
/// every pair is mutually unbiased.
inline double f_overlap(const MeasurementSet& ms) {
  std::vector<std::size_t> order(ms.count());
  for (std::size_t m = 0; m < order.size(); ++m) order[m] = m;
  return detail::f_chain(ms, order);
}

struct FOverlapResult {
  double f;
  std::vector<std::size_t> order;
};

/// Minimum f over all basis orderings (exhaustive, so capped at N <= 6).
/// Ties keep the lexicographically smallest permutation for determinism.
inline FOverlapResult f_overlap_min(const MeasurementSet& ms) {
  const std::size_t n = ms.count();
  if (n > 6)
    throw DomainError("f_overlap_min: exhaustive ordering capped at 6 bases",
                      static_cast<double>(n));
  std::vector<std::size_t> perm(n);
  for (std::size_t m = 0; m < n; ++m) perm[m] = m;
  FOverlapResult best{detail::f_chain(ms, perm), perm};
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double f = detail::f_chain(ms, perm);
    if (f < best.f) best = {f, perm};
  }
  return best;
}

}  // namespace eurkit
