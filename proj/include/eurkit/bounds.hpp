#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "eurkit/entropy.hpp"
#include "eurkit/errors.hpp"
#include "eurkit/measurements.hpp"
#include "eurkit/states.hpp"

namespace eurkit {

enum class OrderMode { Given, Optimal };

/// Every quantity computed for one (state, measurement set) pair. `order_used`
/// is the basis permutation behind `f`; `lmf` is reported unclipped, with
/// `lmf_negative` flagging the sign.
struct BoundReport {
  double uncertainty = 0.0;
  double lmf = 0.0;
  double scb = 0.0;
  double oscb = 0.0;
  double f = 0.0;
  std::vector<double> c_list;
  double cond_ab = 0.0;
  double mutual = 0.0;
  std::vector<double> holevo_list;
  double delta_m = 0.0;
  std::vector<std::size_t> order_used;
  bool mub = false;
  bool lmf_negative = false;
};

/// -log2 c, the Maassen-Uffink quantity.
inline double mu_bound(double c) {
  if (c <= 0.0) throw DomainError("mu_bound: overlap must be positive", c);
  return -std::log2(c);
}

namespace detail {

inline double lmf_value(double f, double cond, std::size_t n) {
  return -std::log2(f) + static_cast<double>(n - 1) * cond;
}

inline double scb_value(std::span<const double> c_list, double cond, std::size_t n) {
  double prod = 1.0;
  for (double c : c_list) prod *= c;
  return -(1.0 / static_cast<double>(n - 1)) * std::log2(prod) +
         (static_cast<double>(n) / 2.0) * cond;
}

inline double delta_m_value(double mutual, std::span<const double> holevo_list,
                            std::size_t n) {
  double sum = 0.0;
  for (double h : holevo_list) sum += h;
  return (static_cast<double>(n) / 2.0) * mutual - sum;
}

}  // namespace detail

inline double berta_bound(const DensityMatrix& rho_ab, const ProjectiveBasis& b1,
                          const ProjectiveBasis& b2) {
  return mu_bound(max_overlap(b1, b2)) + conditional_entropy(rho_ab);
}

inline double adabi_bound(const DensityMatrix& rho_ab, const ProjectiveBasis& b1,
                          const ProjectiveBasis& b2) {
  const double delta = mutual_information(rho_ab) -
                       (holevo(rho_ab, b1) + holevo(rho_ab, b2));
  return berta_bound(rho_ab, b1, b2) + std::max(0.0, delta);
}

/// -log2 f + (N-1) S(A|B), for the bases in their given order.
inline double lmf_bound(const DensityMatrix& rho_ab, const MeasurementSet& ms) {
  return detail::lmf_value(f_overlap(ms), conditional_entropy(rho_ab), ms.count());
}

/// -(1/(N-1)) log2(prod c_i) + (N/2) S(A|B). Reduces to berta_bound at N=2.
inline double scb_bound(const DensityMatrix& rho_ab, const MeasurementSet& ms) {
  return detail::scb_value(ms.c_list(), conditional_entropy(rho_ab), ms.count());
}

/// scb + max{0, (N/2) I(A:B) - sum_m I(M_m:B)}. Reduces to adabi_bound at N=2.
inline double oscb_bound(const DensityMatrix& rho_ab, const MeasurementSet& ms) {
  std::vector<double> hol;
  for (const ProjectiveBasis& b : ms.bases()) hol.push_back(holevo(rho_ab, b));
  const double dm = detail::delta_m_value(mutual_information(rho_ab), hol, ms.count());
  return scb_bound(rho_ab, ms) + std::max(0.0, dm);
}

/// (n/2 - 1)(log2 d - cond_ab): the exact SCB-LMF gap on MUB sets.
inline double mub_gap(std::size_t d, double cond_ab, std::size_t n) {
  return (static_cast<double>(n) / 2.0 - 1.0) *
         (std::log2(static_cast<double>(d)) - cond_ab);
}

/// One pass over the measurement set filling every report field. Each field
/// matches what the corresponding standalone operation returns; the shared
/// post-measurement states are just computed once per basis here.
inline BoundReport evaluate_all(const DensityMatrix& rho_ab, const MeasurementSet& ms,
                                OrderMode mode = OrderMode::Given) {
  if (ms.dim() != rho_ab.dim_a())
    throw DimensionError("evaluate_all: measurement dim " + std::to_string(ms.dim()) +
                         " vs dA " + std::to_string(rho_ab.dim_a()));
  const std::size_t n = ms.count();
  BoundReport r;
  r.cond_ab = conditional_entropy(rho_ab);
  r.mutual = mutual_information(rho_ab);
  r.c_list = ms.c_list();
  r.mub = ms.all_pairs_mub();

  if (mode == OrderMode::Optimal) {
    const FOverlapResult res = f_overlap_min(ms);
    r.f = res.f;
    r.order_used = res.order;
  } else {
    r.f = f_overlap(ms);
    r.order_used.resize(n);
    for (std::size_t m = 0; m < n; ++m) r.order_used[m] = m;
  }

  const double s_b = von_neumann(marginal_b(rho_ab));
  for (const ProjectiveBasis& b : ms.bases()) {
    const DensityMatrix pm = post_measurement_state(rho_ab, b);
    const double s_mb = von_neumann(pm);
    r.uncertainty += s_mb - s_b;
    const double s_m = von_neumann(diagonal_state(measurement_probs(rho_ab, b)));
    r.holevo_list.push_back(s_m + s_b - s_mb);
  }

  r.lmf = detail::lmf_value(r.f, r.cond_ab, n);
  r.scb = detail::scb_value(r.c_list, r.cond_ab, n);
  r.delta_m = detail::delta_m_value(r.mutual, r.holevo_list, n);
  r.oscb = r.scb + std::max(0.0, r.delta_m);
  r.lmf_negative = r.lmf < 0.0;
  return r;
}

}  // namespace eurkit
