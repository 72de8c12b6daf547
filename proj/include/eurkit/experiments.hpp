#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "eurkit/bounds.hpp"
#include "eurkit/errors.hpp"
#include "eurkit/format.hpp"
#include "eurkit/measurements.hpp"
#include "eurkit/rng.hpp"
#include "eurkit/states.hpp"
#include "eurkit/tolerances.hpp"
#include "eurkit/version.hpp"

namespace eurkit {

struct SweepRecord {
  double p = 0.0;
  double uncertainty = 0.0;
  double lmf = 0.0;
  double scb = 0.0;
  double oscb = 0.0;
};

struct EnsembleRecord {
  std::size_t sample_index = 0;
  double cond_ab = 0.0;
  double uncertainty = 0.0;
  double lmf = 0.0;
  double scb = 0.0;
  double oscb = 0.0;
  double delta_m = 0.0;
};

/// One ordering defect found by violation_scan: which row, which link of the
/// U >= OSCB >= SCB >= LMF chain, and by how much it was broken.
struct Violation {
  std::size_t row = 0;
  std::string what;
  double margin = 0.0;
};

namespace detail {

inline SweepRecord to_sweep_record(double p, const BoundReport& r) {
  return {p, r.uncertainty, r.lmf, r.scb, r.oscb};
}

inline void scan_chain(std::vector<Violation>& out, std::size_t row, double u,
                       double oscb, double scb, double lmf) {
  if (u < oscb - kTolOrdering)
    out.push_back({row, "U < OSCB", oscb - u});
  if (oscb < scb - kTolOrdering)
    out.push_back({row, "OSCB < SCB", scb - oscb});
  if (scb < lmf - kTolOrdering)
    out.push_back({row, "SCB < LMF", lmf - scb});
}

}  // namespace detail

/// Pauli-measured Werner states over a uniform p grid.
inline std::vector<SweepRecord> werner_sweep(std::size_t grid) {
  if (grid < 2) throw DomainError("werner_sweep: need grid >= 2");
  const MeasurementSet ms = pauli_bases();
  std::vector<SweepRecord> out;
  out.reserve(grid);
  for (std::size_t k = 0; k < grid; ++k) {
    const double p = static_cast<double>(k) / static_cast<double>(grid - 1);
    out.push_back(detail::to_sweep_record(p, evaluate_all(werner(p), ms)));
  }
  return out;
}

/// Pauli-measured Bell-diagonal slice r = (1-2p, -p, -p) over a uniform grid.
inline std::vector<SweepRecord> bell_diagonal_sweep(std::size_t grid) {
  if (grid < 2) throw DomainError("bell_diagonal_sweep: need grid >= 2");
  const MeasurementSet ms = pauli_bases();
  std::vector<SweepRecord> out;
  out.reserve(grid);
  for (std::size_t k = 0; k < grid; ++k) {
    const double p = static_cast<double>(k) / static_cast<double>(grid - 1);
    out.push_back(detail::to_sweep_record(p, evaluate_all(bell_diagonal_family(p), ms)));
  }
  return out;
}

/// Random-state ensemble under the built-in MUB set for dim 2 or 3. Sample k
/// is drawn from stream-index k of the master seed, so the records are
/// identical whatever the thread count; rows come back ordered by index.
inline std::vector<EnsembleRecord> random_ensemble(std::size_t dim,
                                                   std::size_t samples,
                                                   std::uint64_t master_seed,
                                                   std::size_t threads = 1) {
  if (dim != 2 && dim != 3)
    throw DomainError("random_ensemble: dim must be 2 or 3",
                      static_cast<double>(dim));
  if (samples < 1) throw DomainError("random_ensemble: need samples >= 1");
  if (threads < 1) threads = 1;
  threads = std::min(threads, samples);

  const MeasurementSet ms = dim == 2 ? pauli_bases() : qutrit_mub();
  std::vector<EnsembleRecord> out(samples);

  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&](std::size_t begin, std::size_t end) {
    try {
      for (std::size_t k = begin; k < end; ++k) {
        const DensityMatrix rho = random_density(dim, dim, RngStream{master_seed, k});
        const BoundReport r = evaluate_all(rho, ms);
        out[k] = {k, r.cond_ab, r.uncertainty, r.lmf, r.scb, r.oscb, r.delta_m};
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  if (threads == 1) {
    worker(0, samples);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (samples + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(samples, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

/// Rows breaking U >= OSCB >= SCB (>= LMF for the full chain) beyond 1e-9.
inline std::vector<Violation> violation_scan(const std::vector<SweepRecord>& records) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < records.size(); ++i)
    detail::scan_chain(out, i, records[i].uncertainty, records[i].oscb,
                       records[i].scb, records[i].lmf);
  return out;
}

inline std::vector<Violation> violation_scan(const std::vector<EnsembleRecord>& records) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < records.size(); ++i)
    detail::scan_chain(out, i, records[i].uncertainty, records[i].oscb,
                       records[i].scb, records[i].lmf);
  return out;
}

namespace detail {

inline std::string metadata_line(const MeasurementSet& ms, const std::string& extra) {
  std::string line = "# tool=";
  line += kToolName;
  line += "/";
  line += kToolVersion;
  line += " prng=";
  line += RngStream::kAlgorithm;
  if (!extra.empty()) {
    line += " ";
    line += extra;
  }
  line += " measurements=";
  for (std::size_t m = 0; m < ms.count(); ++m) {
    if (m) line += ",";
    line += ms.basis(m).label();
  }
  return line;
}

}  // namespace detail

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records,
                            const MeasurementSet& ms) {
  os << detail::metadata_line(ms, "seed=n/a grid=" + std::to_string(records.size()))
     << "\n";
  os << "p,U,LMF,SCB,OSCB\n";
  for (const SweepRecord& r : records)
    os << format_g17(r.p) << "," << format_g17(r.uncertainty) << ","
       << format_g17(r.lmf) << "," << format_g17(r.scb) << "," << format_g17(r.oscb)
       << "\n";
}

inline void write_ensemble_csv(std::ostream& os,
                               const std::vector<EnsembleRecord>& records,
                               const MeasurementSet& ms, std::uint64_t master_seed) {
  os << detail::metadata_line(ms, "seed=" + std::to_string(master_seed) +
                                      " samples=" + std::to_string(records.size()))
     << "\n";
  os << "idx,S_cond,U,LMF,SCB,OSCB,delta_m\n";
  for (const EnsembleRecord& r : records)
    os << r.sample_index << "," << format_g17(r.cond_ab) << ","
       << format_g17(r.uncertainty) << "," << format_g17(r.lmf) << ","
       << format_g17(r.scb) << "," << format_g17(r.oscb) << ","
       << format_g17(r.delta_m) << "\n";
}

}  // namespace eurkit
