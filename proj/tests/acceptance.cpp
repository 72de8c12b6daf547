// Acceptance harness: one line per release criterion, exit code = number of
// failed criteria. Every check runs at the tolerance printed with it.
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eurkit/eurkit.hpp"
#include "test_util.hpp"

using namespace eurkit;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << name;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x, int digits = 3) {
  std::ostringstream ss;
  ss << std::setprecision(digits) << x;
  return ss.str();
}

bool near(double x, double target, double tol) { return std::abs(x - target) <= tol; }

// 1. Werner sweep endpoints: (U, LMF, SCB, OSCB) = (3,3,3,3) at p=0 and
//    (0,-1,0,0) at p=1, within 1e-9, in under a second.
std::vector<SweepRecord> criterion_werner_endpoints() {
  const auto t0 = Clock::now();
  std::vector<SweepRecord> rows = werner_sweep(201);
  const double elapsed = seconds_since(t0);

  const SweepRecord& a = rows.front();
  const SweepRecord& b = rows.back();
  bool ok = rows.size() == 201;
  ok = ok && near(a.uncertainty, 3.0, 1e-9) && near(a.lmf, 3.0, 1e-9) &&
       near(a.scb, 3.0, 1e-9) && near(a.oscb, 3.0, 1e-9);
  ok = ok && near(b.uncertainty, 0.0, 1e-9) && near(b.lmf, -1.0, 1e-9) &&
       near(b.scb, 0.0, 1e-9) && near(b.oscb, 0.0, 1e-9);
  const bool in_time = elapsed < 1.0;
  report(1, "werner sweep endpoints", ok && in_time, fmt(elapsed) + " s");
  return rows;
}

// 2. Gap identity: SCB - LMF = (N/2 - 1)(log2 d - S(A|B)) on every random
//    sample, within 1e-9, and never negative beyond 1e-9.
void criterion_gap_identity(const std::vector<EnsembleRecord>& qubits,
                            const std::vector<EnsembleRecord>& qutrits,
                            double ensemble_seconds) {
  double worst = 0.0;
  double most_negative = 0.0;
  auto scan = [&](const std::vector<EnsembleRecord>& rows, std::size_t d) {
    for (const EnsembleRecord& r : rows) {
      const double gap = r.scb - r.lmf;
      worst = std::max(worst, std::abs(gap - mub_gap(d, r.cond_ab, 3)));
      most_negative = std::min(most_negative, gap);
    }
  };
  scan(qubits, 2);
  scan(qutrits, 3);
  const bool ok = qubits.size() == 10000 && qutrits.size() == 1000 &&
                  worst <= 1e-9 && most_negative >= -1e-9 && ensemble_seconds < 60.0;
  report(2, "scb-lmf gap identity on 10^4 qubit + 10^3 qutrit samples", ok,
         "max residual " + fmt(worst, 2) + ", " + fmt(ensemble_seconds) + " s");
}

// 3. Ordering chain U >= OSCB >= SCB within 1e-9 on the same ensembles, and
//    violation_scan agrees it is clean.
void criterion_ordering(const std::vector<EnsembleRecord>& qubits,
                        const std::vector<EnsembleRecord>& qutrits) {
  bool ok = violation_scan(qubits).empty() && violation_scan(qutrits).empty();
  double slack = 0.0;
  for (const std::vector<EnsembleRecord>* rows : {&qubits, &qutrits})
    for (const EnsembleRecord& r : *rows) {
      ok = ok && r.uncertainty >= r.oscb - 1e-9 && r.oscb >= r.scb - 1e-9;
      slack = std::min({slack, r.uncertainty - r.oscb, r.oscb - r.scb});
    }
  report(3, "ordering chain U >= OSCB >= SCB on both ensembles", ok,
         "worst slack " + fmt(slack, 2));
}

// 4. LMF sign change: the sweep has LMF < 0 rows while U stays nonnegative,
//    and the crossing sits where S(A|B) = -1/2 (bisected to 1e-6).
void criterion_lmf_negativity(const std::vector<SweepRecord>& rows) {
  bool has_negative = false;
  bool u_nonneg = true;
  for (const SweepRecord& r : rows) {
    has_negative = has_negative || r.lmf < 0.0;
    u_nonneg = u_nonneg && r.uncertainty >= -1e-9;
  }

  std::size_t transitions = 0;
  std::size_t bracket = 0;
  for (std::size_t k = 0; k + 1 < rows.size(); ++k)
    if (rows[k].lmf >= 0.0 && rows[k + 1].lmf < 0.0) {
      ++transitions;
      bracket = k;
    }

  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (conditional_entropy(werner(mid)) + 0.5 > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double p_star = 0.5 * (lo + hi);

  const bool ok = has_negative && u_nonneg && transitions == 1 &&
                  rows[bracket].p <= p_star + 1e-6 &&
                  p_star <= rows[bracket + 1].p + 1e-6;
  report(4, "lmf sign change at the S(A|B) = -1/2 crossing", ok,
         "p* = " + fmt(p_star, 6));
}

// 5. OSCB coincidence: whenever delta_m >= 0 on the two sweep families or on
//    random Bell-diagonal states (maximally mixed marginals), OSCB matches U
//    to 1e-9.
void criterion_oscb_coincidence() {
  const MeasurementSet ms = pauli_bases();
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= 0.5;

  double worst = 0.0;
  std::size_t active = 0;
  bool ok = true;
  auto check = [&](const DensityMatrix& rho) {
    const BoundReport r = evaluate_all(rho, ms);
    if (r.delta_m >= 0.0) {
      worst = std::max(worst, std::abs(r.oscb - r.uncertainty));
      ++active;
    }
  };

  for (std::size_t k = 0; k < 201; ++k) {
    const double p = static_cast<double>(k) / 200.0;
    check(werner(p));
    check(bell_diagonal_family(p));
  }
  for (std::uint64_t rep = 0; rep < 300; ++rep) {
    const DensityMatrix rho = testutil::random_bell_diagonal(515, rep);
    ok = ok && marginal_a(rho).matrix().max_abs_diff(half) < 1e-12 &&
         marginal_b(rho).matrix().max_abs_diff(half) < 1e-12;
    check(rho);
  }

  ok = ok && active > 0 && worst < 1e-9;
  report(5, "oscb meets the uncertainty wherever delta_m >= 0", ok,
         std::to_string(active) + " active rows, max gap " + fmt(worst, 2));
}

// 6. Two-measurement reduction: with the (sigma_x, sigma_z) pair, SCB equals
//    the two-measurement memory bound and OSCB its Holevo-improved form,
//    within 1e-12 on 10^3 random states.
void criterion_pair_reduction() {
  const MeasurementSet paulis = pauli_bases();
  const MeasurementSet pair({paulis.basis(0), paulis.basis(2)});
  double worst = 0.0;
  for (std::uint64_t rep = 0; rep < 1000; ++rep) {
    const DensityMatrix rho = random_density(2, 2, RngStream{616, rep});
    const double b2 = berta_bound(rho, pair.basis(0), pair.basis(1));
    const double a2 = adabi_bound(rho, pair.basis(0), pair.basis(1));
    worst = std::max(worst, std::abs(scb_bound(rho, pair) - b2));
    worst = std::max(worst, std::abs(oscb_bound(rho, pair) - a2));
  }
  report(6, "two-measurement reduction of scb/oscb", worst <= 1e-12,
         "max deviation " + fmt(worst, 2));
}

// 7. Built-in MUB sets: every pair mutually unbiased with overlap entries
//    within 1e-10 of 1/d, and chained overlap f = 1/d within 1e-12.
void criterion_mub_construction() {
  bool ok = true;
  double worst_entry = 0.0;
  double worst_f = 0.0;
  for (const MeasurementSet& ms : {pauli_bases(), qutrit_mub()}) {
    const double inv_d = 1.0 / static_cast<double>(ms.dim());
    ok = ok && ms.all_pairs_mub();
    for (std::size_t m = 0; m < ms.count(); ++m)
      for (std::size_t k = m + 1; k < ms.count(); ++k) {
        ok = ok && is_mub(ms.basis(m), ms.basis(k), 1e-10);
        const RealMatrix o = overlap_matrix(ms.basis(m), ms.basis(k));
        for (const std::vector<double>& row : o)
          for (double x : row)
            worst_entry = std::max(worst_entry, std::abs(x - inv_d));
      }
    worst_f = std::max(worst_f, std::abs(f_overlap(ms) - inv_d));
  }
  ok = ok && worst_entry <= 1e-10 && worst_f <= 1e-12;
  report(7, "built-in measurement sets are mutually unbiased", ok,
         "entry dev " + fmt(worst_entry, 2) + ", f dev " + fmt(worst_f, 2));
}

// 8. Property suites, >= 10^3 randomized cases each: doubly stochastic
//    overlaps (1e-10), data processing (1e-9), Holevo <= mutual information
//    (1e-9), von Neumann = Shannon on diagonals (1e-12), eigendecomposition
//    reconstruction (1e-9).
void criterion_property_suites() {
  bool ok = true;
  std::string which;

  {
    double worst = 0.0;
    const std::size_t dims[] = {2, 3, 5};
    for (std::uint64_t c = 0; c < 1000; ++c) {
      const std::size_t d = dims[c % 3];
      const ProjectiveBasis b1 = testutil::random_basis(d, 811, 2 * c);
      const ProjectiveBasis b2 = testutil::random_basis(d, 811, 2 * c + 1);
      const RealMatrix o = overlap_matrix(b1, b2);
      for (std::size_t i = 0; i < d; ++i) {
        double row = 0.0, col = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
          row += o[i][j];
          col += o[j][i];
        }
        worst = std::max({worst, std::abs(row - 1.0), std::abs(col - 1.0)});
      }
    }
    if (worst > 1e-10) { ok = false; which += " stochastic"; }
  }

  {
    double worst = 0.0;
    for (std::uint64_t c = 0; c < 1000; ++c) {
      const std::size_t d = 2 + c % 2;
      const DensityMatrix rho = random_density(d, d, RngStream{812, c});
      const ProjectiveBasis basis = testutil::random_basis(d, 813, c);
      worst = std::max(worst, conditional_entropy(rho) - measured_conditional(rho, basis));
    }
    if (worst > 1e-9) { ok = false; which += " data-processing"; }
  }

  {
    double worst = 0.0;
    for (std::uint64_t c = 0; c < 1000; ++c) {
      const std::size_t d = 2 + c % 2;
      const DensityMatrix rho = random_density(d, d, RngStream{814, c});
      const ProjectiveBasis basis = testutil::random_basis(d, 815, c);
      worst = std::max(worst, holevo(rho, basis) - mutual_information(rho));
    }
    if (worst > 1e-9) { ok = false; which += " holevo"; }
  }

  {
    double worst = 0.0;
    for (std::uint64_t c = 0; c < 1000; ++c) {
      Sampler sampler(RngStream{816, c});
      const ProbabilityVector p = random_simplex_probs(2 + c % 7, sampler);
      worst = std::max(worst, std::abs(von_neumann(diagonal_state(p)) - shannon(p)));
    }
    if (worst > 1e-12) { ok = false; which += " diagonal-entropy"; }
  }

  {
    double worst = 0.0;
    const std::size_t dims[] = {2, 3, 4, 5, 6, 9};
    for (std::uint64_t c = 0; c < 1000; ++c) {
      const std::size_t d = (c % 100 == 99) ? 16 : dims[c % 6];
      const ComplexMatrix h = random_hermitian(d, RngStream{817, c});
      const EigenDecomposition e = hermitian_eig(h);
      ComplexMatrix lam(d);
      for (std::size_t i = 0; i < d; ++i) lam(i, i) = e.eigenvalues[i];
      const ComplexMatrix recon = e.eigenvectors * lam * e.eigenvectors.adjoint();
      worst = std::max(worst, recon.max_abs_diff(h));
    }
    if (worst > 1e-9) { ok = false; which += " eig-reconstruction"; }
  }

  report(8, "property suites (5 x 1000 randomized cases)", ok,
         ok ? "all suites clean" : "failing:" + which);
}

// 9. Determinism: the random command writes byte-identical CSV for the same
//    seed, whatever the thread count, on repeat runs, for both dimensions.
void criterion_csv_determinism() {
  auto csv = [](std::size_t dim, std::size_t samples, std::size_t threads) {
    CliConfig cfg;
    cfg.command = Command::Random;
    cfg.dim = dim;
    cfg.samples = samples;
    cfg.seed = 99;
    cfg.threads = threads;
    std::ostringstream out, err;
    const int rc = run(cfg, out, err);
    return std::pair<int, std::string>(rc, out.str());
  };

  bool ok = true;
  for (std::size_t dim : {std::size_t{2}, std::size_t{3}}) {
    const std::size_t samples = dim == 2 ? 500 : 100;
    const auto serial = csv(dim, samples, 1);
    const auto parallel = csv(dim, samples, 4);
    const auto repeat = csv(dim, samples, 4);
    ok = ok && serial.first == 0 && parallel.first == 0 && repeat.first == 0;
    ok = ok && serial.second == parallel.second && parallel.second == repeat.second;
    ok = ok && !serial.second.empty();
  }
  report(9, "byte-identical csv across threads and repeats", ok, "");
}

}  // namespace

int main() {
  const std::vector<SweepRecord> werner_rows = criterion_werner_endpoints();

  const auto t0 = Clock::now();
  const std::vector<EnsembleRecord> qubits = random_ensemble(2, 10000, 20260819, 4);
  const std::vector<EnsembleRecord> qutrits = random_ensemble(3, 1000, 20260819, 4);
  const double ensemble_seconds = seconds_since(t0);

  criterion_gap_identity(qubits, qutrits, ensemble_seconds);
  criterion_ordering(qubits, qutrits);
  criterion_lmf_negativity(werner_rows);
  criterion_oscb_coincidence();
  criterion_pair_reduction();
  criterion_mub_construction();
  criterion_property_suites();
  criterion_csv_determinism();

  if (failures == 0)
    std::cout << "all acceptance criteria satisfied\n";
  else
    std::cout << failures << " criterion(s) failed\n";
  return failures;
}
