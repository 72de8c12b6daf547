#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "eurkit/bounds.hpp"
#include "eurkit/errors.hpp"
#include "eurkit/experiments.hpp"
#include "eurkit/io.hpp"
#include "eurkit/measurements.hpp"

namespace eurkit {

enum class Command { Werner, Bell, Random, Bounds, Mub };

/// Parsed, validated invocation. `out_path` (--out) wins over `out_dir`
/// (EURKIT_OUT_DIR); with neither set, output goes to stdout.
struct CliConfig {
  Command command = Command::Werner;
  std::size_t grid = 201;
  std::size_t samples = 0;  // 0 picks the per-dim default (10^4 or 10^3)
  std::uint64_t seed = 0;
  std::size_t dim = 2;
  OrderMode order_mode = OrderMode::Given;
  std::size_t threads = 1;
  std::string state_path;
  std::string bases_path;
  std::string out_path;
  std::string out_dir;
};

namespace detail {

inline std::string default_filename(const CliConfig& cfg) {
  switch (cfg.command) {
    case Command::Werner: return "werner.csv";
    case Command::Bell: return "bell.csv";
    case Command::Random: return "random_d" + std::to_string(cfg.dim) + ".csv";
    case Command::Bounds: return "report.json";
    case Command::Mub: return "mub_d" + std::to_string(cfg.dim) + ".json";
  }
  return "out.txt";
}

inline std::optional<std::string> resolve_out_path(const CliConfig& cfg) {
  if (!cfg.out_path.empty()) return cfg.out_path;
  if (!cfg.out_dir.empty()) return cfg.out_dir + "/" + default_filename(cfg);
  return std::nullopt;
}

inline int write_text(const CliConfig& cfg, const std::string& text, std::ostream& out,
                      std::ostream& err) {
  const std::optional<std::string> path = resolve_out_path(cfg);
  if (!path) {
    out << text;
    return 0;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << *path << " for writing\n";
    return 2;
  }
  f << text;
  if (!f) {
    err << "error: write failed for " << *path << "\n";
    return 2;
  }
  return 0;
}

inline int report_violations(const std::vector<Violation>& vs, std::ostream& err) {
  for (const Violation& v : vs)
    err << "violation: row " << v.row << " " << v.what << " margin "
        << format_g17(v.margin) << "\n";
  return vs.empty() ? 0 : 3;
}

inline std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Execute one command. Returns 0 on success, 2 on any validation or input
/// error, 3 when a generated dataset fails the bound-ordering scan.
inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Werner:
      case Command::Bell: {
        if (cfg.grid < 2) {
          err << "error: --grid must be >= 2\n";
          return 2;
        }
        const std::vector<SweepRecord> records = cfg.command == Command::Werner
                                                     ? werner_sweep(cfg.grid)
                                                     : bell_diagonal_sweep(cfg.grid);
        std::ostringstream csv;
        write_sweep_csv(csv, records, pauli_bases());
        const int rc = detail::write_text(cfg, csv.str(), out, err);
        if (rc != 0) return rc;
        return detail::report_violations(violation_scan(records), err);
      }
      case Command::Random: {
        if (cfg.dim != 2 && cfg.dim != 3) {
          err << "error: --dim must be 2 or 3\n";
          return 2;
        }
        const std::size_t samples =
            cfg.samples ? cfg.samples : (cfg.dim == 2 ? 10000 : 1000);
        const std::vector<EnsembleRecord> records =
            random_ensemble(cfg.dim, samples, cfg.seed, cfg.threads);
        const MeasurementSet ms = cfg.dim == 2 ? pauli_bases() : qutrit_mub();
        std::ostringstream csv;
        write_ensemble_csv(csv, records, ms, cfg.seed);
        const int rc = detail::write_text(cfg, csv.str(), out, err);
        if (rc != 0) return rc;
        return detail::report_violations(violation_scan(records), err);
      }
      case Command::Bounds: {
        if (cfg.state_path.empty() || cfg.bases_path.empty()) {
          err << "error: bounds needs --state and --bases\n";
          return 2;
        }
        const DensityMatrix rho =
            parse_state(detail::slurp(cfg.state_path), cfg.state_path);
        const MeasurementSet ms =
            parse_bases(detail::slurp(cfg.bases_path), cfg.bases_path);
        const BoundReport report = evaluate_all(rho, ms, cfg.order_mode);
        return detail::write_text(cfg, bound_report_json(report) + "\n", out, err);
      }
      case Command::Mub: {
        if (cfg.dim != 2 && cfg.dim != 3) {
          err << "error: --dim must be 2 or 3\n";
          return 2;
        }
        const MeasurementSet ms = cfg.dim == 2 ? pauli_bases() : qutrit_mub();
        return detail::write_text(cfg, serialize_bases(ms) + "\n", out, err);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: unknown command\n";
  return 2;
}

}  // namespace eurkit
