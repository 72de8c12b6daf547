#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eurkit/bounds.hpp"
#include "eurkit/complex_matrix.hpp"
#include "eurkit/errors.hpp"
#include "eurkit/format.hpp"
#include "eurkit/measurements.hpp"
#include "eurkit/states.hpp"
#include "eurkit/tolerances.hpp"

namespace eurkit {

namespace detail {

inline nlohmann::json parse_json(const std::string& text, const std::string& source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source + ": invalid JSON: " + e.what());
  }
}

inline std::vector<std::vector<double>> read_real_grid(const nlohmann::json& j,
                                                       const std::string& key,
                                                       std::size_t rows,
                                                       std::size_t cols,
                                                       const std::string& source) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != rows)
    throw ParseError(source + ": '" + key + "' must be an array of " +
                     std::to_string(rows) + " rows");
  std::vector<std::vector<double>> grid;
  grid.reserve(rows);
  for (const auto& row : j[key]) {
    if (!row.is_array() || row.size() != cols)
      throw ParseError(source + ": each '" + key + "' row must hold " +
                       std::to_string(cols) + " numbers");
    std::vector<double> r;
    r.reserve(cols);
    for (const auto& x : row) {
      if (!x.is_number())
        throw ParseError(source + ": '" + key + "' entries must be numbers");
      r.push_back(x.get<double>());
    }
    grid.push_back(std::move(r));
  }
  return grid;
}

}  // namespace detail

/// {"dims":[dA,dB],"re":[[...]],"im":[[...]]}, row-major.
inline std::string serialize_state(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  nlohmann::json j;
  j["dims"] = {rho.dim_a(), rho.dim_b()};
  std::vector<std::vector<double>> re(d, std::vector<double>(d));
  std::vector<std::vector<double>> im(d, std::vector<double>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      re[r][c] = rho.matrix()(r, c).real();
      im[r][c] = rho.matrix()(r, c).imag();
    }
  j["re"] = re;
  j["im"] = im;
  return j.dump(2);
}

/// Parse and validate a density matrix. Inputs are gated at the looser I/O
/// tolerance (1e-8); anything between that and the internal invariants is
/// canonicalized (hermitized, trace-renormalized) before construction, so a
/// clean round-trip stays bit-identical.
inline DensityMatrix parse_state(const std::string& text, const std::string& source) {
  const nlohmann::json j = detail::parse_json(text, source);
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 2)
    throw ParseError(source + ": 'dims' must be [dA, dB]");
  const auto da = j["dims"][0], db = j["dims"][1];
  if (!da.is_number_unsigned() || !db.is_number_unsigned() ||
      da.get<std::size_t>() == 0 || db.get<std::size_t>() == 0)
    throw ParseError(source + ": 'dims' entries must be positive integers");
  const std::size_t dim_a = da.get<std::size_t>();
  const std::size_t dim_b = db.get<std::size_t>();
  const std::size_t d = dim_a * dim_b;

  const auto re = detail::read_real_grid(j, "re", d, d, source);
  const auto im = detail::read_real_grid(j, "im", d, d, source);
  ComplexMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = Complex(re[r][c], im[r][c]);

  const double herm = m.hermiticity_error();
  if (herm > kTolIoHerm)
    throw ParseError(source + ": matrix violates Hermiticity (error " +
                     format_g17(herm) + " > " + format_g17(kTolIoHerm) + ")");
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kTolIoTrace)
    throw ParseError(source + ": matrix violates unit trace (trace " +
                     format_g17(tr) + ")");
  if (herm > kTolHerm || std::abs(tr - 1.0) > kTolTrace) {
    ComplexMatrix sym = m.adjoint();
    sym += m;
    sym *= 0.5;
    sym *= 1.0 / sym.trace().real();
    m = std::move(sym);
  }
  try {
    return DensityMatrix(std::move(m), dim_a, dim_b);
  } catch (const Error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

/// {"dim":d,"label":"...","vectors_re":[[...]],"vectors_im":[[...]]}.
inline std::string serialize_basis(const ProjectiveBasis& basis) {
  const std::size_t d = basis.dim();
  nlohmann::json j;
  j["dim"] = d;
  j["label"] = basis.label();
  std::vector<std::vector<double>> re(d, std::vector<double>(d));
  std::vector<std::vector<double>> im(d, std::vector<double>(d));
  for (std::size_t v = 0; v < d; ++v)
    for (std::size_t c = 0; c < d; ++c) {
      re[v][c] = basis.vector(v)[c].real();
      im[v][c] = basis.vector(v)[c].imag();
    }
  j["vectors_re"] = re;
  j["vectors_im"] = im;
  return j.dump(2);
}

namespace detail {

inline ProjectiveBasis basis_from_json(const nlohmann::json& j,
                                       const std::string& source) {
  if (!j.contains("dim") || !j["dim"].is_number_unsigned() ||
      j["dim"].get<std::size_t>() == 0)
    throw ParseError(source + ": 'dim' must be a positive integer");
  const std::size_t d = j["dim"].get<std::size_t>();
  std::string label = "unnamed";
  if (j.contains("label")) {
    if (!j["label"].is_string())
      throw ParseError(source + ": 'label' must be a string");
    label = j["label"].get<std::string>();
  }
  const auto re = read_real_grid(j, "vectors_re", d, d, source);
  const auto im = read_real_grid(j, "vectors_im", d, d, source);
  std::vector<ComplexVector> vectors(d, ComplexVector(d));
  for (std::size_t v = 0; v < d; ++v)
    for (std::size_t c = 0; c < d; ++c) vectors[v][c] = Complex(re[v][c], im[v][c]);

  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = i; k < d; ++k) {
      const Complex g = inner(vectors[i], vectors[k]);
      const double expected = (i == k) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(g - expected));
    }
  if (worst > kTolIoOrtho)
    throw ParseError(source + ": basis '" + label +
                     "' violates orthonormality (error " + format_g17(worst) + " > " +
                     format_g17(kTolIoOrtho) + ")");
  if (worst > kTolOrtho) {
    // Two rounds of modified Gram-Schmidt to pull a loosely orthonormal
    // input inside the construction tolerance.
    for (int round = 0; round < 2; ++round)
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
          const Complex proj = inner(vectors[k], vectors[i]);
          for (std::size_t c = 0; c < d; ++c) vectors[i][c] -= proj * vectors[k][c];
        }
        const double norm = std::sqrt(inner(vectors[i], vectors[i]).real());
        for (std::size_t c = 0; c < d; ++c) vectors[i][c] /= norm;
      }
  }
  try {
    return ProjectiveBasis(std::move(vectors), std::move(label));
  } catch (const Error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

}  // namespace detail

inline ProjectiveBasis parse_basis(const std::string& text, const std::string& source) {
  return detail::basis_from_json(detail::parse_json(text, source), source);
}

/// A bases file is a JSON array of basis objects, two or more.
inline std::string serialize_bases(const MeasurementSet& ms) {
  std::string out = "[\n";
  for (std::size_t m = 0; m < ms.count(); ++m) {
    if (m) out += ",\n";
    out += serialize_basis(ms.basis(m));
  }
  out += "\n]";
  return out;
}

inline MeasurementSet parse_bases(const std::string& text, const std::string& source) {
  const nlohmann::json j = detail::parse_json(text, source);
  if (!j.is_array() || j.size() < 2)
    throw ParseError(source + ": expected a JSON array of at least 2 bases");
  std::vector<ProjectiveBasis> bases;
  for (const auto& item : j) bases.push_back(detail::basis_from_json(item, source));
  try {
    return MeasurementSet(std::move(bases));
  } catch (const Error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

/// Flat JSON, floats at 17 significant digits, field names fixed by the
/// report schema.
inline std::string bound_report_json(const BoundReport& r) {
  auto list = [](const std::vector<double>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ", ";
      s += format_g17(xs[i]);
    }
    return s + "]";
  };
  std::string s = "{\n";
  s += "  \"U\": " + format_g17(r.uncertainty) + ",\n";
  s += "  \"lmf\": " + format_g17(r.lmf) + ",\n";
  s += "  \"scb\": " + format_g17(r.scb) + ",\n";
  s += "  \"oscb\": " + format_g17(r.oscb) + ",\n";
  s += "  \"f\": " + format_g17(r.f) + ",\n";
  s += "  \"c_list\": " + list(r.c_list) + ",\n";
  s += "  \"cond_ab\": " + format_g17(r.cond_ab) + ",\n";
  s += "  \"mutual\": " + format_g17(r.mutual) + ",\n";
  s += "  \"holevo_list\": " + list(r.holevo_list) + ",\n";
  s += "  \"delta_m\": " + format_g17(r.delta_m) + ",\n";
  s += "  \"order_used\": [";
  for (std::size_t i = 0; i < r.order_used.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(r.order_used[i]);
  }
  s += "],\n";
  s += std::string("  \"mub\": ") + (r.mub ? "true" : "false") + ",\n";
  s += std::string("  \"lmf_negative\": ") + (r.lmf_negative ? "true" : "false") + "\n";
  s += "}";
  return s;
}

}  // namespace eurkit
