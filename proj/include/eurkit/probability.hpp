#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "eurkit/errors.hpp"
#include "eurkit/format.hpp"
#include "eurkit/tolerances.hpp"

namespace eurkit {

/// Discrete probability distribution: nonnegative entries summing to 1
/// within kTolProbSum. Entries in [-kTolProbNeg, 0) are rounding noise and
/// clamp to 0; anything more negative is rejected.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> entries)
      : entries_(std::move(entries)) {
    double sum = 0.0;
    for (double& p : entries_) {
      if (p < -kTolProbNeg)
        throw DomainError("ProbabilityVector: negative entry " + format_g3(p), p);
      if (p < 0.0) p = 0.0;
      sum += p;
    }
    if (std::abs(sum - 1.0) > kTolProbSum)
      throw DomainError("ProbabilityVector: entry sum deviates from 1 by " +
                            format_g3(sum - 1.0),
                        sum);
  }

  const std::vector<double>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<double> entries_;
};

}  // namespace eurkit
