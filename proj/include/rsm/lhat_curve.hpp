#pragma once

#include <vector>

#include "rsm/interpolation.hpp"

namespace rsm {

/// One optimised box: basis size, optimal length, and the minimised energy.
struct LhatSample {
  int n_basis = 0;
  double length = 0.0;
  double energy = 0.0;
  friend bool operator==(const LhatSample&, const LhatSample&) = default;
};

/// Sampled optimal lengths with a monotone cubic interpolant in N.
class LhatCurve {
 public:
  /// Samples are sorted by N; repeated N or non-positive lengths are rejected.
  explicit LhatCurve(std::vector<LhatSample> samples);

  [[nodiscard]] const std::vector<LhatSample>& samples() const { return samples_; }
  /// Interpolated optimal length; exact at sampled N.
  [[nodiscard]] double length_at(double n_basis) const { return interpolant_(n_basis); }
  [[nodiscard]] double operator()(double n_basis) const { return length_at(n_basis); }
  [[nodiscard]] bool contains(int n_basis) const;

 private:
  std::vector<LhatSample> samples_;
  MonotoneCubic interpolant_;
};

}  // namespace rsm
