#include "rsm/lhat_curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rsm {

namespace {

MonotoneCubic make_interpolant(const std::vector<LhatSample>& samples) {
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& s : samples) {
    x.push_back(s.n_basis);
    y.push_back(s.length);
  }
  return MonotoneCubic(std::move(x), std::move(y));
}

std::vector<LhatSample> sorted_checked(std::vector<LhatSample> samples) {
  if (samples.empty()) throw std::invalid_argument("L-hat curve needs at least one sample");
  std::sort(samples.begin(), samples.end(),
            [](const LhatSample& a, const LhatSample& b) { return a.n_basis < b.n_basis; });
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].n_basis < 1) throw std::invalid_argument("L-hat sample with basis size < 1");
    if (!(std::isfinite(samples[i].length) && samples[i].length > 0.0)) {
      throw std::invalid_argument("L-hat sample with non-positive length");
    }
    if (i > 0 && samples[i].n_basis == samples[i - 1].n_basis) {
      throw std::invalid_argument("duplicate basis size " + std::to_string(samples[i].n_basis) +
                                  " in L-hat curve");
    }
  }
  return samples;
}

}  // namespace

LhatCurve::LhatCurve(std::vector<LhatSample> samples)
    : samples_(sorted_checked(std::move(samples))), interpolant_(make_interpolant(samples_)) {}

bool LhatCurve::contains(int n_basis) const {
  return std::any_of(samples_.begin(), samples_.end(),
                     [n_basis](const LhatSample& s) { return s.n_basis == n_basis; });
}

}  // namespace rsm
