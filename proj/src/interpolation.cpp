#include "rsm/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsm {

namespace {

double sign(double v) { return (v > 0.0) - (v < 0.0); }

// Three-point end slope, clipped to keep the end segment monotone.
double end_slope(double h0, double h1, double s0, double s1) {
  double d = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
  if (sign(d) != sign(s0)) {
    d = 0.0;
  } else if (sign(s0) != sign(s1) && std::abs(d) > 3.0 * std::abs(s0)) {
    d = 3.0 * s0;
  }
  return d;
}

}  // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n == 0 || y_.size() != n) throw std::invalid_argument("interpolant needs matching, non-empty knots");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(x_[i]) || !std::isfinite(y_[i])) throw std::invalid_argument("non-finite knot");
    if (i > 0 && !(x_[i] > x_[i - 1])) throw std::invalid_argument("knots must be strictly increasing");
  }
  d_.assign(n, 0.0);
  if (n == 1) return;

  std::vector<double> h(n - 1);
  std::vector<double> s(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = x_[k + 1] - x_[k];
    s[k] = (y_[k + 1] - y_[k]) / h[k];
  }
  if (n == 2) {
    d_[0] = d_[1] = s[0];
    return;
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (s[k - 1] * s[k] <= 0.0) {
      d_[k] = 0.0;
    } else {
      const double w1 = 2.0 * h[k] + h[k - 1];
      const double w2 = h[k] + 2.0 * h[k - 1];
      d_[k] = (w1 + w2) / (w1 / s[k - 1] + w2 / s[k]);
    }
  }
  d_[0] = end_slope(h[0], h[1], s[0], s[1]);
  d_[n - 1] = end_slope(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
}

double MonotoneCubic::operator()(double x) const {
  if (x_.empty()) throw std::logic_error("empty interpolant");
  const std::size_t n = x_.size();
  if (n == 1) return y_[0];
  if (x <= x_.front()) return y_.front() + d_.front() * (x - x_.front());
  if (x >= x_.back()) return y_.back() + d_.back() * (x - x_.back());
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - x_.begin()) - 1;
  if (x == x_[k]) return y_[k];
  const double h = x_[k + 1] - x_[k];
  const double t = (x - x_[k]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2.0 * t3 - 3.0 * t2 + 1.0) * y_[k] + (t3 - 2.0 * t2 + t) * h * d_[k] +
         (-2.0 * t3 + 3.0 * t2) * y_[k + 1] + (t3 - t2) * h * d_[k + 1];
}

double MonotoneCubic::derivative(double x) const {
  if (x_.empty()) throw std::logic_error("empty interpolant");
  const std::size_t n = x_.size();
  if (n == 1) return 0.0;
  if (x <= x_.front()) return d_.front();
  if (x >= x_.back()) return d_.back();
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - x_.begin()) - 1;
  const double h = x_[k + 1] - x_[k];
  const double t = (x - x_[k]) / h;
  const double t2 = t * t;
  return (6.0 * t2 - 6.0 * t) / h * y_[k] + (3.0 * t2 - 4.0 * t + 1.0) * d_[k] +
         (-6.0 * t2 + 6.0 * t) / h * y_[k + 1] + (3.0 * t2 - 2.0 * t) * d_[k + 1];
}

}  // namespace rsm
