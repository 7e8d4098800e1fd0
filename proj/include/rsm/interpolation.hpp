#pragma once

#include <vector>

namespace rsm {

/// Shape-preserving piecewise cubic Hermite interpolant (Fritsch-Carlson
/// slopes with the three-point end condition). Monotone data give a
/// monotone interpolant. Outside the knots it continues linearly with the
/// end slope.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  /// Knots must be strictly increasing; at least one knot.
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] double derivative(double x) const;

  [[nodiscard]] const std::vector<double>& knots() const { return x_; }
  [[nodiscard]] const std::vector<double>& values() const { return y_; }
  [[nodiscard]] const std::vector<double>& slopes() const { return d_; }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> d_;
};

}  // namespace rsm
