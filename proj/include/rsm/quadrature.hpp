#pragma once

#include <cmath>
#include <numbers>
#include <type_traits>
#include <vector>

#include "rsm/errors.hpp"

namespace rsm {

namespace detail {

/// Working precision for intermediate sums: at least long double.
template <typename T>
using work_t = std::conditional_t<std::is_floating_point_v<T> && (sizeof(T) < sizeof(long double)),
                                  long double, T>;

}  // namespace detail

/// sin(pi * z), exact zero at every integer z.
template <typename T>
T sin_pi(T z) {
  using std::abs;
  using std::floor;
  using std::sin;
  // reduce to r in [-1, 1)
  T r = z - T(2) * floor((z + T(1)) / T(2));
  T sign = T(1);
  if (r < T(0)) {
    r = -r;
    sign = T(-1);
  }
  if (r > T(0.5)) r = T(1) - r;
  return sign * sin(std::numbers::pi_v<T> * r);
}

template <typename T>
struct GaussRule {
  std::vector<T> nodes;
  std::vector<T> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
template <typename T>
GaussRule<T> gauss_legendre(int n) {
  using std::abs;
  using std::cos;
  if (n < 1) throw NumericalError("Gauss-Legendre rule needs at least one node");
  GaussRule<T> rule{std::vector<T>(n), std::vector<T>(n)};
  const T pi = std::numbers::pi_v<T>;
  const T eps = std::numeric_limits<T>::epsilon();
  for (int i = 0; i < (n + 1) / 2; ++i) {
    T x = cos(pi * (T(i) + T(0.75)) / (T(n) + T(0.5)));
    T dp = T(0);
    for (int iter = 0; iter < 100; ++iter) {
      T p0 = T(1);
      T p1 = x;
      for (int k = 2; k <= n; ++k) {
        const T p2 = ((T(2 * k - 1)) * x * p1 - T(k - 1) * p0) / T(k);
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = T(1);
      dp = T(n) * (x * p1 - p0) / (x * x - T(1));
      const T step = p1 / dp;
      x -= step;
      if (abs(step) <= T(4) * eps) break;
    }
    // recompute derivative at the converged node
    T p0 = T(1);
    T p1 = x;
    for (int k = 2; k <= n; ++k) {
      const T p2 = ((T(2 * k - 1)) * x * p1 - T(k - 1) * p0) / T(k);
      p0 = p1;
      p1 = p2;
    }
    dp = (n == 1) ? T(1) : T(n) * (x * p1 - p0) / (x * x - T(1));
    const T w = T(2) / ((T(1) - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = T(0);
  return rule;
}

}  // namespace rsm
