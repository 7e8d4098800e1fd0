#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsm/basis.hpp"
#include "rsm/discretization.hpp"
#include "rsm/eigensolver.hpp"
#include "rsm/errors.hpp"
#include "rsm/lhat_curve.hpp"
#include "rsm/potentials.hpp"

namespace rsm {

/// Produces the potential for a box of the given size. Potentials written
/// in centred coordinates only need their domain updated.
using PotentialBuilder = std::function<SeparablePotential(double length_x, double length_y)>;

inline PotentialBuilder centred_builder(SeparablePotential shape) {
  return [shape = std::move(shape)](double lx, double ly) { return shape.with_domain(lx, ly); };
}

struct LengthBracket {
  double lower = 2.0;
  double upper = 30.0;
};

struct OptimizerOptions {
  int scan_points = 17;
  /// Absolute tolerance on the optimal length.
  double tolerance = 1e-3;
  /// Which eigenvalue is minimised; 0 is the ground state.
  Eigen::Index target_state = 0;
  /// Coordinate-descent sweeps for asymmetric potentials.
  int max_sweeps = 50;
};

struct OptimalLength {
  double length = 0.0;
  double energy = 0.0;
};

struct OptimalDomain {
  double length_x = 0.0;
  double length_y = 0.0;
  double energy = 0.0;
  int sweeps = 0;
};

/// Eigenvalue `state` of the operator on the Lx x Ly box.
template <typename Scalar = double>
Scalar state_energy(int n_basis, double length_x, double length_y, const PotentialBuilder& builder,
                    Eigen::Index state = 0) {
  const BasisSpec basis{n_basis, length_x, length_y};
  basis.validate();
  if (state < 0 || state >= basis.dimension()) {
    throw std::out_of_range("target state outside the basis");
  }
  const auto values = eigenvalues(assemble<Scalar>(basis, builder(length_x, length_y)));
  return values(state);
}

/// Lowest eigenvalue on the square box of side L.
template <typename Scalar = double>
Scalar ground_energy(int n_basis, double length, const PotentialBuilder& builder,
                     Eigen::Index state = 0) {
  if (n_basis < 2) throw std::invalid_argument("domain optimisation needs N >= 2");
  return state_energy<Scalar>(n_basis, length, length, builder, state);
}

namespace detail {

template <typename Value>
struct Minimum {
  double x = 0.0;
  Value value{};
};

/// Uniform scan to find a bracketing triple, then golden-section search on
/// it until the bracket is narrower than options.tolerance. Throws
/// NoInteriorMinimum when the scan minimum sits on an end point.
template <typename F>
auto minimize_on_bracket(F&& f, LengthBracket bracket, const OptimizerOptions& options)
    -> Minimum<decltype(f(0.0))> {
  using Value = decltype(f(0.0));
  if (!(bracket.lower > 0.0 && bracket.upper > bracket.lower && std::isfinite(bracket.upper))) {
    throw std::invalid_argument("length bracket must satisfy 0 < lower < upper");
  }
  if (options.scan_points < 3) throw std::invalid_argument("scan needs at least 3 points");
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const int points = options.scan_points;
  std::vector<double> xs(points);
  std::vector<Value> fs(points);
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    xs[i] = bracket.lower + t * (bracket.upper - bracket.lower);
    fs[i] = f(xs[i]);
  }
  const auto best_it = std::min_element(fs.begin(), fs.end());
  const int ib = static_cast<int>(best_it - fs.begin());
  if (ib == 0 || ib == points - 1) {
    throw NoInteriorMinimum("energy has no interior minimum in [" + std::to_string(bracket.lower) +
                            ", " + std::to_string(bracket.upper) + "]; widen the bracket");
  }

  Minimum<Value> best{xs[ib], fs[ib]};
  auto eval = [&](double x) {
    const Value v = f(x);
    if (v < best.value) best = {x, v};
    return v;
  };

  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = xs[ib - 1];
  double b = xs[ib + 1];
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  Value fc = eval(c);
  Value fd = eval(d);
  while (b - a > options.tolerance) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = eval(d);
    }
  }
  return best;
}

}  // namespace detail

/// Optimal side length of a square box for basis size N: the interior
/// minimiser of the target eigenvalue over `bracket`.
template <typename Scalar = double>
OptimalLength find_optimal_length(int n_basis, const PotentialBuilder& builder,
                                  LengthBracket bracket, const OptimizerOptions& options = {}) {
  if (n_basis < 2) throw std::invalid_argument("domain optimisation needs N >= 2");
  auto f = [&](double length) {
    return state_energy<Scalar>(n_basis, length, length, builder, options.target_state);
  };
  const auto m = detail::minimize_on_bracket(f, bracket, options);
  return {m.x, static_cast<double>(m.value)};
}

/// Optimal (Lx, Ly). Symmetric potentials keep Lx = Ly; otherwise the square
/// optimum seeds alternating one-dimensional minimisations until neither
/// length moves by more than the tolerance.
template <typename Scalar = double>
OptimalDomain find_optimal_domain(int n_basis, const PotentialBuilder& builder,
                                  LengthBracket bracket, const OptimizerOptions& options = {}) {
  const auto square = find_optimal_length<Scalar>(n_basis, builder, bracket, options);
  const SeparablePotential probe = builder(square.length, square.length);
  if (probe.is_xy_symmetric()) return {square.length, square.length, square.energy, 0};

  double lx = square.length;
  double ly = square.length;
  double energy = square.energy;
  for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
    const auto mx = detail::minimize_on_bracket(
        [&](double l) { return state_energy<Scalar>(n_basis, l, ly, builder, options.target_state); },
        bracket, options);
    const auto my = detail::minimize_on_bracket(
        [&](double l) { return state_energy<Scalar>(n_basis, mx.x, l, builder, options.target_state); },
        bracket, options);
    const bool settled =
        std::abs(mx.x - lx) < options.tolerance && std::abs(my.x - ly) < options.tolerance;
    lx = mx.x;
    ly = my.x;
    energy = static_cast<double>(my.value);
    if (settled) return {lx, ly, energy, sweep};
  }
  throw NumericalError("coordinate descent on (Lx, Ly) did not settle");
}

/// Optimises each requested N and fits the interpolant. Needs at least
/// three distinct basis sizes; a failure names the offending N.
template <typename Scalar = double>
LhatCurve build_curve(std::span<const int> n_values, const PotentialBuilder& builder,
                      LengthBracket bracket, const OptimizerOptions& options = {}) {
  std::vector<int> sorted(n_values.begin(), n_values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate basis sizes in curve request");
  }
  if (sorted.size() < 3) throw std::invalid_argument("curve needs at least 3 distinct basis sizes");

  std::vector<LhatSample> samples;
  samples.reserve(sorted.size());
  for (int n : sorted) {
    try {
      const auto opt = find_optimal_length<Scalar>(n, builder, bracket, options);
      samples.push_back({n, opt.length, opt.energy});
    } catch (const NoInteriorMinimum& e) {
      throw NoInteriorMinimum("N=" + std::to_string(n) + ": " + e.what());
    } catch (const NumericalError& e) {
      throw NumericalError("N=" + std::to_string(n) + ": " + e.what());
    }
  }
  return LhatCurve(std::move(samples));
}

}  // namespace rsm
