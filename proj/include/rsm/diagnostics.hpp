#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsm/domain_optimizer.hpp"
#include "rsm/eigensolver.hpp"
#include "rsm/lhat_curve.hpp"
#include "rsm/quadrature.hpp"

namespace rsm {

/// Physicists' Hermite polynomial, H_{n+1} = 2x H_n - 2n H_{n-1}.
template <typename T>
T hermite(int n, T x) {
  if (n < 0) throw std::invalid_argument("Hermite degree must be non-negative");
  T h0 = T(1);
  if (n == 0) return h0;
  T h1 = T(2) * x;
  for (int k = 1; k < n; ++k) {
    const T h2 = T(2) * x * h1 - T(2 * k) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

/// Exact eigenstate of -laplacian + u^2 + v^2 on the plane.
struct ShoReference {
  int n_x = 0;
  int n_y = 0;

  [[nodiscard]] double energy() const { return 2.0 * (n_x + n_y + 1); }

  /// pi^{-1/2} H_nx(u) H_ny(v) exp(-(u^2 + v^2)/2) / sqrt(2^{nx+ny} nx! ny!)
  /// in centred coordinates.
  template <typename T>
  [[nodiscard]] T operator()(T u, T v) const {
    using std::exp;
    using std::sqrt;
    T norm = T(1);
    for (int k = 1; k <= n_x; ++k) norm *= T(2 * k);
    for (int k = 1; k <= n_y; ++k) norm *= T(2 * k);
    return hermite(n_x, u) * hermite(n_y, v) * exp(-(u * u + v * v) / T(2)) /
           sqrt(std::numbers::pi_v<T> * norm);
  }

  /// Same state placed at the centre of the box [0, Lx] x [0, Ly].
  template <typename T>
  [[nodiscard]] T at_box(T x, T y, double length_x, double length_y) const {
    return (*this)(x - T(length_x) / T(2), y - T(length_y) / T(2));
  }
};

/// Exact oscillator energy of the state at sorted position `index`: level
/// 2(j+1) is (j+1)-fold degenerate.
double sho_exact_energy(std::size_t index);

/// |computed - exact| / |exact|
template <typename T>
T delta_E(T computed, T exact) {
  using std::abs;
  if (exact == T(0)) throw std::invalid_argument("relative error against an exact value of zero");
  return abs(computed - exact) / abs(exact);
}

/// Contiguous run of sorted energies with relative neighbour gaps below tol.
struct Cluster {
  Eigen::Index first = 0;
  Eigen::Index size = 0;
  [[nodiscard]] bool contains(Eigen::Index i) const { return i >= first && i < first + size; }
};

inline constexpr double kDegeneracyTolerance = 1e-6;

template <typename Derived>
std::vector<Cluster> cluster_degeneracies(const Eigen::DenseBase<Derived>& energies,
                                          double tol = kDegeneracyTolerance) {
  using std::abs;
  using std::max;
  using T = typename Derived::Scalar;
  std::vector<Cluster> out;
  const Eigen::Index n = energies.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i > 0) {
      const T a = energies(i - 1);
      const T b = energies(i);
      const T scale = max(abs(a), abs(b));
      const bool same = (scale == T(0)) || (abs(b - a) / scale < T(tol));
      if (same) {
        ++out.back().size;
        continue;
      }
    }
    out.push_back({i, 1});
  }
  return out;
}

inline std::vector<Cluster> cluster_degeneracies(std::span<const double> energies,
                                                 double tol = kDegeneracyTolerance) {
  return cluster_degeneracies(
      Eigen::Map<const Eigen::VectorXd>(energies.data(), static_cast<Eigen::Index>(energies.size())),
      tol);
}

inline Cluster cluster_of(const std::vector<Cluster>& clusters, Eigen::Index state) {
  for (const auto& c : clusters) {
    if (c.contains(state)) return c;
  }
  throw std::out_of_range("state " + std::to_string(state) + " is in no cluster");
}

/// <psi_a | psi_b> for states of two solutions whose boxes share a centre
/// but may differ in size and basis. Integrated over the overlap of the two
/// boxes with Gauss-Legendre quadrature.
template <typename Scalar>
Scalar cross_overlap(const EigenSolution<Scalar>& a, Eigen::Index state_a,
                     const EigenSolution<Scalar>& b, Eigen::Index state_b) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  auto axis = [](int na, double la, int nb, double lb) {
    const Scalar half = Scalar(std::min(la, lb)) / Scalar(2);
    const int nodes = 2 * std::max(na, nb) + 32;
    const auto rule = gauss_legendre<Scalar>(nodes);
    Mat s(na, nb);
    s.setZero();
    for (int q = 0; q < nodes; ++q) {
      const Scalar u = half * rule.nodes[q];
      const Scalar w = half * rule.weights[q];
      const Scalar ta = (u + Scalar(la) / Scalar(2)) / Scalar(la);
      const Scalar tb = (u + Scalar(lb) / Scalar(2)) / Scalar(lb);
      for (int m = 1; m <= na; ++m) {
        const Scalar sa = w * sin_pi<Scalar>(Scalar(m) * ta);
        for (int p = 1; p <= nb; ++p) s(m - 1, p - 1) += sa * sin_pi<Scalar>(Scalar(p) * tb);
      }
    }
    return s;
  };
  const auto& ba = a.basis();
  const auto& bb = b.basis();
  const Mat sx = axis(ba.n_basis, ba.length_x, bb.n_basis, bb.length_x);
  const Mat sy = axis(ba.n_basis, ba.length_y, bb.n_basis, bb.length_y);
  const Mat projected = sx.transpose() * a.coefficients(state_a) * sy;
  return projected.cwiseProduct(b.coefficients(state_b)).sum();
}

struct EstimatorResult {
  double delta_hat_E = 0.0;
  /// Norm of the projection of state N onto the matching cluster at N+1.
  double overlap = 1.0;
  bool reordered = false;
};

/// Self-estimated error |eps_N - eps_{N+1}| / |eps_{N+1}| for the state at
/// the same sorted position, with a subspace-overlap check that flags a
/// likely reordering of levels between the two solves.
template <typename Scalar>
EstimatorResult estimate_error(const EigenSolution<Scalar>& sol_n,
                               const EigenSolution<Scalar>& sol_n_plus_1, Eigen::Index state,
                               double tol = kDegeneracyTolerance) {
  using std::sqrt;
  if (state < 0 || state >= sol_n.size() || state >= sol_n_plus_1.size()) {
    throw std::out_of_range("state index outside one of the solutions");
  }
  EstimatorResult r;
  r.delta_hat_E = static_cast<double>(delta_E(sol_n.energy(state), sol_n_plus_1.energy(state)));
  const Cluster c = cluster_of(cluster_degeneracies(sol_n_plus_1.energies(), tol), state);
  Scalar acc = Scalar(0);
  for (Eigen::Index j = c.first; j < c.first + c.size; ++j) {
    const Scalar o = cross_overlap(sol_n, state, sol_n_plus_1, j);
    acc += o * o;
  }
  r.overlap = static_cast<double>(sqrt(acc));
  r.reordered = r.overlap < 0.5;
  return r;
}

template <typename Scalar>
double delta_hat_E(const EigenSolution<Scalar>& sol_n, const EigenSolution<Scalar>& sol_n_plus_1,
                   Eigen::Index state) {
  const auto r = estimate_error(sol_n, sol_n_plus_1, state);
  if (r.reordered) {
    std::clog << "warning: state " << state << " overlaps its N+1 partner only by " << r.overlap
              << "; levels may have reordered\n";
  }
  return r.delta_hat_E;
}

/// sqrt( sum |exact - approx|^2 / sum |exact|^2 ) over matching grids, with
/// the global sign of `approx` chosen to minimise the result.
template <typename DerivedA, typename DerivedB>
double relative_grid_error(const Eigen::MatrixBase<DerivedA>& exact,
                           const Eigen::MatrixBase<DerivedB>& approx) {
  if (exact.rows() != approx.rows() || exact.cols() != approx.cols()) {
    throw std::invalid_argument("grids differ in shape");
  }
  long double num_plus = 0.0L;
  long double num_minus = 0.0L;
  long double den = 0.0L;
  for (Eigen::Index j = 0; j < exact.cols(); ++j) {
    for (Eigen::Index i = 0; i < exact.rows(); ++i) {
      const auto e = static_cast<long double>(exact(i, j));
      const auto a = static_cast<long double>(approx(i, j));
      num_plus += (e - a) * (e - a);
      num_minus += (e + a) * (e + a);
      den += e * e;
    }
  }
  if (den == 0.0L) throw std::domain_error("reference wavefunction vanishes on the grid");
  return static_cast<double>(std::sqrt(std::min(num_plus, num_minus) / den));
}

/// Grid coordinate i of M points spanning [0, length], edges included.
inline double grid_coordinate(double length, int i, int grid) {
  return length * (static_cast<double>(i) / (grid - 1));
}

/// relative_grid_error of two callables sampled on the M x M uniform grid
/// over the box. Both take box coordinates.
template <typename Exact, typename Approx>
double delta_psi_grid(Exact&& exact, Approx&& approx, double length_x, double length_y, int grid) {
  if (grid < 2) throw std::invalid_argument("delta_psi grid needs at least 2 points per axis");
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> e(grid, grid);
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> a(grid, grid);
  for (int i = 0; i < grid; ++i) {
    const double x = grid_coordinate(length_x, i, grid);
    for (int j = 0; j < grid; ++j) {
      const double y = grid_coordinate(length_y, j, grid);
      e(i, j) = exact(x, y);
      a(i, j) = approx(x, y);
    }
  }
  return relative_grid_error(e, a);
}

/// psi_state on the M x M grid: row i is x_i, column j is y_j.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> wavefunction_grid(
    const EigenSolution<Scalar>& sol, Eigen::Index state, int grid) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (grid < 2) throw std::invalid_argument("wavefunction grid needs at least 2 points per axis");
  const int n = sol.basis().n_basis;
  Mat s(grid, n);
  for (int i = 0; i < grid; ++i) {
    s.row(i) = sol.sine_row(Scalar(static_cast<double>(i) / (grid - 1)));
  }
  return s * sol.coefficients(state) * s.transpose();
}

inline constexpr int kDefaultPsiGrid = 101;

/// Grid error of a computed state against an exact oscillator state.
/// Refuses states that share their level with others.
template <typename Scalar>
double delta_psi(const EigenSolution<Scalar>& sol, Eigen::Index state,
                 const ShoReference& reference, int grid = kDefaultPsiGrid,
                 double tol = kDegeneracyTolerance) {
  const Cluster c = cluster_of(cluster_degeneracies(sol.energies(), tol), state);
  if (c.size != 1) {
    throw std::domain_error("delta_psi is undefined for state " + std::to_string(state) +
                            " in a degenerate cluster of size " + std::to_string(c.size));
  }
  const BasisSpec& basis = sol.basis();
  const auto psi = wavefunction_grid(sol, state, grid);
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> exact(grid, grid);
  for (int i = 0; i < grid; ++i) {
    const double x = grid_coordinate(basis.length_x, i, grid);
    for (int j = 0; j < grid; ++j) {
      exact(i, j) = reference.at_box<long double>(x, grid_coordinate(basis.length_y, j, grid),
                                                  basis.length_x, basis.length_y);
    }
  }
  return relative_grid_error(exact, psi);
}

struct ErrorReport {
  Eigen::Index state = 0;
  double energy = 0.0;
  std::optional<double> delta_E;
  std::optional<double> delta_hat_E;
  std::optional<double> delta_psi;
  int grid_M = kDefaultPsiGrid;
};

struct ConvergencePoint {
  int n_basis = 0;
  double length = 0.0;
  double energy = 0.0;
  double delta_E = 0.0;
};

/// Relative error of one state against an exact value for each N, each at
/// the interpolated optimal length.
template <typename Scalar = double>
std::vector<ConvergencePoint> convergence_study(std::span<const int> n_range,
                                                const LhatCurve& curve, double exact,
                                                const PotentialBuilder& builder,
                                                Eigen::Index state = 0) {
  std::vector<ConvergencePoint> out;
  out.reserve(n_range.size());
  for (int n : n_range) {
    const double length = curve.length_at(n);
    const Scalar e = state_energy<Scalar>(n, length, length, builder, state);
    out.push_back({n, length, static_cast<double>(e),
                   static_cast<double>(delta_E<Scalar>(e, Scalar(exact)))});
  }
  return out;
}

struct SemilogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Least-squares line through (N, log10 error), skipping errors below
/// `floor`. Needs two retained points.
SemilogFit fit_semilog(std::span<const ConvergencePoint> points, double floor = 0.0);

}  // namespace rsm
