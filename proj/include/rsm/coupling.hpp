#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rsm/basis.hpp"
#include "rsm/errors.hpp"
#include "rsm/polynomial.hpp"
#include "rsm/quadrature.hpp"

namespace rsm {

/// Highest monomial degree with a closed-form matrix element.
inline constexpr int kMaxAnalyticDegree = 4;

/// Sine-basis matrix of one polynomial factor along one axis:
///   matrix(m-1, m'-1) = (2/L) int_0^L sin(m pi x/L) p(x - L/2) sin(m' pi x/L) dx.
template <typename Scalar = double>
struct OneDimCoupling {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> matrix;
  double axis_length = 1.0;
  Polynomial factor;

  [[nodiscard]] int size() const { return static_cast<int>(matrix.rows()); }
};

namespace detail {

/// int_0^1 (t - 1/2)^k cos(p pi t) dt for integer p >= 0 and 0 <= k <= 4.
///
/// With s = t - 1/2 the cosine splits into cos(p pi/2) cos(p pi s) -
/// sin(p pi/2) sin(p pi s); the even/odd moments over [-1/2, 1/2] follow
/// from integration by parts. cos(p pi/2) and sin(p pi/2) are exact
/// integers, so no transcendental call is made besides pi itself.
template <typename W>
W centred_cosine_moment(int k, long p) {
  const W half = W(1) / W(2);
  W hk = W(1);
  for (int i = 0; i < k; ++i) hk *= half;
  if (p == 0) return (k % 2 == 0) ? hk / W(k + 1) : W(0);

  const long r = p % 4;
  const W c = (r == 0) ? W(1) : (r == 2) ? W(-1) : W(0);
  const W s = (r == 1) ? W(1) : (r == 3) ? W(-1) : W(0);
  const W omega = std::numbers::pi_v<W> * W(p);

  // F_j = int s^j cos(omega s), G_j = int s^j sin(omega s) over [-1/2, 1/2]
  W f = W(2) * s / omega;
  W g = W(0);
  W hj = W(1);
  for (int j = 1; j <= k; ++j) {
    hj *= half;
    const bool even = (j % 2 == 0);
    const W f_next = (even ? W(2) * hj * s / omega : W(0)) - W(j) / omega * g;
    const W g_next = (even ? W(0) : W(-2) * hj * c / omega) + W(j) / omega * f;
    f = f_next;
    g = g_next;
  }
  return c * f - s * g;
}

}  // namespace detail

/// Closed-form (2/L) int_0^L sin(a pi x/L) (x - L/2)^k sin(b pi x/L) dx for
/// k <= 4 and mode numbers a, b >= 1. Exactly zero when k + a + b is odd.
template <typename Scalar = double>
Scalar monomial_element(int k, int a, int b, double length) {
  using W = detail::work_t<Scalar>;
  if (k < 0 || k > kMaxAnalyticDegree) {
    throw std::invalid_argument("closed-form element only for degrees 0..4");
  }
  if (a < 1 || b < 1) throw std::out_of_range("mode numbers start at 1");
  if ((k + a + b) % 2 == 1) return Scalar(0);
  W lk = W(1);
  for (int i = 0; i < k; ++i) lk *= W(length);
  const W value = detail::centred_cosine_moment<W>(k, std::abs(a - b)) -
                  detail::centred_cosine_moment<W>(k, a + b);
  return static_cast<Scalar>(lk * value);
}

namespace detail {

/// Quadrature matrix of p over the first n_basis modes, Gauss-Legendre with
/// node doubling until two successive rules agree.
template <typename W>
Eigen::Matrix<W, Eigen::Dynamic, Eigen::Dynamic> quadrature_coupling(const Polynomial& p,
                                                                     int n_basis, double length) {
  using Mat = Eigen::Matrix<W, Eigen::Dynamic, Eigen::Dynamic>;
  const W len = W(length);
  auto integrate = [&](int nodes) {
    const auto rule = gauss_legendre<W>(nodes);
    Mat weighted(nodes, n_basis);
    Mat sines(nodes, n_basis);
    for (int q = 0; q < nodes; ++q) {
      const W t = (rule.nodes[q] + W(1)) / W(2);  // x / L
      const W u = len * (t - W(1) / W(2));
      W pu = W(0);
      for (int k = p.degree(); k >= 0; --k) pu = pu * u + W(p.coefficient(k));
      for (int m = 1; m <= n_basis; ++m) {
        const W sv = sin_pi<W>(W(m) * t);
        sines(q, m - 1) = sv;
        // (2/L) * (L/2) * w = w
        weighted(q, m - 1) = rule.weights[q] * pu * sv;
      }
    }
    Mat out(n_basis, n_basis);
    for (int j = 0; j < n_basis; ++j) {
      for (int i = 0; i <= j; ++i) {
        const W v = sines.col(i).dot(weighted.col(j));
        out(i, j) = v;
        out(j, i) = v;
      }
    }
    return out;
  };

  int nodes = std::max(8, p.degree() + 2 * n_basis + 8);
  Mat previous = integrate(nodes);
  constexpr int kMaxNodes = 8192;
  while (nodes <= kMaxNodes) {
    nodes *= 2;
    Mat current = integrate(nodes);
    const W scale = std::max(W(1), current.cwiseAbs().maxCoeff());
    if ((current - previous).cwiseAbs().maxCoeff() <= W(1e-14) * scale) return current;
    previous = std::move(current);
  }
  throw NumericalError("quadrature of potential matrix elements did not settle");
}

}  // namespace detail

/// Matrix of the polynomial factor p(x - L/2) over modes 1..n_basis.
/// Degrees up to 4 use closed forms; higher powers fall back to
/// Gauss-Legendre quadrature. Symmetric by construction.
template <typename Scalar = double>
OneDimCoupling<Scalar> coupling_1d(const Polynomial& p, int n_basis, double length) {
  using W = detail::work_t<Scalar>;
  using WMat = Eigen::Matrix<W, Eigen::Dynamic, Eigen::Dynamic>;
  if (n_basis < 1) throw std::invalid_argument("basis size must be >= 1");
  if (!(std::isfinite(length) && length > 0.0)) {
    throw std::invalid_argument("axis length must be finite and positive");
  }

  WMat acc = WMat::Zero(n_basis, n_basis);
  const int analytic_top = std::min(p.degree(), kMaxAnalyticDegree);
  for (int k = 0; k <= analytic_top; ++k) {
    const W c = W(p.coefficient(k));
    if (c == W(0)) continue;
    for (int b = 1; b <= n_basis; ++b) {
      for (int a = 1; a <= b; ++a) {
        const W v = c * monomial_element<W>(k, a, b, length);
        acc(a - 1, b - 1) += v;
        if (a != b) acc(b - 1, a - 1) += v;
      }
    }
  }
  if (p.degree() > kMaxAnalyticDegree) {
    std::vector<double> high(p.coefficients());
    std::fill(high.begin(), high.begin() + kMaxAnalyticDegree + 1, 0.0);
    acc += detail::quadrature_coupling<W>(Polynomial(std::move(high)), n_basis, length);
  }

  OneDimCoupling<Scalar> out;
  out.matrix = acc.template cast<Scalar>();
  out.axis_length = length;
  out.factor = p;
  return out;
}

/// Adds coeff * cx(m, m') * cy(n, n') into the N^2 x N^2 matrix `target`
/// at rows flatten(m, n), columns flatten(m', n'). Equivalent to a
/// Kronecker product under the row-major flattening.
template <typename Scalar, typename Derived>
void accumulate_separable(const OneDimCoupling<Scalar>& cx, const OneDimCoupling<Scalar>& cy,
                          Scalar coeff, Eigen::MatrixBase<Derived>& target) {
  const int n = cx.size();
  if (cy.size() != n) throw std::invalid_argument("coupling matrices differ in basis size");
  const Eigen::Index dim = static_cast<Eigen::Index>(n) * n;
  if (target.rows() != dim || target.cols() != dim) {
    throw std::invalid_argument("target matrix has the wrong dimension");
  }
  for (int mp = 0; mp < n; ++mp) {
    for (int m = 0; m < n; ++m) {
      const Scalar ax = coeff * cx.matrix(m, mp);
      if (ax == Scalar(0)) continue;
      for (int np = 0; np < n; ++np) {
        const Eigen::Index col = static_cast<Eigen::Index>(mp) * n + np;
        for (int nn = 0; nn < n; ++nn) {
          target(static_cast<Eigen::Index>(m) * n + nn, col) += ax * cy.matrix(nn, np);
        }
      }
    }
  }
}

/// The full contribution coeff * cx (x) cy of one separable term.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> combine_2d(const OneDimCoupling<Scalar>& cx,
                                                                 const OneDimCoupling<Scalar>& cy,
                                                                 Scalar coeff) {
  if (cx.size() != cy.size()) throw std::invalid_argument("coupling matrices differ in basis size");
  const Eigen::Index dim = static_cast<Eigen::Index>(cx.size()) * cx.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(dim, dim);
  accumulate_separable(cx, cy, coeff, out);
  return out;
}

}  // namespace rsm
