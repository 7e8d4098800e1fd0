#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rsm/basis.hpp"
#include "rsm/coupling.hpp"
#include "rsm/potentials.hpp"

namespace rsm {

/// The N^2 x N^2 Galerkin matrix D of -laplacian + f in the sine basis.
/// Immutable once built.
template <typename Scalar = double>
class SpectralOperator {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  SpectralOperator(BasisSpec basis, Matrix entries) : basis_(basis), entries_(std::move(entries)) {
    basis_.validate();
    if (entries_.rows() != basis_.dimension() || entries_.cols() != basis_.dimension()) {
      throw std::invalid_argument("operator matrix does not match the basis dimension");
    }
  }

  [[nodiscard]] const BasisSpec& basis() const { return basis_; }
  [[nodiscard]] const Matrix& matrix() const { return entries_; }
  [[nodiscard]] Eigen::Index dimension() const { return entries_.rows(); }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

 private:
  BasisSpec basis_;
  Matrix entries_;
};

/// (m pi/Lx)^2 + (n pi/Ly)^2 at each flat index.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> kinetic_diagonal(const BasisSpec& basis) {
  basis.validate();
  const int n = basis.n_basis;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(basis.dimension());
  for (int m = 1; m <= n; ++m) {
    const Scalar kx = Scalar(m) * pi / Scalar(basis.length_x);
    for (int k = 1; k <= n; ++k) {
      const Scalar ky = Scalar(k) * pi / Scalar(basis.length_y);
      out(flatten(m, k, n).value) = kx * kx + ky * ky;
    }
  }
  return out;
}

/// Builds D = diag(kinetic) + sum_t c_t Cx_t (x) Cy_t. The potential's terms
/// are taken relative to the centre of the basis box; each distinct
/// polynomial factor is integrated once per axis.
template <typename Scalar = double>
SpectralOperator<Scalar> assemble(const BasisSpec& basis, const SeparablePotential& potential) {
  using Matrix = typename SpectralOperator<Scalar>::Matrix;
  basis.validate();
  const int n = basis.n_basis;

  Matrix d = Matrix::Zero(basis.dimension(), basis.dimension());

  std::map<std::vector<double>, OneDimCoupling<Scalar>> cache_x;
  std::map<std::vector<double>, OneDimCoupling<Scalar>> cache_y;
  auto lookup = [n](auto& cache, const Polynomial& p, double length) -> const OneDimCoupling<Scalar>& {
    auto it = cache.find(p.coefficients());
    if (it == cache.end()) {
      it = cache.emplace(p.coefficients(), coupling_1d<Scalar>(p, n, length)).first;
    }
    return it->second;
  };

  for (const auto& term : potential.terms()) {
    if (term.coeff == 0.0 || term.px.is_zero() || term.py.is_zero()) continue;
    const auto& cx = lookup(cache_x, term.px, basis.length_x);
    const auto& cy = lookup(cache_y, term.py, basis.length_y);
    accumulate_separable(cx, cy, Scalar(term.coeff), d);
  }
  d.diagonal() += kinetic_diagonal<Scalar>(basis);

  if (!d.allFinite()) {
    throw std::domain_error("potential produced non-finite matrix elements");
  }
  return SpectralOperator<Scalar>(basis, std::move(d));
}

}  // namespace rsm
