#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rsm/basis.hpp"
#include "rsm/discretization.hpp"
#include "rsm/errors.hpp"
#include "rsm/quadrature.hpp"

namespace rsm {

/// All N^2 eigenpairs of a SpectralOperator, ascending in energy.
///
/// Column k of coefficient_vectors() holds the flattened A_{m,n} of state k,
/// scaled so that psi_k has unit L2 norm on the box, (Lx Ly / 4) sum A^2 = 1,
/// and signed so that its entry of largest magnitude is positive. States
/// inside a degenerate cluster are an arbitrary orthonormal basis of the
/// cluster.
template <typename Scalar = double>
class EigenSolution {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using CoefficientMap =
      Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

  EigenSolution(BasisSpec basis, Vector energies, Matrix coefficient_vectors)
      : basis_(basis), energies_(std::move(energies)), vectors_(std::move(coefficient_vectors)) {}

  [[nodiscard]] const BasisSpec& basis() const { return basis_; }
  [[nodiscard]] Eigen::Index size() const { return energies_.size(); }
  [[nodiscard]] const Vector& energies() const { return energies_; }
  [[nodiscard]] Scalar energy(Eigen::Index state) const { return energies_(check(state)); }
  [[nodiscard]] const Matrix& coefficient_vectors() const { return vectors_; }

  /// A_{m,n} of one state as an N x N view; row m-1, column n-1.
  [[nodiscard]] CoefficientMap coefficients(Eigen::Index state) const {
    return CoefficientMap(vectors_.col(check(state)).data(), basis_.n_basis, basis_.n_basis);
  }

  /// Unit-norm eigenvector of D for a state (coefficients with the L2
  /// scaling removed).
  [[nodiscard]] Vector unit_vector(Eigen::Index state) const {
    using std::sqrt;
    return vectors_.col(check(state)) *
           (sqrt(Scalar(basis_.length_x) * Scalar(basis_.length_y)) / Scalar(2));
  }

  /// psi_state(x, y) = sum A_{m,n} sin(m pi x/Lx) sin(n pi y/Ly).
  [[nodiscard]] Scalar wavefunction(Eigen::Index state, Scalar x, Scalar y) const {
    if (!(x >= Scalar(0) && x <= Scalar(basis_.length_x) && y >= Scalar(0) &&
          y <= Scalar(basis_.length_y))) {
      throw std::domain_error("wavefunction is defined only on the box [0, Lx] x [0, Ly]");
    }
    const auto sx = sine_row(x / Scalar(basis_.length_x));
    const auto sy = sine_row(y / Scalar(basis_.length_y));
    return (sx * coefficients(state) * sy.transpose()).value();
  }

  /// sin(k pi t) for k = 1..N as a row vector.
  [[nodiscard]] Eigen::Matrix<Scalar, 1, Eigen::Dynamic> sine_row(Scalar t) const {
    Eigen::Matrix<Scalar, 1, Eigen::Dynamic> s(basis_.n_basis);
    for (int k = 1; k <= basis_.n_basis; ++k) s(k - 1) = sin_pi<Scalar>(Scalar(k) * t);
    return s;
  }

 private:
  Eigen::Index check(Eigen::Index state) const {
    if (state < 0 || state >= energies_.size()) {
      throw std::out_of_range("state index " + std::to_string(state) + " outside [0, " +
                              std::to_string(energies_.size() - 1) + "]");
    }
    return state;
  }

  BasisSpec basis_;
  Vector energies_;
  Matrix vectors_;
};

/// Dense symmetric eigendecomposition (Householder tridiagonalisation
/// followed by implicit symmetric QR). Throws NumericalError when the
/// iteration fails to converge.
template <typename Scalar = double>
EigenSolution<Scalar> solve(const SpectralOperator<Scalar>& op) {
  using Matrix = typename EigenSolution<Scalar>::Matrix;
  using std::abs;
  using std::sqrt;
  Eigen::SelfAdjointEigenSolver<Matrix> es(op.matrix(), Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver failed to converge");
  }
  Matrix vectors = es.eigenvectors();
  const BasisSpec& basis = op.basis();
  const Scalar scale = Scalar(2) / sqrt(Scalar(basis.length_x) * Scalar(basis.length_y));
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    Eigen::Index pivot = 0;
    vectors.col(k).cwiseAbs().maxCoeff(&pivot);
    const Scalar sign = vectors(pivot, k) < Scalar(0) ? Scalar(-1) : Scalar(1);
    vectors.col(k) *= sign * scale;
  }
  return EigenSolution<Scalar>(basis, es.eigenvalues(), std::move(vectors));
}

/// Eigenvalues only, ascending; cheaper than solve() when no states are
/// needed.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvalues(const SpectralOperator<Scalar>& op) {
  using Matrix = typename SpectralOperator<Scalar>::Matrix;
  Eigen::SelfAdjointEigenSolver<Matrix> es(op.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver failed to converge");
  }
  return es.eigenvalues();
}

template <typename Scalar>
Scalar evaluate_wavefunction(const EigenSolution<Scalar>& sol, Eigen::Index state, Scalar x,
                             Scalar y) {
  return sol.wavefunction(state, x, y);
}

}  // namespace rsm
