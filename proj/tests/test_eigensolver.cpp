#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "rsm/rsm.hpp"

using namespace rsm;

namespace {

const EigenSolution<double>& sho22() {
  static const EigenSolution<double> sol =
      solve(assemble(BasisSpec::square(22, 11.97), harmonic_potential()));
  return sol;
}

}  // namespace

TEST_CASE("diagonal operator: eigenvalues are the sorted diagonal") {
  const BasisSpec basis = BasisSpec::square(2, 2.0);
  Eigen::MatrixXd d = Eigen::Vector4d(4.0, 1.0, 3.0, 2.0).asDiagonal();
  const auto sol = solve(SpectralOperator<double>(basis, d));
  CHECK(sol.energies()(0) == 1.0);
  CHECK(sol.energies()(1) == 2.0);
  CHECK(sol.energies()(2) == 3.0);
  CHECK(sol.energies()(3) == 4.0);
  CHECK(std::abs(sol.unit_vector(0)(1)) == doctest::Approx(1.0));
}

TEST_CASE("two by two block [[a, b], [b, a]]") {
  const BasisSpec basis{1, 1.0, 1.0};
  Eigen::MatrixXd d(1, 1);
  d << 3.0;
  const auto one = solve(SpectralOperator<double>(basis, d));
  CHECK(one.energy(0) == 3.0);

  // embed in a 4x4 diagonal with two far levels
  const BasisSpec b2 = BasisSpec::square(2, 2.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  m(0, 0) = m(1, 1) = 2.0;
  m(0, 1) = m(1, 0) = 0.5;
  m(2, 2) = 10.0;
  m(3, 3) = 11.0;
  const auto sol = solve(SpectralOperator<double>(b2, m));
  CHECK(sol.energy(0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(sol.energy(1) == doctest::Approx(2.5).epsilon(1e-15));
  const auto v0 = sol.unit_vector(0);
  CHECK(std::abs(v0(0)) == doctest::Approx(std::sqrt(0.5)));
  CHECK(v0(0) == doctest::Approx(-v0(1)));
}

TEST_CASE("oscillator at N=22 reproduces the exact spectrum") {
  const auto& sol = sho22();
  const auto exact = oracle::sho_spectrum(21);
  for (std::size_t k = 0; k < exact.size(); ++k) {
    CHECK(std::abs(sol.energy(static_cast<Eigen::Index>(k)) - exact[k]) / exact[k] <= 1e-8);
  }
  const auto clusters = cluster_degeneracies(sol.energies().head(21));
  REQUIRE(clusters.size() == 6);
  for (int j = 0; j < 6; ++j) CHECK(clusters[j].size == j + 1);
}

TEST_CASE("eigenpair residuals and orthonormality") {
  const BasisSpec basis = BasisSpec::square(12, 9.0);
  const auto op = assemble(basis, parse_potential("qcd"));
  const auto sol = solve(op);
  const double fro = op.matrix().norm();
  for (Eigen::Index k = 0; k < sol.size(); k += 7) {
    const Eigen::VectorXd v = sol.unit_vector(k);
    const double residual = (op.matrix() * v - sol.energy(k) * v).norm();
    CHECK(residual <= 1e-10 * fro);
  }
  Eigen::MatrixXd u(sol.size(), 10);
  for (Eigen::Index k = 0; k < 10; ++k) u.col(k) = sol.unit_vector(k);
  CHECK(((u.transpose() * u) - Eigen::MatrixXd::Identity(10, 10)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("normalisation and sign convention") {
  const auto& sol = sho22();
  const double lx = sol.basis().length_x;
  const double ly = sol.basis().length_y;
  for (Eigen::Index k = 0; k < 12; ++k) {
    const auto a = sol.coefficient_vectors().col(k);
    CHECK(lx * ly / 4.0 * a.squaredNorm() == doctest::Approx(1.0).epsilon(1e-13));
    Eigen::Index pivot = 0;
    a.cwiseAbs().maxCoeff(&pivot);
    CHECK(a(pivot) > 0.0);
  }
  // coefficients(k) is the row-major view of the flattened vector
  const auto c = sol.coefficients(3);
  CHECK(c(1, 4) == sol.coefficient_vectors()(flatten(2, 5, 22).value, 3));
}

TEST_CASE("wavefunction vanishes on the boundary and is defined only inside") {
  const auto& sol = sho22();
  const double l = sol.basis().length_x;
  for (Eigen::Index k : {0, 1, 4}) {
    for (double t : {0.0, 0.3, 0.77, 1.0}) {
      CHECK(sol.wavefunction(k, 0.0, t * l) == 0.0);
      CHECK(sol.wavefunction(k, l, t * l) == 0.0);
      CHECK(sol.wavefunction(k, t * l, 0.0) == 0.0);
      CHECK(sol.wavefunction(k, t * l, l) == 0.0);
    }
  }
  CHECK_THROWS_AS((void)sol.wavefunction(0, -1e-9, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)sol.wavefunction(0, 1.0, l * 1.0001), std::domain_error);
  CHECK_THROWS_AS((void)sol.energy(sol.size()), std::out_of_range);
  CHECK_THROWS_AS((void)sol.coefficients(-1), std::out_of_range);
}

TEST_CASE("oscillator ground state at the box centre") {
  const auto& sol = sho22();
  const double l = sol.basis().length_x;
  CHECK(std::abs(sol.wavefunction(0, l / 2, l / 2) - 1.0 / std::sqrt(std::numbers::pi)) <= 1e-7);
  CHECK(evaluate_wavefunction(sol, 0, l / 2, l / 2) == sol.wavefunction(0, l / 2, l / 2));
}

TEST_CASE("variational bound: computed levels never fall below the exact ones") {
  for (int n : {6, 10, 16}) {
    const auto sol = solve(assemble(BasisSpec::square(n, 8.0), harmonic_potential()));
    const auto exact = oracle::sho_spectrum(21);
    const auto count = std::min<std::size_t>(exact.size(), static_cast<std::size_t>(sol.size()));
    for (std::size_t k = 0; k < count; ++k) {
      CHECK(sol.energy(static_cast<Eigen::Index>(k)) >= exact[k] - 1e-9);
    }
  }
}

TEST_CASE("eigenvalues-only path agrees with the full solve") {
  const auto op = assemble(BasisSpec::square(10, 7.0), parse_potential("qcd"));
  const auto full = solve(op);
  const auto vals = eigenvalues(op);
  CHECK((vals - full.energies()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("solves are deterministic") {
  const auto op = assemble(BasisSpec::square(14, 9.5), parse_potential("qcd"));
  const auto a = solve(op);
  const auto b = solve(op);
  CHECK(a.energies() == b.energies());
  CHECK(a.coefficient_vectors() == b.coefficient_vectors());
}

TEST_CASE("extended precision solve") {
  const auto op = assemble<long double>(BasisSpec::square(8, 6.0), harmonic_potential());
  const auto sol = solve(op);
  const auto dbl = solve(assemble(BasisSpec::square(8, 6.0), harmonic_potential()));
  CHECK(std::abs(static_cast<double>(sol.energy(0)) - dbl.energy(0)) <= 1e-13);
  CHECK(sol.wavefunction(0, 0.0L, 3.0L) == 0.0L);
}
