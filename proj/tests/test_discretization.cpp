#include <algorithm>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rsm/rsm.hpp"

using namespace rsm;

TEST_CASE("flatten is row-major") {
  CHECK(flatten(1, 1, 5).value == 0);
  CHECK(flatten(5, 5, 5).value == 24);
  CHECK(flatten(2, 3, 5).value == 7);
  CHECK_THROWS_AS(flatten(0, 1, 5), std::out_of_range);
  CHECK_THROWS_AS(flatten(1, 6, 5), std::out_of_range);
  CHECK_THROWS_AS(unflatten(FlatIndex{25}, 5), std::out_of_range);
  CHECK_THROWS_AS(unflatten(FlatIndex{-1}, 5), std::out_of_range);
}

TEST_CASE("flatten and unflatten are inverse over the whole grid") {
  for (int n = 1; n <= 12; ++n) {
    std::vector<std::ptrdiff_t> seen;
    for (int m = 1; m <= n; ++m) {
      for (int k = 1; k <= n; ++k) {
        const FlatIndex f = flatten(m, k, n);
        CHECK(unflatten(f, n) == ModePair{m, k});
        seen.push_back(f.value);
      }
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i) REQUIRE(seen[i] == static_cast<std::ptrdiff_t>(i));
  }
}

TEST_CASE("basis spec validation") {
  CHECK(BasisSpec::square(4, 2.0).dimension() == 16);
  CHECK_THROWS_AS(BasisSpec::square(0, 1.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(BasisSpec::square(3, 0.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS((BasisSpec{3, 1.0, -2.0}.validate()), std::invalid_argument);
}

TEST_CASE("zero potential assembles the kinetic diagonal") {
  const BasisSpec basis{5, 2.0, 3.0};
  const auto op = assemble(basis, zero_potential());
  const double pi = std::numbers::pi;
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      const auto i = flatten(m, n, 5).value;
      CHECK(op(i, i) == doctest::Approx(std::pow(m * pi / 2.0, 2) + std::pow(n * pi / 3.0, 2)).epsilon(1e-15));
    }
  }
  Eigen::MatrixXd off = op.matrix();
  off.diagonal().setZero();
  CHECK(off.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("diagonal carries kinetic energy plus C_{mm,nn}") {
  const BasisSpec basis{6, 7.0, 5.0};
  const auto pot = quartic_product_potential(1.3);
  const auto op = assemble(basis, pot);
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const auto i = flatten(m, n, 6).value;
      const double kinetic = std::pow(m * std::numbers::pi / 7.0, 2) + std::pow(n * std::numbers::pi / 5.0, 2);
      const double c = 1.3 * static_cast<double>(oracle::sine_element(2, m, m, 7.0L) *
                                                 oracle::sine_element(2, n, n, 5.0L));
      CHECK(op(i, i) == doctest::Approx(kinetic + c).epsilon(1e-13));
    }
  }
}

TEST_CASE("assembled operator is exactly symmetric for random potentials") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<SeparableTerm> terms;
    for (int t = 0; t < 3; ++t) {
      std::vector<double> px(deg(rng) + 1);
      std::vector<double> py(deg(rng) + 1);
      for (auto& v : px) v = coef(rng);
      for (auto& v : py) v = coef(rng);
      terms.push_back({coef(rng), Polynomial(px), Polynomial(py)});
    }
    const BasisSpec basis{7, 3.0 + trial, 4.5};
    const auto op = assemble(basis, SeparablePotential(terms));
    CHECK((op.matrix() - op.matrix().transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("box limit: zero potential reproduces the box spectrum") {
  for (int n : {1, 3, 8, 13, 20}) {
    const double lx = 2.3;
    const double ly = 4.1;
    const auto values = eigenvalues(assemble(BasisSpec{n, lx, ly}, zero_potential()));
    const auto exact = oracle::box_spectrum(n, lx, ly);
    for (std::size_t k = 0; k < exact.size(); ++k) {
      REQUIRE(std::abs(values(static_cast<Eigen::Index>(k)) - exact[k]) / exact[k] <= 1e-12);
    }
  }
}

TEST_CASE("separable potential: 2D spectrum is all pairwise sums of 1D spectra") {
  const int n = 8;
  const double lx = 6.0;
  const double ly = 5.0;
  const Polynomial g({0.3, -0.2, 1.0, 0.0, 0.05});
  const Polynomial h({0.0, 0.4, 0.7});
  const SeparablePotential pot({{1.0, g, Polynomial::constant(1.0)}, {1.0, Polynomial::constant(1.0), h}});
  const auto values = eigenvalues(assemble(BasisSpec{n, lx, ly}, pot));

  auto spectrum_1d = [n](const Polynomial& p, double length) {
    Eigen::MatrixXd d = coupling_1d(p, n, length).matrix;
    for (int m = 1; m <= n; ++m) d(m - 1, m - 1) += std::pow(m * std::numbers::pi / length, 2);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d, Eigen::EigenvaluesOnly);
    return Eigen::VectorXd(es.eigenvalues());
  };
  const auto ex = spectrum_1d(g, lx);
  const auto ey = spectrum_1d(h, ly);
  std::vector<double> sums;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sums.push_back(ex(i) + ey(j));
  }
  std::sort(sums.begin(), sums.end());
  for (std::size_t k = 0; k < sums.size(); ++k) {
    CHECK(std::abs(values(static_cast<Eigen::Index>(k)) - sums[k]) / std::abs(sums[k]) <= 1e-10);
  }
}

TEST_CASE("SHO at N=22, L=11.97 has ground energy 2") {
  const auto op = assemble(BasisSpec::square(22, 11.97), harmonic_potential());
  CHECK(op.dimension() == 484);
  CHECK(std::abs(eigenvalues(op)(0) - 2.0) <= 1e-11);
}

TEST_CASE("extended precision reproduces the 20-digit ground energy") {
  // 2.000000000000015572 at N=22, L=1197/100
  const auto op = assemble<long double>(BasisSpec::square(22, 11.97), harmonic_potential());
  const long double e0 = eigenvalues(op)(0);
  CHECK(std::abs(static_cast<double>(e0 - 2.000000000000015572L)) <= 2e-16);
}

TEST_CASE("non-finite matrix elements are rejected") {
  const SeparablePotential huge({{1e308, Polynomial::monomial(4), Polynomial::monomial(4)}});
  CHECK_THROWS_AS(assemble(BasisSpec::square(4, 50.0), huge), std::domain_error);
}
