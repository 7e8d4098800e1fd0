#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

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

TEST_CASE("hermite polynomials") {
  CHECK(hermite(0, 0.37) == 1.0);
  CHECK(hermite(1, 0.37) == 0.74);
  CHECK(hermite(4, 1.0) == -20.0);
  for (int n = 0; n <= 5; ++n) {
    for (std::int64_t x : {-2, -1, 0, 1, 2}) {
      CHECK(hermite<std::int64_t>(n, x) == oracle::hermite_explicit(n, x));
    }
  }
}

TEST_CASE("oscillator reference states") {
  CHECK(ShoReference{0, 0}.energy() == 2.0);
  CHECK(ShoReference{2, 3}.energy() == 12.0);
  CHECK(ShoReference{0, 0}(0.0, 0.0) == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)));
  // L2 norm over the plane, truncated at |u|, |v| <= 9
  for (const ShoReference ref : {ShoReference{0, 0}, ShoReference{1, 2}, ShoReference{4, 1}}) {
    const auto rule = gauss_legendre<long double>(120);
    long double acc = 0;
    for (int i = 0; i < 120; ++i) {
      for (int j = 0; j < 120; ++j) {
        const long double u = 9.0L * rule.nodes[i];
        const long double v = 9.0L * rule.nodes[j];
        const long double p = ref(u, v);
        acc += 81.0L * rule.weights[i] * rule.weights[j] * p * p;
      }
    }
    CHECK(std::abs(static_cast<double>(acc) - 1.0) <= 1e-14);
  }
  CHECK(ShoReference{1, 0}.at_box(2.0, 3.0, 4.0, 6.0) == ShoReference{1, 0}(0.0, 0.0));
}

TEST_CASE("relative energy error") {
  CHECK(delta_E(2.000000000000015572L, 2.0L) == doctest::Approx(7.79e-15).epsilon(1e-3));
  CHECK(delta_E(12.00000003939548075L, 12.0L) == doctest::Approx(3.28e-9).epsilon(1e-3));
  CHECK(delta_E(3.5, 3.5) == 0.0);
  CHECK_THROWS_AS(delta_E(1.0, 0.0), std::invalid_argument);
  CHECK(sho_exact_energy(0) == 2.0);
  CHECK(sho_exact_energy(2) == 4.0);
  CHECK(sho_exact_energy(20) == 12.0);
  CHECK(sho_exact_energy(21) == 14.0);
}

TEST_CASE("degeneracy clustering") {
  const auto sho = cluster_degeneracies(sho22().energies().head(21));
  std::vector<Eigen::Index> sizes;
  for (const auto& c : sho) sizes.push_back(c.size);
  CHECK(sizes == std::vector<Eigen::Index>{1, 2, 3, 4, 5, 6});
  CHECK(cluster_of(sho, 4).first == 3);

  const std::vector<double> distinct{1.0, 2.0, 3.0};
  const auto d = cluster_degeneracies(std::span<const double>(distinct));
  CHECK(d.size() == 3);

  const std::vector<double> near{1.0, 1.0 + 1e-9, 2.0, 2.0 + 1e-5};
  const auto n = cluster_degeneracies(std::span<const double>(near));
  REQUIRE(n.size() == 3);
  CHECK(n[0].size == 2);
  CHECK(n[2].first == 3);
}

TEST_CASE("self-estimated error") {
  const auto& sol = sho22();
  CHECK(delta_hat_E(sol, sol, 0) == 0.0);
  const auto r = estimate_error(sol, sol, 4);
  CHECK(r.overlap == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(r.reordered);
  CHECK_THROWS_AS(estimate_error(sol, sol, sol.size()), std::out_of_range);

  const auto next = solve(assemble(BasisSpec::square(23, 12.2), harmonic_potential()));
  CHECK(delta_hat_E(sol, next, 0) <= 1e-11);
  const auto r3 = estimate_error(sol, next, 3);
  CHECK(r3.overlap == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("cross overlap between different boxes") {
  const auto a = solve(assemble(BasisSpec::square(16, 9.0), harmonic_potential()));
  const auto b = solve(assemble(BasisSpec::square(17, 9.6), harmonic_potential()));
  CHECK(std::abs(cross_overlap(a, 0, b, 0)) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(cross_overlap(a, 0, b, 1)) <= 1e-8);
}

TEST_CASE("wavefunction grid error") {
  auto g = [](double x, double y) { return std::sin(x) * std::cos(y) + 0.1; };
  CHECK(delta_psi_grid(g, g, 2.0, 3.0, 11) == 0.0);
  CHECK(delta_psi_grid(g, [&](double x, double y) { return -g(x, y); }, 2.0, 3.0, 11) == 0.0);
  CHECK(delta_psi_grid(g, [&](double x, double y) { return 1.01 * g(x, y); }, 2.0, 3.0, 11) ==
        doctest::Approx(0.01));
  CHECK(grid_coordinate(4.0, 0, 101) == 0.0);
  CHECK(grid_coordinate(4.0, 100, 101) == 4.0);
  CHECK_THROWS_AS(delta_psi_grid(g, g, 1.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("oscillator ground-state wavefunction error") {
  const auto& sol = sho22();
  const double d = delta_psi(sol, 0, ShoReference{0, 0});
  CHECK(d >= 1.58e-9);
  CHECK(d <= 1.58e-7);
  // the error sits in a boundary layer (the Gaussian is ~1e-8 at the box
  // edge, the sine series exactly 0), so grid refinement converges at
  // first order: each doubling of M halves the change
  const double m201 = delta_psi(sol, 0, ShoReference{0, 0}, 201);
  const double m401 = delta_psi(sol, 0, ShoReference{0, 0}, 401);
  CHECK(m201 < d);
  CHECK((d - m201) / d < 0.1);
  CHECK((m201 - m401) / (d - m201) == doctest::Approx(0.5).epsilon(0.1));
  CHECK_THROWS_AS(delta_psi(sol, 1, ShoReference{1, 0}), std::domain_error);
}

TEST_CASE("delta_psi does not depend on the sign of the computed state") {
  const auto& sol = sho22();
  EigenSolution<double> flipped(sol.basis(), sol.energies(), -sol.coefficient_vectors());
  CHECK(delta_psi(flipped, 0, ShoReference{0, 0}) == delta_psi(sol, 0, ShoReference{0, 0}));
}

TEST_CASE("state (1,1) resolved from its level in extended precision") {
  // (1,1) and the symmetric (2,0)+(0,2) combination are split only by box
  // effects at this size, so a tight tolerance isolates it
  const auto sol = solve(assemble<long double>(BasisSpec::square(22, 11.97), harmonic_potential()));
  const auto clusters = cluster_degeneracies(sol.energies().head(6), 1e-13);
  Eigen::Index state = -1;
  for (const auto& c : clusters) {
    if (c.size == 1 && c.first >= 3) {
      const long double v = sol.wavefunction(c.first, 11.97L / 2 + 0.5L, 11.97L / 2 + 0.5L);
      if (std::abs(static_cast<double>(v)) > 1e-3) state = c.first;
    }
  }
  REQUIRE(state >= 3);
  const double d = delta_psi(sol, state, ShoReference{1, 1}, kDefaultPsiGrid, 1e-13);
  CHECK(d >= 1.9e-8);
  CHECK(d <= 1.9e-6);
}

TEST_CASE("convergence study and semilog fit") {
  const auto builder = centred_builder(harmonic_potential());
  const std::array<int, 5> ns{6, 10, 14, 18, 22};
  const auto curve = build_curve<long double>(ns, builder, {4.0, 20.0});
  std::vector<int> range;
  for (int n = 8; n <= 20; n += 2) range.push_back(n);
  const auto pts = convergence_study<long double>(range, curve, 2.0, builder);
  REQUIRE(pts.size() == range.size());
  const auto fit = fit_semilog(pts, 1e-13);
  CHECK(fit.slope < 0.0);
  CHECK(fit.r_squared >= 0.98);

  const std::array<int, 2> pair{10, 20};
  const auto two = convergence_study<long double>(pair, curve, 2.0, builder);
  CHECK(two[0].delta_E / two[1].delta_E >= 1e3);

  const std::array<int, 1> single{12};
  CHECK(convergence_study(single, curve, 2.0, builder).size() == 1);
}

TEST_CASE("semilog fit of an exact exponential") {
  std::vector<ConvergencePoint> pts;
  for (int n = 2; n <= 10; ++n) pts.push_back({n, 1.0, 0.0, std::pow(10.0, -0.5 * n + 1.0)});
  pts.push_back({11, 1.0, 0.0, 1e-20});
  const auto fit = fit_semilog(pts, 1e-15);
  CHECK(fit.points == 9);
  CHECK(fit.slope == doctest::Approx(-0.5));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK(fit.r_squared == doctest::Approx(1.0));
  CHECK_THROWS_AS(fit_semilog(std::span<const ConvergencePoint>(pts.data(), 1)),
                  std::invalid_argument);
}

TEST_CASE("symmetric state (1,1) is more accurate than (2,0)") {
  // the cluster at energy 6 holds (1,1) and the two combinations of (2,0)
  // and (0,2); extended precision keeps them apart
  const auto sol = solve(assemble<long double>(BasisSpec::square(22, 11.97), harmonic_potential()));
  double err11 = -1.0;
  double err20 = 0.0;
  for (Eigen::Index k = 3; k < 6; ++k) {
    const long double c = sol.wavefunction(k, 11.97L / 2 + 0.5L, 11.97L / 2 + 0.5L);
    const long double s = sol.wavefunction(k, 11.97L / 2 + 0.5L, 11.97L / 2 - 0.5L);
    const double e = static_cast<double>(delta_E(sol.energy(k), 6.0L));
    // (1,1) is odd under u -> -u alone; the others are even
    if (std::abs(static_cast<double>(c + s)) < 1e-8 && std::abs(static_cast<double>(c)) > 1e-3) {
      err11 = e;
    } else {
      err20 = std::max(err20, e);
    }
  }
  REQUIRE(err11 >= 0.0);
  CHECK(err11 < err20);
}
