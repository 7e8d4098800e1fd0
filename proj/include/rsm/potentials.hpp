#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rsm/polynomial.hpp"

namespace rsm {

/// coeff * px(x - Lx/2) * py(y - Ly/2)
struct SeparableTerm {
  double coeff = 1.0;
  Polynomial px;
  Polynomial py;
};

/// Dimensionless potential f(x, y) on the box [0, Lx] x [0, Ly], written as a
/// sum of separable polynomial terms in the centred coordinates. The shift
/// to the box centre is part of the representation, so the same terms
/// describe the potential for every box size.
class SeparablePotential {
 public:
  SeparablePotential() = default;
  explicit SeparablePotential(std::vector<SeparableTerm> terms, double length_x = 1.0,
                              double length_y = 1.0);

  [[nodiscard]] const std::vector<SeparableTerm>& terms() const { return terms_; }
  [[nodiscard]] double length_x() const { return length_x_; }
  [[nodiscard]] double length_y() const { return length_y_; }

  [[nodiscard]] SeparablePotential with_domain(double length_x, double length_y) const;
  [[nodiscard]] SeparablePotential plus_constant(double value) const;

  /// Box coordinates, 0 <= x <= Lx.
  [[nodiscard]] double operator()(double x, double y) const;

  [[nodiscard]] bool is_zero() const;
  /// True when f(u, v) == f(v, u) term by term after expansion into monomials.
  [[nodiscard]] bool is_xy_symmetric() const;
  /// Expansion into monomials u^i v^j, zero coefficients dropped.
  [[nodiscard]] std::map<std::pair<int, int>, double> monomials() const;
  /// Text form accepted by parse_potential.
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<SeparableTerm> terms_;
  double length_x_ = 1.0;
  double length_y_ = 1.0;
};

SeparablePotential zero_potential();
/// (x - Lx/2)^2 + (y - Ly/2)^2, the oscillator in units of hbar*omega/2.
SeparablePotential harmonic_potential();
/// alpha (x - Lx/2)^2 (y - Ly/2)^2
SeparablePotential quartic_product_potential(double alpha = 1.0);

/// Accepts the built-in names `sho`, `qcd` (scaled by alpha), `none`/`zero`,
/// or a sum of terms such as `2.5*(x)^2*(y)^2 - x^4 + 0.5*y`, where x and y
/// already denote the centred coordinates.
SeparablePotential parse_potential(std::string_view text, double alpha = 1.0);

// Physical-units input.

struct FreeParticle {};
/// U = m omega^2 (x'^2 + y'^2) / 2
struct HarmonicOscillator {
  double omega = 1.0;
};
/// U = sum coeff * x'^power_x * y'^power_y, coordinates measured from the
/// centre of the confining region.
struct MonomialTerm {
  double coeff = 0.0;
  int power_x = 0;
  int power_y = 0;
};
struct PolynomialPotential {
  std::vector<MonomialTerm> terms;
};

struct PhysicalProblem {
  double mass = 1.0;
  double hbar = 1.0;
  std::variant<FreeParticle, HarmonicOscillator, PolynomialPotential> potential;
};

struct DimensionlessProblem {
  SeparablePotential potential;
  /// Physical energy per unit of dimensionless eigenvalue.
  double energy_scale = 1.0;
  /// Physical length per unit of dimensionless coordinate.
  double length_scale = 1.0;
};

/// General potentials: f = 2 m U / hbar^2, E = (hbar^2 / 2m) eps, x = x'.
/// Oscillator: x = sqrt(m omega / hbar) x', E = (hbar omega / 2) eps.
DimensionlessProblem to_dimensionless(const PhysicalProblem& problem);

}  // namespace rsm
