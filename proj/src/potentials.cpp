#include "rsm/potentials.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rsm {

namespace {

void check_lengths(double lx, double ly) {
  if (!(std::isfinite(lx) && lx > 0.0 && std::isfinite(ly) && ly > 0.0)) {
    throw std::invalid_argument("potential domain lengths must be finite and positive");
  }
}

std::string format_coeff(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", c);
  return buf;
}

}  // namespace

SeparablePotential::SeparablePotential(std::vector<SeparableTerm> terms, double length_x,
                                       double length_y)
    : terms_(std::move(terms)), length_x_(length_x), length_y_(length_y) {
  check_lengths(length_x, length_y);
  for (const auto& t : terms_) {
    if (!std::isfinite(t.coeff)) throw std::invalid_argument("potential coefficient is not finite");
  }
}

SeparablePotential SeparablePotential::with_domain(double length_x, double length_y) const {
  return SeparablePotential(terms_, length_x, length_y);
}

SeparablePotential SeparablePotential::plus_constant(double value) const {
  auto terms = terms_;
  terms.push_back({value, Polynomial::constant(1.0), Polynomial::constant(1.0)});
  return SeparablePotential(std::move(terms), length_x_, length_y_);
}

double SeparablePotential::operator()(double x, double y) const {
  const double u = x - 0.5 * length_x_;
  const double v = y - 0.5 * length_y_;
  double acc = 0.0;
  for (const auto& t : terms_) acc += t.coeff * t.px(u) * t.py(v);
  return acc;
}

std::map<std::pair<int, int>, double> SeparablePotential::monomials() const {
  std::map<std::pair<int, int>, double> out;
  for (const auto& t : terms_) {
    for (int i = 0; i <= t.px.degree(); ++i) {
      for (int j = 0; j <= t.py.degree(); ++j) {
        const double c = t.coeff * t.px.coefficient(i) * t.py.coefficient(j);
        if (c != 0.0) out[{i, j}] += c;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0.0; });
  return out;
}

bool SeparablePotential::is_zero() const { return monomials().empty(); }

bool SeparablePotential::is_xy_symmetric() const {
  const auto mono = monomials();
  for (const auto& [powers, c] : mono) {
    auto it = mono.find({powers.second, powers.first});
    if (it == mono.end() || it->second != c) return false;
  }
  return true;
}

std::string SeparablePotential::to_string() const {
  const auto mono = monomials();
  if (mono.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [powers, c] : mono) {
    if (!first) os << " + ";
    first = false;
    os << format_coeff(c);
    if (powers.first > 0) os << "*(x)^" << powers.first;
    if (powers.second > 0) os << "*(y)^" << powers.second;
  }
  return os.str();
}

SeparablePotential zero_potential() { return SeparablePotential(std::vector<SeparableTerm>{}); }

SeparablePotential harmonic_potential() {
  return SeparablePotential({{1.0, Polynomial::monomial(2), Polynomial::constant(1.0)},
                             {1.0, Polynomial::constant(1.0), Polynomial::monomial(2)}});
}

SeparablePotential quartic_product_potential(double alpha) {
  if (!(std::isfinite(alpha) && alpha > 0.0)) {
    throw std::invalid_argument("alpha must be finite and positive");
  }
  return SeparablePotential({{alpha, Polynomial::monomial(2), Polynomial::monomial(2)}});
}

DimensionlessProblem to_dimensionless(const PhysicalProblem& problem) {
  if (!(problem.mass > 0.0 && std::isfinite(problem.mass))) {
    throw std::invalid_argument("mass must be positive");
  }
  if (!(problem.hbar > 0.0 && std::isfinite(problem.hbar))) {
    throw std::invalid_argument("hbar must be positive");
  }
  const double kinetic_scale = problem.hbar * problem.hbar / (2.0 * problem.mass);

  struct Visitor {
    const PhysicalProblem& p;
    double kinetic_scale;

    DimensionlessProblem operator()(const FreeParticle&) const {
      return {zero_potential(), kinetic_scale, 1.0};
    }
    DimensionlessProblem operator()(const HarmonicOscillator& h) const {
      if (!(h.omega > 0.0 && std::isfinite(h.omega))) {
        throw std::invalid_argument("omega must be positive");
      }
      return {harmonic_potential(), 0.5 * p.hbar * h.omega, std::sqrt(p.hbar / (p.mass * h.omega))};
    }
    DimensionlessProblem operator()(const PolynomialPotential& poly) const {
      std::vector<SeparableTerm> terms;
      terms.reserve(poly.terms.size());
      for (const auto& t : poly.terms) {
        if (t.power_x < 0 || t.power_y < 0) {
          throw std::invalid_argument("potential term is not a polynomial (negative power)");
        }
        terms.push_back({t.coeff / kinetic_scale, Polynomial::monomial(t.power_x),
                         Polynomial::monomial(t.power_y)});
      }
      return {SeparablePotential(std::move(terms)), kinetic_scale, 1.0};
    }
  };
  return std::visit(Visitor{problem, kinetic_scale}, problem.potential);
}

}  // namespace rsm
