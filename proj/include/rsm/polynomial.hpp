#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace rsm {

/// Real polynomial in the centred coordinate u = x - L/2, stored by
/// ascending power. Trailing zero coefficients are trimmed, so the zero
/// polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);
  Polynomial(std::initializer_list<double> coefficients)
      : Polynomial(std::vector<double>(coefficients)) {}

  static Polynomial constant(double value) { return Polynomial({value}); }
  static Polynomial monomial(int power, double coefficient = 1.0);

  [[nodiscard]] const std::vector<double>& coefficients() const { return coeffs_; }
  [[nodiscard]] double coefficient(int power) const;
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_even() const;
  [[nodiscard]] bool is_odd() const;

  [[nodiscard]] double operator()(double u) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

}  // namespace rsm
