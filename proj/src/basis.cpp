#include "rsm/basis.hpp"

#include <cmath>
#include <string>

namespace rsm {

void BasisSpec::validate() const {
  if (n_basis < 1) {
    throw std::invalid_argument("basis size must be >= 1, got " + std::to_string(n_basis));
  }
  if (!(std::isfinite(length_x) && length_x > 0.0) || !(std::isfinite(length_y) && length_y > 0.0)) {
    throw std::invalid_argument("domain lengths must be finite and positive");
  }
}

FlatIndex flatten(int m, int n, int n_basis) {
  if (n_basis < 1 || m < 1 || m > n_basis || n < 1 || n > n_basis) {
    throw std::out_of_range("mode pair (" + std::to_string(m) + ", " + std::to_string(n) +
                            ") outside [1, " + std::to_string(n_basis) + "]^2");
  }
  return {static_cast<std::ptrdiff_t>(m - 1) * n_basis + (n - 1)};
}

ModePair unflatten(FlatIndex index, int n_basis) {
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(n_basis) * n_basis;
  if (n_basis < 1 || index.value < 0 || index.value >= total) {
    throw std::out_of_range("flat index " + std::to_string(index.value) + " outside [0, " +
                            std::to_string(total - 1) + "]");
  }
  return {static_cast<int>(index.value / n_basis) + 1, static_cast<int>(index.value % n_basis) + 1};
}

}  // namespace rsm
