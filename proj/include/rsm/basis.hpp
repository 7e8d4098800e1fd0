#pragma once

#include <cstddef>
#include <stdexcept>

namespace rsm {

/// Truncated product sine basis sin(m pi x / Lx) sin(n pi y / Ly),
/// 1 <= m, n <= n_basis, on the box [0, Lx] x [0, Ly].
struct BasisSpec {
  int n_basis = 1;
  double length_x = 1.0;
  double length_y = 1.0;

  static BasisSpec square(int n_basis, double length) { return {n_basis, length, length}; }

  [[nodiscard]] std::ptrdiff_t dimension() const {
    return static_cast<std::ptrdiff_t>(n_basis) * n_basis;
  }

  /// Throws std::invalid_argument unless n_basis >= 1 and both lengths are
  /// finite and positive.
  void validate() const;

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

struct FlatIndex {
  std::ptrdiff_t value = 0;
  friend bool operator==(FlatIndex, FlatIndex) = default;
};

/// 1-based mode numbers along x (m) and y (n).
struct ModePair {
  int m = 1;
  int n = 1;
  friend bool operator==(ModePair, ModePair) = default;
};

/// Row-major: (m, n) -> (m - 1) * N + (n - 1).
FlatIndex flatten(int m, int n, int n_basis);
ModePair unflatten(FlatIndex index, int n_basis);

}  // namespace rsm
