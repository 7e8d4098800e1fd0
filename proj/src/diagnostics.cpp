#include "rsm/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace rsm {

double sho_exact_energy(std::size_t index) {
  std::size_t level = 0;
  std::size_t start = 0;
  while (index >= start + level + 1) {
    start += level + 1;
    ++level;
  }
  return 2.0 * static_cast<double>(level + 1);
}

SemilogFit fit_semilog(std::span<const ConvergencePoint> points, double floor) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& p : points) {
    if (p.delta_E > floor && p.delta_E > 0.0) {
      xs.push_back(p.n_basis);
      ys.push_back(std::log10(p.delta_E));
    }
  }
  if (xs.size() < 2) throw std::invalid_argument("semilog fit needs at least two points above the floor");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("semilog fit needs distinct basis sizes");
  SemilogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = (syy == 0.0) ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.points = xs.size();
  return fit;
}

}  // namespace rsm
