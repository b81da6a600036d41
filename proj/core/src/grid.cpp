#include "entrostab/grid.hpp"

#include "entrostab/correlations.hpp"

#include <cmath>

namespace entrostab {

namespace {

double geometric_sum(double ratio, int n) {
  // 1 + r + ... + r^(n-1), stable near r = 1
  if (std::abs(ratio - 1.0) < 1e-12) return static_cast<double>(n);
  return (std::pow(ratio, n) - 1.0) / (ratio - 1.0);
}

}  // namespace

std::vector<double> geometric_column(double dy1, double height, int n, double ratio_max) {
  const int spacings = n - 1;
  if (spacings < 1) {
    throw ConfigError("grid.ny", 0, "need at least two wall-normal nodes");
  }
  if (!(dy1 > 0.0) || !(height > dy1)) {
    throw ConfigError("grid.y_plus_first", 0, "first spacing does not fit the domain height");
  }

  const double uniform_total = dy1 * spacings;
  double ratio;
  if (std::abs(uniform_total - height) <= 1e-12 * height) {
    ratio = 1.0;
  } else if (uniform_total > height) {
    throw ConfigError("grid.ny", 0,
                      "stretching ratio below 1: first spacing already overfills the height");
  } else {
    double lo = 1.0, hi = ratio_max;
    if (dy1 * geometric_sum(hi, spacings) < height) {
      throw ConfigError("grid.ny", 0,
                        "stretching ratio above " + std::to_string(ratio_max) +
                            " required to reach the domain height");
    }
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (dy1 * geometric_sum(mid, spacings) < height) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    ratio = 0.5 * (lo + hi);
  }

  std::vector<double> y(n);
  y[0] = 0.0;
  double dy = dy1;
  for (int j = 1; j < n; ++j) {
    y[j] = y[j - 1] + dy;
    dy *= ratio;
  }
  y.back() = height;  // absorb the bisection remainder in the last node
  return y;
}

Grid build_grid(const GridSpec& spec, const GasModel& gas, double u_edge) {
  if (spec.nx < 2) throw ConfigError("grid.nx", 0, "need at least two stations");
  if (spec.ny < 8) throw ConfigError("grid.ny", 0, "need at least eight wall-normal nodes");
  if (!(spec.y_plus_first > 0.0)) {
    throw ConfigError("grid.y_plus_first", 0, "must be positive");
  }
  if (!(spec.length > 0.0)) throw ConfigError("grid.length", 0, "must be positive");

  Grid grid;
  grid.y_plus_first = spec.y_plus_first;
  grid.x.resize(spec.nx);
  for (int i = 0; i < spec.nx; ++i) {
    grid.x[i] = spec.length * static_cast<double>(i) / (spec.nx - 1);
  }

  const double rho_e = gas.rho_ref();
  const double nu = gas.nu(rho_e);
  const std::vector<double> re_theta = re_theta_growth(grid.x, spec.re_theta_inlet, u_edge, nu);

  double height = spec.height;
  if (height <= 0.0) {
    // 1.5x the estimated final thickness, with theta -> delta from the
    // one-seventh-power profile ratio delta = (72/7) theta.
    const double theta_end = re_theta.back() * nu / u_edge;
    height = 1.5 * theta_end * 72.0 / 7.0;
  }
  grid.height = height;

  grid.y.resize(spec.nx);
  for (int i = 0; i < spec.nx; ++i) {
    const double u_tau = u_tau_estimate(re_theta[i], u_edge);
    const double dy1 = spec.y_plus_first * nu / u_tau;
    grid.y[i] = geometric_column(dy1, height, spec.ny, spec.stretch_max);
  }
  return grid;
}

}  // namespace entrostab
