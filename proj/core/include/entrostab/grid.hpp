#pragma once

#include "entrostab/gas.hpp"
#include "entrostab/types.hpp"

#include <vector>

namespace entrostab {

/// Structured marching grid: streamwise stations and a geometrically
/// stretched wall-normal column per station. The first off-wall spacing of
/// each column targets y_plus_first in the wall units estimated from the
/// skin-friction correlation at that station.
struct Grid {
  std::vector<double> x;                // station coordinates [m]
  std::vector<std::vector<double>> y;   // per-station wall-normal nodes, y[s][0] = 0 [m]
  double y_plus_first = 0;              // target first-node wall coordinate [-]
  double height = 0;                    // domain height [m]

  int nx() const { return static_cast<int>(x.size()); }
  int ny() const { return y.empty() ? 0 : static_cast<int>(y.front().size()); }
};

struct GridSpec {
  int nx = 40;
  int ny = 60;
  double y_plus_first = 0.01;
  double length = 5.0;          // [m]
  double height = 0.0;          // [m]; 0 selects 1.5x the estimated final thickness
  double re_theta_inlet = 2300.0;
  double stretch_max = 1.5;
};

/// Builds the grid. Throws ConfigError when the requested stretching ratio
/// falls outside [1, stretch_max] or the counts are too small.
Grid build_grid(const GridSpec& spec, const GasModel& gas, double u_edge);

/// Geometric column with first spacing dy1 filling [0, height] with n nodes;
/// ratio solved in [1, ratio_max]. Exposed for reuse and testing.
std::vector<double> geometric_column(double dy1, double height, int n, double ratio_max);

}  // namespace entrostab
