#pragma once

#include "entrostab/closure.hpp"
#include "entrostab/gas.hpp"
#include "entrostab/grid.hpp"
#include "entrostab/types.hpp"

#include <vector>

namespace entrostab {

/// Flat-plate marching options. The freestream is the edge state; the
/// energy equation is off by default (near-isothermal regime).
struct SolverOptions {
  double u_edge = 34.72;        // [m/s]
  double relaxation = 0.7;      // Picard under-relaxation
  double tol = 1e-8;            // max relative update per station
  int max_iters = 200;
  int substeps = 2;             // integration steps between output stations
  double penalty_y_plus = 3.0;  // q1 wall-balance enforcement region
  double freestream_ti = 1e-3;  // freestream turbulence intensity
  // Freestream turbulent Reynolds number (q0/q1 scale ratio); sets the
  // freestream dissipation level and with it the decay length.
  double freestream_re_t = 30.0;
  bool energy_equation = false;
  bool newton = false;  // augment diagonals with point source Jacobians
  // Entropy guard applied to the interior sources every iteration. The weak
  // form credits the dissipation and is the sharp pointwise condition for
  // non-negative entropy production; the strict form also forces the
  // dissipation of q1 above its production, which suppresses the near-wall
  // behavior of the closure.
  bool strict_entropy_clip = false;
  // Iteration safeguards; both stay inactive on converged flat-plate fields.
  double production_limit = 10.0;  // cap P_k at this multiple of rho*eps
  double mu_t_ratio_max = 1e5;     // cap mu_T at this multiple of mu
  SymmetryAssumption symmetry = SymmetryAssumption::TieQ1ToEps;
  bool kappa_t_uses_cv = false;
};

/// Integral and wall quantities of one converged station.
struct Diagnostics {
  double x = 0;               // [m]
  double theta = 0;           // momentum thickness [m]
  double re_theta = 0;        // [-]
  double tau_w = 0;           // wall shear stress [Pa]
  double u_tau = 0;           // friction velocity [m/s]
  double cf = 0;              // 2 (u_tau/u_edge)^2 [-]
  double cf_correlation = 0;  // Karman-Schoenherr at the same Re_theta [-]
  bool edge_found = true;     // velocity reached 99.5% of the freestream
  int edge_index = -1;
  int iterations = 0;         // Picard cycles summed over substeps
};

/// Converged solution: per-station columns of primitive states (u[0]
/// streamwise, u[1] wall-normal) plus diagnostics and event counters.
struct SolutionField {
  Grid grid;
  std::vector<std::vector<PrimitiveState>> state;  // [station][node]
  std::vector<Diagnostics> stations;
  ClosureEvents events;
};

/// q1 satisfying the near-wall balance q1^4 = nu^2 (dq0/dy)^2.
double wall_q1(double nu, double dq0_dy);

/// One-sided second-order derivative at y = 0 from nodes (0, f0), (y1, f1),
/// (y2, f2).
double one_sided_gradient(double f0, double f1, double f2, double y1, double y2);

/// Synthesizes an inlet column: composite law-of-the-wall velocity with a
/// wake correction iterated until the realized momentum-thickness Reynolds
/// number matches the target within 0.1%, a turbulence profile peaking near
/// y+ = 20, and q1 from the local-equilibrium dissipation estimate.
/// Throws ConvergenceError when the profile iteration fails.
std::vector<PrimitiveState> inlet_profiles(double re_theta_target, const GasModel& gas,
                                           const std::vector<double>& y_column,
                                           const SolverOptions& opts,
                                           const ClosureConstants& consts,
                                           double kappa = 0.41, double B = 5.2);

/// Marches the boundary layer over the grid from the inlet column. Each
/// station solves the coupled (u, q0, q1) wall-normal system implicitly with
/// sources from the closure, the entropy clip applied every iteration, and
/// the q1 wall balance enforced for y+ below the penalty threshold.
/// Throws ConvergenceError carrying the station index on failure.
SolutionField march(const SolverOptions& opts, const GasModel& gas,
                    const ClosureConstants& consts, const Grid& grid,
                    const std::vector<PrimitiveState>& inlet);

/// Integral diagnostics for one station column.
Diagnostics diagnose(const std::vector<double>& y, const std::vector<PrimitiveState>& column,
                     const GasModel& gas, double u_edge);

/// Gradients at a node of a station, with the streamwise derivative taken
/// against the upstream station (index s-1, or forward at the inlet).
PrimGrads node_gradients(const SolutionField& field, int station, int node);

/// Wall-normal derivative of a scalar column at node j (central in the
/// interior, one-sided second order at the ends).
double column_derivative(const std::vector<double>& y, const std::vector<double>& f, int j);

}  // namespace entrostab
