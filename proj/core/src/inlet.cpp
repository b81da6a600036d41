#include "entrostab/correlations.hpp"
#include "entrostab/solver.hpp"

#include <algorithm>
#include <cmath>

namespace entrostab {

namespace {

// Turbulence-scale profile in wall units: equilibrium plateau sqrt(2/sqrt(c_mu))
// plus a buffer-layer bump centered at y+ = 20, shaped linear near the wall.
double q0_plus_profile(double y_plus, double c_mu) {
  const double plateau = std::sqrt(2.0 / std::sqrt(c_mu));
  const double base = plateau * std::tanh(y_plus / 12.0);
  const double t = y_plus / 20.0;
  const double bump = t * std::exp(1.0 - t);
  const double peak_target = 3.0;
  const double amp = peak_target - plateau * std::tanh(20.0 / 12.0);
  return base + amp * bump;
}

// Outer-layer decay toward the freestream floor.
double outer_decay(double eta) {
  if (eta >= 1.0) return 0.0;
  const double s = 1.0 - eta * eta;
  return s * s;
}

}  // namespace

std::vector<PrimitiveState> inlet_profiles(double re_theta_target, const GasModel& gas,
                                           const std::vector<double>& y_column,
                                           const SolverOptions& opts,
                                           const ClosureConstants& consts, double kappa,
                                           double B) {
  if (!(re_theta_target > 500.0)) {
    throw std::invalid_argument("inlet_profiles: Re_theta target must exceed 500");
  }
  const double u_e = opts.u_edge;
  const double rho_e = gas.rho_ref();
  const double nu = gas.nu(rho_e);
  const double u_tau = u_tau_estimate(re_theta_target, u_e);
  const double theta_target = re_theta_target * nu / u_e;

  const int n = static_cast<int>(y_column.size());
  std::vector<double> u(n, 0.0);

  auto realize = [&](double delta) {
    const double delta_plus = delta * u_tau / nu;
    const double edge_inner = u_plus_composite(delta_plus, kappa, B);
    const double wake = std::max(0.0, 0.5 * kappa * (u_e / u_tau - edge_inner));
    for (int j = 0; j < n; ++j) {
      const double y = y_column[j];
      if (y >= delta) {
        u[j] = u_e;
        continue;
      }
      const double y_plus = y * u_tau / nu;
      const double s = std::sin(0.5 * M_PI * y / delta);
      const double u_plus = u_plus_composite(y_plus, kappa, B) + 2.0 * wake / kappa * s * s;
      u[j] = std::min(u_plus * u_tau, u_e);
    }
    double theta = 0.0;
    for (int j = 1; j < n; ++j) {
      const double f0 = u[j - 1] * (u_e - u[j - 1]);
      const double f1 = u[j] * (u_e - u[j]);
      theta += 0.5 * (f0 + f1) * (y_column[j] - y_column[j - 1]);
    }
    return theta / (u_e * u_e);
  };

  // Secant iteration on the thickness; theta(delta) is monotone.
  double delta = theta_target * 72.0 / 7.0;
  double theta = realize(delta);
  double delta_prev = delta * 0.8;
  double theta_prev = realize(delta_prev);
  int cycles = 0;
  while (std::abs(theta - theta_target) > 1e-3 * theta_target) {
    if (++cycles > 100) {
      throw ConvergenceError("inlet_profiles: Re_theta iteration stalled at Re_theta = " +
                                 std::to_string(theta * u_e / nu),
                             0, {std::abs(theta / theta_target - 1.0)});
    }
    const double denom = theta - theta_prev;
    double next = (std::abs(denom) > 1e-300)
                      ? delta + (theta_target - theta) * (delta - delta_prev) / denom
                      : delta * theta_target / theta;
    if (!(next > 0.0)) next = 0.5 * delta;
    delta_prev = delta;
    theta_prev = theta;
    delta = next;
    theta = realize(delta);
  }

  const double q_fs = std::max(consts.q0_floor, std::sqrt(3.0) * opts.freestream_ti * u_e);
  const double q1_fs =
      std::max(consts.q1_floor, q_fs / std::pow(4.0 * opts.freestream_re_t, 0.25));

  std::vector<PrimitiveState> column(n);
  for (int j = 0; j < n; ++j) {
    const double y = y_column[j];
    const double y_plus = y * u_tau / nu;
    const double eta = y / delta;
    PrimitiveState& s = column[j];
    s.rho = rho_e;
    s.T = gas.t_ref;
    s.u = Vec3(u[j], 0.0, 0.0);
    s.q0 = std::max(q0_plus_profile(y_plus, consts.c_mu) * u_tau * outer_decay(eta), q_fs);
    // Local-equilibrium dissipation, floored below y+ = 5 where the
    // log-layer estimate is invalid.
    const double y_eff = std::max(y, 5.0 * nu / u_tau);
    const double eps = u_tau * u_tau * u_tau / (kappa * y_eff) * outer_decay(eta);
    s.q1 = std::max(q1_from_eps(eps, nu), q1_fs);
  }
  column[0].u.setZero();
  column[0].q0 = 0.0;
  const double dq0_dy = one_sided_gradient(column[0].q0, column[1].q0, column[2].q0,
                                           y_column[1], y_column[2]);
  column[0].q1 = std::max(wall_q1(nu, dq0_dy), consts.q1_floor);
  return column;
}

}  // namespace entrostab
