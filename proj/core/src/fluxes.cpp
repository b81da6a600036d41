#include "entrostab/fluxes.hpp"

#include <stdexcept>

namespace entrostab {

ViscosityAggregates ViscosityAggregates::unconstrained(const GasModel& gas, double mu_T,
                                                       bool kappa_t_uses_cv) {
  ViscosityAggregates a;
  a.mu_hat = gas.mu_visc + mu_T;
  a.lambda_hat = gas.lambda_visc - 2.0 / 3.0 * mu_T;
  a.chi = a.lambda_hat + 2.0 * a.mu_hat;
  const double c_heat = kappa_t_uses_cv ? gas.cv() : gas.cp();
  a.kappa_hat = gas.kappa + c_heat * mu_T / gas.pr_t;
  a.mu_k = gas.mu_visc + mu_T / gas.pr_k;
  a.mu_q1 = gas.mu_visc + mu_T / gas.pr_q1;
  a.mu_eps = gas.mu_visc + mu_T / gas.pr_eps;
  return a;
}

ViscosityAggregates ViscosityAggregates::make(const GasModel& gas, double mu_T,
                                              SymmetryAssumption tie, bool kappa_t_uses_cv) {
  ViscosityAggregates a = unconstrained(gas, mu_T, kappa_t_uses_cv);
  switch (tie) {
    case SymmetryAssumption::TieQ1ToEps:
      a.mu_q1 = a.mu_eps;
      break;
    case SymmetryAssumption::TieAllToK:
      a.mu_q1 = a.mu_k;
      a.mu_eps = a.mu_k;
      break;
  }
  return a;
}

Mat3 strain_rate(const PrimGrads& grads) {
  return 0.5 * (grads.du + grads.du.transpose());
}

Mat3 deviatoric_strain_rate(const PrimGrads& grads) {
  Mat3 s = strain_rate(grads);
  const double third_trace = s.trace() / 3.0;
  s.diagonal().array() -= third_trace;
  return s;
}

Mat3 stress_tensor(const PrimGrads& grads, const ViscosityAggregates& visc) {
  Mat3 tau = 2.0 * visc.mu_hat * deviatoric_strain_rate(grads);
  tau.diagonal().array() += visc.mu_bulk() * grads.div_u();
  return tau;
}

Vec7 advective_flux(const PrimitiveState& y, const GasModel& gas, int i) {
  if (i < 0 || i > 2) {
    throw std::out_of_range("advective_flux: direction must be 0..2");
  }
  const double p = y.rho * gas.R * y.T;
  const double e_tot = gas.cv() * y.T + y.k_tot();
  Vec7 f;
  const double ui = y.u[i];
  f << y.rho * ui, y.rho * ui * y.u[0], y.rho * ui * y.u[1], y.rho * ui * y.u[2],
      ui * (y.rho * e_tot + p), y.rho * ui * y.q0, y.rho * ui * y.q1;
  f[1 + i] += p;
  return f;
}

Mat73 diffusive_flux(const PrimitiveState& y, const PrimGrads& grads,
                     const ViscosityAggregates& visc) {
  const Mat3 tau = stress_tensor(grads, visc);
  Mat73 f = Mat73::Zero();
  for (int i = 0; i < 3; ++i) {
    f(1, i) = tau(0, i);
    f(2, i) = tau(1, i);
    f(3, i) = tau(2, i);
    f(4, i) = tau.row(i).dot(y.u) + visc.kappa_hat * grads.dT[i] +
              visc.mu_k * y.q0 * grads.dq0[i] + visc.mu_q1 * y.q1 * grads.dq1[i];
    f(5, i) = visc.mu_k * grads.dq0[i];
    f(6, i) = visc.mu_eps * grads.dq1[i];
  }
  return f;
}

}  // namespace entrostab
