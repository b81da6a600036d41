#include "entrostab/audit.hpp"

namespace entrostab {

double dissipation_function(const PrimGrads& grads, double mu, double mu_bulk) {
  const Mat3 sd = deviatoric_strain_rate(grads);
  const double div = grads.div_u();
  return 2.0 * mu * sd.cwiseProduct(sd).sum() + mu_bulk * div * div;
}

double dissipation_function(const PrimGrads& grads, const ViscosityAggregates& visc) {
  return dissipation_function(grads, visc.mu_hat, visc.mu_bulk());
}

double entropy_density(const PrimitiveState& y, const GasModel& gas) {
  return -y.rho * eval_thermo(gas, y.rho, y.T).s_hat;
}

EntropyBudget clausius_duhem_budget(const PrimitiveState& y, const PrimGrads& grads,
                                    const SourceTerms& s, const ViscosityAggregates& visc,
                                    const GasModel& gas) {
  const double T = y.T;
  EntropyBudget b;
  b.upsilon_over_T = dissipation_function(grads, gas.mu_visc, gas.mu_bulk()) / T;
  b.thermal = visc.kappa_hat * grads.dT.squaredNorm() / (T * T);
  b.rho_eps_over_T = y.rho * eps_from_q1(y.q1, gas.nu(y.rho)) / T;
  b.q1_diffusion = visc.mu_eps * grads.dq1.squaredNorm() / T;
  b.dilatation = -y.rho * y.q1 * y.q1 * grads.div_u() / (3.0 * T);
  b.source_sink = -y.q1 * s.s_q1() / T;
  b.total = b.upsilon_over_T + b.thermal + b.rho_eps_over_T + b.q1_diffusion + b.dilatation +
            b.source_sink;
  return b;
}

PlottedProduction plotted_production(const PrimitiveState& y, const PrimGrads& grads,
                                     const SourceTerms& s, const ViscosityAggregates& visc,
                                     const GasModel& gas) {
  (void)visc;
  PlottedProduction p;
  p.turbulent = y.rho * eps_from_q1(y.q1, gas.nu(y.rho)) +
                y.q1 * (s.d_q1 - s.p_q1 - 2.0 / 3.0 * s.r_q1);
  p.total = p.turbulent + dissipation_function(grads, gas.mu_visc, gas.mu_bulk());
  return p;
}

}  // namespace entrostab
