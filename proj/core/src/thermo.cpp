#include "entrostab/gas.hpp"

#include <cmath>
#include <stdexcept>

namespace entrostab {

namespace {

void require(bool ok, const char* field, double value) {
  if (!ok) {
    throw std::invalid_argument(std::string("GasModel: ") + field + " = " +
                                std::to_string(value) + " violates its invariant");
  }
}

}  // namespace

void GasModel::validate() const {
  require(R > 0.0, "R", R);
  require(gamma > 1.0, "gamma", gamma);
  require(mu_visc >= 0.0, "mu_visc", mu_visc);
  require(kappa >= 0.0, "kappa", kappa);
  require(pr_t > 0.0, "pr_t", pr_t);
  require(pr_k > 0.0, "pr_k", pr_k);
  require(pr_eps > 0.0, "pr_eps", pr_eps);
  require(pr_q1 > 0.0, "pr_q1", pr_q1);
  require(t_ref > 0.0, "t_ref", t_ref);
  require(p_ref > 0.0, "p_ref", p_ref);
  // A negative bulk viscosity would make the dissipation function indefinite.
  require(mu_bulk() >= -1e-12 * mu_visc, "lambda_visc", lambda_visc);
}

ThermoState eval_thermo(const GasModel& gas, double rho, double T) {
  if (!(rho > 0.0)) {
    throw std::domain_error("eval_thermo: rho must be positive, got " + std::to_string(rho));
  }
  if (!(T > 0.0)) {
    throw std::domain_error("eval_thermo: T must be positive, got " + std::to_string(T));
  }

  ThermoState ts;
  ts.rho = rho;
  ts.T = T;
  ts.cp = gas.cp();
  ts.cv = gas.cv();
  ts.p = rho * gas.R * T;
  ts.e = ts.cv * T;
  ts.h = ts.e + ts.p / rho;  // equals cp*T
  ts.s_hat = ts.cv * std::log(T / gas.t_ref) - gas.R * std::log(rho / gas.rho_ref());
  ts.mu_chem = ts.h - T * ts.s_hat;
  ts.alpha_p = 1.0 / T;
  ts.beta_T = 1.0 / ts.p;
  const double v = 1.0 / rho;
  ts.d = v * ts.alpha_p * T / ts.beta_T;           // = R*T for the ideal gas
  ts.gamma_bar = v * ts.alpha_p / (ts.beta_T * ts.cv);  // = gamma - 1
  return ts;
}

double rho_from_pT(const GasModel& gas, double p, double T) {
  if (!(p > 0.0)) {
    throw std::domain_error("rho_from_pT: p must be positive, got " + std::to_string(p));
  }
  if (!(T > 0.0)) {
    throw std::domain_error("rho_from_pT: T must be positive, got " + std::to_string(T));
  }
  return p / (gas.R * T);
}

double gibbs_residual(const GasModel& gas, double rho, double T, double drho, double dT) {
  const ThermoState mid = eval_thermo(gas, rho, T);
  const ThermoState lo = eval_thermo(gas, rho - drho, T - dT);
  const ThermoState hi = eval_thermo(gas, rho + drho, T + dT);
  const double ds = hi.s_hat - lo.s_hat;
  const double de = hi.e - lo.e;
  const double dv = 1.0 / hi.rho - 1.0 / lo.rho;
  return std::abs(mid.T * ds - de - mid.p * dv);
}

}  // namespace entrostab
