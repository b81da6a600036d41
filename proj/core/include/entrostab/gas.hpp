#pragma once

#include "entrostab/types.hpp"

namespace entrostab {

/// Calorically perfect ideal gas plus molecular transport properties and the
/// turbulent Prandtl numbers that feed the diffusivity aggregates. The
/// divariant-gas interface is the set of derived quantities in ThermoState;
/// a richer gas would replace eval_thermo() while keeping that surface.
struct GasModel {
  double R = 287.0;           // specific gas constant [J/(kg K)]
  double gamma = 1.4;         // heat-capacity ratio [-]
  double mu_visc = 1.846e-5;  // dynamic viscosity [Pa s]
  // Second viscosity coefficient; default satisfies the Stokes hypothesis
  // lambda = -(2/3) mu so the bulk viscosity vanishes.
  double lambda_visc = -2.0 / 3.0 * 1.846e-5;  // [Pa s]
  double kappa = 2.62e-2;  // thermal conductivity [W/(m K)]
  double pr_t = 0.9;       // turbulent Prandtl number for heat [-]
  double pr_k = 1.0;       // turbulent Prandtl number for q0/k diffusion [-]
  double pr_eps = 1.3;     // turbulent Prandtl number for the dissipation equation [-]
  double pr_q1 = 1.3;      // turbulent Prandtl number for q1 diffusion [-]
  double t_ref = 300.0;    // entropy datum temperature [K]
  double p_ref = 101325.0; // entropy datum pressure [Pa]

  double cp() const { return gamma * R / (gamma - 1.0); }
  double cv() const { return R / (gamma - 1.0); }
  double rho_ref() const { return p_ref / (R * t_ref); }
  /// Bulk viscosity lambda + (2/3) mu; zero under the Stokes hypothesis.
  double mu_bulk() const { return lambda_visc + 2.0 / 3.0 * mu_visc; }
  double nu(double rho) const { return mu_visc / rho; }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Full thermodynamic state at (rho, T). All quantities follow from the
/// chemical potential mu(p, T) and its derivatives; for the ideal gas the
/// closed forms below are exact.
struct ThermoState {
  double rho = 0;        // [kg/m^3]
  double p = 0;          // [Pa]
  double T = 0;          // [K]
  double e = 0;          // internal energy per mass [J/kg]
  double h = 0;          // enthalpy per mass [J/kg]
  double s_hat = 0;      // entropy per mass relative to the datum [J/(kg K)]
  double mu_chem = 0;    // chemical potential per mass, h - T*s_hat [J/kg]
  double cp = 0;         // [J/(kg K)]
  double cv = 0;         // [J/(kg K)]
  double alpha_p = 0;    // isobaric expansivity [1/K]
  double beta_T = 0;     // isothermal compressibility [1/Pa]
  double d = 0;          // v*alpha_p*T/beta_T [J/kg]
  double gamma_bar = 0;  // v*alpha_p/(beta_T*cv) [-]
};

/// Evaluate the gas at (rho, T). Throws std::domain_error naming the field
/// for non-positive rho or T.
ThermoState eval_thermo(const GasModel& gas, double rho, double T);

double rho_from_pT(const GasModel& gas, double p, double T);

/// Residual |T*ds - de - p*d(1/rho)| of the Gibbs relation across a centered
/// perturbation (rho +/- drho, T +/- dT). Second order in the perturbation.
double gibbs_residual(const GasModel& gas, double rho, double T, double drho, double dT);

}  // namespace entrostab
