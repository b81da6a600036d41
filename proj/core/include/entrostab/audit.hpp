#pragma once

#include "entrostab/closure.hpp"
#include "entrostab/fluxes.hpp"
#include "entrostab/gas.hpp"
#include "entrostab/types.hpp"

#include <utility>

namespace entrostab {

/// Pointwise entropy-production budget. Every field carries [W/(m^3 K)].
/// The mean-flow dissipation uses the molecular coefficients; the eddy
/// transfer from the mean flow to turbulence cancels against the q0
/// production and must not be double counted here.
struct EntropyBudget {
  double upsilon_over_T = 0;    // molecular mean-flow dissipation / T
  double thermal = 0;           // (kappa + kappa_T) |grad T|^2 / T^2
  double rho_eps_over_T = 0;    // rho eps / T
  double q1_diffusion = 0;      // mu_eps |grad q1|^2 / T
  double dilatation = 0;        // -(1/3) rho q1^2 div(u) / T
  double source_sink = 0;       // -(q1/T) S_q1
  double total = 0;             // sum of the above
};

/// Dissipation functional 2*mu*S^d:S^d + mu_bulk*tr(S)^2 with explicit
/// coefficients. Non-negative whenever mu, mu_bulk >= 0.
double dissipation_function(const PrimGrads& grads, double mu, double mu_bulk);

/// Mean-flow dissipation with the combined molecular + turbulent shear
/// viscosity (the contraction of the stress with the velocity gradient).
double dissipation_function(const PrimGrads& grads, const ViscosityAggregates& visc);

/// Generalized entropy density H = -rho * s_hat.
double entropy_density(const PrimitiveState& y, const GasModel& gas);

EntropyBudget clausius_duhem_budget(const PrimitiveState& y, const PrimGrads& grads,
                                    const SourceTerms& s, const ViscosityAggregates& visc,
                                    const GasModel& gas);

/// The two plotted production profiles: the turbulence contribution
/// rho*eps + q1*(D - P - (2/3) R) and the total including the molecular
/// mean-flow dissipation. Both in [W/m^3].
struct PlottedProduction {
  double turbulent = 0;
  double total = 0;
};

PlottedProduction plotted_production(const PrimitiveState& y, const PrimGrads& grads,
                                     const SourceTerms& s, const ViscosityAggregates& visc,
                                     const GasModel& gas);

}  // namespace entrostab
