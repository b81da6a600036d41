#pragma once

#include "entrostab/gas.hpp"
#include "entrostab/types.hpp"

namespace entrostab {

/// Which tie between the turbulent diffusivities makes the diffusivity
/// block matrix symmetric. TieQ1ToEps sets mu_q1 = mu_eps (the default);
/// TieAllToK sets mu_q1 = mu_eps = mu_k.
enum class SymmetryAssumption { TieQ1ToEps, TieAllToK };

/// Combined molecular + turbulent transport coefficients evaluated at a
/// point. Construct through make() so the symmetry tie mu_eps == mu_q1 holds;
/// unconstrained() exists only so diagnostics can demonstrate the loss of
/// symmetry when the tie is dropped.
struct ViscosityAggregates {
  double mu_hat = 0;      // mu + mu_T [Pa s]
  double lambda_hat = 0;  // lambda - (2/3) mu_T [Pa s]
  double chi = 0;         // lambda_hat + 2*mu_hat [Pa s]
  double kappa_hat = 0;   // kappa + kappa_T [W/(m K)]
  double mu_k = 0;        // mu + mu_T/Pr_k [Pa s]
  double mu_q1 = 0;       // mu + mu_T/Pr_q1 [Pa s]
  double mu_eps = 0;      // mu + mu_T/Pr_eps [Pa s]

  /// Bulk viscosity entering the stress trace; reduces to the molecular
  /// lambda + (2/3) mu.
  double mu_bulk() const { return lambda_hat + 2.0 / 3.0 * mu_hat; }

  static ViscosityAggregates make(const GasModel& gas, double mu_T,
                                  SymmetryAssumption tie = SymmetryAssumption::TieQ1ToEps,
                                  bool kappa_t_uses_cv = false);
  static ViscosityAggregates unconstrained(const GasModel& gas, double mu_T,
                                           bool kappa_t_uses_cv = false);
};

Mat3 strain_rate(const PrimGrads& grads);
Mat3 deviatoric_strain_rate(const PrimGrads& grads);

/// Viscous stress tensor 2*mu_hat*S^d + mu_bulk*tr(S)*I.
Mat3 stress_tensor(const PrimGrads& grads, const ViscosityAggregates& visc);

/// Advective flux in direction i (0..2): u_i*U + p*[0, e_i, u_i, 0, 0].
Vec7 advective_flux(const PrimitiveState& y, const GasModel& gas, int i);

/// Diffusive flux; column i is the flux vector in direction i. Rows are
/// mass (zero), momentum (stress), energy (stress work + heat + turbulent
/// transport), q0 and q1 diffusion.
Mat73 diffusive_flux(const PrimitiveState& y, const PrimGrads& grads,
                     const ViscosityAggregates& visc);

}  // namespace entrostab
