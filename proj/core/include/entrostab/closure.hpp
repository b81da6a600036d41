#pragma once

#include "entrostab/fluxes.hpp"
#include "entrostab/gas.hpp"
#include "entrostab/types.hpp"

#include <cstdint>

namespace entrostab {

/// Lam-Bremhorst model constants plus the floors that keep the singular
/// source terms evaluable. Floors are absolute velocity scales; configs set
/// them as a fraction of the reference velocity.
struct ClosureConstants {
  double c_mu = 0.09;
  double c_eps1 = 1.44;
  double c_eps2 = 1.92;
  double pr_k = 1.0;
  double pr_eps = 1.3;

  double q0_floor = 1e-8;   // [m/s]
  double q1_floor = 1e-8;   // [m/s]
  double f_mu_floor = 1e-6;
  double re_t_floor = 1e-12;

  // Reproduce the dissipation term with density dividing instead of
  // multiplying (a printed variant); off by default.
  bool d_q1_density_divides = false;

  double pr_q1() const { return pr_eps; }

  void validate() const;
};

/// Counters for floor and clip activations; callers own one per thread.
struct ClosureEvents {
  std::uint64_t q0_floor = 0;
  std::uint64_t q1_floor = 0;
  std::uint64_t f_mu_floor = 0;
  std::uint64_t re_t_floor = 0;
  std::uint64_t clip = 0;

  ClosureEvents& operator+=(const ClosureEvents& o) {
    q0_floor += o.q0_floor;
    q1_floor += o.q1_floor;
    f_mu_floor += o.f_mu_floor;
    re_t_floor += o.re_t_floor;
    clip += o.clip;
    return *this;
  }
};

/// Turbulent Reynolds numbers feeding the wall-damping functions.
struct DampingInputs {
  double re_t = 0;  // (1/4) (q0/q1)^4 [-]
  double re_y = 0;  // rho q0 y / (sqrt(2) mu) [-]
  double y = 0;     // wall distance [m]
};

DampingInputs damping_inputs(const PrimitiveState& y, double wall_distance,
                             const GasModel& gas, const ClosureConstants& c,
                             ClosureEvents* ev = nullptr);

struct Damping {
  double f_mu = 1.0;
  double f_1 = 1.0;
  double f_2 = 1.0;
};

Damping damping_functions(const DampingInputs& d, const ClosureConstants& c,
                          ClosureEvents* ev = nullptr);

/// Eddy viscosity (c_mu/4) f_mu rho nu (q0/q1)^4; identical to
/// c_mu f_mu rho k^2/eps with k = q0^2/2, eps = q1^4/nu.
double eddy_viscosity(const PrimitiveState& y, double f_mu, const ClosureConstants& c,
                      double nu, ClosureEvents* ev = nullptr);

double eps_from_q1(double q1, double nu);
double q1_from_eps(double eps, double nu);

/// Production/dissipation split of the q1 source, plus the q0 source and the
/// k production that feeds both equations.
struct SourceTerms {
  double s_q0 = 0;  // [kg/(m^2 s^2)]
  double p_q1 = 0;  // production part of the q1 source
  double d_q1 = 0;  // dissipation part (enters with a minus sign)
  double r_q1 = 0;  // cross-diffusion remainder
  double p_k = 0;   // 2 mu_T S^d:S^d [W/m^3]

  double s_q1() const { return p_q1 - d_q1 + r_q1; }
};

double source_q0(const PrimitiveState& y, const PrimGrads& grads,
                 const ViscosityAggregates& visc, const GasModel& gas,
                 const ClosureConstants& c, ClosureEvents* ev = nullptr);

SourceTerms source_q1(const PrimitiveState& y, const PrimGrads& grads,
                      const ViscosityAggregates& visc, const ClosureConstants& c,
                      const Damping& damping, double nu, ClosureEvents* ev = nullptr);

/// Both turbulence sources in one call.
SourceTerms sources(const PrimitiveState& y, const PrimGrads& grads,
                    const ViscosityAggregates& visc, const GasModel& gas,
                    const ClosureConstants& c, const Damping& damping,
                    ClosureEvents* ev = nullptr);

/// Raise d_q1 until -S_q1 + mu_eps |grad q1|^2/q1 - (1/3) rho q1 div(u) >= 0,
/// with equality when the bound binds. Counts a clip event when it does.
SourceTerms entropy_clip(SourceTerms s, const PrimitiveState& y, const PrimGrads& grads,
                         const ViscosityAggregates& visc, const ClosureConstants& c,
                         ClosureEvents* ev = nullptr);

/// Weak form of the same guard: credits the turbulence dissipation, raising
/// d_q1 only until rho*eps/q1 - S_q1 + mu_eps |grad q1|^2/q1
/// - (1/3) rho q1 div(u) >= 0. This is the sharp condition for pointwise
/// non-negative entropy production; unlike the strict clip it leaves the
/// near-wall production boost of the dissipation equation intact.
SourceTerms entropy_guard(SourceTerms s, const PrimitiveState& y, const PrimGrads& grads,
                          const ViscosityAggregates& visc, const GasModel& gas,
                          const ClosureConstants& c, ClosureEvents* ev = nullptr);

/// Full source vector of the seven-equation system with body forces and heat
/// sources zero: momentum and energy rows carry the gradients of the
/// turbulence normal stress (1/3) rho (q0^2 + q1^2), rows 6 and 7 the
/// turbulence sources.
Vec7 source_vector(const PrimitiveState& y, const PrimGrads& grads, const Vec3& drho,
                   const SourceTerms& s);

}  // namespace entrostab
