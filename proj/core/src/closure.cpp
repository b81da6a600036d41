#include "entrostab/closure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entrostab {

namespace {

double floored(double value, double floor, std::uint64_t* counter) {
  if (value < floor) {
    if (counter) ++*counter;
    return floor;
  }
  return value;
}

double sd_double_dot(const PrimGrads& grads) {
  const Mat3 sd = deviatoric_strain_rate(grads);
  return sd.cwiseProduct(sd).sum();
}

}  // namespace

void ClosureConstants::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) {
      throw std::invalid_argument(std::string("ClosureConstants: ") + name +
                                  " must be positive");
    }
  };
  positive(c_mu, "c_mu");
  positive(c_eps1, "c_eps1");
  positive(c_eps2, "c_eps2");
  positive(pr_k, "pr_k");
  positive(pr_eps, "pr_eps");
  positive(q0_floor, "q0_floor");
  positive(q1_floor, "q1_floor");
  positive(f_mu_floor, "f_mu_floor");
}

DampingInputs damping_inputs(const PrimitiveState& y, double wall_distance,
                             const GasModel& gas, const ClosureConstants& c,
                             ClosureEvents* ev) {
  DampingInputs d;
  d.y = wall_distance;
  const double q1 = floored(y.q1, c.q1_floor, ev ? &ev->q1_floor : nullptr);
  const double ratio = y.q0 / q1;
  d.re_t = 0.25 * ratio * ratio * ratio * ratio;
  d.re_y = y.rho * y.q0 * wall_distance / (std::sqrt(2.0) * gas.mu_visc);
  return d;
}

Damping damping_functions(const DampingInputs& d, const ClosureConstants& c,
                          ClosureEvents* ev) {
  const double re_t = floored(d.re_t, c.re_t_floor, ev ? &ev->re_t_floor : nullptr);
  Damping f;
  const double wall = 1.0 - std::exp(-0.0165 * d.re_y);
  f.f_mu = wall * wall * (1.0 + 20.5 / re_t);
  const double f_mu_safe = floored(f.f_mu, c.f_mu_floor, ev ? &ev->f_mu_floor : nullptr);
  const double r = 0.05 / f_mu_safe;
  f.f_1 = 1.0 + r * r * r;
  f.f_2 = 1.0 - std::exp(-re_t * re_t);
  return f;
}

double eddy_viscosity(const PrimitiveState& y, double f_mu, const ClosureConstants& c,
                      double nu, ClosureEvents* ev) {
  const double q1 = floored(y.q1, c.q1_floor, ev ? &ev->q1_floor : nullptr);
  const double ratio = y.q0 / q1;
  return 0.25 * c.c_mu * f_mu * y.rho * nu * ratio * ratio * ratio * ratio;
}

double eps_from_q1(double q1, double nu) { return q1 * q1 * q1 * q1 / nu; }

double q1_from_eps(double eps, double nu) { return std::pow(nu * eps, 0.25); }

double source_q0(const PrimitiveState& y, const PrimGrads& grads,
                 const ViscosityAggregates& visc, const GasModel& gas,
                 const ClosureConstants& c, ClosureEvents* ev) {
  const double q0 = floored(y.q0, c.q0_floor, ev ? &ev->q0_floor : nullptr);
  const double q1 = floored(y.q1, c.q1_floor, ev ? &ev->q1_floor : nullptr);
  const double mu_t = visc.mu_hat - gas.mu_visc;
  const double production = 2.0 * mu_t * sd_double_dot(grads) / q0;
  const double dilatation = y.rho * q0 * grads.div_u() / 3.0;
  const double eps = eps_from_q1(q1, gas.nu(y.rho));
  const double dissipation = y.rho * eps / q0;
  const double cross = visc.mu_k * grads.dq0.squaredNorm() / q0;
  return production - dilatation - dissipation + cross;
}

SourceTerms source_q1(const PrimitiveState& y, const PrimGrads& grads,
                      const ViscosityAggregates& visc, const ClosureConstants& c,
                      const Damping& damping, double nu, ClosureEvents* ev) {
  const double q0 = floored(y.q0, c.q0_floor, ev ? &ev->q0_floor : nullptr);
  const double q1 = floored(y.q1, c.q1_floor, ev ? &ev->q1_floor : nullptr);
  const double k = 0.5 * q0 * q0;

  SourceTerms s;
  const double mu_t = visc.mu_hat - y.rho * nu;  // nu is molecular
  s.p_k = 2.0 * mu_t * sd_double_dot(grads);

  s.p_q1 = 0.25 * c.c_eps1 * damping.f_1 * (q1 / k) *
           (s.p_k + 2.0 / 3.0 * y.rho * grads.div_u() * k);
  const double q1_5 = q1 * q1 * q1 * q1 * q1;
  if (c.d_q1_density_divides) {
    s.d_q1 = 0.25 * c.c_eps2 * damping.f_2 * q1_5 / (y.rho * nu * k);
  } else {
    s.d_q1 = 0.25 * c.c_eps2 * damping.f_2 * y.rho * q1_5 / (nu * k);
  }
  // Lam-Bremhorst has no extra dissipation-equation source; what remains of
  // the change of variables is the cross-diffusion term.
  s.r_q1 = 3.0 * visc.mu_eps * grads.dq1.squaredNorm() / q1;
  return s;
}

SourceTerms sources(const PrimitiveState& y, const PrimGrads& grads,
                    const ViscosityAggregates& visc, const GasModel& gas,
                    const ClosureConstants& c, const Damping& damping, ClosureEvents* ev) {
  SourceTerms s = source_q1(y, grads, visc, c, damping, gas.nu(y.rho), ev);
  s.s_q0 = source_q0(y, grads, visc, gas, c, ev);
  return s;
}

SourceTerms entropy_clip(SourceTerms s, const PrimitiveState& y, const PrimGrads& grads,
                         const ViscosityAggregates& visc, const ClosureConstants& c,
                         ClosureEvents* ev) {
  const double q1 = floored(y.q1, c.q1_floor, nullptr);
  const double bound = s.p_q1 + s.r_q1 - visc.mu_eps * grads.dq1.squaredNorm() / q1 +
                       y.rho * q1 * grads.div_u() / 3.0;
  if (s.d_q1 < bound) {
    s.d_q1 = bound;
    if (ev) ++ev->clip;
  }
  return s;
}

SourceTerms entropy_guard(SourceTerms s, const PrimitiveState& y, const PrimGrads& grads,
                          const ViscosityAggregates& visc, const GasModel& gas,
                          const ClosureConstants& c, ClosureEvents* ev) {
  const double q1 = floored(y.q1, c.q1_floor, nullptr);
  const double rho_eps = y.rho * eps_from_q1(q1, gas.nu(y.rho));
  const double bound = s.p_q1 + s.r_q1 - visc.mu_eps * grads.dq1.squaredNorm() / q1 +
                       y.rho * q1 * grads.div_u() / 3.0 - rho_eps / q1;
  if (s.d_q1 < bound) {
    s.d_q1 = bound;
    if (ev) ++ev->clip;
  }
  return s;
}

Vec7 source_vector(const PrimitiveState& y, const PrimGrads& grads, const Vec3& drho,
                   const SourceTerms& s) {
  const double q_sq = y.q0 * y.q0 + y.q1 * y.q1;
  Vec3 grad_phi;  // gradient of (1/3) rho (q0^2 + q1^2)
  for (int j = 0; j < 3; ++j) {
    grad_phi[j] = (drho[j] * q_sq +
                   2.0 * y.rho * (y.q0 * grads.dq0[j] + y.q1 * grads.dq1[j])) /
                  3.0;
  }
  const double phi = y.rho * q_sq / 3.0;

  Vec7 src = Vec7::Zero();
  src.segment<3>(1) = -grad_phi;
  src[4] = -(grad_phi.dot(y.u) + phi * grads.div_u());
  src[5] = s.s_q0;
  src[6] = s.s_q1();
  return src;
}

}  // namespace entrostab
