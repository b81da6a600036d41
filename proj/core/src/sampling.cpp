#include "entrostab/sampling.hpp"

namespace entrostab {

double StateSampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

PrimitiveState StateSampler::state() {
  PrimitiveState y;
  y.rho = uniform(0.1, 10.0);
  for (int i = 0; i < 3; ++i) y.u[i] = uniform(-300.0, 300.0);
  y.T = uniform(100.0, 1000.0);
  y.q0 = uniform(0.0, 30.0);
  y.q1 = uniform(0.0, 30.0);
  return y;
}

PrimitiveState StateSampler::state_nonzero() {
  PrimitiveState y;
  y.rho = uniform(0.1, 10.0);
  for (int i = 0; i < 3; ++i) {
    const double sign = uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    y.u[i] = sign * uniform(2.0, 300.0);
  }
  y.T = uniform(100.0, 1000.0);
  y.q0 = uniform(0.5, 30.0);
  y.q1 = uniform(0.5, 30.0);
  return y;
}

PrimGrads StateSampler::gradients(double du_scale, double dT_scale, double dq_scale) {
  PrimGrads g;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g.du(i, j) = uniform(-du_scale, du_scale);
    g.dT[i] = uniform(-dT_scale, dT_scale);
    g.dq0[i] = uniform(-dq_scale, dq_scale);
    g.dq1[i] = uniform(-dq_scale, dq_scale);
  }
  return g;
}

Vec3 StateSampler::density_gradient(double scale) {
  return Vec3(uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale));
}

double StateSampler::mu_t(const PrimitiveState& y, const GasModel& gas,
                          const ClosureConstants& c) {
  return eddy_viscosity(y, 1.0, c, gas.nu(y.rho));
}

}  // namespace entrostab
