#include "entrostab/variables.hpp"

#include <cmath>
#include <string>

namespace entrostab {

ConsVars prim_to_cons(const PrimitiveState& y, const GasModel& gas) {
  const double e_tot = gas.cv() * y.T + y.k_tot();
  ConsVars u;
  u.v << y.rho, y.rho * y.u[0], y.rho * y.u[1], y.rho * y.u[2], y.rho * e_tot, y.rho * y.q0,
      y.rho * y.q1;
  return u;
}

PrimitiveState cons_to_prim(const ConsVars& u, const GasModel& gas) {
  const double rho = u.v[0];
  if (!(rho > 0.0)) {
    throw NonPhysicalStateError("cons_to_prim: non-positive density " + std::to_string(rho),
                                u.v);
  }
  if (u.v[5] < 0.0 || u.v[6] < 0.0) {
    throw NonPhysicalStateError("cons_to_prim: negative turbulence component", u.v);
  }
  PrimitiveState y;
  y.rho = rho;
  y.u = u.v.segment<3>(1) / rho;
  y.q0 = u.v[5] / rho;
  y.q1 = u.v[6] / rho;
  const double e = u.v[4] / rho - y.k_tot();
  if (!(e > 0.0)) {
    throw NonPhysicalStateError(
        "cons_to_prim: recovered internal energy " + std::to_string(e) + " is non-positive",
        u.v);
  }
  y.T = e / gas.cv();
  return y;
}

EntropyVars prim_to_entropy(const PrimitiveState& y, const GasModel& gas) {
  const ThermoState ts = eval_thermo(gas, y.rho, y.T);
  EntropyVars v;
  const double inv_T = 1.0 / y.T;
  v.v << (ts.mu_chem - y.k_tot()) * inv_T, y.u[0] * inv_T, y.u[1] * inv_T, y.u[2] * inv_T,
      -inv_T, y.q0 * inv_T, y.q1 * inv_T;
  return v;
}

PrimitiveState entropy_to_prim(const EntropyVars& v, const GasModel& gas) {
  if (!(v.v[4] < 0.0)) {
    throw std::domain_error("entropy_to_prim: v[4] must be negative, got " +
                            std::to_string(v.v[4]));
  }
  PrimitiveState y;
  y.T = -1.0 / v.v[4];
  y.u = -v.v.segment<3>(1) / v.v[4];
  y.q0 = -v.v[5] / v.v[4];
  y.q1 = -v.v[6] / v.v[4];

  // mu_hat = T*v1 + k_tot, and s_hat = cp - mu_hat/T; exponentiate the
  // entropy closed form for the density.
  const double mu_hat = y.T * v.v[0] + y.k_tot();
  const double s_hat = gas.cp() - mu_hat / y.T;
  const double log_rho_ratio = (gas.cv() * std::log(y.T / gas.t_ref) - s_hat) / gas.R;
  y.rho = gas.rho_ref() * std::exp(log_rho_ratio);
  if (!std::isfinite(y.rho) || !std::isfinite(y.T) || !(y.rho > 0.0)) {
    throw std::domain_error("entropy_to_prim: recovered state overflows (T = " +
                            std::to_string(y.T) + ")");
  }
  return y;
}

PrimGrads primitive_gradients_from_V(const PrimitiveState& y, const Mat73& grad_v) {
  const double T = y.T;
  PrimGrads g;
  for (int j = 0; j < 3; ++j) {
    const double v5j = grad_v(4, j);
    for (int i = 0; i < 3; ++i) {
      g.du(i, j) = T * grad_v(i + 1, j) + T * y.u[i] * v5j;
    }
    g.dq0[j] = T * grad_v(5, j) + T * y.q0 * v5j;
    g.dq1[j] = T * grad_v(6, j) + T * y.q1 * v5j;
    g.dT[j] = T * T * v5j;
  }
  return g;
}

Mat73 entropy_gradients_from_primitive(const PrimitiveState& y, const GasModel& gas,
                                       const PrimGrads& grads, const Vec3& drho) {
  const ThermoState ts = eval_thermo(gas, y.rho, y.T);
  const double T = y.T;
  Mat73 gv = Mat73::Zero();
  for (int j = 0; j < 3; ++j) {
    const double dT = grads.dT[j];
    gv(4, j) = dT / (T * T);
    for (int i = 0; i < 3; ++i) {
      gv(i + 1, j) = grads.du(i, j) / T - y.u[i] * dT / (T * T);
    }
    gv(5, j) = grads.dq0[j] / T - y.q0 * dT / (T * T);
    gv(6, j) = grads.dq1[j] / T - y.q1 * dT / (T * T);

    // d(mu_hat) = (R - s_hat) dT + (R T / rho) drho for the ideal gas
    const double dmu = (gas.R - ts.s_hat) * dT + gas.R * T / y.rho * drho[j];
    const double dk = y.u.dot(grads.du.col(j)) + y.q0 * grads.dq0[j] + y.q1 * grads.dq1[j];
    gv(0, j) = (dmu - dk) / T - (ts.mu_chem - y.k_tot()) * dT / (T * T);
  }
  return gv;
}

}  // namespace entrostab
