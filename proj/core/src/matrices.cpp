#include "entrostab/matrices.hpp"

#include <stdexcept>

namespace entrostab {

namespace {

// Extended "velocity" vector [u1, u2, u3, q0, q1] together with its
// conservation-variable slots {1, 2, 3, 5, 6}.
constexpr int kWSlots[5] = {1, 2, 3, 5, 6};

void check_direction(int i) {
  if (i < 0 || i > 2) {
    throw std::out_of_range("matrix direction index must be 0..2");
  }
}

}  // namespace

Mat7 a0_matrix(const PrimitiveState& y, const GasModel& gas) {
  const double T = y.T;
  const double RT = gas.R * T;
  const double k_tot = y.k_tot();
  const double e_tot = gas.cv() * T + k_tot;
  const double w[5] = {y.u[0], y.u[1], y.u[2], y.q0, y.q1};

  Mat7 a0 = Mat7::Zero();
  a0(0, 0) = 1.0;
  a0(0, 4) = a0(4, 0) = e_tot;
  for (int a = 0; a < 5; ++a) {
    const int sa = kWSlots[a];
    a0(0, sa) = a0(sa, 0) = w[a];
    a0(sa, 4) = a0(4, sa) = w[a] * (e_tot + RT);
    for (int b = a; b < 5; ++b) {
      const int sb = kWSlots[b];
      a0(sa, sb) = a0(sb, sa) = w[a] * w[b] + (a == b ? RT : 0.0);
    }
  }
  a0(4, 4) = e_tot * e_tot + gas.R * gas.cv() * T * T + 2.0 * RT * k_tot;
  a0 *= y.rho / gas.R;
  return a0;
}

Mat7 ai_matrix(const PrimitiveState& y, const GasModel& gas, int i) {
  check_direction(i);
  const double T = y.T;
  const double h_tot = gas.cp() * T + y.k_tot();  // total enthalpy

  Vec7 m;
  m << 1.0, y.u[0], y.u[1], y.u[2], h_tot, y.q0, y.q1;
  Vec7 d = Vec7::Zero();
  d[1 + i] = 1.0;
  d[4] = y.u[i];

  Mat7 ai = y.u[i] * a0_matrix(y, gas);
  ai.noalias() += y.rho * T * (m * d.transpose() + d * m.transpose());
  return ai;
}

Mat7 kij_matrix(const PrimitiveState& y, const ViscosityAggregates& visc, int i, int j) {
  check_direction(i);
  check_direction(j);
  const double T = y.T;
  Mat7 k = Mat7::Zero();

  if (i == j) {
    for (int a = 0; a < 3; ++a) {
      const double c = (a == i) ? visc.chi : visc.mu_hat;
      k(1 + a, 1 + a) = c;
      k(1 + a, 4) = k(4, 1 + a) = c * y.u[a];
      k(4, 4) += c * y.u[a] * y.u[a];
    }
    k(4, 4) += visc.kappa_hat * T + visc.mu_k * y.q0 * y.q0 + visc.mu_q1 * y.q1 * y.q1;
    k(4, 5) = visc.mu_k * y.q0;
    k(4, 6) = visc.mu_q1 * y.q1;
    k(5, 4) = visc.mu_k * y.q0;
    k(6, 4) = visc.mu_eps * y.q1;
    k(5, 5) = visc.mu_k;
    k(6, 6) = visc.mu_eps;
  } else {
    // Flux direction i driven by gradients in direction j: the stress rows
    // couple through lambda_hat (trace part) and mu_hat (shear part).
    k(1 + i, 1 + j) = visc.lambda_hat;
    k(1 + i, 4) = visc.lambda_hat * y.u[j];
    k(1 + j, 1 + i) = visc.mu_hat;
    k(1 + j, 4) = visc.mu_hat * y.u[i];
    k(4, 1 + j) = visc.lambda_hat * y.u[i];
    k(4, 1 + i) = visc.mu_hat * y.u[j];
    k(4, 4) = (visc.lambda_hat + visc.mu_hat) * (y.u[i] * y.u[j]);
  }
  return T * k;
}

Mat21 k_block_matrix(const PrimitiveState& y, const ViscosityAggregates& visc) {
  Mat21 big;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      big.block<7, 7>(7 * i, 7 * j) = kij_matrix(y, visc, i, j);
    }
  }
  return big;
}

CoeffMatrices coeff_matrices(const PrimitiveState& y, const GasModel& gas,
                             const ViscosityAggregates& visc) {
  CoeffMatrices m;
  m.a0 = a0_matrix(y, gas);
  for (int i = 0; i < 3; ++i) {
    m.a[i] = ai_matrix(y, gas, i);
    for (int j = 0; j < 3; ++j) {
      m.k[i][j] = kij_matrix(y, visc, i, j);
    }
  }
  return m;
}

QuasilinearResidual quasilinear_residual(
    const LineField& field, double x, double h, const GasModel& gas,
    const std::function<ViscosityAggregates(const PrimitiveState&)>& visc_at,
    const std::function<SourceTerms(const LinePoint&, const ViscosityAggregates&)>& sources_at) {
  const LinePoint c = field(x);
  const LinePoint lo = field(x - h);
  const LinePoint hi = field(x + h);

  const ViscosityAggregates visc_c = visc_at(c.y);
  const ViscosityAggregates visc_lo = visc_at(lo.y);
  const ViscosityAggregates visc_hi = visc_at(hi.y);

  const Vec7 source = source_vector(c.y, c.grads, c.drho, sources_at(c, visc_c));

  QuasilinearResidual r;

  const Vec7 adv_lo = advective_flux(lo.y, gas, 0);
  const Vec7 adv_hi = advective_flux(hi.y, gas, 0);
  const Vec7 diff_lo = diffusive_flux(lo.y, lo.grads, visc_lo).col(0);
  const Vec7 diff_hi = diffusive_flux(hi.y, hi.grads, visc_hi).col(0);
  r.conservative = (adv_hi - adv_lo - diff_hi + diff_lo) / (2.0 * h) - source;

  const Vec7 gv_c = entropy_gradients_from_primitive(c.y, gas, c.grads, c.drho).col(0);
  const Vec7 gv_lo = entropy_gradients_from_primitive(lo.y, gas, lo.grads, lo.drho).col(0);
  const Vec7 gv_hi = entropy_gradients_from_primitive(hi.y, gas, hi.grads, hi.drho).col(0);
  const Vec7 kflux_lo = kij_matrix(lo.y, visc_lo, 0, 0) * gv_lo;
  const Vec7 kflux_hi = kij_matrix(hi.y, visc_hi, 0, 0) * gv_hi;
  r.quasilinear = ai_matrix(c.y, gas, 0) * gv_c - (kflux_hi - kflux_lo) / (2.0 * h) - source;

  return r;
}

}  // namespace entrostab
