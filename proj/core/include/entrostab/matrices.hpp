#pragma once

#include "entrostab/closure.hpp"
#include "entrostab/fluxes.hpp"
#include "entrostab/gas.hpp"
#include "entrostab/types.hpp"
#include "entrostab/variables.hpp"

#include <functional>

namespace entrostab {

/// Coefficient matrices of the symmetric quasi-linear form
/// A0 V,t + Ai V,i = (Kij V,j),i + S. A0 is symmetric positive-definite,
/// the Ai are symmetric, and the stacked [Kij] block matrix is symmetric
/// positive-semidefinite when mu_eps == mu_q1.
struct CoeffMatrices {
  Mat7 a0;
  std::array<Mat7, 3> a;
  std::array<std::array<Mat7, 3>, 3> k;
};

/// Jacobian of the conservation variables with respect to the entropy
/// variables, in closed form for the ideal gas.
Mat7 a0_matrix(const PrimitiveState& y, const GasModel& gas);

/// Jacobian of the advective flux in direction i (0..2) with respect to the
/// entropy variables.
Mat7 ai_matrix(const PrimitiveState& y, const GasModel& gas, int i);

/// Diffusivity matrix coupling flux direction i to gradient direction j,
/// defined so that K_ij (dV/dx_j) reproduces the diffusive flux.
Mat7 kij_matrix(const PrimitiveState& y, const ViscosityAggregates& visc, int i, int j);

/// The 21x21 stacked block matrix [K_ij].
Mat21 k_block_matrix(const PrimitiveState& y, const ViscosityAggregates& visc);

CoeffMatrices coeff_matrices(const PrimitiveState& y, const GasModel& gas,
                             const ViscosityAggregates& visc);

/// A manufactured line field: state and its exact x1-derivatives as a
/// function of the coordinate.
struct LinePoint {
  PrimitiveState y;
  PrimGrads grads;
  Vec3 drho = Vec3::Zero();
};
using LineField = std::function<LinePoint(double)>;

/// Pointwise residuals of the steady conservative form and of the symmetric
/// quasi-linear form, evaluated with centered differences of spacing h on a
/// field varying along x1 only. The two agree to the discretization order.
struct QuasilinearResidual {
  Vec7 conservative;
  Vec7 quasilinear;
};

QuasilinearResidual quasilinear_residual(
    const LineField& field, double x, double h, const GasModel& gas,
    const std::function<ViscosityAggregates(const PrimitiveState&)>& visc_at,
    const std::function<SourceTerms(const LinePoint&, const ViscosityAggregates&)>& sources_at);

}  // namespace entrostab
