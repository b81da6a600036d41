#pragma once

#include "entrostab/gas.hpp"
#include "entrostab/types.hpp"

namespace entrostab {

ConsVars prim_to_cons(const PrimitiveState& y, const GasModel& gas);

/// Inverse of prim_to_cons. Throws NonPhysicalStateError when the leading
/// component is non-positive, a turbulence component is negative, or the
/// recovered internal energy is non-positive.
PrimitiveState cons_to_prim(const ConsVars& u, const GasModel& gas);

EntropyVars prim_to_entropy(const PrimitiveState& y, const GasModel& gas);

/// Closed-form inversion for the ideal gas: temperature and velocity scales
/// come out of ratios against v[4], density from exponentiating the entropy.
/// Throws std::domain_error for v[4] >= 0 or when the recovered state
/// overflows the admissible range.
PrimitiveState entropy_to_prim(const EntropyVars& v, const GasModel& gas);

/// Gradients of (u, q0, q1, T) recovered from entropy-variable gradients.
/// grad_v(a, j) = dV_a/dx_j. The first row of grad_v does not enter.
PrimGrads primitive_gradients_from_V(const PrimitiveState& y, const Mat73& grad_v);

/// Full forward map of gradients, including the first row (which requires
/// the density gradient through the pressure term of the chemical potential).
Mat73 entropy_gradients_from_primitive(const PrimitiveState& y, const GasModel& gas,
                                       const PrimGrads& grads, const Vec3& drho);

}  // namespace entrostab
