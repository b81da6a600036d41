#pragma once

#include "entrostab/closure.hpp"
#include "entrostab/gas.hpp"
#include "entrostab/types.hpp"

#include <cstdint>
#include <random>

namespace entrostab {

/// Random admissible states covering the flat-plate regime with margin:
/// rho in [0.1, 10], |u_i| up to 300, T in [100, 1000], q0 and q1 up to 30.
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

  PrimitiveState state();

  /// State whose components are bounded away from zero, for componentwise
  /// finite-difference comparisons.
  PrimitiveState state_nonzero();

  /// Gradients with entries of magnitude up to the given scales.
  PrimGrads gradients(double du_scale = 100.0, double dT_scale = 50.0,
                      double dq_scale = 10.0);

  Vec3 density_gradient(double scale = 1.0);

  /// Eddy viscosity for the sampled state through the closure with the
  /// damping at its fully turbulent limit.
  double mu_t(const PrimitiveState& y, const GasModel& gas, const ClosureConstants& c);

  double uniform(double lo, double hi);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace entrostab
