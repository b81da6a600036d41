#include "entrostab/audit.hpp"

#include "entrostab/matrices.hpp"
#include "entrostab/sampling.hpp"
#include "entrostab/variables.hpp"

#include <doctest.h>

#include <cmath>

using namespace entrostab;

namespace {

const GasModel gas;
const ClosureConstants consts;

}  // namespace

TEST_CASE("dissipation function basics") {
  const ViscosityAggregates visc = ViscosityAggregates::make(gas, 3e-3);

  CHECK(dissipation_function(PrimGrads{}, visc) == 0.0);

  // rigid rotation: antisymmetric gradient, zero strain
  PrimGrads rot;
  rot.du(0, 1) = 2.0;
  rot.du(1, 0) = -2.0;
  CHECK(dissipation_function(rot, visc) == doctest::Approx(0.0).epsilon(1e-15));

  // pure shear gives mu_hat * gamma_dot^2
  PrimGrads shear;
  shear.du(0, 1) = 7.0;
  CHECK(dissipation_function(shear, visc) ==
        doctest::Approx(visc.mu_hat * 49.0).epsilon(1e-13));
}

TEST_CASE("dissipation function is non-negative on random gradients") {
  StateSampler sampler(6);
  const ViscosityAggregates visc = ViscosityAggregates::make(gas, 1e-3);
  for (int i = 0; i < 1000; ++i) {
    CHECK(dissipation_function(sampler.gradients(), visc) >= 0.0);
    CHECK(dissipation_function(sampler.gradients(), gas.mu_visc, gas.mu_bulk()) >= 0.0);
  }
}

TEST_CASE("entropy density datum and convexity") {
  PrimitiveState ref;
  ref.rho = gas.rho_ref();
  ref.T = gas.t_ref;
  CHECK(entropy_density(ref, gas) == doctest::Approx(0.0).epsilon(1e-12));

  StateSampler sampler(909);
  int tested = 0;
  while (tested < 200) {
    const PrimitiveState a = sampler.state();
    const PrimitiveState b = sampler.state();
    const Vec7 mid_u = 0.5 * (prim_to_cons(a, gas).v + prim_to_cons(b, gas).v);
    ConsVars mid;
    mid.v = mid_u;
    PrimitiveState ym;
    try {
      ym = cons_to_prim(mid, gas);
    } catch (const NonPhysicalStateError&) {
      continue;
    }
    ++tested;
    const double h_mid = entropy_density(ym, gas);
    const double h_avg = 0.5 * (entropy_density(a, gas) + entropy_density(b, gas));
    CHECK(h_mid <= h_avg + 1e-9 * std::abs(h_avg));
  }
}

TEST_CASE("laminar budget reduces to molecular dissipation plus conduction") {
  PrimitiveState y;
  y.rho = 1.1;
  y.T = 320.0;
  y.q0 = 0.0;
  y.q1 = 0.0;
  StateSampler sampler(4);
  const PrimGrads g = sampler.gradients();
  const ViscosityAggregates visc = ViscosityAggregates::make(gas, 0.0);
  SourceTerms s;  // no turbulence sources in the laminar limit
  const EntropyBudget b = clausius_duhem_budget(y, g, s, visc, gas);

  const double upsilon = dissipation_function(g, gas.mu_visc, gas.mu_bulk());
  CHECK(b.upsilon_over_T == doctest::Approx(upsilon / y.T).epsilon(1e-13));
  CHECK(b.thermal ==
        doctest::Approx(gas.kappa * g.dT.squaredNorm() / (y.T * y.T)).epsilon(1e-13));
  CHECK(b.rho_eps_over_T == 0.0);
  CHECK(b.q1_diffusion == 0.0);
  CHECK(b.dilatation == 0.0);
  CHECK(b.source_sink == 0.0);
  CHECK(b.total == doctest::Approx(b.upsilon_over_T + b.thermal).epsilon(1e-13));
}

TEST_CASE("homogeneous decay produces entropy") {
  PrimitiveState y;
  y.rho = 1.0;
  y.T = 300.0;
  y.q0 = 2.0;
  y.q1 = 1.0;
  const ViscosityAggregates visc = ViscosityAggregates::make(gas, 1e-3);
  SourceTerms s = source_q1(y, PrimGrads{}, visc, consts, Damping{1, 1, 1}, gas.nu(y.rho));
  s.s_q0 = source_q0(y, PrimGrads{}, visc, gas, consts);
  const EntropyBudget b = clausius_duhem_budget(y, PrimGrads{}, s, visc, gas);
  CHECK(b.total ==
        doctest::Approx(b.rho_eps_over_T - y.q1 * s.s_q1() / y.T).epsilon(1e-13));
  CHECK(b.total > 0.0);
}

TEST_CASE("budget equals the quadratic form minus the source contraction") {
  StateSampler sampler(88);
  for (int i = 0; i < 300; ++i) {
    const PrimitiveState y = sampler.state_nonzero();
    const PrimGrads g = sampler.gradients();
    const Vec3 drho = sampler.density_gradient();
    const ViscosityAggregates visc =
        ViscosityAggregates::make(gas, sampler.mu_t(y, gas, consts));
    const Damping damp{sampler.uniform(0.05, 1.0), sampler.uniform(1.0, 2.0),
                       sampler.uniform(0.1, 1.0)};
    const SourceTerms s = sources(y, g, visc, gas, consts, damp);

    const EntropyBudget b = clausius_duhem_budget(y, g, s, visc, gas);

    const Mat73 gv = entropy_gradients_from_primitive(y, gas, g, drho);
    double form = 0.0;
    for (int a = 0; a < 3; ++a) {
      for (int c = 0; c < 3; ++c) {
        form += gv.col(a).dot(kij_matrix(y, visc, a, c) * gv.col(c));
      }
    }
    const Vec7 v = prim_to_entropy(y, gas).v;
    const Vec7 src = source_vector(y, g, drho, s);
    const double reference = form - v.dot(src);
    CHECK(std::abs(b.total - reference) <=
          1e-10 * std::max({std::abs(b.total), std::abs(reference), 1e-30}));
  }
}

TEST_CASE("budget total is non-negative after clipping under fuzzing") {
  StateSampler sampler(4096);
  for (int i = 0; i < 100000; ++i) {
    const PrimitiveState y = sampler.state_nonzero();
    const PrimGrads g = sampler.gradients();
    const ViscosityAggregates visc =
        ViscosityAggregates::make(gas, sampler.mu_t(y, gas, consts));
    const Damping damp{sampler.uniform(0.05, 1.0), sampler.uniform(1.0, 2.0),
                       sampler.uniform(0.1, 1.0)};
    SourceTerms s = sources(y, g, visc, gas, consts, damp);
    s = entropy_clip(s, y, g, visc, consts);
    const EntropyBudget b = clausius_duhem_budget(y, g, s, visc, gas);
    const double scale = std::abs(b.upsilon_over_T) + std::abs(b.thermal) +
                         std::abs(b.rho_eps_over_T) + std::abs(b.q1_diffusion) +
                         std::abs(b.dilatation) + std::abs(b.source_sink) + 1e-30;
    CHECK(b.total >= -1e-12 * scale);
  }
}

TEST_CASE("plotted production decomposition") {
  PrimitiveState y;
  y.rho = 1.0;
  y.T = 300.0;
  y.q0 = 1.5;
  y.q1 = 0.8;
  const ViscosityAggregates visc = ViscosityAggregates::make(gas, 1e-3);

  // zero gradients: only dissipation survives in the turbulent part
  SourceTerms s = source_q1(y, PrimGrads{}, visc, consts, Damping{1, 1, 1}, gas.nu(y.rho));
  const PlottedProduction zero = plotted_production(y, PrimGrads{}, s, visc, gas);
  const double rho_eps = y.rho * eps_from_q1(y.q1, gas.nu(y.rho));
  CHECK(zero.turbulent == doctest::Approx(rho_eps + y.q1 * s.d_q1).epsilon(1e-13));
  CHECK(zero.total == doctest::Approx(zero.turbulent).epsilon(1e-13));

  // with gradients the difference is exactly the molecular dissipation
  StateSampler sampler(17);
  const PrimGrads g = sampler.gradients();
  s = source_q1(y, g, visc, consts, Damping{0.5, 1.2, 0.9}, gas.nu(y.rho));
  const PlottedProduction p = plotted_production(y, g, s, visc, gas);
  CHECK(p.total - p.turbulent ==
        doctest::Approx(dissipation_function(g, gas.mu_visc, gas.mu_bulk())).epsilon(1e-12));
}

TEST_CASE("plotted total equals the isothermal incompressible budget times T") {
  StateSampler sampler(33);
  for (int i = 0; i < 200; ++i) {
    const PrimitiveState y = sampler.state_nonzero();
    PrimGrads g = sampler.gradients();
    g.dT.setZero();
    // remove the dilatation
    const double third = g.du.trace() / 3.0;
    g.du.diagonal().array() -= third;
    const ViscosityAggregates visc =
        ViscosityAggregates::make(gas, sampler.mu_t(y, gas, consts));
    const Damping damp{0.6, 1.1, 0.8};
    SourceTerms s = sources(y, g, visc, gas, consts, damp);
    s = entropy_clip(s, y, g, visc, consts);
    const EntropyBudget b = clausius_duhem_budget(y, g, s, visc, gas);
    const PlottedProduction p = plotted_production(y, g, s, visc, gas);
    CHECK(std::abs(p.total - y.T * b.total) <=
          1e-10 * std::max(std::abs(p.total), 1e-30));
  }
}
