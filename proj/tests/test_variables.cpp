#include "entrostab/variables.hpp"

#include "entrostab/audit.hpp"
#include "entrostab/sampling.hpp"

#include <doctest.h>

#include <cmath>

using namespace entrostab;

namespace {

const GasModel gas;  // defaults: air-like, datum at (300 K, 101325 Pa)

double rel_err(double a, double b) {
  const double denom = std::max(std::abs(a), std::abs(b));
  return denom == 0.0 ? 0.0 : std::abs(a - b) / denom;
}

}  // namespace

TEST_CASE("rest state maps to a pure mass-energy vector") {
  PrimitiveState y;
  y.rho = 1.0;
  y.T = 300.0;
  const ConsVars u = prim_to_cons(y, gas);
  const double e = gas.cv() * 300.0;
  CHECK(u.v[0] == 1.0);
  CHECK(u.v[1] == 0.0);
  CHECK(u.v[2] == 0.0);
  CHECK(u.v[3] == 0.0);
  CHECK(u.v[4] == doctest::Approx(e).epsilon(1e-15));
  CHECK(u.v[5] == 0.0);
  CHECK(u.v[6] == 0.0);
}

TEST_CASE("total energy assembles kinetic and turbulent parts") {
  PrimitiveState y;
  y.rho = 2.0;
  y.u = Vec3(3.0, 0.0, 0.0);
  y.T = 300.0;
  y.q0 = 1.0;
  y.q1 = 2.0;
  const double e = gas.cv() * 300.0;
  const ConsVars u = prim_to_cons(y, gas);
  CHECK(u.v[4] == doctest::Approx(2.0 * (e + 4.5 + 0.5 + 2.0)).epsilon(1e-15));
}

TEST_CASE("conservative round trip on random admissible states") {
  StateSampler sampler(101);
  for (int i = 0; i < 1000; ++i) {
    const PrimitiveState y = sampler.state();
    const PrimitiveState back = cons_to_prim(prim_to_cons(y, gas), gas);
    CHECK(rel_err(back.rho, y.rho) < 1e-12);
    for (int c = 0; c < 3; ++c) {
      CHECK(std::abs(back.u[c] - y.u[c]) <= 1e-12 * (1.0 + std::abs(y.u[c])));
    }
    CHECK(rel_err(back.T, y.T) < 1e-12);
    CHECK(std::abs(back.q0 - y.q0) <= 1e-12 * (1.0 + y.q0));
    CHECK(std::abs(back.q1 - y.q1) <= 1e-12 * (1.0 + y.q1));
  }
}

TEST_CASE("non-physical conservative vectors are rejected") {
  PrimitiveState y;
  y.rho = 1.0;
  y.u = Vec3(100.0, 0.0, 0.0);
  y.T = 300.0;
  ConsVars u = prim_to_cons(y, gas);
  u.v[4] = 0.5 * u.v.segment<3>(1).squaredNorm() / u.v[0];  // all kinetic, no internal energy
  CHECK_THROWS_AS(cons_to_prim(u, gas), NonPhysicalStateError);

  u = prim_to_cons(y, gas);
  u.v[0] = -1.0;
  CHECK_THROWS_AS(cons_to_prim(u, gas), NonPhysicalStateError);

  u = prim_to_cons(y, gas);
  u.v[5] = -1e-9;
  CHECK_THROWS_AS(cons_to_prim(u, gas), NonPhysicalStateError);
}

TEST_CASE("entropy variables at rest") {
  PrimitiveState y;
  y.rho = 1.3;
  y.T = 350.0;
  const EntropyVars v = prim_to_entropy(y, gas);
  const ThermoState ts = eval_thermo(gas, y.rho, y.T);
  CHECK(v.v[0] == doctest::Approx(ts.mu_chem / y.T).epsilon(1e-14));
  CHECK(v.v[1] == 0.0);
  CHECK(v.v[4] == doctest::Approx(-1.0 / y.T).epsilon(1e-15));
  CHECK(v.v[5] == 0.0);
  CHECK(v.v[6] == 0.0);
}

TEST_CASE("component ratios recover the velocity scales") {
  StateSampler sampler(7);
  for (int i = 0; i < 100; ++i) {
    const PrimitiveState y = sampler.state();
    const EntropyVars v = prim_to_entropy(y, gas);
    for (int c = 0; c < 3; ++c) {
      CHECK(v.v[1 + c] * y.T == doctest::Approx(y.u[c]).epsilon(1e-13));
      if (y.u[c] != 0.0) {
        CHECK(v.v[1 + c] / v.v[4] == doctest::Approx(-y.u[c]).epsilon(1e-13));
      }
    }
    CHECK(v.v[5] * y.T == doctest::Approx(y.q0).epsilon(1e-13));
    CHECK(v.v[6] * y.T == doctest::Approx(y.q1).epsilon(1e-13));
  }
}

TEST_CASE("entropy variable round trip") {
  StateSampler sampler(23);
  for (int i = 0; i < 1000; ++i) {
    const PrimitiveState y = sampler.state();
    const PrimitiveState back = entropy_to_prim(prim_to_entropy(y, gas), gas);
    CHECK(rel_err(back.rho, y.rho) < 1e-10);
    CHECK(rel_err(back.T, y.T) < 1e-10);
    for (int c = 0; c < 3; ++c) {
      CHECK(std::abs(back.u[c] - y.u[c]) <= 1e-10 * (1.0 + std::abs(y.u[c])));
    }
    CHECK(std::abs(back.q0 - y.q0) <= 1e-10 * (1.0 + y.q0));
    CHECK(std::abs(back.q1 - y.q1) <= 1e-10 * (1.0 + y.q1));
  }
}

TEST_CASE("degenerate entropy vectors are rejected") {
  PrimitiveState y;
  y.rho = 1.0;
  y.T = 300.0;
  EntropyVars v = prim_to_entropy(y, gas);
  v.v[4] = 0.0;
  CHECK_THROWS_AS(entropy_to_prim(v, gas), std::domain_error);

  // v[4] -> 0- sends the temperature to infinity; the exponential density
  // recovery overflows and must be caught.
  v = prim_to_entropy(y, gas);
  v.v[4] = -1e-300;
  CHECK_THROWS_AS(entropy_to_prim(v, gas), std::domain_error);
}

TEST_CASE("entropy variables are the gradient of the entropy density") {
  StateSampler sampler(59);
  const GasModel g = gas;
  auto H_of_U = [&g](const Vec7& uv) {
    ConsVars u;
    u.v = uv;
    const PrimitiveState y = cons_to_prim(u, g);
    return entropy_density(y, g);
  };

  for (int i = 0; i < 100; ++i) {
    const PrimitiveState y = sampler.state_nonzero();
    const Vec7 u0 = prim_to_cons(y, g).v;
    const Vec7 v = prim_to_entropy(y, g).v;
    for (int c = 0; c < 7; ++c) {
      const double scale = std::max(std::abs(u0[c]), 1e-3 * u0.cwiseAbs().maxCoeff());
      const double h1 = 1e-5 * scale;
      auto central = [&](double h) {
        Vec7 up = u0, dn = u0;
        up[c] += h;
        dn[c] -= h;
        return (H_of_U(up) - H_of_U(dn)) / (2.0 * h);
      };
      // Richardson extrapolation of the centered difference
      const double d1 = central(h1);
      const double d2 = central(0.5 * h1);
      const double fd = (4.0 * d2 - d1) / 3.0;
      CHECK(std::abs(fd - v[c]) <= 1e-6 * std::max(std::abs(v[c]), 1e-12));
    }
  }
}

TEST_CASE("gradient kernels invert each other") {
  StateSampler sampler(77);
  for (int i = 0; i < 200; ++i) {
    const PrimitiveState y = sampler.state_nonzero();
    const PrimGrads g0 = sampler.gradients();
    const Vec3 drho = sampler.density_gradient(2.0);
    const Mat73 gv = entropy_gradients_from_primitive(y, gas, g0, drho);
    const PrimGrads back = primitive_gradients_from_V(y, gv);
    CHECK((back.du - g0.du).cwiseAbs().maxCoeff() < 1e-9 * (1.0 + g0.du.cwiseAbs().maxCoeff()));
    CHECK((back.dT - g0.dT).cwiseAbs().maxCoeff() < 1e-9 * (1.0 + g0.dT.cwiseAbs().maxCoeff()));
    CHECK((back.dq0 - g0.dq0).cwiseAbs().maxCoeff() < 1e-9 * (1.0 + g0.dq0.cwiseAbs().maxCoeff()));
    CHECK((back.dq1 - g0.dq1).cwiseAbs().maxCoeff() < 1e-9 * (1.0 + g0.dq1.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("zero entropy-variable gradients give zero primitive gradients") {
  PrimitiveState y;
  y.rho = 1.0;
  y.u = Vec3(10.0, -5.0, 2.0);
  y.T = 400.0;
  y.q0 = 1.0;
  y.q1 = 0.5;
  const PrimGrads g = primitive_gradients_from_V(y, Mat73::Zero());
  CHECK(g.du.cwiseAbs().maxCoeff() == 0.0);
  CHECK(g.dT.cwiseAbs().maxCoeff() == 0.0);
  CHECK(g.dq0.cwiseAbs().maxCoeff() == 0.0);
  CHECK(g.dq1.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("pure temperature-slot gradient at rest") {
  PrimitiveState y;
  y.rho = 1.0;
  y.T = 320.0;
  Mat73 gv = Mat73::Zero();
  gv(4, 0) = 1e-3;
  gv(4, 2) = -2e-3;
  const PrimGrads g = primitive_gradients_from_V(y, gv);
  CHECK(g.du.cwiseAbs().maxCoeff() == 0.0);
  CHECK(g.dq0.cwiseAbs().maxCoeff() == 0.0);
  CHECK(g.dq1.cwiseAbs().maxCoeff() == 0.0);
  CHECK(g.dT[0] == doctest::Approx(y.T * y.T * 1e-3).epsilon(1e-14));
  CHECK(g.dT[2] == doctest::Approx(-y.T * y.T * 2e-3).epsilon(1e-14));
}

TEST_CASE("manufactured field: recovered gradients converge at second order") {
  // smooth 1D primitive field; compare kernel output against centered
  // differences of the primitive fields themselves
  auto prim_at = [&](double x) {
    PrimitiveState y;
    y.rho = 1.0 + 0.1 * std::sin(x);
    y.u = Vec3(50.0 + 10.0 * std::cos(x), 5.0 * std::sin(2.0 * x), 0.0);
    y.T = 300.0 + 20.0 * std::sin(x + 0.5);
    y.q0 = 2.0 + std::sin(x);
    y.q1 = 1.0 + 0.5 * std::cos(x);
    return y;
  };
  const double x0 = 0.3;
  double prev_err = -1.0;
  for (const double h : {1e-3, 5e-4, 2.5e-4}) {
    // entropy-variable gradient by centered differences
    Mat73 gv = Mat73::Zero();
    const Vec7 v_hi = prim_to_entropy(prim_at(x0 + h), gas).v;
    const Vec7 v_lo = prim_to_entropy(prim_at(x0 - h), gas).v;
    gv.col(0) = (v_hi - v_lo) / (2.0 * h);
    const PrimGrads g = primitive_gradients_from_V(prim_at(x0), gv);

    const PrimitiveState y_hi = prim_at(x0 + 1e-7);
    const PrimitiveState y_lo = prim_at(x0 - 1e-7);
    const double du_exact = (y_hi.u[0] - y_lo.u[0]) / 2e-7;
    const double err = std::abs(g.du(0, 0) - du_exact);
    if (prev_err > 0.0) CHECK(prev_err / err > 3.5);
    prev_err = err;
  }
}
