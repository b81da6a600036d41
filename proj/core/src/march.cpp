#include "entrostab/audit.hpp"
#include "entrostab/correlations.hpp"
#include "entrostab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace entrostab {

double wall_q1(double nu, double dq0_dy) { return std::sqrt(nu * std::abs(dq0_dy)); }

double one_sided_gradient(double f0, double f1, double f2, double y1, double y2) {
  return ((f1 - f0) * y2 * y2 - (f2 - f0) * y1 * y1) / (y1 * y2 * (y2 - y1));
}

namespace {

void solve_tridiagonal(std::vector<double>& a, std::vector<double>& b, std::vector<double>& c,
                       std::vector<double>& d) {
  const int n = static_cast<int>(b.size());
  for (int j = 1; j < n; ++j) {
    const double w = a[j] / b[j - 1];
    b[j] -= w * c[j - 1];
    d[j] -= w * d[j - 1];
  }
  d[n - 1] /= b[n - 1];
  for (int j = n - 2; j >= 0; --j) {
    d[j] = (d[j] - c[j] * d[j + 1]) / b[j];
  }
}

double interp_linear(const std::vector<double>& ys, const std::vector<double>& fs, double y) {
  if (y <= ys.front()) return fs.front();
  if (y >= ys.back()) return fs.back();
  const auto it = std::upper_bound(ys.begin(), ys.end(), y);
  const std::size_t hi = static_cast<std::size_t>(it - ys.begin());
  const std::size_t lo = hi - 1;
  const double t = (y - ys[lo]) / (ys[hi] - ys[lo]);
  return (1.0 - t) * fs[lo] + t * fs[hi];
}

struct Columns {
  std::vector<double> u, v, T, q0, q1, rho;

  explicit Columns(int n) : u(n), v(n), T(n), q0(n), q1(n), rho(n) {}
  Columns() = default;

  static Columns from_states(const std::vector<PrimitiveState>& s) {
    Columns c(static_cast<int>(s.size()));
    for (std::size_t j = 0; j < s.size(); ++j) {
      c.u[j] = s[j].u[0];
      c.v[j] = s[j].u[1];
      c.T[j] = s[j].T;
      c.q0[j] = s[j].q0;
      c.q1[j] = s[j].q1;
      c.rho[j] = s[j].rho;
    }
    return c;
  }

  std::vector<PrimitiveState> to_states() const {
    std::vector<PrimitiveState> s(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
      s[j].rho = rho[j];
      s[j].u = Vec3(u[j], v[j], 0.0);
      s[j].T = T[j];
      s[j].q0 = q0[j];
      s[j].q1 = q1[j];
    }
    return s;
  }
};

Columns interpolate_columns(const std::vector<double>& y_from, const Columns& c,
                            const std::vector<double>& y_to) {
  Columns out(static_cast<int>(y_to.size()));
  for (std::size_t j = 0; j < y_to.size(); ++j) {
    const double y = y_to[j];
    out.u[j] = interp_linear(y_from, c.u, y);
    out.v[j] = interp_linear(y_from, c.v, y);
    out.T[j] = interp_linear(y_from, c.T, y);
    out.q0[j] = interp_linear(y_from, c.q0, y);
    out.q1[j] = interp_linear(y_from, c.q1, y);
    out.rho[j] = interp_linear(y_from, c.rho, y);
  }
  return out;
}

struct StationWork {
  std::vector<double> mu_t, dudy, dq0dy, dq1dy, dTdy;
  std::vector<ViscosityAggregates> visc;
  std::vector<Damping> damp;
  std::vector<double> a, b, c, d;

  explicit StationWork(int n)
      : mu_t(n), dudy(n), dq0dy(n), dq1dy(n), dTdy(n), visc(n), damp(n), a(n), b(n), c(n),
        d(n) {}
};

double deriv(const std::vector<double>& y, const std::vector<double>& f, int j) {
  const int n = static_cast<int>(y.size());
  if (j == 0) {
    return one_sided_gradient(f[0], f[1], f[2], y[1] - y[0], y[2] - y[0]);
  }
  if (j == n - 1) {
    return -one_sided_gradient(f[n - 1], f[n - 2], f[n - 3], y[n - 1] - y[n - 2],
                               y[n - 1] - y[n - 3]);
  }
  const double hm = y[j] - y[j - 1];
  const double hp = y[j + 1] - y[j];
  return (hm / (hp * (hp + hm))) * f[j + 1] + ((hp - hm) / (hp * hm)) * f[j] -
         (hp / (hm * (hp + hm))) * f[j - 1];
}

// Advection (streamwise implicit Euler + wall-normal upwind), flux-form
// diffusion and a pseudo-transient inertia term for one scalar column;
// Dirichlet rows at both ends. The inertia anchors early iterations to the
// current iterate and is ramped away as the station converges.
void assemble_transport(StationWork& w, const std::vector<double>& y,
                        const std::vector<double>& rho, const std::vector<double>& u,
                        const std::vector<double>& v, const std::vector<double>& phi_prev,
                        const std::vector<double>& mu_face, double dx,
                        const std::vector<double>& phi_cur, double inv_dtau) {
  const int n = static_cast<int>(y.size());
  for (int j = 1; j < n - 1; ++j) {
    const double hm = y[j] - y[j - 1];
    const double hp = y[j + 1] - y[j];
    const double hc = 0.5 * (hm + hp);
    double aj = 0.0, bj = 0.0, cj = 0.0, dj = 0.0;

    const double ax = rho[j] * std::max(u[j], 0.0) / dx;
    bj += ax;
    dj += ax * phi_prev[j];

    const double inertia = rho[j] * inv_dtau;
    bj += inertia;
    dj += inertia * phi_cur[j];

    const double rv = rho[j] * v[j];
    if (rv >= 0.0) {
      aj -= rv / hm;
      bj += rv / hm;
    } else {
      bj -= rv / hp;
      cj += rv / hp;
    }

    const double mp = 0.5 * (mu_face[j] + mu_face[j + 1]);
    const double mm = 0.5 * (mu_face[j] + mu_face[j - 1]);
    aj -= mm / (hm * hc);
    cj -= mp / (hp * hc);
    bj += mp / (hp * hc) + mm / (hm * hc);

    w.a[j] = aj;
    w.b[j] = bj;
    w.c[j] = cj;
    w.d[j] = dj;
  }
  w.a[0] = w.c[0] = 0.0;
  w.b[0] = 1.0;
  w.a[n - 1] = w.c[n - 1] = 0.0;
  w.b[n - 1] = 1.0;
}

struct StepResult {
  Columns cols;
  int iterations = 0;
};

StepResult solve_step(const SolverOptions& opts, const GasModel& gas,
                      const ClosureConstants& consts, const std::vector<double>& y,
                      const Columns& prev, const Columns& init, double dx, int station,
                      ClosureEvents& events, std::vector<double>& mu_t_relaxed) {
  const int n = static_cast<int>(y.size());
  const double u_e = opts.u_edge;
  const double p_e = gas.p_ref;
  const double q_fs = std::max(consts.q0_floor, std::sqrt(3.0) * opts.freestream_ti * u_e);
  const double q1_fs =
      std::max(consts.q1_floor, q_fs / std::pow(4.0 * opts.freestream_re_t, 0.25));

  Columns cur = init;
  StationWork w(n);
  std::vector<double> residual_history;
  residual_history.reserve(opts.max_iters);

  const double u_ref = std::max(u_e, 1e-12);
  double u_tau = std::sqrt(gas.mu_visc *
                           std::max(deriv(y, prev.u, 0), 0.0) / prev.rho[0]);
  u_tau = std::max(u_tau, 1e-6 * u_ref);
  Columns snapshot = cur;

  // penalty-band membership fixed per substep from the upstream wall shear;
  // a membership that follows the iterate makes the iteration map
  // discontinuous and leaves a residual noise floor
  int band_end = 1;
  {
    const double nu_wall0 = gas.nu(prev.rho[0]);
    for (int j = 1; j < n - 1; ++j) {
      if (y[j] * u_tau / nu_wall0 >= opts.penalty_y_plus) break;
      band_end = j + 1;
    }
  }

  double residual_ref = -1.0;
  double residual_last = -1.0;
  for (int it = 0; it < opts.max_iters; ++it) {
    // pseudo-time continuation with switched evolution relaxation: the
    // pseudo step grows only as the update norm actually falls, so stalled
    // or oscillating iterations keep their inertia
    double growth = 1.0;
    if (residual_ref > 0.0 && residual_last > 0.0) {
      growth = std::min(std::max(residual_ref / residual_last, 1.0), 1e12);
    }
    const double dtau = (dx / std::max(u_e, 1e-12)) * 0.5 * growth;
    const double inv_dtau = growth >= 1e12 ? 0.0 : 1.0 / dtau;
    // transport properties and wall-normal derivatives at the current iterate
    for (int j = 0; j < n; ++j) {
      w.dudy[j] = deriv(y, cur.u, j);
      w.dq0dy[j] = deriv(y, cur.q0, j);
      w.dq1dy[j] = deriv(y, cur.q1, j);
      w.dTdy[j] = opts.energy_equation ? deriv(y, cur.T, j) : 0.0;
    }
    for (int j = 0; j < n; ++j) {
      PrimitiveState s;
      s.rho = cur.rho[j];
      s.u = Vec3(cur.u[j], cur.v[j], 0.0);
      s.T = cur.T[j];
      s.q0 = cur.q0[j];
      s.q1 = cur.q1[j];
      const DampingInputs di = damping_inputs(s, y[j], gas, consts, &events);
      w.damp[j] = damping_functions(di, consts, &events);
      // relax the eddy viscosity between iterations; the fixed point is
      // unchanged but the production feedback through mu_T ~ q0^4 is damped
      const double mu_t_raw =
          std::min(eddy_viscosity(s, w.damp[j].f_mu, consts, gas.nu(cur.rho[j]), &events),
                   opts.mu_t_ratio_max * gas.mu_visc);
      const double omega_mu = std::min(opts.relaxation, 0.3);
      mu_t_relaxed[j] = mu_t_relaxed[j] < 0.0
                            ? mu_t_raw
                            : (1.0 - omega_mu) * mu_t_relaxed[j] + omega_mu * mu_t_raw;
      w.mu_t[j] = mu_t_relaxed[j];
      w.visc[j] = ViscosityAggregates::make(gas, w.mu_t[j], opts.symmetry,
                                            opts.kappa_t_uses_cv);
    }

    // wall-normal velocity from continuity
    cur.v[0] = 0.0;
    std::vector<double> drhoudx(n);
    for (int j = 0; j < n; ++j) {
      drhoudx[j] = (cur.rho[j] * cur.u[j] - prev.rho[j] * prev.u[j]) / dx;
    }
    for (int j = 1; j < n; ++j) {
      const double h = y[j] - y[j - 1];
      cur.v[j] = (cur.rho[j - 1] * cur.v[j - 1] - 0.5 * h * (drhoudx[j] + drhoudx[j - 1])) /
                 cur.rho[j];
    }

    // momentum
    std::vector<double> mu_mom(n);
    for (int j = 0; j < n; ++j) mu_mom[j] = w.visc[j].mu_hat;
    assemble_transport(w, y, cur.rho, cur.u, cur.v, prev.u, mu_mom, dx, cur.u, inv_dtau);
    w.d[0] = 0.0;
    w.d[n - 1] = u_e;
    auto au = w.a, bu = w.b, cu = w.c, du = w.d;
    solve_tridiagonal(au, bu, cu, du);
    std::vector<double> u_new = du;

    // per-node gradients and sources at the current iterate
    std::vector<SourceTerms> src(n);
    std::vector<double> div_u(n);
    for (int j = 0; j < n; ++j) {
      PrimitiveState s;
      s.rho = cur.rho[j];
      s.u = Vec3(cur.u[j], cur.v[j], 0.0);
      s.T = cur.T[j];
      s.q0 = cur.q0[j];
      s.q1 = cur.q1[j];
      PrimGrads g;
      g.du(0, 0) = (cur.u[j] - prev.u[j]) / dx;
      g.du(0, 1) = w.dudy[j];
      g.du(1, 0) = (cur.v[j] - prev.v[j]) / dx;
      const double drhody = deriv(y, cur.rho, j);
      g.du(1, 1) = (-drhoudx[j] - cur.v[j] * drhody) / cur.rho[j];
      g.dq0 = Vec3((cur.q0[j] - prev.q0[j]) / dx, w.dq0dy[j], 0.0);
      g.dq1 = Vec3((cur.q1[j] - prev.q1[j]) / dx, w.dq1dy[j], 0.0);
      g.dT = Vec3(0.0, w.dTdy[j], 0.0);
      div_u[j] = g.div_u();
      SourceTerms st = sources(s, g, w.visc[j], gas, consts, w.damp[j], &events);
      // production limiter: caps the transient production burst at a fixed
      // multiple of the dissipation; a converged boundary layer stays below
      // a ratio of about two, so the cap only acts on iteration transients
      const double q0f = std::max(s.q0, consts.q0_floor);
      const double q1f = std::max(s.q1, consts.q1_floor);
      const double rho_eps = s.rho * eps_from_q1(q1f, gas.nu(s.rho));
      if (st.p_k > opts.production_limit * rho_eps) {
        st.p_k = opts.production_limit * rho_eps;
        const double k_t = 0.5 * q0f * q0f;
        st.p_q1 = 0.25 * consts.c_eps1 * w.damp[j].f_1 * (q1f / k_t) *
                  (st.p_k + 2.0 / 3.0 * s.rho * g.div_u() * k_t);
      }
      src[j] = opts.strict_entropy_clip
                   ? entropy_clip(st, s, g, w.visc[j], consts, &events)
                   : entropy_guard(st, s, g, w.visc[j], gas, consts, &events);
    }

    // relax momentum first; the q1 wall band needs the fresh wall shear
    const double omega = opts.relaxation;
    for (int j = 0; j < n; ++j) {
      cur.u[j] = (1.0 - omega) * cur.u[j] + omega * u_new[j];
    }

    const double dudy_wall = deriv(y, cur.u, 0);
    u_tau = std::max(std::sqrt(gas.mu_visc * std::max(dudy_wall, 0.0) / cur.rho[0]),
                     1e-6 * u_ref);
    const double nu_wall = gas.nu(cur.rho[0]);

    // The q0 and q1 transport equations are integrated in their (k, eps)
    // images: the change of variables is exact, and the transformed
    // diffusion absorbs the singular |grad q|^2/q cross terms that defeat a
    // direct segregated treatment. Sources come from the clipped (q0, q1)
    // forms, mapped through the same change of variables.
    std::vector<double> k_col(n), eps_col(n), k_prev(n), eps_prev(n);
    const double k_floor = 0.5 * consts.q0_floor * consts.q0_floor;
    for (int j = 0; j < n; ++j) {
      const double nu_j = gas.nu(cur.rho[j]);
      k_col[j] = 0.5 * cur.q0[j] * cur.q0[j];
      eps_col[j] = eps_from_q1(std::max(cur.q1[j], consts.q1_floor), nu_j);
      k_prev[j] = 0.5 * prev.q0[j] * prev.q0[j];
      eps_prev[j] = eps_from_q1(std::max(prev.q1[j], consts.q1_floor),
                                gas.nu(prev.rho[j]));
    }
    const double eps_floor =
        eps_from_q1(consts.q1_floor, gas.nu(cur.rho[0]));

    // dissipation-rate equation: D_eps implicit through the clipped d_q1
    std::vector<double> mu_q1col(n);
    for (int j = 0; j < n; ++j) mu_q1col[j] = w.visc[j].mu_eps;
    assemble_transport(w, y, cur.rho, cur.u, cur.v, eps_prev, mu_q1col, dx, eps_col,
                       inv_dtau);
    for (int j = 1; j < n - 1; ++j) {
      const double q1f = std::max(cur.q1[j], consts.q1_floor);
      const double p_eps = 4.0 * eps_col[j] * src[j].p_q1 / q1f;
      const double d_eps_coeff = 4.0 * src[j].d_q1 / q1f;  // D_eps / eps
      const double slope = opts.newton ? 2.0 : 1.0;
      w.d[j] += p_eps;
      w.b[j] += slope * d_eps_coeff;
      if (opts.newton) w.d[j] += (slope - 1.0) * d_eps_coeff * eps_col[j];
    }
    for (int j = 0; j < band_end; ++j) {
      // wall balance eps = nu (dq0/dy)^2, the fourth-power image of the q1
      // wall condition. Off the wall the slope is taken from the wall
      // anchor, q0_j / y_j: identical for the linear near-wall profile and,
      // unlike a centered difference, it responds to the node's own q0, so
      // the dissipation tracks a local turbulence-energy perturbation.
      const double dq0dy_j =
          j == 0 ? one_sided_gradient(cur.q0[0], cur.q0[1], cur.q0[2], y[1] - y[0],
                                      y[2] - y[0])
                 : cur.q0[j] / y[j];
      w.a[j] = w.c[j] = 0.0;
      w.b[j] = 1.0;
      w.d[j] = std::max(gas.nu(cur.rho[j]) * dq0dy_j * dq0dy_j, eps_floor);
    }
    // zero-gradient top: the freestream column decays freely
    w.a[n - 1] = -1.0;
    w.b[n - 1] = 1.0;
    w.d[n - 1] = 0.0;
    auto a1c = w.a, b1c = w.b, c1c = w.c, d1c = w.d;
    solve_tridiagonal(a1c, b1c, c1c, d1c);
    for (int j = 0; j < n; ++j) {
      double eps_next = (1.0 - omega) * eps_col[j] + omega * d1c[j];
      if (eps_next < eps_floor) {
        eps_next = eps_floor;
        ++events.q1_floor;
      }
      eps_col[j] = eps_next;
      cur.q1[j] = q1_from_eps(eps_next, gas.nu(cur.rho[j]));
    }

    // turbulence-energy equation: production explicit (limited upstream),
    // dissipation linearized against the current k
    std::vector<double> mu_q0col(n);
    for (int j = 0; j < n; ++j) mu_q0col[j] = w.visc[j].mu_k;
    assemble_transport(w, y, cur.rho, cur.u, cur.v, k_prev, mu_q0col, dx, k_col,
                       inv_dtau);
    for (int j = 1; j < n - 1; ++j) {
      const double kf = std::max(k_col[j], k_floor);
      w.d[j] += src[j].p_k;
      w.b[j] += cur.rho[j] * eps_col[j] / kf;
      const double dila = 2.0 / 3.0 * cur.rho[j] * div_u[j];
      if (dila >= 0.0) {
        w.b[j] += dila;
      } else {
        w.d[j] -= dila * kf;
      }
    }
    w.d[0] = 0.0;
    w.a[n - 1] = -1.0;
    w.b[n - 1] = 1.0;
    w.d[n - 1] = 0.0;
    auto a0c = w.a, b0c = w.b, c0c = w.c, d0c = w.d;
    solve_tridiagonal(a0c, b0c, c0c, d0c);
    for (int j = 0; j < n; ++j) {
      double k_next = (1.0 - omega) * k_col[j] + omega * d0c[j];
      if (j > 0 && k_next < k_floor) {
        k_next = k_floor;
        ++events.q0_floor;
      }
      cur.q0[j] = std::sqrt(2.0 * std::max(k_next, 0.0));
    }
    cur.q0[0] = 0.0;

    // optional energy equation, then density from the constant edge pressure
    if (opts.energy_equation) {
      std::vector<double> kappa_col(n);
      for (int j = 0; j < n; ++j) kappa_col[j] = w.visc[j].kappa_hat;
      // advection carries rho*cp*u; fold cp into the convecting velocity
      const double cp = gas.cp();
      std::vector<double> u_cp(n), v_cp(n);
      for (int j = 0; j < n; ++j) {
        u_cp[j] = cur.u[j] * cp;
        v_cp[j] = cur.v[j] * cp;
      }
      assemble_transport(w, y, cur.rho, u_cp, v_cp, prev.T, kappa_col, dx, cur.T, inv_dtau);
      for (int j = 1; j < n - 1; ++j) {
        PrimGrads g;
        g.du(0, 1) = w.dudy[j];
        const double nu_j = gas.nu(cur.rho[j]);
        const double heating = dissipation_function(g, gas.mu_visc, gas.mu_bulk());
        w.d[j] += heating +
                  cur.rho[j] * eps_from_q1(std::max(cur.q1[j], consts.q1_floor), nu_j);
      }
      // adiabatic wall, fixed edge temperature
      w.b[0] = 1.0;
      w.c[0] = -1.0;
      w.d[0] = 0.0;
      w.d[n - 1] = gas.t_ref;
      auto at = w.a, bt = w.b, ct = w.c, dt = w.d;
      solve_tridiagonal(at, bt, ct, dt);
      for (int j = 0; j < n; ++j) {
        cur.T[j] = (1.0 - omega) * cur.T[j] + omega * dt[j];
        cur.rho[j] = p_e / (gas.R * cur.T[j]);
      }
    }

    double update = 0.0;
    auto bump = [&update](double v) {
      // NaN-safe: a non-finite state must never register as converged
      if (v == v) {
        update = std::max(update, v);
      } else {
        update = std::numeric_limits<double>::infinity();
      }
    };
    for (int j = 0; j < n; ++j) {
      bump(std::abs(cur.u[j] - snapshot.u[j]) / u_ref);
      bump(std::abs(cur.q0[j] - snapshot.q0[j]) / u_ref);
      bump(std::abs(cur.q1[j] - snapshot.q1[j]) / u_ref);
      if (opts.energy_equation) {
        bump(std::abs(cur.T[j] - snapshot.T[j]) / gas.t_ref);
      }
    }
    if (!std::isfinite(update)) {
      throw ConvergenceError(
          "march: station " + std::to_string(station) + " produced a non-finite state",
          station, residual_history);
    }
    snapshot = cur;
    if (residual_ref < 0.0) residual_ref = std::max(update, 1e-300);
    residual_last = std::max(update, 1e-300);
    residual_history.push_back(update);
    if (update < opts.tol) {
      return {cur, it + 1};
    }
  }

  const std::size_t tail = std::min<std::size_t>(residual_history.size(), 20);
  std::vector<double> hist(residual_history.end() - tail, residual_history.end());
  throw ConvergenceError("march: station " + std::to_string(station) +
                             " failed to converge below " + std::to_string(opts.tol),
                         station, hist);
}

}  // namespace

SolutionField march(const SolverOptions& opts, const GasModel& gas,
                    const ClosureConstants& consts, const Grid& grid,
                    const std::vector<PrimitiveState>& inlet) {
  const int nx = grid.nx();
  const int ny = grid.ny();
  if (static_cast<int>(inlet.size()) != ny) {
    throw std::invalid_argument("march: inlet column size does not match the grid");
  }

  SolutionField field;
  field.grid = grid;
  field.state.resize(nx);
  field.stations.resize(nx);
  field.state[0] = inlet;
  field.stations[0] = diagnose(grid.y[0], inlet, gas, opts.u_edge);
  field.stations[0].x = grid.x[0];

  Columns prev = Columns::from_states(inlet);
  const std::vector<double>* prev_y = &grid.y[0];

  std::vector<double> mu_t_relaxed(ny, -1.0);
  for (int s = 1; s < nx; ++s) {
    const std::vector<double>& y = grid.y[s];
    Columns cur = interpolate_columns(*prev_y, prev, y);
    const double dx_station = grid.x[s] - grid.x[s - 1];
    const int substeps = std::max(1, opts.substeps);
    std::fill(mu_t_relaxed.begin(), mu_t_relaxed.end(), -1.0);
    int iters = 0;
    Columns older = cur;
    for (int step = 0; step < substeps; ++step) {
      // linear predictor from the two upstream solutions shortens the
      // per-substep transient; turbulence scales stay at or above the floors
      Columns init = cur;
      if (step > 0) {
        const int n_col = static_cast<int>(init.u.size());
        for (int j = 0; j < n_col; ++j) {
          init.u[j] = 2.0 * cur.u[j] - older.u[j];
          init.q0[j] = std::max(2.0 * cur.q0[j] - older.q0[j], consts.q0_floor);
          init.q1[j] = std::max(2.0 * cur.q1[j] - older.q1[j], consts.q1_floor);
          init.T[j] = std::max(2.0 * cur.T[j] - older.T[j], 1.0);
        }
        init.q0[0] = 0.0;
        init.u[0] = 0.0;
      }
      older = cur;
      StepResult r = solve_step(opts, gas, consts, y, cur, init, dx_station / substeps, s,
                                field.events, mu_t_relaxed);
      cur = std::move(r.cols);
      iters += r.iterations;
    }
    field.state[s] = cur.to_states();
    field.stations[s] = diagnose(y, field.state[s], gas, opts.u_edge);
    field.stations[s].x = grid.x[s];
    field.stations[s].iterations = iters;
    prev = std::move(cur);
    prev_y = &grid.y[s];
  }
  return field;
}

}  // namespace entrostab
