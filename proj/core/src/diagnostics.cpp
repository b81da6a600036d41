#include "entrostab/correlations.hpp"
#include "entrostab/solver.hpp"

#include <algorithm>
#include <cmath>

namespace entrostab {

double column_derivative(const std::vector<double>& y, const std::vector<double>& f, int j) {
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

Diagnostics diagnose(const std::vector<double>& y, const std::vector<PrimitiveState>& column,
                     const GasModel& gas, double u_edge) {
  const int n = static_cast<int>(column.size());
  Diagnostics d;

  std::vector<double> u(n);
  for (int j = 0; j < n; ++j) u[j] = column[j].u[0];

  const double rho_e = column[n - 1].rho;
  const double target = 0.995 * u_edge;
  d.edge_index = -1;
  for (int j = 1; j < n; ++j) {
    if (u[j] >= target) {
      d.edge_index = j;
      break;
    }
  }
  d.edge_found = d.edge_index > 0;
  const int j_edge = d.edge_found ? d.edge_index : n - 1;

  double theta = 0.0;
  for (int j = 1; j <= j_edge; ++j) {
    const double f0 = column[j - 1].rho * u[j - 1] * (u_edge - u[j - 1]);
    const double f1 = column[j].rho * u[j] * (u_edge - u[j]);
    theta += 0.5 * (f0 + f1) * (y[j] - y[j - 1]);
  }
  d.theta = theta / (rho_e * u_edge * u_edge);
  d.re_theta = rho_e * u_edge * d.theta / gas.mu_visc;

  const double dudy_wall = column_derivative(y, u, 0);
  d.tau_w = gas.mu_visc * dudy_wall;
  d.u_tau = std::sqrt(std::max(d.tau_w, 0.0) / column[0].rho);
  d.cf = 2.0 * (d.u_tau / u_edge) * (d.u_tau / u_edge);
  d.cf_correlation = d.re_theta > 1.0 ? cf_karman_schoenherr(d.re_theta) : 0.0;
  return d;
}

namespace {

double interp_linear(const std::vector<double>& ys, const std::vector<double>& fs, double y) {
  if (y <= ys.front()) return fs.front();
  if (y >= ys.back()) return fs.back();
  const auto it = std::upper_bound(ys.begin(), ys.end(), y);
  const std::size_t hi = static_cast<std::size_t>(it - ys.begin());
  const std::size_t lo = hi - 1;
  const double t = (y - ys[lo]) / (ys[hi] - ys[lo]);
  return (1.0 - t) * fs[lo] + t * fs[hi];
}

}  // namespace

PrimGrads node_gradients(const SolutionField& field, int station, int node) {
  const int nx = field.grid.nx();
  const int up = station > 0 ? station - 1 : 0;
  const int dn = station > 0 ? station : std::min(station + 1, nx - 1);
  const double dx = field.grid.x[dn] - field.grid.x[up];

  const std::vector<double>& y = field.grid.y[station];
  const std::vector<PrimitiveState>& col = field.state[station];
  const int n = static_cast<int>(col.size());

  std::vector<double> u(n), v(n), q0(n), q1(n), T(n);
  for (int j = 0; j < n; ++j) {
    u[j] = col[j].u[0];
    v[j] = col[j].u[1];
    q0[j] = col[j].q0;
    q1[j] = col[j].q1;
    T[j] = col[j].T;
  }

  // streamwise differences against the neighbor station, interpolated onto
  // this station's node height
  const std::vector<double>& y_up = field.grid.y[up];
  const std::vector<double>& y_dn = field.grid.y[dn];
  auto stream_diff = [&](auto getter) {
    const int m_up = static_cast<int>(field.state[up].size());
    std::vector<double> f_up(m_up), f_dn(field.state[dn].size());
    for (int j = 0; j < m_up; ++j) f_up[j] = getter(field.state[up][j]);
    for (std::size_t j = 0; j < f_dn.size(); ++j) f_dn[j] = getter(field.state[dn][j]);
    const double yq = y[node];
    return (interp_linear(y_dn, f_dn, yq) - interp_linear(y_up, f_up, yq)) / dx;
  };

  PrimGrads g;
  g.du(0, 0) = stream_diff([](const PrimitiveState& s) { return s.u[0]; });
  g.du(1, 0) = stream_diff([](const PrimitiveState& s) { return s.u[1]; });
  g.du(0, 1) = column_derivative(y, u, node);
  g.du(1, 1) = column_derivative(y, v, node);
  g.dq0 = Vec3(stream_diff([](const PrimitiveState& s) { return s.q0; }),
               column_derivative(y, q0, node), 0.0);
  g.dq1 = Vec3(stream_diff([](const PrimitiveState& s) { return s.q1; }),
               column_derivative(y, q1, node), 0.0);
  g.dT = Vec3(stream_diff([](const PrimitiveState& s) { return s.T; }),
              column_derivative(y, T, node), 0.0);
  return g;
}

}  // namespace entrostab
