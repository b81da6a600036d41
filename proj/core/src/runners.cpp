#include "entrostab/runners.hpp"

#include "entrostab/audit.hpp"
#include "entrostab/correlations.hpp"
#include "entrostab/csv.hpp"
#include "entrostab/field_io.hpp"
#include "entrostab/matrices.hpp"
#include "entrostab/sampling.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace entrostab {

namespace {

template <typename M>
double relative_asymmetry(const M& m) {
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (m - m.transpose()).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

VerifyReport run_verify(const RunConfig& cfg, int n_samples, std::uint64_t seed,
                        std::ostream& csv, bool enforce_symmetry) {
  const GasModel gas = cfg.gas_model();
  const ClosureConstants consts = cfg.closure_constants();
  StateSampler sampler(seed);

  VerifyReport rep;
  rep.a0_min_eig = std::numeric_limits<double>::infinity();
  rep.k_min_eig_rel = std::numeric_limits<double>::infinity();

  csv << "# sample [-], matrix [-], metric [-], value [-]\n";
  if (n_samples <= 0) {
    csv << "# no samples requested\n";
    rep.pass = true;
    rep.a0_min_eig = 0.0;
    rep.k_min_eig_rel = 0.0;
    return rep;
  }

  Eigen::SelfAdjointEigenSolver<Mat7> eig7;
  Eigen::SelfAdjointEigenSolver<Mat21> eig21;

  for (int s = 0; s < n_samples; ++s) {
    const PrimitiveState y = sampler.state();
    const double mu_t = sampler.mu_t(y, gas, consts);
    const ViscosityAggregates visc =
        enforce_symmetry
            ? ViscosityAggregates::make(gas, mu_t, cfg.symmetry(), cfg.closure.kappa_t_uses_cv)
            : ViscosityAggregates::unconstrained(gas, mu_t, cfg.closure.kappa_t_uses_cv);

    const Mat7 a0 = a0_matrix(y, gas);
    const double a0_asym = relative_asymmetry(a0);
    eig7.compute(0.5 * (a0 + a0.transpose()), Eigen::EigenvaluesOnly);
    const double a0_min = eig7.eigenvalues().minCoeff();
    csv << s << ",a0,asymmetry_rel," << format_full(a0_asym) << "\n";
    csv << s << ",a0,min_eig," << format_full(a0_min) << "\n";
    rep.a0_asym = std::max(rep.a0_asym, a0_asym);
    rep.a0_min_eig = std::min(rep.a0_min_eig, a0_min);

    double ai_asym = 0.0;
    for (int i = 0; i < 3; ++i) {
      ai_asym = std::max(ai_asym, relative_asymmetry(ai_matrix(y, gas, i)));
    }
    csv << s << ",ai,asymmetry_rel," << format_full(ai_asym) << "\n";
    rep.ai_asym = std::max(rep.ai_asym, ai_asym);

    const Mat21 big = k_block_matrix(y, visc);
    const double k_asym = relative_asymmetry(big);
    eig21.compute(0.5 * (big + big.transpose()), Eigen::EigenvaluesOnly);
    const double k_norm = big.cwiseAbs().maxCoeff();
    const double k_min_rel = k_norm > 0.0 ? eig21.eigenvalues().minCoeff() / k_norm : 0.0;
    csv << s << ",k,asymmetry_rel," << format_full(k_asym) << "\n";
    csv << s << ",k,min_eig_rel," << format_full(k_min_rel) << "\n";
    rep.k_asym = std::max(rep.k_asym, k_asym);
    rep.k_min_eig_rel = std::min(rep.k_min_eig_rel, k_min_rel);
  }

  rep.pass = rep.a0_asym < 1e-12 && rep.ai_asym < 1e-12 && rep.k_asym < 1e-12 &&
             rep.a0_min_eig > 0.0 && rep.k_min_eig_rel >= -1e-10;
  return rep;
}

void run_correlate(const std::vector<double>& re_theta, std::ostream& csv) {
  csv << "# Re_theta [-], Cf_KarmanSchoenherr [-]\n";
  for (const double re : re_theta) {
    csv << format_full(re) << ',' << format_full(cf_karman_schoenherr(re)) << '\n';
  }
}

int nearest_station(const SolutionField& field, double re_theta) {
  int best = 0;
  double best_err = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < field.stations.size(); ++s) {
    const double err = std::abs(field.stations[s].re_theta - re_theta);
    if (err < best_err) {
      best_err = err;
      best = static_cast<int>(s);
    }
  }
  return best;
}

namespace {

// Flux-form second derivative d/dy (mu dphi/dy) at node j.
double diffusion_term(const std::vector<double>& y, const std::vector<double>& mu,
                      const std::vector<double>& phi, int j) {
  const int n = static_cast<int>(y.size());
  if (j == 0 || j == n - 1) return 0.0;
  const double hm = y[j] - y[j - 1];
  const double hp = y[j + 1] - y[j];
  const double hc = 0.5 * (hm + hp);
  const double mp = 0.5 * (mu[j] + mu[j + 1]);
  const double mm = 0.5 * (mu[j] + mu[j - 1]);
  return (mp * (phi[j + 1] - phi[j]) / hp - mm * (phi[j] - phi[j - 1]) / hm) / hc;
}

struct NodeClosure {
  Damping damp;
  double mu_t = 0;
  ViscosityAggregates visc;
  SourceTerms src;
  PrimGrads grads;
};

NodeClosure node_closure(const SolutionField& field, int station, int node,
                         const GasModel& gas, const ClosureConstants& consts,
                         SymmetryAssumption symmetry, bool kappa_t_uses_cv,
                         bool strict_clip) {
  NodeClosure nc;
  const PrimitiveState& s = field.state[station][node];
  const double wall_distance = field.grid.y[station][node];
  nc.grads = node_gradients(field, station, node);
  const DampingInputs di = damping_inputs(s, wall_distance, gas, consts);
  nc.damp = damping_functions(di, consts);
  nc.mu_t = eddy_viscosity(s, nc.damp.f_mu, consts, gas.nu(s.rho));
  nc.visc = ViscosityAggregates::make(gas, nc.mu_t, symmetry, kappa_t_uses_cv);
  SourceTerms st = sources(s, nc.grads, nc.visc, gas, consts, nc.damp);
  nc.src = strict_clip ? entropy_clip(st, s, nc.grads, nc.visc, consts)
                       : entropy_guard(st, s, nc.grads, nc.visc, gas, consts);
  return nc;
}

void write_profile(const SolutionField& field, int station, const RunConfig& cfg,
                   std::ostream& os) {
  const GasModel gas = cfg.gas_model();
  const ClosureConstants consts = cfg.closure_constants();
  const Diagnostics& diag = field.stations[station];
  const std::vector<double>& y = field.grid.y[station];
  const auto& col = field.state[station];
  const int n = static_cast<int>(col.size());
  const double nu_wall = gas.nu(col[0].rho);
  const double u_tau = std::max(diag.u_tau, 1e-30);

  os << "# y [m], y_plus [-], u_plus [-], q0_plus [-], q1 [m/s], mu_T [Pa s], "
        "prod_q0 [kg/(m^2 s^2)], diss_q0 [kg/(m^2 s^2)], diff_q0 [kg/(m^2 s^2)], "
        "cross_q0 [kg/(m^2 s^2)], dila_q0 [kg/(m^2 s^2)], prod_k [W/m^3], diss_k [W/m^3], "
        "diff_k [W/m^3]\n";
  os << "# station " << station << " x = " << format_full(diag.x)
     << " Re_theta = " << format_full(diag.re_theta) << "\n";

  std::vector<double> q0(n), kcol(n), mu_k(n);
  std::vector<NodeClosure> nodes(n);
  for (int j = 0; j < n; ++j) {
    nodes[j] = node_closure(field, station, j, gas, consts, cfg.symmetry(),
                            cfg.closure.kappa_t_uses_cv, cfg.run.strict_entropy_clip);
    q0[j] = col[j].q0;
    kcol[j] = 0.5 * col[j].q0 * col[j].q0;
    mu_k[j] = nodes[j].visc.mu_k;
  }

  for (int j = 0; j < n; ++j) {
    const PrimitiveState& s = col[j];
    const NodeClosure& nc = nodes[j];
    const double q0f = std::max(s.q0, consts.q0_floor);
    const double q1f = std::max(s.q1, consts.q1_floor);
    const double nu_j = gas.nu(s.rho);
    const double eps = eps_from_q1(q1f, nu_j);

    const double prod_q0 = nc.src.p_k / q0f;
    const double diss_q0 = -s.rho * eps / q0f;
    const double cross_q0 = nc.visc.mu_k * nc.grads.dq0.squaredNorm() / q0f;
    const double dila_q0 = -s.rho * q0f * nc.grads.div_u() / 3.0;
    const double diff_q0 = diffusion_term(y, mu_k, q0, j);

    const double prod_k = nc.src.p_k;
    const double diss_k = -s.rho * eps;
    const double diff_k = diffusion_term(y, mu_k, kcol, j);

    os << format_full(y[j]) << ',' << format_full(y[j] * u_tau / nu_wall) << ','
       << format_full(s.u[0] / u_tau) << ',' << format_full(s.q0 / u_tau) << ','
       << format_full(s.q1) << ',' << format_full(nc.mu_t) << ',' << format_full(prod_q0)
       << ',' << format_full(diss_q0) << ',' << format_full(diff_q0) << ','
       << format_full(cross_q0) << ',' << format_full(dila_q0) << ',' << format_full(prod_k)
       << ',' << format_full(diss_k) << ',' << format_full(diff_k) << '\n';
  }
}

}  // namespace

void write_budget_station(const SolutionField& field, int station, const RunConfig& cfg,
                          std::ostream& os, bool header) {
  const GasModel gas = cfg.gas_model();
  const ClosureConstants consts = cfg.closure_constants();
  if (header) {
    os << "# y_plus [-], upsilon_over_T [W/(m^3 K)], thermal [W/(m^3 K)], "
          "rho_eps_over_T [W/(m^3 K)], q1_diffusion [W/(m^3 K)], dilatation [W/(m^3 K)], "
          "source_sink [W/(m^3 K)], total [W/(m^3 K)], plotted_turbulent [W/m^3], "
          "plotted_total [W/m^3]\n";
  }
  const Diagnostics& diag = field.stations[station];
  os << "# station " << station << " x = " << format_full(diag.x)
     << " Re_theta = " << format_full(diag.re_theta) << "\n";
  const std::vector<double>& y = field.grid.y[station];
  const auto& col = field.state[station];
  const double nu_wall = gas.nu(col[0].rho);
  const double u_tau = std::max(diag.u_tau, 1e-30);

  for (std::size_t j = 0; j < col.size(); ++j) {
    const NodeClosure nc = node_closure(field, station, static_cast<int>(j), gas, consts,
                                        cfg.symmetry(), cfg.closure.kappa_t_uses_cv,
                                        cfg.run.strict_entropy_clip);
    const EntropyBudget b = clausius_duhem_budget(col[j], nc.grads, nc.src, nc.visc, gas);
    const PlottedProduction p = plotted_production(col[j], nc.grads, nc.src, nc.visc, gas);
    os << format_full(y[j] * u_tau / nu_wall) << ',' << format_full(b.upsilon_over_T) << ','
       << format_full(b.thermal) << ',' << format_full(b.rho_eps_over_T) << ','
       << format_full(b.q1_diffusion) << ',' << format_full(b.dilatation) << ','
       << format_full(b.source_sink) << ',' << format_full(b.total) << ','
       << format_full(p.turbulent) << ',' << format_full(p.total) << '\n';
  }
}

void run_budget(const SolutionField& field, const RunConfig& cfg, double re_theta_filter,
                std::ostream& os) {
  if (re_theta_filter > 0.0) {
    write_budget_station(field, nearest_station(field, re_theta_filter), cfg, os, true);
    return;
  }
  bool header = true;
  for (int s = 0; s < field.grid.nx(); ++s) {
    write_budget_station(field, s, cfg, os, header);
    header = false;
  }
}

FlatplateResult run_flatplate(const RunConfig& cfg) {
  const GasModel gas = cfg.gas_model();
  const ClosureConstants consts = cfg.closure_constants();
  const SolverOptions opts = cfg.solver_options();

  const Grid grid = build_grid(cfg.grid_spec(), gas, opts.u_edge);
  const std::vector<PrimitiveState> inlet =
      inlet_profiles(cfg.run.re_theta_inlet, gas, grid.y[0], opts, consts);

  FlatplateResult result;
  result.field = march(opts, gas, consts, grid, inlet);
  const SolutionField& field = result.field;

  namespace fs = std::filesystem;
  fs::create_directories(cfg.output.dir);
  auto path = [&](const std::string& name) { return (fs::path(cfg.output.dir) / name).string(); };

  {
    std::ofstream os(path("config_effective.cfg"));
    write_config(cfg, os);
    result.files_written.push_back(path("config_effective.cfg"));
  }
  {
    std::ofstream os(path("stations.csv"));
    os << "# x [m], Re_theta [-], Cf [-], Cf_correlation [-], theta [m], u_tau [m/s]\n";
    for (const Diagnostics& d : field.stations) {
      os << format_full(d.x) << ',' << format_full(d.re_theta) << ',' << format_full(d.cf)
         << ',' << format_full(d.cf_correlation) << ',' << format_full(d.theta) << ','
         << format_full(d.u_tau) << '\n';
    }
    result.files_written.push_back(path("stations.csv"));
  }
  for (const double target : cfg.profile_targets()) {
    const int s = nearest_station(field, target);
    const long rounded = std::lround(field.stations[s].re_theta);
    const std::string name = "profile_" + std::to_string(rounded) + ".csv";
    std::ofstream os(path(name));
    write_profile(field, s, cfg, os);
    result.files_written.push_back(path(name));
  }
  {
    std::ofstream os(path("field.csv"));
    save_field(field, os);
    result.files_written.push_back(path("field.csv"));
  }
  {
    std::ofstream os(path("summary.txt"));
    int it_min = std::numeric_limits<int>::max(), it_max = 0;
    long long it_sum = 0;
    for (std::size_t s = 1; s < field.stations.size(); ++s) {
      it_min = std::min(it_min, field.stations[s].iterations);
      it_max = std::max(it_max, field.stations[s].iterations);
      it_sum += field.stations[s].iterations;
    }
    const int solved = std::max<int>(1, field.grid.nx() - 1);
    os << "stations: " << field.grid.nx() << "\n";
    os << "re_theta_inlet: " << format_full(field.stations.front().re_theta) << "\n";
    os << "re_theta_final: " << format_full(field.stations.back().re_theta) << "\n";
    os << "iterations_min: " << (field.grid.nx() > 1 ? it_min : 0) << "\n";
    os << "iterations_mean: " << format_full(static_cast<double>(it_sum) / solved) << "\n";
    os << "iterations_max: " << it_max << "\n";
    os << "events_q0_floor: " << field.events.q0_floor << "\n";
    os << "events_q1_floor: " << field.events.q1_floor << "\n";
    os << "events_f_mu_floor: " << field.events.f_mu_floor << "\n";
    os << "events_re_t_floor: " << field.events.re_t_floor << "\n";
    os << "events_clip: " << field.events.clip << "\n";
    result.files_written.push_back(path("summary.txt"));
  }
  return result;
}

}  // namespace entrostab
