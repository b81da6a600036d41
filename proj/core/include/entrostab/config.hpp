#pragma once

#include "entrostab/closure.hpp"
#include "entrostab/fluxes.hpp"
#include "entrostab/gas.hpp"
#include "entrostab/grid.hpp"
#include "entrostab/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace entrostab {

/// Flat `section.key = value` run configuration. Defaults reproduce the
/// reference flat-plate case: 40x60 grid, first node at y+ = 0.01, inlet
/// Re_theta = 2300, edge Mach 0.1.
struct RunConfig {
  GasModel gas;

  struct Closure {
    double c_mu = 0.09;
    double c_eps1 = 1.44;
    double c_eps2 = 1.92;
    double pr_k = 1.0;
    double pr_eps = 1.3;
    double q0_floor_frac = 1e-8;  // of the edge velocity
    double q1_floor_frac = 1e-8;
    double f_mu_floor = 1e-6;
    bool kappa_t_uses_cv = false;
    bool d_q1_printed_form = false;
    std::string symmetry_assumption = "i";  // "i": mu_q1 = mu_eps, "ii": all tied to mu_k
  } closure;

  struct GridBlock {
    int nx = 40;
    int ny = 60;
    double y_plus_first = 0.01;
    double length = 5.0;
    double height = 0.0;  // 0 = auto
  } grid;

  struct Run {
    double re_theta_inlet = 2300.0;
    double mach = 0.1;
    double relaxation = 0.7;
    double tol = 1e-8;
    int max_iters = 200;
    int substeps = 16;
    std::uint64_t seed = 42;
    bool energy_equation = false;
    bool newton = false;
    bool strict_entropy_clip = false;
    double freestream_ti = 1e-3;
    double freestream_re_t = 30.0;
    double penalty_y_plus = 3.0;
  } run;

  struct Output {
    std::string dir = "out";
    std::string format = "csv";
    std::string profile_re_theta = "5000,10000,15000";
  } output;

  double u_edge() const;
  SymmetryAssumption symmetry() const;

  /// Gas model with the turbulent Prandtl numbers synced from the closure
  /// block (pr_q1 = pr_eps).
  GasModel gas_model() const;
  /// Closure constants with absolute floors scaled by the edge velocity.
  ClosureConstants closure_constants() const;
  GridSpec grid_spec() const;
  SolverOptions solver_options() const;
  std::vector<double> profile_targets() const;

  /// Throws ConfigError naming the violated key.
  void validate() const;
};

/// Parses a config file; an empty path yields the defaults. Unknown keys,
/// type mismatches and invariant violations throw ConfigError with the key
/// and line.
RunConfig parse_config(const std::string& path);

RunConfig parse_config_text(const std::string& text);

/// Writes every key with full precision; parsing the output reproduces the
/// same configuration.
void write_config(const RunConfig& cfg, std::ostream& os);

}  // namespace entrostab
