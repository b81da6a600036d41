#include "entrostab/config.hpp"

#include "entrostab/csv.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace entrostab {

double RunConfig::u_edge() const {
  return run.mach * std::sqrt(gas.gamma * gas.R * gas.t_ref);
}

SymmetryAssumption RunConfig::symmetry() const {
  return closure.symmetry_assumption == "ii" ? SymmetryAssumption::TieAllToK
                                             : SymmetryAssumption::TieQ1ToEps;
}

GasModel RunConfig::gas_model() const {
  GasModel g = gas;
  g.pr_k = closure.pr_k;
  g.pr_eps = closure.pr_eps;
  g.pr_q1 = closure.pr_eps;
  return g;
}

ClosureConstants RunConfig::closure_constants() const {
  ClosureConstants c;
  c.c_mu = closure.c_mu;
  c.c_eps1 = closure.c_eps1;
  c.c_eps2 = closure.c_eps2;
  c.pr_k = closure.pr_k;
  c.pr_eps = closure.pr_eps;
  const double u = u_edge();
  c.q0_floor = closure.q0_floor_frac * u;
  c.q1_floor = closure.q1_floor_frac * u;
  c.f_mu_floor = closure.f_mu_floor;
  c.d_q1_density_divides = closure.d_q1_printed_form;
  return c;
}

GridSpec RunConfig::grid_spec() const {
  GridSpec s;
  s.nx = grid.nx;
  s.ny = grid.ny;
  s.y_plus_first = grid.y_plus_first;
  s.length = grid.length;
  s.height = grid.height;
  s.re_theta_inlet = run.re_theta_inlet;
  return s;
}

SolverOptions RunConfig::solver_options() const {
  SolverOptions o;
  o.u_edge = u_edge();
  o.relaxation = run.relaxation;
  o.tol = run.tol;
  o.max_iters = run.max_iters;
  o.substeps = run.substeps;
  o.penalty_y_plus = run.penalty_y_plus;
  o.freestream_ti = run.freestream_ti;
  o.energy_equation = run.energy_equation;
  o.newton = run.newton;
  o.strict_entropy_clip = run.strict_entropy_clip;
  o.freestream_re_t = run.freestream_re_t;
  o.symmetry = symmetry();
  o.kappa_t_uses_cv = closure.kappa_t_uses_cv;
  return o;
}

std::vector<double> RunConfig::profile_targets() const {
  std::vector<double> out;
  std::stringstream ss(output.profile_re_theta);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

void RunConfig::validate() const {
  auto fail = [](const std::string& key, const std::string& what) {
    throw ConfigError(key, 0, what);
  };
  try {
    gas_model().validate();
  } catch (const std::invalid_argument& e) {
    fail("gas", e.what());
  }
  try {
    closure_constants().validate();
  } catch (const std::invalid_argument& e) {
    fail("closure", e.what());
  }
  if (grid.nx < 2) fail("grid.nx", "must be at least 2");
  if (grid.ny < 8) fail("grid.ny", "must be at least 8");
  if (!(grid.y_plus_first > 0.0)) fail("grid.y_plus_first", "must be positive");
  if (!(grid.length > 0.0)) fail("grid.length", "must be positive");
  if (grid.height < 0.0) fail("grid.height", "must be non-negative");
  if (!(run.re_theta_inlet > 500.0)) fail("run.re_theta_inlet", "must exceed 500");
  if (!(run.mach > 0.0)) fail("run.mach", "must be positive");
  if (!(run.relaxation > 0.0) || run.relaxation > 1.0) {
    fail("run.relaxation", "must be in (0, 1]");
  }
  if (!(run.tol > 0.0)) fail("run.tol", "must be positive");
  if (run.max_iters < 1) fail("run.max_iters", "must be at least 1");
  if (run.substeps < 1) fail("run.substeps", "must be at least 1");
  if (!(run.freestream_ti >= 0.0)) fail("run.freestream_ti", "must be non-negative");
  if (!(run.penalty_y_plus >= 0.0)) fail("run.penalty_y_plus", "must be non-negative");
  if (closure.symmetry_assumption != "i" && closure.symmetry_assumption != "ii") {
    fail("closure.symmetry_assumption", "must be 'i' or 'ii'");
  }
  if (output.format != "csv") fail("output.format", "only 'csv' is supported");
}

namespace {

struct Setter {
  std::function<void(RunConfig&, const std::string&, int)> apply;
};

double parse_double(const std::string& key, const std::string& value, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    while (pos < value.size() && std::isspace(static_cast<unsigned char>(value[pos]))) ++pos;
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key, line, "expected a number, got '" + value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value, int line) {
  const double v = parse_double(key, value, line);
  if (v != std::floor(v)) throw ConfigError(key, line, "expected an integer, got '" + value + "'");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& value, int line) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw ConfigError(key, line, "expected a boolean, got '" + value + "'");
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    auto dbl = [&t](const std::string& key, double RunConfig::Closure::* p) {
      t[key] = {[key, p](RunConfig& c, const std::string& v, int ln) {
        c.closure.*p = parse_double(key, v, ln);
      }};
    };
    auto gasdbl = [&t](const std::string& key, double GasModel::* p) {
      t[key] = {[key, p](RunConfig& c, const std::string& v, int ln) {
        c.gas.*p = parse_double(key, v, ln);
      }};
    };
    gasdbl("gas.R", &GasModel::R);
    gasdbl("gas.gamma", &GasModel::gamma);
    gasdbl("gas.mu_visc", &GasModel::mu_visc);
    gasdbl("gas.lambda_visc", &GasModel::lambda_visc);
    gasdbl("gas.kappa", &GasModel::kappa);
    gasdbl("gas.pr_t", &GasModel::pr_t);
    gasdbl("gas.t_ref", &GasModel::t_ref);
    gasdbl("gas.p_ref", &GasModel::p_ref);

    dbl("closure.c_mu", &RunConfig::Closure::c_mu);
    dbl("closure.c_eps1", &RunConfig::Closure::c_eps1);
    dbl("closure.c_eps2", &RunConfig::Closure::c_eps2);
    dbl("closure.pr_k", &RunConfig::Closure::pr_k);
    dbl("closure.pr_eps", &RunConfig::Closure::pr_eps);
    dbl("closure.q0_floor_frac", &RunConfig::Closure::q0_floor_frac);
    dbl("closure.q1_floor_frac", &RunConfig::Closure::q1_floor_frac);
    dbl("closure.f_mu_floor", &RunConfig::Closure::f_mu_floor);
    t["closure.kappaT_uses_cv"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.closure.kappa_t_uses_cv = parse_bool("closure.kappaT_uses_cv", v, ln);
    }};
    t["closure.d_q1_printed_form"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.closure.d_q1_printed_form = parse_bool("closure.d_q1_printed_form", v, ln);
    }};
    t["closure.symmetry_assumption"] = {[](RunConfig& c, const std::string& v, int ln) {
      if (v != "i" && v != "ii") {
        throw ConfigError("closure.symmetry_assumption", ln, "must be 'i' or 'ii'");
      }
      c.closure.symmetry_assumption = v;
    }};

    t["grid.nx"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.grid.nx = parse_int("grid.nx", v, ln);
    }};
    t["grid.ny"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.grid.ny = parse_int("grid.ny", v, ln);
    }};
    t["grid.y_plus_first"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.grid.y_plus_first = parse_double("grid.y_plus_first", v, ln);
    }};
    t["grid.length"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.grid.length = parse_double("grid.length", v, ln);
    }};
    t["grid.height"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.grid.height = parse_double("grid.height", v, ln);
    }};

    t["run.re_theta_inlet"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.run.re_theta_inlet = parse_double("run.re_theta_inlet", v, ln);
    }};
    t["run.mach"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.run.mach = parse_double("run.mach", v, ln);
    }};
    t["run.relaxation"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.run.relaxation = parse_double("run.relaxation", v, ln);
    }};
    t["run.tol"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.run.tol = parse_double("run.tol", v, ln);
    }};
    t["run.max_iters"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.run.max_iters = parse_int("run.max_iters", v, ln);
    }};
    t["run.substeps"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.run.substeps = parse_int("run.substeps", v, ln);
    }};
    t["run.seed"] = {[](RunConfig& c, const std::string& v, int ln) {
      const double d = parse_double("run.seed", v, ln);
      if (d < 0 || d != std::floor(d)) throw ConfigError("run.seed", ln, "expected a non-negative integer");
      c.run.seed = static_cast<std::uint64_t>(d);
    }};
    t["run.energy_equation"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.run.energy_equation = parse_bool("run.energy_equation", v, ln);
    }};
    t["run.newton"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.run.newton = parse_bool("run.newton", v, ln);
    }};
    t["run.strict_entropy_clip"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.run.strict_entropy_clip = parse_bool("run.strict_entropy_clip", v, ln);
    }};
    t["run.freestream_ti"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.run.freestream_ti = parse_double("run.freestream_ti", v, ln);
    }};
    t["run.freestream_re_t"] = {[](RunConfig& c, const std::string& v, int ln) {
      const double val = parse_double("run.freestream_re_t", v, ln);
      if (!(val > 0.0)) throw ConfigError("run.freestream_re_t", ln, "must be positive");
      c.run.freestream_re_t = val;
    }};
    t["run.penalty_y_plus"] = {[](RunConfig& c, const std::string& v, int ln) {
      c.run.penalty_y_plus = parse_double("run.penalty_y_plus", v, ln);
    }};

    t["output.dir"] = {[](RunConfig& c, const std::string& v, int) { c.output.dir = v; }};
    t["output.format"] = {[](RunConfig& c, const std::string& v, int) { c.output.format = v; }};
    t["output.profile_re_theta"] = {[](RunConfig& c, const std::string& v, int) {
      c.output.profile_re_theta = v;
    }};
    return t;
  }();
  return table;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(s, line, "expected 'section.key = value'");
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ConfigError(key, line, "unknown key");
    }
    it->second.apply(cfg, value, line);
  }
  cfg.validate();
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  if (path.empty()) {
    RunConfig cfg;
    cfg.validate();
    return cfg;
  }
  std::ifstream f(path);
  if (!f) {
    throw ConfigError(path, 0, "cannot open config file");
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

void write_config(const RunConfig& c, std::ostream& os) {
  auto kv = [&os](const std::string& key, const std::string& value) {
    os << key << " = " << value << "\n";
  };
  auto kvd = [&](const std::string& key, double v) { kv(key, format_full(v)); };
  auto kvi = [&](const std::string& key, long long v) { kv(key, std::to_string(v)); };
  auto kvb = [&](const std::string& key, bool v) { kv(key, v ? "true" : "false"); };

  kvd("gas.R", c.gas.R);
  kvd("gas.gamma", c.gas.gamma);
  kvd("gas.mu_visc", c.gas.mu_visc);
  kvd("gas.lambda_visc", c.gas.lambda_visc);
  kvd("gas.kappa", c.gas.kappa);
  kvd("gas.pr_t", c.gas.pr_t);
  kvd("gas.t_ref", c.gas.t_ref);
  kvd("gas.p_ref", c.gas.p_ref);
  kvd("closure.c_mu", c.closure.c_mu);
  kvd("closure.c_eps1", c.closure.c_eps1);
  kvd("closure.c_eps2", c.closure.c_eps2);
  kvd("closure.pr_k", c.closure.pr_k);
  kvd("closure.pr_eps", c.closure.pr_eps);
  kvd("closure.q0_floor_frac", c.closure.q0_floor_frac);
  kvd("closure.q1_floor_frac", c.closure.q1_floor_frac);
  kvd("closure.f_mu_floor", c.closure.f_mu_floor);
  kvb("closure.kappaT_uses_cv", c.closure.kappa_t_uses_cv);
  kvb("closure.d_q1_printed_form", c.closure.d_q1_printed_form);
  kv("closure.symmetry_assumption", c.closure.symmetry_assumption);
  kvi("grid.nx", c.grid.nx);
  kvi("grid.ny", c.grid.ny);
  kvd("grid.y_plus_first", c.grid.y_plus_first);
  kvd("grid.length", c.grid.length);
  kvd("grid.height", c.grid.height);
  kvd("run.re_theta_inlet", c.run.re_theta_inlet);
  kvd("run.mach", c.run.mach);
  kvd("run.relaxation", c.run.relaxation);
  kvd("run.tol", c.run.tol);
  kvi("run.max_iters", c.run.max_iters);
  kvi("run.substeps", c.run.substeps);
  kvi("run.seed", static_cast<long long>(c.run.seed));
  kvb("run.energy_equation", c.run.energy_equation);
  kvb("run.newton", c.run.newton);
  kvb("run.strict_entropy_clip", c.run.strict_entropy_clip);
  kvd("run.freestream_ti", c.run.freestream_ti);
  kvd("run.freestream_re_t", c.run.freestream_re_t);
  kvd("run.penalty_y_plus", c.run.penalty_y_plus);
  kv("output.dir", c.output.dir);
  kv("output.format", c.output.format);
  kv("output.profile_re_theta", c.output.profile_re_theta);
}

}  // namespace entrostab
