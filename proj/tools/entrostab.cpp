#include "entrostab/config.hpp"
#include "entrostab/correlations.hpp"
#include "entrostab/csv.hpp"
#include "entrostab/field_io.hpp"
#include "entrostab/runners.hpp"

#include <CLI11.hpp>

#include <clocale>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitProperty = 2;
constexpr int kExitNoConvergence = 3;

entrostab::RunConfig load(const std::string& config_path, const std::string& out_dir,
                          long long seed) {
  entrostab::RunConfig cfg = entrostab::parse_config(config_path);
  if (!out_dir.empty()) cfg.output.dir = out_dir;
  if (seed >= 0) cfg.run.seed = static_cast<std::uint64_t>(seed);
  return cfg;
}

std::vector<double> parse_list(const std::string& csv_list) {
  std::vector<double> out;
  std::stringstream ss(csv_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_NUMERIC, "C");

  CLI::App app{"Entropy-consistent two-equation turbulence model toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --config/--out/--seed may follow the subcommand

  std::string config_path;
  std::string out_dir;
  long long seed = -1;
  app.add_option("--config", config_path, "Config file (section.key = value lines)");
  app.add_option("--out", out_dir, "Output directory (overrides output.dir)");
  app.add_option("--seed", seed, "Random seed (overrides run.seed)");

  auto* verify = app.add_subcommand("verify", "Matrix symmetry and definiteness sweep");
  int n_samples = 1000;
  bool symmetry_off = false;
  verify->add_option("--samples", n_samples, "Number of sampled states");
  verify->add_flag("--symmetry-off", symmetry_off,
                   "Drop the mu_q1 = mu_eps tie to demonstrate the loss of symmetry");

  auto* flatplate = app.add_subcommand("flatplate", "Flat-plate boundary-layer run");

  auto* budget = app.add_subcommand("budget", "Entropy budget of a saved field");
  std::string field_path;
  double budget_re_theta = 0.0;
  budget->add_option("--field", field_path, "field.csv from a flatplate run")->required();
  budget->add_option("--retheta", budget_re_theta,
                     "Only the station nearest this Re_theta (default: all stations)");

  auto* correlate = app.add_subcommand("correlate", "Skin-friction correlation table");
  std::string re_theta_list = "2000,3000,5000,8000,10000,15000,20000";
  correlate->add_option("--re-theta", re_theta_list, "Comma-separated Re_theta values");

  CLI11_PARSE(app, argc, argv);

  try {
    const entrostab::RunConfig cfg = load(config_path, out_dir, seed);
    namespace fs = std::filesystem;

    if (*verify) {
      fs::create_directories(cfg.output.dir);
      const std::string out = (fs::path(cfg.output.dir) / "verify.csv").string();
      std::ofstream os(out);
      const entrostab::VerifyReport rep =
          entrostab::run_verify(cfg, n_samples, cfg.run.seed, os, !symmetry_off);
      std::cout << "a0: asymmetry " << entrostab::format_full(rep.a0_asym) << ", min eig "
                << entrostab::format_full(rep.a0_min_eig) << "\n";
      std::cout << "ai: asymmetry " << entrostab::format_full(rep.ai_asym) << "\n";
      std::cout << "k:  asymmetry " << entrostab::format_full(rep.k_asym)
                << ", min eig / norm " << entrostab::format_full(rep.k_min_eig_rel) << "\n";
      std::cout << "report: " << out << "\n";
      if (n_samples <= 0) {
        std::cout << "warning: no samples requested, trivial pass\n";
        return kExitOk;
      }
      std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
      return rep.pass ? kExitOk : kExitProperty;
    }

    if (*flatplate) {
      const entrostab::FlatplateResult result = entrostab::run_flatplate(cfg);
      for (const std::string& f : result.files_written) std::cout << f << "\n";
      std::cout << "final Re_theta "
                << entrostab::format_full(result.field.stations.back().re_theta) << "\n";
      return kExitOk;
    }

    if (*budget) {
      const entrostab::GasModel gas = cfg.gas_model();
      const entrostab::SolutionField field =
          entrostab::load_field(field_path, gas, cfg.u_edge());
      fs::create_directories(cfg.output.dir);
      const std::string out = (fs::path(cfg.output.dir) / "budget.csv").string();
      std::ofstream os(out);
      entrostab::run_budget(field, cfg, budget_re_theta, os);
      std::cout << out << "\n";
      return kExitOk;
    }

    if (*correlate) {
      const std::vector<double> list = parse_list(re_theta_list);
      fs::create_directories(cfg.output.dir);
      const std::string out = (fs::path(cfg.output.dir) / "correlate.csv").string();
      std::ofstream os(out);
      entrostab::run_correlate(list, os);
      std::cout << out << "\n";
      return kExitOk;
    }
  } catch (const entrostab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const entrostab::ConvergenceError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    if (!e.residual_history.empty()) {
      std::cerr << "residual history (tail):";
      for (const double r : e.residual_history) {
        std::cerr << ' ' << entrostab::format_full(r);
      }
      std::cerr << "\n";
    }
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
