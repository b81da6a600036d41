#pragma once

#include "entrostab/config.hpp"
#include "entrostab/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace entrostab {

/// Worst-case matrix properties over the sampled states.
struct VerifyReport {
  double a0_asym = 0;        // max relative asymmetry of A0
  double ai_asym = 0;        // max over directions
  double k_asym = 0;         // stacked [Kij]
  double a0_min_eig = 0;     // smallest eigenvalue seen
  double k_min_eig_rel = 0;  // smallest eigenvalue / matrix norm
  bool pass = false;
};

/// Samples admissible states and measures symmetry and definiteness of the
/// coefficient matrices; one CSV row per sample and matrix family. With
/// enforce_symmetry false the diffusivity tie mu_q1 = mu_eps is dropped,
/// which must surface as asymmetry of [Kij].
VerifyReport run_verify(const RunConfig& cfg, int n_samples, std::uint64_t seed,
                        std::ostream& csv, bool enforce_symmetry = true);

/// Tabulates the Karman-Schoenherr correlation.
void run_correlate(const std::vector<double>& re_theta, std::ostream& csv);

struct FlatplateResult {
  SolutionField field;
  std::vector<std::string> files_written;
};

/// Full flat-plate run: grid, inlet, march, then stations.csv, per-profile
/// CSVs, field.csv, summary.txt and the effective config echo under
/// cfg.output.dir.
FlatplateResult run_flatplate(const RunConfig& cfg);

/// Entropy budget rows for one station column.
void write_budget_station(const SolutionField& field, int station, const RunConfig& cfg,
                          std::ostream& os, bool header);

/// Budget CSV for every station, or only the station nearest re_theta_filter
/// when the filter is positive.
void run_budget(const SolutionField& field, const RunConfig& cfg, double re_theta_filter,
                std::ostream& os);

/// Station index with Re_theta closest to the target.
int nearest_station(const SolutionField& field, double re_theta);

}  // namespace entrostab
