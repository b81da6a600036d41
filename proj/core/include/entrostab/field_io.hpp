#pragma once

#include "entrostab/gas.hpp"
#include "entrostab/solver.hpp"

#include <iosfwd>
#include <string>

namespace entrostab {

/// Plain-text solution field: one row per node with full-precision values,
/// columns (station, x, y, rho, u1, u2, T, q0, q1).
void save_field(const SolutionField& field, std::ostream& os);
void save_field(const SolutionField& field, const std::string& path);

/// Rebuilds the field (grid, states, diagnostics) from a saved file.
SolutionField load_field(const std::string& path, const GasModel& gas, double u_edge);

}  // namespace entrostab
