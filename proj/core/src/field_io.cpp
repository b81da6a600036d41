#include "entrostab/field_io.hpp"

#include "entrostab/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace entrostab {

void save_field(const SolutionField& field, std::ostream& os) {
  os << "# station [-], x [m], y [m], rho [kg/m^3], u1 [m/s], u2 [m/s], T [K], q0 [m/s], "
        "q1 [m/s]\n";
  for (int s = 0; s < field.grid.nx(); ++s) {
    const auto& y = field.grid.y[s];
    for (std::size_t j = 0; j < field.state[s].size(); ++j) {
      const PrimitiveState& st = field.state[s][j];
      os << s << ',' << format_full(field.grid.x[s]) << ',' << format_full(y[j]) << ','
         << format_full(st.rho) << ',' << format_full(st.u[0]) << ',' << format_full(st.u[1])
         << ',' << format_full(st.T) << ',' << format_full(st.q0) << ','
         << format_full(st.q1) << '\n';
    }
  }
}

void save_field(const SolutionField& field, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("save_field: cannot open " + path);
  save_field(field, os);
}

SolutionField load_field(const std::string& path, const GasModel& gas, double u_edge) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("load_field: cannot open " + path);

  SolutionField field;
  std::string line;
  int current_station = -1;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string tok;
    auto next = [&]() {
      if (!std::getline(ss, tok, ',')) {
        throw std::runtime_error("load_field: short row in " + path);
      }
      return tok;
    };
    const int s = std::stoi(next());
    const double x = std::stod(next());
    const double y = std::stod(next());
    PrimitiveState st;
    st.rho = std::stod(next());
    st.u[0] = std::stod(next());
    st.u[1] = std::stod(next());
    st.T = std::stod(next());
    st.q0 = std::stod(next());
    st.q1 = std::stod(next());

    if (s != current_station) {
      if (s != current_station + 1) {
        throw std::runtime_error("load_field: stations out of order in " + path);
      }
      current_station = s;
      field.grid.x.push_back(x);
      field.grid.y.emplace_back();
      field.state.emplace_back();
    }
    field.grid.y.back().push_back(y);
    field.state.back().push_back(st);
  }
  if (field.state.empty()) {
    throw std::runtime_error("load_field: no rows in " + path);
  }
  field.stations.resize(field.grid.nx());
  for (int s = 0; s < field.grid.nx(); ++s) {
    field.stations[s] = diagnose(field.grid.y[s], field.state[s], gas, u_edge);
    field.stations[s].x = field.grid.x[s];
  }
  return field;
}

}  // namespace entrostab
