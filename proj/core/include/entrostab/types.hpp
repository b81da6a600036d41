#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <string>

namespace entrostab {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec7 = Eigen::Matrix<double, 7, 1>;
using Mat7 = Eigen::Matrix<double, 7, 7>;
using Mat73 = Eigen::Matrix<double, 7, 3>;
using Mat21 = Eigen::Matrix<double, 21, 21>;

/// Working state at a point: density, velocity, temperature and the two
/// turbulent velocity scales q0 = sqrt(2k) and q1 = (nu*eps)^(1/4).
struct PrimitiveState {
  double rho = 1.0;        // [kg/m^3]
  Vec3 u = Vec3::Zero();   // [m/s]
  double T = 300.0;        // [K]
  double q0 = 0.0;         // [m/s]
  double q1 = 0.0;         // [m/s]

  /// Kinetic + turbulent energy per unit mass, (|u|^2 + q0^2 + q1^2)/2.
  double k_tot() const { return 0.5 * (u.squaredNorm() + q0 * q0 + q1 * q1); }
};

/// Conservation variables [rho, rho*u1, rho*u2, rho*u3, rho*e_tot, rho*q0, rho*q1].
struct ConsVars {
  Vec7 v = Vec7::Zero();
};

/// Entropy variables (1/T)*[mu_hat - k_tot, u1, u2, u3, -1, q0, q1].
struct EntropyVars {
  Vec7 v = Vec7::Zero();
};

/// Spatial gradients of the primitive fields; du(i,j) = d u_i / d x_j.
struct PrimGrads {
  Mat3 du = Mat3::Zero();
  Vec3 dT = Vec3::Zero();
  Vec3 dq0 = Vec3::Zero();
  Vec3 dq1 = Vec3::Zero();

  double div_u() const { return du.trace(); }
};

/// A conservation-variable vector failed an admissibility requirement
/// (non-positive density, negative turbulence scale, or non-positive
/// recovered internal energy).
class NonPhysicalStateError : public std::runtime_error {
 public:
  NonPhysicalStateError(std::string what, Vec7 offending)
      : std::runtime_error(std::move(what)), components(std::move(offending)) {}
  Vec7 components;
};

/// Configuration file or option rejected; carries the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, int line, const std::string& what)
      : std::runtime_error(line > 0 ? key + " (line " + std::to_string(line) + "): " + what
                                    : key + ": " + what),
        key(key),
        line(line) {}
  std::string key;
  int line = 0;
};

/// Iteration budget exhausted while solving; carries the station index and
/// the tail of the residual history.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::string what, int station, std::vector<double> residuals)
      : std::runtime_error(std::move(what)),
        station(station),
        residual_history(std::move(residuals)) {}
  int station = -1;
  std::vector<double> residual_history;
};

}  // namespace entrostab
