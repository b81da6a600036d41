#pragma once

#include <vector>

namespace entrostab {

/// Karman-Schoenherr flat-plate skin friction:
/// 1/Cf = 17.08 (log10 Re_theta)^2 + 25.11 log10 Re_theta + 6.012.
double cf_karman_schoenherr(double re_theta);

/// Friction velocity estimate u_tau = U_e sqrt(Cf/2) from the correlation.
double u_tau_estimate(double re_theta, double u_edge);

/// Composite inner-law velocity profile (Reichardt form): u+ = y+ in the
/// sublayer, (1/kappa) ln y+ + B in the log region, smooth in between.
double u_plus_composite(double y_plus, double kappa, double B);

/// Momentum-integral growth d(theta)/dx = Cf/2 integrated from the inlet
/// with the correlation closing Cf; returns Re_theta at each x.
std::vector<double> re_theta_growth(const std::vector<double>& x, double re_theta_inlet,
                                    double u_edge, double nu);

}  // namespace entrostab
