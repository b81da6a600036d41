#include "entrostab/correlations.hpp"

#include <cmath>
#include <stdexcept>

namespace entrostab {

double cf_karman_schoenherr(double re_theta) {
  if (!(re_theta >= 1.0)) {
    throw std::domain_error("cf_karman_schoenherr: Re_theta must be >= 1");
  }
  const double l = std::log10(re_theta);
  return 1.0 / (17.08 * l * l + 25.11 * l + 6.012);
}

double u_tau_estimate(double re_theta, double u_edge) {
  return u_edge * std::sqrt(0.5 * cf_karman_schoenherr(re_theta));
}

double u_plus_composite(double y_plus, double kappa, double B) {
  // Reichardt's blend with the additive constant chosen so the log-region
  // asymptote is (1/kappa) ln y+ + B.
  const double c = B - std::log(kappa) / kappa;
  return std::log1p(kappa * y_plus) / kappa +
         c * (1.0 - std::exp(-y_plus / 11.0) - y_plus / 11.0 * std::exp(-y_plus / 3.0));
}

std::vector<double> re_theta_growth(const std::vector<double>& x, double re_theta_inlet,
                                    double u_edge, double nu) {
  std::vector<double> re(x.size());
  if (x.empty()) return re;
  re[0] = re_theta_inlet;
  // RK2 on d(Re_theta)/dx = (U_e/nu) Cf(Re_theta)/2
  const double scale = u_edge / nu;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double dx = x[i] - x[i - 1];
    const double k1 = scale * 0.5 * cf_karman_schoenherr(re[i - 1]);
    const double k2 = scale * 0.5 * cf_karman_schoenherr(re[i - 1] + dx * k1);
    re[i] = re[i - 1] + 0.5 * dx * (k1 + k2);
  }
  return re;
}

}  // namespace entrostab
