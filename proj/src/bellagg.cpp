#include "eprdep/bellagg.hpp"

#include <cmath>
#include <numbers>

namespace eprdep {

double bell_functional(const AngleConfig& c) {
  const double m1 = c.mu1.radians(), m2 = c.mu2.radians();
  const double n1 = c.nu1.radians(), n2 = c.nu2.radians();
  return std::cos(m1 - n1) + std::cos(m1 - n2) + std::cos(m2 - n1) - std::cos(m2 - n2);
}

BellReport bell_report(const AngleConfig& c) {
  const Theta zero{0.0};
  BellReport r{c, {{{zero, zero}, {zero, zero}}}, {}, 0.0, 0.0, 0.0, 0.0, 0.0, false};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      r.thetas[i][j] = theta_of_angles(c.mu(i), c.nu(j));
      r.degrees[i][j] = degree_of_dependence(r.thetas[i][j]);
      r.degree_sum += r.degrees[i][j];
      r.abs_degree_sum += std::abs(r.degrees[i][j]);
    }
  }
  r.total_flow = std::numbers::ln2 * r.abs_degree_sum;
  r.total_signed_flow = std::numbers::ln2 * r.degree_sum;
  r.bell_value = bell_functional(c);
  r.violates_bell = std::abs(r.bell_value) > 2.0;
  return r;
}

AngleConfig tsirelson_config() {
  constexpr double pi = std::numbers::pi;
  return AngleConfig::from_radians(pi / 2, 0.0, pi / 4, 3 * pi / 4);
}

bool violation_implies_flow_check(const AngleConfig& c) {
  const BellReport r = bell_report(c);
  return !r.violates_bell || r.total_flow > 0.0;
}

}  // namespace eprdep
