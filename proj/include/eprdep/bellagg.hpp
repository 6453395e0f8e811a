#pragma once

#include <array>

#include "eprdep/infodep.hpp"
#include "eprdep/qcore.hpp"

namespace eprdep {

/// Two polarizer settings per leg.
struct AngleConfig {
  Angle mu1;
  Angle mu2;
  Angle nu1;
  Angle nu2;

  static AngleConfig from_radians(double mu1, double mu2, double nu1, double nu2) {
    return AngleConfig{Angle{mu1}, Angle{mu2}, Angle{nu1}, Angle{nu2}};
  }
  Angle mu(int i) const { return i == 0 ? mu1 : mu2; }
  Angle nu(int j) const { return j == 0 ? nu1 : nu2; }
};

template <typename T>
using PerPair = std::array<std::array<T, 2>, 2>;  // indexed [i][j] for (mu_i, nu_j)

struct BellReport {
  AngleConfig config;
  PerPair<Theta> thetas;
  PerPair<double> degrees;
  double bell_value;
  double total_flow;         // ln 2 * sum |e_ij|, nats
  double total_signed_flow;  // ln 2 * sum e_ij, nats
  double degree_sum;         // sum e_ij
  double abs_degree_sum;     // sum |e_ij|
  bool violates_bell;        // |b| > 2, no tolerance band
};

/// cos(mu1-nu1) + cos(mu1-nu2) + cos(mu2-nu1) - cos(mu2-nu2).
double bell_functional(const AngleConfig& c);

BellReport bell_report(const AngleConfig& c);

/// (pi/2, 0, pi/4, 3pi/4), where |b| reaches 2 sqrt 2.
AngleConfig tsirelson_config();

/// True unless the config violates Bell's inequality with zero total flow.
/// Must hold for every config.
bool violation_implies_flow_check(const AngleConfig& c);

}  // namespace eprdep
