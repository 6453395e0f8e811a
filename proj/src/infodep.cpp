#include "eprdep/infodep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eprdep {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

// (1 + x) ln(1 + x), continuous at x = -1.
double shifted_xlogx(double x) { return x == -1.0 ? 0.0 : (1.0 + x) * std::log1p(x); }

// 2 ln 2 - E(theta) written in x = 4 theta - 1. Each log1p term is accurate
// near x = 0, so the result keeps full relative precision where the
// mutual information is of order x^2.
double mutual_information(double theta) {
  const double x = 4.0 * theta - 1.0;
  return 0.5 * (shifted_xlogx(x) + shifted_xlogx(-x));
}

constexpr int kBisectionIterations = 100;
constexpr double kBisectionTolerance = 1e-12;

}  // namespace

Theta::Theta(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 0.5)) {
    throw std::domain_error("theta " + std::to_string(value) +
                            " outside [0, 1/2]");
  }
}

Theta theta_of_angles(Angle mu, Angle nu) {
  const double s = std::sin((mu.radians() - nu.radians()) / 2);
  const double theta = 0.5 * s * s;
  // Angles carry ~1e-16 representation error (pi/2 is not a double), so a
  // theta this close to 1/4 cannot be told apart from independence.
  if (std::abs(theta - 0.25) <= kIndependenceSnap) return Theta{0.25};
  return Theta{theta};
}

double entropy(Theta theta) {
  const double t = theta.value();
  return -2.0 * xlogx(t) - 2.0 * xlogx(0.5 - t);
}

double degree_of_dependence(Theta theta) {
  const double mi = mutual_information(theta.value()) / kLn2;
  return theta.value() <= 0.25 ? -mi : mi;
}

Theta inverse_degree(double e_value) {
  if (!(e_value >= -1.0 && e_value <= 1.0)) {
    throw std::domain_error("degree of dependence " + std::to_string(e_value) +
                            " outside [-1, 1]");
  }
  if (e_value == 0.0) return Theta{0.25};

  // The sign of e fixes the branch; e is monotone on each half.
  double lo = e_value < 0.0 ? 0.0 : 0.25;
  double hi = e_value < 0.0 ? 0.25 : 0.5;
  for (int i = 0; i < kBisectionIterations && hi - lo > kBisectionTolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (degree_of_dependence(Theta{mid}) < e_value) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (e_value == -1.0) return Theta{0.0};
  if (e_value == 1.0) return Theta{0.5};
  return Theta{0.5 * (lo + hi)};
}

double info_flow(Theta theta) { return std::abs(degree_of_dependence(theta)) * kLn2; }

double info_flow_from_distribution(Theta theta) {
  const auto d = distribution_of_theta(theta);
  double sum = 0.0;
  for (double xi : d.probabilities()) sum += xi == 0.0 ? 0.0 : xi * std::log(4.0 * xi);
  return sum;
}

double signed_info_flow(Theta theta) { return degree_of_dependence(theta) * kLn2; }

JointDistribution distribution_of_theta(Theta theta) {
  const double t = theta.value();
  return JointDistribution{t, 0.5 - t, 0.5 - t, t};
}

JointDistribution distribution_from_signed_flow(double signed_flow) {
  if (!(std::abs(signed_flow) <= kLn2 + kSignedFlowRoundingSlack)) {
    throw std::domain_error("signed information flow " +
                            std::to_string(signed_flow) + " outside [-ln 2, ln 2]");
  }
  double e = signed_flow / kLn2;
  if (e > 1.0) e = 1.0;
  if (e < -1.0) e = -1.0;
  return distribution_of_theta(inverse_degree(e));
}

DependenceProfile dependence_profile(Theta theta) {
  const double e = degree_of_dependence(theta);
  return DependenceProfile{theta, entropy(theta), e, std::abs(e) * kLn2, e * kLn2};
}

}  // namespace eprdep
