#pragma once

#include "eprdep/qcore.hpp"

namespace eprdep {

/// Parameter of the singlet joint distribution (theta, 1/2-theta, 1/2-theta,
/// theta); theta = Pr(A and B) lies in [0, 1/2].
class Theta {
 public:
  explicit Theta(double value);

  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// All information quantities are in nats.
struct DependenceProfile {
  Theta theta;
  double entropy;      // E(theta), in [ln 2, 2 ln 2]
  double degree;       // e(theta), in [-1, 1]
  double info_flow;    // |e| ln 2
  double signed_flow;  // e ln 2
};

/// theta = sin^2((mu - nu) / 2) / 2, snapped to exactly 1/4 when within
/// kIndependenceSnap of it.
Theta theta_of_angles(Angle mu, Angle nu);

inline constexpr double kIndependenceSnap = 1e-15;

/// Shannon entropy of the four-outcome distribution, with 0 ln 0 = 0.
double entropy(Theta theta);

/// Degree of dependence: -2 + E/ln 2 on [0, 1/4], 2 - E/ln 2 on [1/4, 1/2].
/// Strictly increasing from -1 to 1, zero exactly at theta = 1/4.
double degree_of_dependence(Theta theta);

/// Unique theta with degree_of_dependence(theta) == e_value, by bisection.
/// Throws std::domain_error if e_value is outside [-1, 1].
Theta inverse_degree(double e_value);

/// Mutual information between the two binary trials, |e(theta)| ln 2.
double info_flow(Theta theta);

/// Mutual information evaluated directly as sum xi ln(4 xi) over the four
/// outcomes. Independent of the degree function; used as a cross-check.
double info_flow_from_distribution(Theta theta);

/// e(theta) ln 2.
double signed_info_flow(Theta theta);

/// (theta, 1/2 - theta, 1/2 - theta, theta).
JointDistribution distribution_of_theta(Theta theta);

/// Inverts the signed flow back to theta and the joint distribution.
/// Inputs within kSignedFlowRoundingSlack of +-ln 2 are clamped; anything
/// further out throws std::domain_error.
JointDistribution distribution_from_signed_flow(double signed_flow);

/// Half a unit in the 7th decimal: lets 7-digit renderings of +-ln 2 through.
inline constexpr double kSignedFlowRoundingSlack = 5e-8;

DependenceProfile dependence_profile(Theta theta);

}  // namespace eprdep
