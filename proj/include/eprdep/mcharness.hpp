#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eprdep/bellagg.hpp"

namespace eprdep {

/// Membership of a config in the events U (|b| <= 2), V (total flow in
/// [0, 2 ln 2]) and VS (total signed flow in [0, 4 ln 2]). All boundaries are
/// inclusive.
struct EventMembership {
  bool in_U;
  bool in_V;
  bool in_VS;

  bool operator==(const EventMembership&) const = default;
};

struct Interval {
  double lower;
  double upper;

  bool contains(double x) const { return lower <= x && x <= upper; }
  bool operator==(const Interval&) const = default;
};

/// Mergeable reduction state of a Monte Carlo run. Merging is associative and
/// commutative, so any partition of the sample range folds to the same value.
struct EventTally {
  std::uint64_t samples = 0;
  std::uint64_t in_U = 0;
  std::uint64_t in_V = 0;
  std::uint64_t in_VS = 0;
  std::uint64_t in_U_and_V = 0;
  std::uint64_t in_U_and_VS = 0;
  // Extremes of the flows over samples in U; meaningful only if in_U > 0.
  double min_flow_in_U = 0.0;
  double max_flow_in_U = 0.0;
  double min_signed_flow_in_U = 0.0;
  double max_signed_flow_in_U = 0.0;
  // Samples outside U that nevertheless carry zero total flow. Always 0.
  std::uint64_t violations_without_flow = 0;

  void add(const BellReport& report, const EventMembership& m);
  void merge(const EventTally& other);
};

struct MonteCarloReport {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  EventTally tally;

  double alpha_hat = 0.0;   // U
  double beta_hat = 0.0;    // V
  double beta_s_hat = 0.0;  // VS
  double tau_hat = 0.0;     // U and V
  double tau_s_hat = 0.0;   // U and VS

  // Empty when the denominator (alpha_hat or 1 - alpha_hat) is zero.
  std::optional<double> cond_Vc_given_U;
  std::optional<double> cond_V_given_Uc;
  std::optional<double> cond_VSc_given_U;
  std::optional<double> cond_VS_given_Uc;

  // Empty when no sample falls in U.
  std::optional<Interval> flow_range_in_U;         // [L(n), J(n)]
  std::optional<Interval> signed_flow_range_in_U;  // [LS(n), JS(n)]

  Interval frechet_V{0.0, 0.0};
  Interval frechet_VS{0.0, 0.0};

  /// Names of the conditional probabilities that are undefined for this run.
  std::vector<std::string> undefined_conditionals() const;
};

/// Four independent uniforms on [0, pi], a pure function of (seed, index).
AngleConfig sample_config(std::uint64_t seed, std::uint64_t index);

EventMembership classify(const BellReport& report);
EventMembership classify(const AngleConfig& c);

/// [max(0, alpha + beta - 1), min(alpha, beta)]. Throws std::domain_error for
/// inputs outside [0, 1].
Interval frechet_interval(double alpha, double beta);

/// Same bounds for event counts a, b out of n samples. Evaluated on the
/// integers, so a count-derived proportion that satisfies the bounds exactly
/// also lies inside the returned interval.
Interval frechet_interval_from_counts(std::uint64_t a, std::uint64_t b, std::uint64_t n);

/// Folds samples [first, last) of the stream identified by seed.
EventTally tally_samples(std::uint64_t seed, std::uint64_t first, std::uint64_t last);

/// Builds the estimators and derived quantities from a finished tally.
MonteCarloReport make_report(const EventTally& tally, std::uint64_t seed);

/// Samples are processed in fixed-size chunks spread over `workers` threads;
/// the report is identical for every worker count. Throws
/// std::invalid_argument if n == 0.
MonteCarloReport run_monte_carlo(std::uint64_t n, std::uint64_t seed, unsigned workers = 1);

inline constexpr std::uint64_t kMonteCarloChunk = 8192;

/// Uncertainty-relation summary for one event pair (U, W), W being V or VS.
struct PairDiagnostic {
  std::optional<double> cond_Wc_given_U;
  std::optional<double> cond_W_given_Uc;
  std::optional<double> max_conditional;  // empty if either conditional is undefined
  Interval frechet;
  double tau;
  double tolerance;          // 2 / sqrt(n)
  bool at_upper_endpoint;    // tau ~ min(alpha, beta): inclusion up to a null set
  bool at_lower_endpoint;    // tau ~ max(0, alpha + beta - 1)
};

struct UncertaintyDiagnostic {
  PairDiagnostic u_v;
  PairDiagnostic u_vs;
};

PairDiagnostic diagnose_pair(std::uint64_t n, double alpha, double beta, double tau);
UncertaintyDiagnostic uncertainty_diagnostic(const MonteCarloReport& report);

}  // namespace eprdep
