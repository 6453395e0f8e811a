#include "eprdep/mcharness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "eprdep/counter_rng.hpp"

namespace eprdep {

namespace {

constexpr double kLn2 = std::numbers::ln2;

std::optional<double> ratio(double num, double den) {
  if (den == 0.0) return std::nullopt;
  return num / den;
}

}  // namespace

void EventTally::add(const BellReport& report, const EventMembership& m) {
  ++samples;
  if (m.in_V) ++in_V;
  if (m.in_VS) ++in_VS;
  if (m.in_U) {
    if (in_U == 0) {
      min_flow_in_U = max_flow_in_U = report.total_flow;
      min_signed_flow_in_U = max_signed_flow_in_U = report.total_signed_flow;
    } else {
      min_flow_in_U = std::min(min_flow_in_U, report.total_flow);
      max_flow_in_U = std::max(max_flow_in_U, report.total_flow);
      min_signed_flow_in_U = std::min(min_signed_flow_in_U, report.total_signed_flow);
      max_signed_flow_in_U = std::max(max_signed_flow_in_U, report.total_signed_flow);
    }
    ++in_U;
    if (m.in_V) ++in_U_and_V;
    if (m.in_VS) ++in_U_and_VS;
  } else if (report.total_flow <= 0.0) {
    ++violations_without_flow;
  }
}

void EventTally::merge(const EventTally& other) {
  if (other.in_U > 0) {
    if (in_U == 0) {
      min_flow_in_U = other.min_flow_in_U;
      max_flow_in_U = other.max_flow_in_U;
      min_signed_flow_in_U = other.min_signed_flow_in_U;
      max_signed_flow_in_U = other.max_signed_flow_in_U;
    } else {
      min_flow_in_U = std::min(min_flow_in_U, other.min_flow_in_U);
      max_flow_in_U = std::max(max_flow_in_U, other.max_flow_in_U);
      min_signed_flow_in_U = std::min(min_signed_flow_in_U, other.min_signed_flow_in_U);
      max_signed_flow_in_U = std::max(max_signed_flow_in_U, other.max_signed_flow_in_U);
    }
  }
  samples += other.samples;
  in_U += other.in_U;
  in_V += other.in_V;
  in_VS += other.in_VS;
  in_U_and_V += other.in_U_and_V;
  in_U_and_VS += other.in_U_and_VS;
  violations_without_flow += other.violations_without_flow;
}

std::vector<std::string> MonteCarloReport::undefined_conditionals() const {
  std::vector<std::string> names;
  if (!cond_Vc_given_U) names.emplace_back("cond_Vc_given_U");
  if (!cond_V_given_Uc) names.emplace_back("cond_V_given_Uc");
  if (!cond_VSc_given_U) names.emplace_back("cond_VSc_given_U");
  if (!cond_VS_given_Uc) names.emplace_back("cond_VS_given_Uc");
  return names;
}

AngleConfig sample_config(std::uint64_t seed, std::uint64_t index) {
  const CounterRng rng(seed);
  const std::uint64_t base = 4 * index;
  auto draw = [&](std::uint64_t k) { return std::numbers::pi * rng.uniform(base + k); };
  return AngleConfig::from_radians(draw(0), draw(1), draw(2), draw(3));
}

EventMembership classify(const BellReport& report) {
  return EventMembership{std::abs(report.bell_value) <= 2.0,
                         report.total_flow >= 0.0 && report.total_flow <= 2.0 * kLn2,
                         report.total_signed_flow >= 0.0 &&
                             report.total_signed_flow <= 4.0 * kLn2};
}

EventMembership classify(const AngleConfig& c) { return classify(bell_report(c)); }

Interval frechet_interval(double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0)) {
    throw std::domain_error("Frechet bounds need probabilities in [0, 1]");
  }
  const double upper = std::min(alpha, beta);
  return Interval{std::min(upper, std::max(0.0, alpha + beta - 1.0)), upper};
}

Interval frechet_interval_from_counts(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  if (a > n || b > n || n == 0) throw std::domain_error("Frechet bounds need counts within n");
  const std::uint64_t lower = a + b > n ? a + b - n : 0;
  const double total = static_cast<double>(n);
  return Interval{static_cast<double>(lower) / total, static_cast<double>(std::min(a, b)) / total};
}

EventTally tally_samples(std::uint64_t seed, std::uint64_t first, std::uint64_t last) {
  EventTally tally;
  for (std::uint64_t i = first; i < last; ++i) {
    const BellReport r = bell_report(sample_config(seed, i));
    tally.add(r, classify(r));
  }
  return tally;
}

MonteCarloReport make_report(const EventTally& tally, std::uint64_t seed) {
  if (tally.samples == 0) throw std::invalid_argument("empty Monte Carlo tally");
  MonteCarloReport r;
  r.n = tally.samples;
  r.seed = seed;
  r.tally = tally;

  const double n = static_cast<double>(tally.samples);
  r.alpha_hat = static_cast<double>(tally.in_U) / n;
  r.beta_hat = static_cast<double>(tally.in_V) / n;
  r.beta_s_hat = static_cast<double>(tally.in_VS) / n;
  r.tau_hat = static_cast<double>(tally.in_U_and_V) / n;
  r.tau_s_hat = static_cast<double>(tally.in_U_and_VS) / n;

  const double outside = static_cast<double>(tally.samples - tally.in_U) / n;
  r.cond_Vc_given_U = ratio(r.alpha_hat - r.tau_hat, r.alpha_hat);
  r.cond_V_given_Uc = ratio(r.beta_hat - r.tau_hat, outside);
  r.cond_VSc_given_U = ratio(r.alpha_hat - r.tau_s_hat, r.alpha_hat);
  r.cond_VS_given_Uc = ratio(r.beta_s_hat - r.tau_s_hat, outside);

  if (tally.in_U > 0) {
    r.flow_range_in_U = Interval{tally.min_flow_in_U, tally.max_flow_in_U};
    r.signed_flow_range_in_U = Interval{tally.min_signed_flow_in_U, tally.max_signed_flow_in_U};
  }
  r.frechet_V = frechet_interval_from_counts(tally.in_U, tally.in_V, tally.samples);
  r.frechet_VS = frechet_interval_from_counts(tally.in_U, tally.in_VS, tally.samples);
  return r;
}

MonteCarloReport run_monte_carlo(std::uint64_t n, std::uint64_t seed, unsigned workers) {
  if (n == 0) throw std::invalid_argument("Monte Carlo sample size must be at least 1");
  const std::uint64_t chunks = (n + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<EventTally> partial(chunks);

  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t first = c * kMonteCarloChunk;
    partial[c] = tally_samples(seed, first, std::min(n, first + kMonteCarloChunk));
  };

  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), chunks));
  if (threads == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
  }

  EventTally total;
  for (const auto& p : partial) total.merge(p);
  return make_report(total, seed);
}

PairDiagnostic diagnose_pair(std::uint64_t n, double alpha, double beta, double tau) {
  if (n == 0) throw std::invalid_argument("diagnostic needs a positive sample size");
  PairDiagnostic d{};
  d.cond_Wc_given_U = ratio(alpha - tau, alpha);
  d.cond_W_given_Uc = ratio(beta - tau, 1.0 - alpha);
  if (d.cond_Wc_given_U && d.cond_W_given_Uc) {
    d.max_conditional = std::max(*d.cond_Wc_given_U, *d.cond_W_given_Uc);
  }
  d.frechet = frechet_interval(alpha, beta);
  d.tau = tau;
  d.tolerance = 2.0 / std::sqrt(static_cast<double>(n));
  d.at_upper_endpoint = std::abs(tau - d.frechet.upper) <= d.tolerance;
  d.at_lower_endpoint = std::abs(tau - d.frechet.lower) <= d.tolerance;
  return d;
}

UncertaintyDiagnostic uncertainty_diagnostic(const MonteCarloReport& report) {
  return UncertaintyDiagnostic{
      diagnose_pair(report.n, report.alpha_hat, report.beta_hat, report.tau_hat),
      diagnose_pair(report.n, report.alpha_hat, report.beta_s_hat, report.tau_s_hat)};
}

}  // namespace eprdep
