#include "eprdep/qcore.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "eprdep/counter_rng.hpp"

namespace eprdep {

Angle::Angle(double radians) : value_(radians) {
  if (!(radians >= 0.0 && radians <= std::numbers::pi)) {
    throw std::domain_error("angle " + std::to_string(radians) +
                            " outside [0, pi]");
  }
}

Vector2 Operator2::apply(const Vector2& v) const {
  return {entries[0][0] * v[0] + entries[0][1] * v[1],
          entries[1][0] * v[0] + entries[1][1] * v[1]};
}

Complex Operator2::trace() const { return entries[0][0] + entries[1][1]; }

bool Operator2::is_self_adjoint(double tol) const {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      if (std::abs(entries[r][c] - std::conj(entries[c][r])) > tol) return false;
    }
  }
  return true;
}

State4::State4(const Coordinates& coordinates) : coords_(coordinates) {
  const double n = norm();
  if (!(std::abs(n - 1.0) <= kNormalizationTolerance)) {
    throw std::invalid_argument("state is not normalized (norm " +
                                std::to_string(n) + ")");
  }
}

double State4::norm() const {
  double sq = 0.0;
  for (const auto& c : coords_) sq += std::norm(c);
  return std::sqrt(sq);
}

JointDistribution::JointDistribution(double xi11, double xi12, double xi21,
                                     double xi22)
    : p_{xi11, xi12, xi21, xi22} {
  double sum = 0.0;
  for (double p : p_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("joint probability " + std::to_string(p) +
                                  " outside [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("joint probabilities sum to " +
                                std::to_string(sum));
  }
}

Operator2 polarizer_operator(Angle mu) {
  const double c = std::cos(mu.radians());
  const double s = std::sin(mu.radians());
  return Operator2{{{{Complex{c}, Complex{s}}, {Complex{s}, Complex{-c}}}}};
}

Eigensystem eigensystem(Angle mu) {
  const double c = std::cos(mu.radians() / 2);
  const double s = std::sin(mu.radians() / 2);
  return Eigensystem{{1.0, -1.0},
                     {Vector2{Complex{c}, Complex{s}},
                      Vector2{Complex{-s}, Complex{c}}}};
}

State4 singlet_state() {
  const double r = 1.0 / std::numbers::sqrt2;
  return State4{{Complex{0.0}, Complex{r}, Complex{-r}, Complex{0.0}}};
}

JointDistribution joint_distribution(const State4& psi, Angle mu, Angle nu) {
  const auto ea = eigensystem(mu);
  const auto eb = eigensystem(nu);
  const auto& c = psi.coordinates();
  const double norm_sq = psi.norm() * psi.norm();

  std::array<double, 4> p{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Vector2& u = ea.eigenvectors[i];
      const Vector2& v = eb.eigenvectors[j];
      // <u x v | psi>, product-frame coordinates of u x v are u_a v_b.
      Complex amp = std::conj(u[0] * v[0]) * c[0] + std::conj(u[0] * v[1]) * c[1] +
                    std::conj(u[1] * v[0]) * c[2] + std::conj(u[1] * v[1]) * c[3];
      p[2 * i + j] = std::norm(amp) / norm_sq;
    }
  }
  return JointDistribution{p[0], p[1], p[2], p[3]};
}

JointDistribution singlet_joint_closed_form(Angle mu, Angle nu) {
  const double half = (mu.radians() - nu.radians()) / 2;
  const double s = std::sin(half);
  const double c = std::cos(half);
  const double same = 0.5 * s * s;
  const double diff = 0.5 * c * c;
  return JointDistribution{same, diff, diff, same};
}

Marginals marginals(const JointDistribution& d) {
  return Marginals{{d.xi11() + d.xi12(), d.xi21() + d.xi22()},
                   {d.xi11() + d.xi21(), d.xi12() + d.xi22()}};
}

double product_expectation(const JointDistribution& d) {
  return d.xi11() - d.xi12() - d.xi21() + d.xi22();
}

OutcomeCounts sample_joint_outcomes(const JointDistribution& d, std::uint64_t n,
                                    std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample size must be at least 1");

  const auto& p = d.probabilities();
  const std::array<double, 3> cdf{p[0], p[0] + p[1], p[0] + p[1] + p[2]};
  // Rounding can leave cdf[2] slightly below 1; the remainder goes to the
  // last outcome that actually has positive mass.
  int last = 3;
  while (last > 0 && p[last] == 0.0) --last;

  const CounterRng rng(seed, /*stream=*/1);
  OutcomeCounts counts{};
  for (std::uint64_t k = 0; k < n; ++k) {
    const double u = rng.uniform(k);
    int outcome = last;
    for (int i = 0; i < 3; ++i) {
      if (u < cdf[i]) {
        outcome = i;
        break;
      }
    }
    ++counts[outcome];
  }
  return counts;
}

}  // namespace eprdep
