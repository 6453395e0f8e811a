#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>

namespace eprdep {

/// Tolerance for algebraic identities (eigen-equations, closed forms, sums).
inline constexpr double kAlgebraicTolerance = 1e-12;
/// Tolerance applied when validating caller-supplied normalizations.
inline constexpr double kNormalizationTolerance = 1e-9;

/// Polarizer angle in radians on the closed interval [0, pi].
///
/// Values outside the interval are rejected; there is no reduction mod pi.
class Angle {
 public:
  explicit Angle(double radians);

  double radians() const noexcept { return value_; }

 private:
  double value_;
};

using Complex = std::complex<double>;
using Vector2 = std::array<Complex, 2>;

/// 2x2 operator on the one-photon space, in the frame (h1, h2).
struct Operator2 {
  std::array<std::array<Complex, 2>, 2> entries{};

  Vector2 apply(const Vector2& v) const;
  Complex trace() const;
  bool is_self_adjoint(double tol = kAlgebraicTolerance) const;
};

struct Eigensystem {
  std::array<double, 2> eigenvalues{};
  std::array<Vector2, 2> eigenvectors{};
};

/// Unit vector of the two-photon space, coordinates w.r.t.
/// (h1 x h1, h1 x h2, h2 x h1, h2 x h2).
class State4 {
 public:
  using Coordinates = std::array<Complex, 4>;

  /// Throws std::invalid_argument if the norm deviates from 1 by more than
  /// kNormalizationTolerance.
  explicit State4(const Coordinates& coordinates);

  const Coordinates& coordinates() const noexcept { return coords_; }
  double norm() const;

 private:
  Coordinates coords_;
};

/// Probabilities of the four joint outcomes, ordered by
/// (A eigenvalue index, B eigenvalue index): 11, 12, 21, 22.
class JointDistribution {
 public:
  /// Throws std::invalid_argument unless every entry lies in [0,1] and the
  /// entries sum to 1 within kNormalizationTolerance.
  JointDistribution(double xi11, double xi12, double xi21, double xi22);

  double xi11() const noexcept { return p_[0]; }
  double xi12() const noexcept { return p_[1]; }
  double xi21() const noexcept { return p_[2]; }
  double xi22() const noexcept { return p_[3]; }
  const std::array<double, 4>& probabilities() const noexcept { return p_; }

 private:
  std::array<double, 4> p_;
};

struct Marginals {
  std::array<double, 2> a;  // Pr(A = lambda_1), Pr(A = lambda_2)
  std::array<double, 2> b;
};

Operator2 polarizer_operator(Angle mu);

/// lambda_1 = 1 with u1 = (cos mu/2, sin mu/2); lambda_2 = -1 with
/// u2 = (-sin mu/2, cos mu/2).
Eigensystem eigensystem(Angle mu);

/// (h1 x h2 - h2 x h1) / sqrt(2).
State4 singlet_state();

/// xi_ij = |<u_i(mu) x u_j(nu) | psi>|^2.
JointDistribution joint_distribution(const State4& psi, Angle mu, Angle nu);

/// Singlet probabilities (s/2, c/2, c/2, s/2) with s = sin^2((mu-nu)/2),
/// c = cos^2((mu-nu)/2).
JointDistribution singlet_joint_closed_form(Angle mu, Angle nu);

Marginals marginals(const JointDistribution& d);

/// Expectation of the product of the two +-1 outcomes.
double product_expectation(const JointDistribution& d);

using OutcomeCounts = std::array<std::uint64_t, 4>;

/// Draws n joint outcomes by inverse CDF over the fixed outcome order.
/// Deterministic in (seed, n); draw k depends only on (seed, k).
/// Throws std::invalid_argument if n == 0.
OutcomeCounts sample_joint_outcomes(const JointDistribution& d, std::uint64_t n,
                                    std::uint64_t seed);

}  // namespace eprdep
