#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "eprdep/infodep.hpp"

using namespace eprdep;
using std::numbers::ln2;
using std::numbers::pi;

namespace {

// Textbook evaluation, kept separate from the library's log1p route.
double reference_degree(double t) {
  auto xlnx = [](double x) { return x == 0.0 ? 0.0 : x * std::log(x); };
  const double e_val = -2.0 * xlnx(t) - 2.0 * xlnx(0.5 - t);
  return t <= 0.25 ? -2.0 + e_val / ln2 : 2.0 - e_val / ln2;
}

// Grid point minimizing |e(theta) - target| on [lo, hi] with the given step.
double grid_inverse(double target, double lo, double hi, double step) {
  double best = lo, best_err = std::abs(reference_degree(lo) - target);
  for (double t = lo; t <= hi; t += step) {
    const double err = std::abs(reference_degree(t) - target);
    if (err < best_err) {
      best_err = err;
      best = t;
    }
  }
  return best;
}

std::vector<double> theta_samples(std::size_t count, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  std::vector<double> out{0.0, 0.25, 0.5, 1e-300, 0.5 - 1e-16, 0.25 + 1e-9, 0.25 - 1e-9};
  while (out.size() < count) out.push_back(u(gen));
  return out;
}

}  // namespace

TEST_CASE("theta domain") {
  CHECK_NOTHROW(Theta{0.0});
  CHECK_NOTHROW(Theta{0.5});
  CHECK_THROWS_AS(Theta{-1e-18}, std::domain_error);
  CHECK_THROWS_AS(Theta{0.5000001}, std::domain_error);
}

TEST_CASE("theta_of_angles") {
  CHECK(theta_of_angles(Angle{1.3}, Angle{1.3}).value() == 0.0);
  CHECK(std::abs(theta_of_angles(Angle{pi / 8}, Angle{pi / 4}).value() - 0.0190301) <= 1e-7);
  CHECK(theta_of_angles(Angle{pi}, Angle{0.0}).value() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("entropy values and endpoints") {
  CHECK(entropy(Theta{0.25}) == doctest::Approx(2 * ln2).epsilon(1e-15));
  CHECK(entropy(Theta{0.0}) == doctest::Approx(ln2).epsilon(1e-15));
  CHECK(entropy(Theta{0.5}) == doctest::Approx(ln2).epsilon(1e-15));
  // mpmath, 50 digits: 1.2554823251787537
  CHECK(std::abs(entropy(Theta{0.375}) - 1.2554823251787537) <= 1e-14);
  CHECK(std::abs(2 * ln2 - 1.3862944) <= 1e-7);
}

TEST_CASE("degree of dependence values") {
  CHECK(degree_of_dependence(Theta{0.0}) == -1.0);
  CHECK(degree_of_dependence(Theta{0.25}) == 0.0);
  CHECK(degree_of_dependence(Theta{0.5}) == 1.0);
  CHECK(std::abs(degree_of_dependence(Theta{0.375}) - 0.1887219) <= 1e-7);
  CHECK(std::abs(degree_of_dependence(Theta{0.125}) + 0.1887219) <= 1e-7);
  // mpmath oracle values.
  CHECK(std::abs(degree_of_dependence(Theta{0.0334936}) + 0.6454214701382519) <= 1e-13);
  CHECK(std::abs(degree_of_dependence(Theta{0.0335}) + 0.6453728328032746) <= 1e-13);
  CHECK(std::abs(degree_of_dependence(Theta{0.154329}) + 0.10838172833209436) <= 1e-13);
}

TEST_CASE("degree agrees with the textbook entropy formula") {
  for (double t : theta_samples(2000, 11)) {
    CHECK(std::abs(degree_of_dependence(Theta{t}) - reference_degree(t)) <= 1e-12);
  }
}

TEST_CASE("entropy symmetry about 1/4 and antisymmetry of e") {
  for (double t : theta_samples(1000, 5)) {
    CHECK(std::abs(entropy(Theta{t}) - entropy(Theta{0.5 - t})) <= 1e-12);
    CHECK(std::abs(degree_of_dependence(Theta{0.5 - t}) + degree_of_dependence(Theta{t})) <= 1e-10);
  }
}

TEST_CASE("e is strictly increasing") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  for (int k = 0; k < 5000; ++k) {
    double a = u(gen), b = u(gen);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-6) continue;
    CHECK(degree_of_dependence(Theta{a}) < degree_of_dependence(Theta{b}));
  }
  // Right at the independence point, where e is flattest.
  CHECK(degree_of_dependence(Theta{0.25 + 1e-6}) < degree_of_dependence(Theta{0.25 + 2e-6}));
  CHECK(degree_of_dependence(Theta{0.25 - 2e-6}) < degree_of_dependence(Theta{0.25 - 1e-6}));
}

TEST_CASE("information flow: entropy gap and direct mutual information agree") {
  for (int k = 0; k <= 1000; ++k) {
    const Theta t{0.5 * k / 1000.0};
    const double flow = info_flow(t);
    CHECK(std::abs(flow - (2 * ln2 - entropy(t))) <= 1e-12);
    CHECK(std::abs(flow - info_flow_from_distribution(t)) <= 1e-12);
    CHECK(flow >= 0.0);
    CHECK(flow <= ln2 + 1e-15);
  }
}

TEST_CASE("information flow examples") {
  CHECK(info_flow(Theta{0.25}) == 0.0);
  CHECK(info_flow(Theta{0.0}) == doctest::Approx(ln2).epsilon(1e-15));
  // mpmath: |e(0.0190301)| ln 2
  CHECK(std::abs(info_flow(Theta{0.0190301}) - 0.53141759474791786) <= 1e-13);
}

TEST_CASE("signed information flow examples") {
  CHECK(signed_info_flow(Theta{0.25}) == 0.0);
  CHECK(signed_info_flow(Theta{0.5}) == doctest::Approx(ln2).epsilon(1e-15));
  CHECK(std::abs(signed_info_flow(Theta{0.125}) + 0.13081203594113696) <= 1e-13);
  CHECK(std::abs(signed_info_flow(Theta{0.125}) + 0.1308122) <= 1e-6);
}

TEST_CASE("dependence profile") {
  const auto p = dependence_profile(Theta{0.1});
  CHECK(p.info_flow == std::abs(p.degree) * ln2);
  CHECK(p.signed_flow == p.degree * ln2);
  CHECK(p.entropy >= ln2);
  CHECK(p.entropy <= 2 * ln2);
}

TEST_CASE("inverse_degree examples") {
  CHECK(inverse_degree(0.0).value() == 0.25);
  CHECK(inverse_degree(-1.0).value() == 0.0);
  CHECK(inverse_degree(1.0).value() == 0.5);
  const double oracle = grid_inverse(0.1887219, 0.25, 0.5, 1e-7);
  CHECK(std::abs(oracle - 0.375) <= 1e-6);
  CHECK(std::abs(inverse_degree(0.1887219).value() - oracle) <= 2e-7);
  CHECK(std::abs(inverse_degree(0.1887219).value() - 0.375) <= 1e-6);
  CHECK_THROWS_AS(inverse_degree(1.0000001), std::domain_error);
  CHECK_THROWS_AS(inverse_degree(-1.5), std::domain_error);
  CHECK_THROWS_AS(inverse_degree(std::nan("")), std::domain_error);
}

TEST_CASE("inverse_degree round trips") {
  for (double t : theta_samples(3000, 17)) {
    const double e = degree_of_dependence(Theta{t});
    const double back = inverse_degree(e).value();
    CHECK(std::abs(back - t) <= 1e-10);
    CHECK(std::abs(degree_of_dependence(Theta{back}) - e) <= 1e-10);
  }
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    const double x = u(gen);
    CHECK(std::abs(degree_of_dependence(inverse_degree(x)) - x) <= 1e-10);
  }
}

TEST_CASE("distribution_from_signed_flow") {
  const auto uniform = distribution_from_signed_flow(0.0);
  for (double p : uniform.probabilities()) CHECK(p == 0.25);

  const auto negative = distribution_from_signed_flow(-ln2);
  CHECK(negative.probabilities() == std::array<double, 4>{0.0, 0.5, 0.5, 0.0});

  const auto d = distribution_from_signed_flow(0.1887219 * ln2);
  CHECK(std::abs(d.xi11() - 0.375) <= 1e-6);
  CHECK(std::abs(d.xi12() - 0.125) <= 1e-6);
  CHECK(std::abs(d.xi21() - 0.125) <= 1e-6);
  CHECK(std::abs(d.xi22() - 0.375) <= 1e-6);

  // 7-digit rendering of -ln 2 is accepted and clamped.
  CHECK(distribution_from_signed_flow(-0.6931472).xi11() == 0.0);
  CHECK_THROWS_AS(distribution_from_signed_flow(0.7), std::domain_error);
  CHECK_THROWS_AS(distribution_from_signed_flow(-ln2 - 1e-6), std::domain_error);
}

TEST_CASE("independence exactly at |mu - nu| = pi/2") {
  for (double mu : {pi / 2, 2.0, pi}) {
    const double nu = mu - pi / 2;
    CHECK(std::abs(degree_of_dependence(theta_of_angles(Angle{mu}, Angle{nu}))) <= 1e-12);
    CHECK(std::abs(degree_of_dependence(theta_of_angles(Angle{mu}, Angle{nu + 0.01}))) > 1e-6);
    CHECK(std::abs(degree_of_dependence(theta_of_angles(Angle{mu}, Angle{nu - 0.01 > 0 ? nu - 0.01 : nu + 0.02}))) > 1e-6);
  }
  CHECK(degree_of_dependence(theta_of_angles(Angle{0.4}, Angle{0.4})) == -1.0);
  CHECK(degree_of_dependence(theta_of_angles(Angle{pi}, Angle{0.0})) == doctest::Approx(1.0).epsilon(1e-15));
}
