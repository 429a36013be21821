#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "qwalk/diagnostics.hpp"

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kInvSqrt2 = 0.7071067811865476;

using qwalk::Complex;

qwalk::WalkState balanced_two_steps() {
  auto state = qwalk::initial_state(Complex{1.0, 0.0}, Complex{0.0, 0.0});
  const qwalk::CoinAngle theta(kPi / 4.0);
  state.advance(theta);
  state.advance(theta);
  return state;
}

qwalk::WalkState symmetric_initial() {
  return qwalk::initial_state(Complex{kInvSqrt2, 0.0}, Complex{0.0, kInvSqrt2});
}

}  // namespace

TEST_CASE("distribution lists only the carrying sites in ascending order") {
  const auto dist = qwalk::distribution(balanced_two_steps());
  CHECK(dist.time == 2);
  REQUIRE(dist.masses.size() == 3);
  CHECK(dist.masses[0].first == -2);
  CHECK(dist.masses[0].second == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(dist.masses[1].first == 0);
  CHECK(dist.masses[1].second == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(dist.masses[2].first == 2);
  CHECK(dist.masses[2].second == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(dist.total() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("standard deviation of simple hand-built distributions") {
  qwalk::PositionDistribution two_point;
  two_point.time = 1;
  two_point.masses = {{-1, 0.5}, {1, 0.5}};
  CHECK(qwalk::std_dev(two_point) == doctest::Approx(1.0).epsilon(1e-14));

  qwalk::PositionDistribution point_mass;
  point_mass.time = 1;
  point_mass.masses = {{0, 1.0}};
  CHECK(qwalk::std_dev(point_mass) == 0.0);

  CHECK(qwalk::std_dev(qwalk::distribution(balanced_two_steps())) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("scaling fit recovers exact power laws") {
  std::vector<std::pair<double, double>> linear;
  std::vector<std::pair<double, double>> diffusive;
  for (double t : {8.0, 16.0, 32.0, 64.0, 128.0}) {
    linear.emplace_back(t, t);
    diffusive.emplace_back(t, 2.0 * std::sqrt(t));
  }
  const auto fit_linear = qwalk::scaling_exponent(linear);
  CHECK(fit_linear.exponent == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(fit_linear.intercept) < 1e-12);
  CHECK(fit_linear.r_squared == doctest::Approx(1.0).epsilon(1e-12));

  const auto fit_diffusive = qwalk::scaling_exponent(diffusive);
  CHECK(fit_diffusive.exponent == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fit_diffusive.intercept == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(fit_diffusive.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("scaling fit exponent is invariant under rescaling sigma") {
  std::vector<std::pair<double, double>> base;
  std::vector<std::pair<double, double>> scaled;
  for (double t : {10.0, 100.0, 1000.0}) {
    const double sigma = 0.7 * std::pow(t, 0.83);
    base.emplace_back(t, sigma);
    scaled.emplace_back(t, 5.0 * sigma);
  }
  const auto fit_base = qwalk::scaling_exponent(base);
  const auto fit_scaled = qwalk::scaling_exponent(scaled);
  CHECK(std::abs(fit_base.exponent - fit_scaled.exponent) < 1e-12);
  CHECK(fit_scaled.intercept - fit_base.intercept == doctest::Approx(std::log(5.0)).epsilon(1e-12));
}

TEST_CASE("scaling fit validates its sample grid") {
  CHECK_THROWS_AS(qwalk::scaling_exponent({{8.0, 3.0}}), std::invalid_argument);
  CHECK_THROWS_AS(qwalk::scaling_exponent({{8.0, 3.0}, {8.0, 4.0}}), std::invalid_argument);
  CHECK_THROWS_AS(qwalk::scaling_exponent({{8.0, 3.0}, {4.0, 4.0}}), std::invalid_argument);
  CHECK_THROWS_AS(qwalk::scaling_exponent({{8.0, 0.0}, {16.0, 4.0}}), std::invalid_argument);
}

TEST_CASE("rescaled moments of a hand-built distribution") {
  qwalk::PositionDistribution dist;
  dist.time = 4;
  dist.masses = {{-2, 0.25}, {2, 0.75}};
  const auto moments = qwalk::rescaled_moments(dist, 3);
  REQUIRE(moments.size() == 3);
  CHECK(moments[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(moments[1] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(moments[2] == doctest::Approx(0.0625).epsilon(1e-14));
}

TEST_CASE("symmetric walk keeps the rescaled mean at zero") {
  const auto schedule = qwalk::CoinSchedule::constant(qwalk::CoinAngle(kPi / 4.0), 200);
  const auto dist = qwalk::distribution(qwalk::evolve(symmetric_initial(), schedule, 200));
  const auto moments = qwalk::rescaled_moments(dist, 1);
  CHECK(std::abs(moments[0]) < 1e-10);
}

TEST_CASE("ballistic spreading shows up as a unit scaling exponent") {
  const auto schedule = qwalk::CoinSchedule::constant(qwalk::CoinAngle(kPi / 4.0), 4096);
  const auto series =
      qwalk::sigma_series(schedule, symmetric_initial(), qwalk::geometric_checkpoints(4096));
  std::vector<std::pair<double, double>> samples;
  for (const auto& [t, sigma] : series) {
    samples.emplace_back(static_cast<double>(t), sigma);
  }
  const auto fit = qwalk::scaling_exponent(samples);
  CHECK(std::abs(fit.exponent - 1.0) < 0.02);
  CHECK(fit.r_squared > 0.999);
}

TEST_CASE("sigma series matches independently evolved snapshots") {
  const auto schedule =
      qwalk::CoinSchedule::fibonacci(qwalk::CoinAngle(kPi / 3.0), qwalk::CoinAngle(kPi / 6.0), 25);
  const std::vector<int> times{3, 10, 25};
  const auto series = qwalk::sigma_series(schedule, symmetric_initial(), times);
  REQUIRE(series.size() == 3);
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(series[i].first == times[i]);
    const auto snapshot = qwalk::evolve(symmetric_initial(), schedule, times[i]);
    CHECK(series[i].second == qwalk::std_dev(qwalk::distribution(snapshot)));
  }
}

TEST_CASE("sigma series validates the time grid") {
  const auto schedule = qwalk::CoinSchedule::constant(qwalk::CoinAngle(0.5), 10);
  CHECK_THROWS_AS(qwalk::sigma_series(schedule, symmetric_initial(), {0, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(qwalk::sigma_series(schedule, symmetric_initial(), {5, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(qwalk::sigma_series(schedule, symmetric_initial(), {}),
                  std::invalid_argument);
}

TEST_CASE("return probability series records the even times") {
  const auto schedule = qwalk::CoinSchedule::constant(qwalk::CoinAngle(kPi / 4.0), 4);
  const auto start = qwalk::initial_state(Complex{1.0, 0.0}, Complex{0.0, 0.0});
  const auto series = qwalk::return_probability_series(schedule, start, 4);
  REQUIRE(series.size() == 3);
  CHECK(series[0].first == 0);
  CHECK(series[0].second == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(series[1].first == 2);
  CHECK(series[1].second == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(series[2].first == 4);
  CHECK_THROWS_AS(qwalk::return_probability_series(schedule, start, 1), std::invalid_argument);
}

TEST_CASE("return probability envelope decays for the balanced constant coin") {
  const auto schedule = qwalk::CoinSchedule::constant(qwalk::CoinAngle(kPi / 4.0), 2048);
  const auto series = qwalk::return_probability_series(schedule, symmetric_initial(), 2048);
  double early = 0.0;
  double late = 0.0;
  for (const auto& [t, p] : series) {
    if (t >= 4 && t <= 8) {
      early = std::max(early, p);
    }
    if (t >= 1024) {
      late = std::max(late, p);
    }
  }
  CHECK(late < early);
}

TEST_CASE("ks distance of a point mass against the symmetric law") {
  qwalk::PositionDistribution point_mass;
  point_mass.time = 1;
  point_mass.masses = {{0, 1.0}};
  const qwalk::LimitDensity params(kInvSqrt2, 0.0);
  CHECK(qwalk::ks_distance(point_mass, params) == doctest::Approx(0.5).epsilon(1e-9));

  // Sites carrying exactly zero mass must not move the statistic.
  qwalk::PositionDistribution padded = point_mass;
  padded.masses.insert(padded.masses.begin(), {-1, 0.0});
  padded.masses.emplace_back(1, 0.0);
  CHECK(qwalk::ks_distance(padded, params) ==
        doctest::Approx(qwalk::ks_distance(point_mass, params)).epsilon(1e-15));
}

TEST_CASE("ks distance is small when atoms sit at the law's quantiles") {
  const qwalk::LimitDensity params(kInvSqrt2, 0.0);
  const int t = 1000000;
  const int m = 50;
  qwalk::PositionDistribution dist;
  dist.time = t;
  for (int i = 0; i < m; ++i) {
    const double target = (i + 0.5) / m;
    double lo = -kInvSqrt2;
    double hi = kInvSqrt2;
    for (int iter = 0; iter < 60; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (qwalk::cdf(mid, params) < target ? lo : hi) = mid;
    }
    const double quantile = 0.5 * (lo + hi);
    dist.masses.emplace_back(static_cast<int>(std::lround(quantile * t)), 1.0 / m);
  }
  CHECK(qwalk::ks_distance(dist, params) < 1.0 / m + 1e-3);
}

TEST_CASE("mass outside a speed threshold") {
  const auto dist = qwalk::distribution(balanced_two_steps());
  CHECK(qwalk::mass_outside(dist, 1.0) == 0.0);
  CHECK(qwalk::mass_outside(dist, 0.5) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(qwalk::mass_outside(dist, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(qwalk::mass_outside(dist, -0.5), std::invalid_argument);
}

TEST_CASE("geometric checkpoints cover the doubling grid up to the horizon") {
  CHECK(qwalk::geometric_checkpoints(2).empty());
  CHECK(qwalk::geometric_checkpoints(63).empty());
  CHECK(qwalk::geometric_checkpoints(64) == std::vector<int>{64});
  CHECK(qwalk::geometric_checkpoints(100) == std::vector<int>{64});
  const std::vector<int> full{64, 128, 256, 512, 1024, 2048, 4096, 8192};
  CHECK(qwalk::geometric_checkpoints(8192) == full);
  CHECK(qwalk::geometric_checkpoints(10000) == full);
}
