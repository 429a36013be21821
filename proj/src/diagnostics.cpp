#include "qwalk/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

double PositionDistribution::total() const {
  double sum = 0.0;
  for (const auto& [site, mass] : masses) {
    sum += mass;
  }
  return sum;
}

PositionDistribution distribution(const WalkState& state) {
  PositionDistribution dist;
  dist.time = state.time();
  dist.masses.reserve(static_cast<std::size_t>(state.max_site() - state.min_site()) / 2 + 1);
  for (int n = state.min_site(); n <= state.max_site(); ++n) {
    const double p = state.probability(n);
    if (p > 0.0) {
      dist.masses.emplace_back(n, p);
    }
  }
  return dist;
}

std::vector<std::pair<int, double>> return_probability_series(const CoinSchedule& schedule,
                                                              const WalkState& initial,
                                                              int horizon) {
  if (horizon < 2) {
    throw std::invalid_argument("return-probability horizon must be at least 2");
  }
  std::vector<std::pair<int, double>> series;
  series.reserve(static_cast<std::size_t>(horizon) / 2 + 1);
  evolve_observed(initial, schedule, horizon, [&](const WalkState& state) {
    if (state.time() % 2 == 0) {
      series.emplace_back(state.time(), state.probability(0));
    }
  });
  return series;
}

namespace {

double state_sigma(const WalkState& state) {
  double mean = 0.0;
  double second = 0.0;
  for (int n = state.min_site(); n <= state.max_site(); ++n) {
    const double p = state.probability(n);
    mean += n * p;
    second += static_cast<double>(n) * n * p;
  }
  return std::sqrt(std::max(second - mean * mean, 0.0));
}

}  // namespace

double std_dev(const PositionDistribution& dist) {
  double mean = 0.0;
  double second = 0.0;
  for (const auto& [site, mass] : dist.masses) {
    mean += site * mass;
    second += static_cast<double>(site) * site * mass;
  }
  return std::sqrt(std::max(second - mean * mean, 0.0));
}

std::vector<std::pair<int, double>> sigma_series(const CoinSchedule& schedule,
                                                 const WalkState& initial,
                                                 const std::vector<int>& times) {
  if (times.empty()) {
    throw std::invalid_argument("sigma series needs at least one sample time");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 1 || (i > 0 && times[i] <= times[i - 1])) {
      throw std::invalid_argument("sigma series sample times must be strictly increasing and >= 1");
    }
  }
  std::vector<std::pair<int, double>> series;
  series.reserve(times.size());
  std::size_t next = 0;
  evolve_observed(initial, schedule, times.back(), [&](const WalkState& state) {
    if (next < times.size() && state.time() == times[next]) {
      series.emplace_back(state.time(), state_sigma(state));
      ++next;
    }
  });
  return series;
}

ScalingFit scaling_exponent(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("scaling fit needs at least 2 samples");
  }
  ScalingFit fit;
  fit.sample_times.reserve(samples.size());
  std::vector<double> xs(samples.size());
  std::vector<double> ys(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto [t, sigma] = samples[i];
    if (!(t > 0.0) || !(sigma > 0.0)) {
      throw std::invalid_argument("scaling fit samples must have positive t and sigma");
    }
    if (i > 0 && !(t > samples[i - 1].first)) {
      throw std::invalid_argument("scaling fit sample times must be strictly increasing");
    }
    xs[i] = std::log(t);
    ys[i] = std::log(sigma);
    fit.sample_times.push_back(t);
  }
  const auto n = static_cast<double>(samples.size());
  double x_mean = 0.0;
  double y_mean = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    x_mean += xs[i];
    y_mean += ys[i];
  }
  x_mean /= n;
  y_mean /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
    sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
  }
  fit.exponent = sxy / sxx;
  fit.intercept = y_mean - fit.exponent * x_mean;
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double resid = ys[i] - (fit.intercept + fit.exponent * xs[i]);
    ss_res += resid * resid;
    ss_tot += (ys[i] - y_mean) * (ys[i] - y_mean);
  }
  fit.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
  return fit;
}

std::vector<double> rescaled_moments(const PositionDistribution& dist, int r_max) {
  if (dist.time < 1) {
    throw std::invalid_argument("rescaled moments need time >= 1");
  }
  if (r_max < 0) {
    throw std::invalid_argument("moment order bound must be non-negative");
  }
  std::vector<double> moments(static_cast<std::size_t>(r_max), 0.0);
  for (const auto& [site, mass] : dist.masses) {
    const double x = static_cast<double>(site) / dist.time;
    double xr = 1.0;
    for (int r = 1; r <= r_max; ++r) {
      xr *= x;
      moments[static_cast<std::size_t>(r - 1)] += xr * mass;
    }
  }
  return moments;
}

double ks_distance(const PositionDistribution& dist, const LimitDensity& params) {
  if (dist.time < 1) {
    throw std::invalid_argument("ks distance needs time >= 1");
  }
  double cumulative = 0.0;
  double worst = 0.0;
  for (const auto& [site, mass] : dist.masses) {
    const double limit_value = cdf(static_cast<double>(site) / dist.time, params);
    // Left limit and right-continuous value of the empirical step.
    worst = std::max(worst, std::abs(cumulative - limit_value));
    cumulative += mass;
    worst = std::max(worst, std::abs(cumulative - limit_value));
  }
  return worst;
}

double mass_outside(const PositionDistribution& dist, double threshold_speed) {
  if (!(threshold_speed >= 0.0)) {
    throw std::invalid_argument("threshold speed must be non-negative");
  }
  const double cutoff = threshold_speed * dist.time;
  double sum = 0.0;
  for (const auto& [site, mass] : dist.masses) {
    if (std::abs(static_cast<double>(site)) > cutoff) {
      sum += mass;
    }
  }
  return sum;
}

std::vector<int> geometric_checkpoints(int steps) {
  std::vector<int> times;
  for (int e = 6; e <= 13; ++e) {
    const int t = 1 << e;
    if (t <= steps) {
      times.push_back(t);
    }
  }
  return times;
}

}  // namespace qwalk
