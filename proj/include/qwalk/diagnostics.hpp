#pragma once

#include <utility>
#include <vector>

#include "qwalk/limit_law.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Probability mass function P(N_t = n) at one time. Masses are kept in
// ascending site order; sites carrying exactly zero probability (parity
// holes, everything outside the support) are omitted.
struct PositionDistribution {
  int time = 0;
  std::vector<std::pair<int, double>> masses;

  double total() const;
};

// p_n = |a_n|^2 + |b_n|^2 per site.
PositionDistribution distribution(const WalkState& state);

// (t, P(N_t = 0)) for even t <= horizon, from a single evolution pass.
// Odd times carry no origin mass by parity and are skipped.
std::vector<std::pair<int, double>> return_probability_series(const CoinSchedule& schedule,
                                                              const WalkState& initial,
                                                              int horizon);

double std_dev(const PositionDistribution& dist);

// sigma(t) at the requested times (strictly increasing, >= 1), from a single
// evolution pass up to times.back().
std::vector<std::pair<int, double>> sigma_series(const CoinSchedule& schedule,
                                                 const WalkState& initial,
                                                 const std::vector<int>& times);

struct ScalingFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<double> sample_times;
};

// Ordinary least squares line through (log t, log sigma); the slope is the
// spreading exponent c of sigma(t) ~ t^c.
ScalingFit scaling_exponent(const std::vector<std::pair<double, double>>& samples);

// E[(N_t/t)^r] for r = 1..r_max.
std::vector<double> rescaled_moments(const PositionDistribution& dist, int r_max);

// Sup over the rescaled support points x = n/t of |empirical CDF - cdf(x)|.
// The empirical CDF is a right-continuous step function; both the value and
// the left limit are compared at every step point, which realizes the full
// sup for a step-vs-continuous comparison.
double ks_distance(const PositionDistribution& dist, const LimitDensity& params);

// Probability mass at |n| > threshold_speed * t.
double mass_outside(const PositionDistribution& dist, double threshold_speed);

// Geometric time grid 2^6..2^13 capped by `steps`; may be empty.
std::vector<int> geometric_checkpoints(int steps);

}  // namespace qwalk
