#include "qwalk/limit_law.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kHalfPi = 1.5707963267948966;

// Panel count for the composite Simpson rule on the substituted integrand.
// The integrand is smooth and bounded after x = a sin(u), so 2048 panels keep
// the error orders of magnitude below the 1e-8 budget for a <= 0.9.
constexpr int kPanels = 2048;

void validate_support(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    std::ostringstream msg;
    msg << "support parameter a must lie in (0, 1), got " << a;
    throw std::invalid_argument(msg.str());
  }
}

// Weighted density after the substitution x = a sin(u):
//   f(x) dx -> (1 - c0 a sin(u)) sqrt(1-a^2) / (pi (1 - a^2 sin^2(u))) du
double substituted_integrand(double u, double a, double c0) {
  const double as = a * std::sin(u);
  return (1.0 - c0 * as) * std::sqrt(1.0 - a * a) / (kPi * (1.0 - as * as));
}

template <typename F>
double simpson(F f, double lo, double hi) {
  const double h = (hi - lo) / kPanels;
  double acc = f(lo) + f(hi);
  for (int i = 1; i < kPanels; ++i) {
    acc += ((i & 1) ? 4.0 : 2.0) * f(lo + i * h);
  }
  return acc * h / 3.0;
}

double ipow(double x, int r) {
  double acc = 1.0;
  for (int i = 0; i < r; ++i) {
    acc *= x;
  }
  return acc;
}

}  // namespace

LimitDensity::LimitDensity(double a, double c0) : a_(a), c0_(c0) {
  validate_support(a);
  if (!std::isfinite(c0) || std::abs(c0) > 1.0 / a) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "asymmetry coefficient |c0| = " << std::abs(c0) << " exceeds 1/a = " << 1.0 / a
        << "; the weighted density would go negative";
    throw std::invalid_argument(msg.str());
  }
}

double konno_density(double x, double a) {
  validate_support(a);
  if (!(std::abs(x) < a)) {
    return 0.0;
  }
  return std::sqrt(1.0 - a * a) / (kPi * (1.0 - x * x) * std::sqrt(a * a - x * x));
}

double weighted_density(double x, const LimitDensity& params) {
  return (1.0 - params.c0() * x) * konno_density(x, params.a());
}

double cdf(double x, const LimitDensity& params) {
  const double a = params.a();
  if (x <= -a) {
    return 0.0;
  }
  if (x >= a) {
    return 1.0;
  }
  const double u_max = std::asin(x / a);
  const double c0 = params.c0();
  const double value = simpson([&](double u) { return substituted_integrand(u, a, c0); },
                               -kHalfPi, u_max);
  return std::clamp(value, 0.0, 1.0);
}

double moment(int r, const LimitDensity& params) {
  if (r < 0) {
    throw std::invalid_argument("moment order must be non-negative");
  }
  const double a = params.a();
  const double c0 = params.c0();
  return simpson(
      [&](double u) { return ipow(a * std::sin(u), r) * substituted_integrand(u, a, c0); },
      -kHalfPi, kHalfPi);
}

double c0_from_mean(double empirical_mean, double a) {
  validate_support(a);
  // moment(1) = -c0 (1 - sqrt(1-a^2)): the odd part of the weight is the only
  // contributor to the first moment.
  const double scale = 1.0 - std::sqrt(1.0 - a * a);
  const double c0 = -empirical_mean / scale;
  if (!std::isfinite(c0) || std::abs(c0) > 1.0 / a) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "empirical mean " << empirical_mean << " implies |c0| = " << std::abs(c0)
        << " > 1/a = " << 1.0 / a << "; outside the admissible density family";
    throw std::domain_error(msg.str());
  }
  return c0;
}

}  // namespace qwalk
