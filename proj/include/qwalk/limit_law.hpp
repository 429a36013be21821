#pragma once

namespace qwalk {

// Parameters of the weak-limit law of the rescaled position N_t/t: the
// arcsine-type base density
//
//   f_K(x; a) = sqrt(1-a^2) / (pi (1-x^2) sqrt(a^2-x^2))   on (-a, a)
//
// with support parameter a = cos(theta), times the linear asymmetry weight
// (1 - c0 x). The weight keeps the density non-negative exactly when
// |c0| <= 1/a.
class LimitDensity {
 public:
  LimitDensity(double a, double c0);

  double a() const { return a_; }
  double c0() const { return c0_; }

 private:
  double a_;
  double c0_;
};

// Base density; exactly 0 outside the open interval (-a, a).
double konno_density(double x, double a);

// (1 - c0 x) * konno_density(x; a).
double weighted_density(double x, const LimitDensity& params);

// Integral of the weighted density over (-a, x]. The substitution x = a sin(u)
// removes the inverse-square-root endpoint singularities; a fixed-order
// composite rule in u then holds the error below 1e-9.
double cdf(double x, const LimitDensity& params);

// r-th moment of the weighted density, absolute error <= 1e-8.
double moment(int r, const LimitDensity& params);

// The unique c0 whose first moment equals the given empirical mean:
// c0 = -mean / (1 - sqrt(1-a^2)). Throws if the result falls outside the
// admissible band |c0| <= 1/a.
double c0_from_mean(double empirical_mean, double a);

}  // namespace qwalk
