#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/diagnostics.hpp"
#include "qwalk/mat2.hpp"
#include "qwalk/schedule.hpp"

namespace qwalk {

// Uniform wavenumber grid k_j = -pi + 2*pi*j/N on [-pi, pi). All integrands
// in this module are trigonometric polynomials, so once N exceeds the band
// limit the discrete transform equals the integral exactly (no quadrature
// error budget beyond round-off).
struct MomentumGrid {
  explicit MomentumGrid(int n);

  int size;
  double node(int j) const;
};

// Momentum-space one-step matrix
//   [[ i e^{-ik} cos(theta),  i e^{-ik} sin(theta)],
//    [ i e^{+ik} sin(theta), -i e^{+ik} cos(theta)]]
// Unitary with determinant 1 and trace 2 cos(theta) sin(k).
Mat2 transfer_matrix(double k, CoinAngle theta);

// Eigenphase w(k) = arccos(cos(theta) sin(k)) in [0, pi]; the branch keeps
// sin(w) >= 0, matching sin(w) = sqrt(1 - sin^2(k) cos^2(theta)).
double dispersion(double k, CoinAngle theta);

// Group velocities (h1, h2) of the eigenbranches e^{+iw}, e^{-iw}:
// h1 = -w'(k), h2 = +w'(k) with w'(k) = -cos(theta) cos(k) / sin(w(k)).
// Bounded by |h| <= cos(theta).
std::pair<double, double> group_velocity(double k, CoinAngle theta);

struct SpectralPoint {
  double k = 0.0;
  double w = 0.0;          // dispersion angle in [0, pi]
  Complex lambda1, lambda2;  // eigenvalues e^{+iw}, e^{-iw}
  Vec2 v1, v2;               // unit eigenvectors, first component real >= 0
  double h1 = 0.0, h2 = 0.0;
};

struct SpectralData {
  MomentumGrid grid;
  double theta = 0.0;
  std::vector<SpectralPoint> points;
};

// Numerical eigendecomposition of the transfer matrix at every grid node.
// Eigenvalues come from the characteristic polynomial (trace/determinant),
// eigenvectors from the larger-norm nullspace candidate, phase-fixed so the
// first component is real and non-negative. Throws if any residual
// ||Mv - lambda v|| exceeds 1e-10, naming the node.
SpectralData eigensystem(const MomentumGrid& grid, CoinAngle theta);

// Evolves (alpha, beta) for `steps` steps in momentum space and reconstructs
// the position distribution by the inverse transform. Requires
// grid.size >= 2*steps + 2 so the band-limited state is reconstructed
// exactly; matches position-space evolution within round-off.
PositionDistribution evolve_fourier(Complex alpha, Complex beta, const CoinSchedule& schedule,
                                    int steps, const MomentumGrid& grid);

// Time-ordered product of per-step transfer matrices along the Fibonacci
// word: the step-s factor is M(k, theta_{word[s]}), latest step leftmost.
Mat2 fibonacci_transfer(double k, CoinAngle theta1, CoinAngle theta2, int steps,
                        FibonacciOrdering ordering = FibonacciOrdering::older_block_first);

}  // namespace qwalk
