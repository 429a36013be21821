#include "qwalk/momentum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr double kPi = 3.141592653589793;

}  // namespace

MomentumGrid::MomentumGrid(int n) : size(n) {
  if (n < 2) {
    throw std::invalid_argument("momentum grid needs at least 2 nodes, got " + std::to_string(n));
  }
}

double MomentumGrid::node(int j) const { return -kPi + 2.0 * kPi * j / size; }

Mat2 transfer_matrix(double k, CoinAngle theta) {
  const double c = theta.cos();
  const double s = theta.sin();
  const Complex i_back = Complex{0.0, 1.0} * std::polar(1.0, -k);   // i e^{-ik}
  const Complex i_forward = Complex{0.0, 1.0} * std::polar(1.0, k); // i e^{+ik}
  return {i_back * c, i_back * s, i_forward * s, -i_forward * c};
}

double dispersion(double k, CoinAngle theta) { return std::acos(theta.cos() * std::sin(k)); }

std::pair<double, double> group_velocity(double k, CoinAngle theta) {
  const double w = dispersion(k, theta);
  // sin(w) >= sin(theta) > 0 on the open angle interval, so never divides by
  // zero.
  const double w_prime = -theta.cos() * std::cos(k) / std::sin(w);
  return {-w_prime, w_prime};
}

namespace {

// Nullspace direction of (M - lambda I), taking the larger-norm of the two
// row-wise candidates for stability.
Vec2 eigenvector_for(const Mat2& m, Complex lambda) {
  const Vec2 from_row0{m.m01, lambda - m.m00};
  const Vec2 from_row1{lambda - m.m11, m.m10};
  Vec2 v = norm_squared(from_row0) >= norm_squared(from_row1) ? from_row0 : from_row1;
  const double norm = std::sqrt(norm_squared(v));
  v.x /= norm;
  v.y /= norm;
  // Phase convention: first component real and non-negative, for reproducible
  // serialization. The transfer matrix's off-diagonal never vanishes on the
  // open angle interval, so |v.x| stays well away from zero.
  const double mag = std::abs(v.x);
  if (mag > 0.0) {
    const Complex rotate = std::conj(v.x) / mag;
    v.y *= rotate;
    v.x = Complex{mag, 0.0};
  }
  return v;
}

double residual(const Mat2& m, Complex lambda, const Vec2& v) {
  const Vec2 mv = m * v;
  const Vec2 diff{mv.x - lambda * v.x, mv.y - lambda * v.y};
  return std::sqrt(norm_squared(diff));
}

}  // namespace

SpectralData eigensystem(const MomentumGrid& grid, CoinAngle theta) {
  SpectralData data{grid, theta.value(), {}};
  data.points.reserve(static_cast<std::size_t>(grid.size));
  for (int j = 0; j < grid.size; ++j) {
    SpectralPoint point;
    point.k = grid.node(j);
    point.w = dispersion(point.k, theta);
    const Mat2 m = transfer_matrix(point.k, theta);
    // Roots of the characteristic polynomial; the branch with non-negative
    // imaginary part carries e^{+iw} since w lies in [0, pi].
    const Complex tr = m.trace();
    const Complex root = std::sqrt(tr * tr - 4.0 * m.determinant());
    point.lambda1 = 0.5 * (tr + root);
    point.lambda2 = 0.5 * (tr - root);
    if (point.lambda1.imag() < point.lambda2.imag()) {
      std::swap(point.lambda1, point.lambda2);
    }
    point.v1 = eigenvector_for(m, point.lambda1);
    point.v2 = eigenvector_for(m, point.lambda2);
    const double r1 = residual(m, point.lambda1, point.v1);
    const double r2 = residual(m, point.lambda2, point.v2);
    if (r1 > 1e-10 || r2 > 1e-10) {
      std::ostringstream msg;
      msg << "eigenvector residual " << std::max(r1, r2) << " exceeds 1e-10 at grid node " << j
          << " (k = " << point.k << ")";
      throw std::runtime_error(msg.str());
    }
    std::tie(point.h1, point.h2) = group_velocity(point.k, theta);
    data.points.push_back(point);
  }
  return data;
}

PositionDistribution evolve_fourier(Complex alpha, Complex beta, const CoinSchedule& schedule,
                                    int steps, const MomentumGrid& grid) {
  if (steps < 0) {
    throw std::invalid_argument("step count must be non-negative");
  }
  const int minimum = 2 * steps + 2;
  if (grid.size < minimum) {
    throw std::invalid_argument("momentum grid of " + std::to_string(grid.size) +
                                " nodes cannot reconstruct " + std::to_string(steps) +
                                " steps exactly; need at least " + std::to_string(minimum));
  }
  if (schedule.horizon() < static_cast<std::size_t>(steps)) {
    throw std::invalid_argument("schedule word of length " + std::to_string(schedule.horizon()) +
                                " does not cover " + std::to_string(steps) +
                                " steps; extend the horizon first");
  }
  const double norm = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("initial amplitudes must satisfy |alpha|^2 + |beta|^2 = 1 within 1e-12");
  }

  const int n_nodes = grid.size;
  std::vector<Vec2> transformed(static_cast<std::size_t>(n_nodes));
  for (int j = 0; j < n_nodes; ++j) {
    // The position-space recurrences transform to the spectral matrix
    // evaluated at the reflected wavenumber -k, up to a global phase i per
    // step that cancels in probabilities.
    double reflected = -grid.node(j);
    if (reflected >= kPi) {
      reflected -= 2.0 * kPi;
    }
    const Mat2 step1 = transfer_matrix(reflected, schedule.theta1());
    const Mat2 step2 = transfer_matrix(reflected, schedule.theta2());
    Vec2 v{alpha, beta};
    for (int s = 0; s < steps; ++s) {
      v = (schedule.word()[static_cast<std::size_t>(s)] == '1' ? step1 : step2) * v;
    }
    transformed[static_cast<std::size_t>(j)] = v;
  }

  PositionDistribution dist;
  dist.time = steps;
  dist.masses.reserve(static_cast<std::size_t>(steps) + 1);
  const double scale = 1.0 / (static_cast<double>(n_nodes) * n_nodes);
  for (int n = -steps; n <= steps; ++n) {
    Complex a{};
    Complex b{};
    for (int j = 0; j < n_nodes; ++j) {
      const Complex phase = std::polar(1.0, grid.node(j) * n);
      a += phase * transformed[static_cast<std::size_t>(j)].x;
      b += phase * transformed[static_cast<std::size_t>(j)].y;
    }
    const double p = (std::norm(a) + std::norm(b)) * scale;
    if (p > 0.0) {
      dist.masses.emplace_back(n, p);
    }
  }
  return dist;
}

Mat2 fibonacci_transfer(double k, CoinAngle theta1, CoinAngle theta2, int steps,
                        FibonacciOrdering ordering) {
  if (steps < 1) {
    throw std::invalid_argument("fibonacci transfer needs at least 1 step");
  }
  const std::string word = fibonacci_word(static_cast<std::size_t>(steps), ordering);
  const Mat2 m1 = transfer_matrix(k, theta1);
  const Mat2 m2 = transfer_matrix(k, theta2);
  Mat2 product = Mat2::identity();
  for (const char letter : word) {
    product = (letter == '1' ? m1 : m2) * product;  // latest step leftmost
  }
  return product;
}

}  // namespace qwalk
