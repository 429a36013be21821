#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qwalk/mat2.hpp"

namespace qwalk {

// Coin angle restricted to the open interval (0, pi/2). The endpoints make
// the walk degenerate (pure shift or pure chirality flip) and the limit
// density collapses, so they are rejected at construction.
class CoinAngle {
 public:
  explicit CoinAngle(double theta) : theta_(theta) {
    if (!(theta > 0.0 && theta < kHalfPi)) {
      std::ostringstream msg;
      msg << "coin angle must lie strictly inside (0, pi/2), got " << theta;
      throw std::invalid_argument(msg.str());
    }
  }

  double value() const { return theta_; }
  double cos() const { return std::cos(theta_); }
  double sin() const { return std::sin(theta_); }

  static constexpr double kHalfPi = 1.5707963267948966;

 private:
  double theta_;
};

// Coin operator as read off the step recurrences: real, symmetric,
// orthogonal, hence its own inverse.
inline Mat2 coin_matrix(CoinAngle theta) {
  const double c = theta.cos();
  const double s = theta.sin();
  return {c, s, s, -c};
}

}  // namespace qwalk
