#pragma once

#include <algorithm>
#include <complex>

namespace qwalk {

using Complex = std::complex<double>;

struct Vec2 {
  Complex x;
  Complex y;
};

// Row-major 2x2 complex matrix. Everything in this library is 2x2, so
// hand-rolled arithmetic is simpler than pulling in a linear-algebra
// dependency.
struct Mat2 {
  Complex m00, m01;
  Complex m10, m11;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex trace() const { return m00 + m11; }
  Complex determinant() const { return m00 * m11 - m01 * m10; }

  Mat2 adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }

  friend Vec2 operator*(const Mat2& m, const Vec2& v) {
    return {m.m00 * v.x + m.m01 * v.y, m.m10 * v.x + m.m11 * v.y};
  }
};

inline double norm_squared(const Vec2& v) { return std::norm(v.x) + std::norm(v.y); }

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
  double d = std::abs(a.m00 - b.m00);
  d = std::max(d, std::abs(a.m01 - b.m01));
  d = std::max(d, std::abs(a.m10 - b.m10));
  d = std::max(d, std::abs(a.m11 - b.m11));
  return d;
}

}  // namespace qwalk
