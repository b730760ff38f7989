#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace qlw {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double& operator[](std::size_t i) { return (&x)[i]; }
  double operator[](std::size_t i) const { return (&x)[i]; }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const {
    double n = norm();
    return {x / n, y / n, z / n};
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Symmetric 4x4 spacetime tensor, index 0 = t.
struct Mat4 {
  std::array<double, 16> a{};

  double& operator()(int i, int j) { return a[4 * i + j]; }
  double operator()(int i, int j) const { return a[4 * i + j]; }

  static Mat4 zero() { return Mat4{}; }
  static Mat4 diag(double d0, double d1, double d2, double d3) {
    Mat4 m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    m(3, 3) = d3;
    return m;
  }
  // Minkowski symbol in the convention gtilde(0) = diag(1,-1,-1,-1).
  static Mat4 minkowski() { return diag(1.0, -1.0, -1.0, -1.0); }

  bool symmetric(double tol = 0.0) const {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
  }

  // Contraction m^{ab} w_a w_b with a 4-covector w.
  double contract(const std::array<double, 4>& w) const {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s += (*this)(i, j) * w[i] * w[j];
    return s;
  }
};

}  // namespace qlw
