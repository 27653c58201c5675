#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "tetmac/geometry.hpp"

namespace tetmac::test {

inline const double kPi = std::acos(-1.0);

inline Tetrahedron regular_tetra() {
  // Edge length 1.
  const double s = 1.0 / std::sqrt(2.0);
  return {{Point3{s, 0, 0}, Point3{0, s, 0}, Point3{0, 0, s}, Point3{s, s, s}}};
}

inline Tetrahedron corner_tetra() { return {{Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}}}; }

inline Tetrahedron example_tetra() {
  return {{Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 0.1, 0}, Point3{0, 0, 0.2}}};
}

inline Tetrahedron scaled(const Tetrahedron& t, double s) {
  Tetrahedron r = t;
  for (auto& v : r.vertices) v = s * v;
  return r;
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// Random tetrahedra: four points in the unit cube, each axis stretched by
// 10^u with u uniform in [0, max_decades], then rigidly rotated.
class TetraSampler {
 public:
  explicit TetraSampler(std::uint64_t seed, double max_decades = 0.0)
      : rng_(seed), max_decades_(max_decades) {}

  Tetrahedron next() {
    for (;;) {
      std::array<double, 3> scale{1, 1, 1};
      for (auto& s : scale) s = std::pow(10.0, max_decades_ * unit_(rng_));
      const auto rot = rotation();
      Tetrahedron t;
      for (auto& v : t.vertices) {
        const Vec3 p{scale[0] * unit_(rng_), scale[1] * unit_(rng_), scale[2] * unit_(rng_)};
        v = {dot(rot[0], p), dot(rot[1], p), dot(rot[2], p)};
      }
      if (!is_degenerate(t)) return t;
    }
  }

  double uniform(double a, double b) { return a + (b - a) * unit_(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::array<Vec3, 3> rotation() {
    // Unit quaternion from three uniforms.
    const double u1 = unit_(rng_), u2 = unit_(rng_), u3 = unit_(rng_);
    const double a = std::sqrt(1 - u1) * std::sin(2 * kPi * u2);
    const double b = std::sqrt(1 - u1) * std::cos(2 * kPi * u2);
    const double c = std::sqrt(u1) * std::sin(2 * kPi * u3);
    const double d = std::sqrt(u1) * std::cos(2 * kPi * u3);
    return {Vec3{1 - 2 * (c * c + d * d), 2 * (b * c - a * d), 2 * (b * d + a * c)},
            Vec3{2 * (b * c + a * d), 1 - 2 * (b * b + d * d), 2 * (c * d - a * b)},
            Vec3{2 * (b * d - a * c), 2 * (c * d + a * b), 1 - 2 * (b * b + c * c)}};
  }

  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  double max_decades_;
};

// Independent oracles, built only from pairwise distances or plane normals.
namespace oracle {

inline double len(const Tetrahedron& t, int a, int b) { return distance(t[a], t[b]); }

// Face angle at vertex j of the triangle (j, a, b), law of cosines.
inline double face_angle(const Tetrahedron& t, int j, int a, int b) {
  const double x = len(t, j, a), y = len(t, j, b), z = len(t, a, b);
  return std::acos(std::clamp((x * x + y * y - z * z) / (2 * x * y), -1.0, 1.0));
}

// Volume from the Cayley-Menger determinant (5x5, Gaussian elimination).
inline double cayley_menger_volume(const Tetrahedron& t) {
  double m[5][5];
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j)
        m[i][j] = 0;
      else if (i == 0 || j == 0)
        m[i][j] = 1;
      else {
        const double d = len(t, i - 1, j - 1);
        m[i][j] = d * d;
      }
    }
  double det = 1;
  for (int c = 0; c < 5; ++c) {
    int piv = c;
    for (int r = c + 1; r < 5; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 5; ++r) {
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return std::sqrt(std::max(0.0, det / 288.0));
}

// Outward unit normal of the face opposite vertex i.
inline Vec3 outward_normal(const Tetrahedron& t, int i) {
  const auto o = others(i);
  Vec3 n = cross(t[o[1]] - t[o[0]], t[o[2]] - t[o[0]]);
  if (dot(n, t[i] - t[o[0]]) > 0) n = -1.0 * n;
  return (1.0 / norm(n)) * n;
}

// Interior dihedral angle between faces i and j: pi minus the angle of the outward normals.
inline double dihedral(const Tetrahedron& t, int i, int j) {
  const double c = dot(outward_normal(t, i), outward_normal(t, j));
  return kPi - std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace oracle

}  // namespace tetmac::test
