#pragma once

#include <array>
#include <vector>

#include "tetmac/geometry.hpp"

namespace tetmac {

/// A point in barycentric coordinates with a weight normalized so that the
/// weights of a rule sum to 1 (integral = |T| * sum w f).
struct QuadPoint {
  std::array<double, 4> bary{};
  double weight = 0.0;
};

/// Grundmann-Moeller rule on the tetrahedron with polynomial exactness 2s+1.
/// Fully symmetric under vertex permutations; has negative weights for s >= 1.
std::vector<QuadPoint> grundmann_moeller_rule(int s);

/// Rule used for p = 2 seminorms: exact through total degree 9 (70 points).
const std::vector<QuadPoint>& seminorm_rule();

/// Barycentric lattice {(i, j, k, l) / n : i + j + k + l = n}; (n+1)(n+2)(n+3)/6 points.
std::vector<std::array<double, 4>> barycentric_lattice(int n);

/// Lattice used for p = infinity seminorms (degree 40, 12341 points).
inline constexpr int kSupLatticeDegree = 40;
const std::vector<std::array<double, 4>>& sup_lattice();

Point3 from_barycentric(const Tetrahedron& t, const std::array<double, 4>& b);

}  // namespace tetmac
