#include "tetmac/quadrature.hpp"

#include <cmath>

#include "tetmac/errors.hpp"

namespace tetmac {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Calls fn(beta) for every beta in N^4 with |beta| = total.
template <typename Fn>
void for_each_composition(int total, Fn&& fn) {
  for (int a = total; a >= 0; --a)
    for (int b = total - a; b >= 0; --b)
      for (int c = total - a - b; c >= 0; --c) fn(std::array<int, 4>{a, b, c, total - a - b - c});
}

}  // namespace

std::vector<QuadPoint> grundmann_moeller_rule(int s) {
  if (s < 0) throw InvalidArgument("Grundmann-Moeller index must be nonnegative");
  constexpr int n = 3;
  const int d = 2 * s + 1;
  std::vector<QuadPoint> rule;
  for (int i = 0; i <= s; ++i) {
    const int denom = d + n - 2 * i;
    // Weight for the unit simplex of volume 1/3!, rescaled by 3! to sum to one.
    const double w = (i % 2 == 0 ? 1.0 : -1.0) * std::ldexp(1.0, -2 * s) *
                     std::pow(static_cast<double>(denom), d) /
                     (factorial(i) * factorial(d + n - i)) * factorial(n);
    for_each_composition(s - i, [&](const std::array<int, 4>& beta) {
      QuadPoint q;
      for (int k = 0; k < 4; ++k) q.bary[k] = (2.0 * beta[k] + 1.0) / denom;
      q.weight = w;
      rule.push_back(q);
    });
  }
  return rule;
}

const std::vector<QuadPoint>& seminorm_rule() {
  static const std::vector<QuadPoint> rule = grundmann_moeller_rule(4);
  return rule;
}

std::vector<std::array<double, 4>> barycentric_lattice(int n) {
  if (n < 1) throw InvalidArgument("lattice degree must be positive");
  std::vector<std::array<double, 4>> pts;
  pts.reserve(static_cast<std::size_t>((n + 1) * (n + 2) * (n + 3) / 6));
  for_each_composition(n, [&](const std::array<int, 4>& beta) {
    pts.push_back({double(beta[0]) / n, double(beta[1]) / n, double(beta[2]) / n,
                   double(beta[3]) / n});
  });
  return pts;
}

const std::vector<std::array<double, 4>>& sup_lattice() {
  static const auto lattice = barycentric_lattice(kSupLatticeDegree);
  return lattice;
}

Point3 from_barycentric(const Tetrahedron& t, const std::array<double, 4>& b) {
  return b[0] * t[0] + b[1] * t[1] + b[2] * t[2] + b[3] * t[3];
}

}  // namespace tetmac
