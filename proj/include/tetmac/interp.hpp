#pragma once

#include <array>
#include <functional>
#include <vector>

#include "tetmac/geometry.hpp"
#include "tetmac/test_functions.hpp"

namespace tetmac {

/// Reciprocal-condition cutoff for the nodal Vandermonde system.
inline constexpr double kMaxVandermondeCondition = 1e13;

/// Degree-k Lagrange interpolant stored as monomial coefficients in the local
/// coordinates xi = (x - center) / scale, with scale = h_T.
class LagrangeInterpolant {
 public:
  using Exponent = std::array<int, 3>;

  LagrangeInterpolant(int degree, Point3 center, double scale, std::vector<Exponent> exponents,
                      std::vector<double> coefficients, std::vector<Point3> nodes,
                      double condition, double max_nodal_residual);

  int degree() const { return degree_; }
  Point3 center() const { return center_; }
  double scale() const { return scale_; }
  const std::vector<Exponent>& exponents() const { return exponents_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  const std::vector<Point3>& nodes() const { return nodes_; }
  double condition() const { return condition_; }
  double max_nodal_residual() const { return max_nodal_residual_; }

  double value(Point3 x) const;
  /// Derivatives through third order (all zero beyond the degree).
  Jet jet(Point3 x) const;

 private:
  int degree_;
  Point3 center_;
  double scale_;
  std::vector<Exponent> exponents_;
  std::vector<double> coefficients_;
  std::vector<Point3> nodes_;
  double condition_;
  double max_nodal_residual_;
};

/// Vertices for k = 1; vertices followed by the midpoints of edges
/// 01, 02, 03, 12, 13, 23 for k = 2.
std::vector<Point3> lagrange_nodes(const Tetrahedron& t, int k);

/// Monomial exponents of total degree <= k, graded then lexicographic.
std::vector<LagrangeInterpolant::Exponent> monomial_exponents(int k);

/// Throws DegenerateInput, InvalidArgument (k outside {1, 2}) or SolveFailure.
LagrangeInterpolant lagrange_interpolate(const Tetrahedron& t, int k, const TestFunction& f);
LagrangeInterpolant lagrange_interpolate(const Tetrahedron& t, int k,
                                         const std::function<double(Point3)>& f);

/// Exponent condition for the error estimate:
///   k - m = 0          requires 2 < p <= inf
///   k = 1, m = 0       requires 3/2 < p <= inf
///   k >= 2, k - m >= 1 requires 1 <= p <= inf
bool is_admissible(int k, int m, double p);

/// Throws InadmissibleExponents with the violated condition in the message.
void require_admissible(int k, int m, double p);

/// p must be 2 or +infinity (the two norms the lab evaluates).
void require_supported_p(double p);

/// |g|_{W^{order,p}(T)}: p = 2 via the degree-9 rule, p = inf via the degree-40 lattice.
/// Order-m partials are combined over all multi-indices of exact order m
/// (l2-sum for p = 2, max for p = inf).
double seminorm(const Tetrahedron& t, const std::function<Jet(Point3)>& g, int order, double p);

/// |f - I f|_{W^{m,p}(T)}; checks m <= k and the exponent condition first.
double seminorm_error(const Tetrahedron& t, const TestFunction& f,
                      const LagrangeInterpolant& interpolant, int m, double p);

/// |f|_{W^{order,p}(T)}.
double function_seminorm(const Tetrahedron& t, const TestFunction& f, int order, double p);

}  // namespace tetmac
