#include "tetmac/interp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tetmac/errors.hpp"
#include "tetmac/quadrature.hpp"

namespace tetmac {

namespace {

double falling_factorial(int e, int a) {
  double r = 1.0;
  for (int i = 0; i < a; ++i) r *= e - i;
  return r;
}

// d^alpha of xi^e, with alpha given as per-axis derivative counts.
double monomial_derivative(const LagrangeInterpolant::Exponent& e, const std::array<int, 3>& alpha,
                           const std::array<double, 3>& xi) {
  double r = 1.0;
  for (int i = 0; i < 3; ++i) {
    if (alpha[i] > e[i]) return 0.0;
    r *= falling_factorial(e[i], alpha[i]) * std::pow(xi[i], e[i] - alpha[i]);
  }
  return r;
}

std::array<double, 3> local(Point3 x, Point3 center, double scale) {
  const Vec3 d = (1.0 / scale) * (x - center);
  return {d.x, d.y, d.z};
}

}  // namespace

LagrangeInterpolant::LagrangeInterpolant(int degree, Point3 center, double scale,
                                         std::vector<Exponent> exponents,
                                         std::vector<double> coefficients,
                                         std::vector<Point3> nodes, double condition,
                                         double max_nodal_residual)
    : degree_(degree),
      center_(center),
      scale_(scale),
      exponents_(std::move(exponents)),
      coefficients_(std::move(coefficients)),
      nodes_(std::move(nodes)),
      condition_(condition),
      max_nodal_residual_(max_nodal_residual) {}

double LagrangeInterpolant::value(Point3 x) const {
  const auto xi = local(x, center_, scale_);
  double v = 0.0;
  for (std::size_t n = 0; n < exponents_.size(); ++n)
    v += coefficients_[n] * monomial_derivative(exponents_[n], {0, 0, 0}, xi);
  return v;
}

Jet LagrangeInterpolant::jet(Point3 x) const {
  const auto xi = local(x, center_, scale_);
  const double s1 = 1.0 / scale_;
  const double s2 = s1 * s1;
  const double s3 = s2 * s1;
  Jet j;
  for (std::size_t n = 0; n < exponents_.size(); ++n) {
    const auto& e = exponents_[n];
    const double c = coefficients_[n];
    j.value += c * monomial_derivative(e, {0, 0, 0}, xi);
    for (int r = 0; r < 3; ++r) {
      std::array<int, 3> a1{};
      ++a1[r];
      j.grad[r] += c * s1 * monomial_derivative(e, a1, xi);
      for (int s = 0; s < 3; ++s) {
        auto a2 = a1;
        ++a2[s];
        j.hess[r][s] += c * s2 * monomial_derivative(e, a2, xi);
        for (int t = 0; t < 3; ++t) {
          auto a3 = a2;
          ++a3[t];
          j.third[r][s][t] += c * s3 * monomial_derivative(e, a3, xi);
        }
      }
    }
  }
  return j;
}

std::vector<Point3> lagrange_nodes(const Tetrahedron& t, int k) {
  if (k != 1 && k != 2) throw InvalidArgument("interpolation degree must be 1 or 2");
  std::vector<Point3> nodes(t.vertices.begin(), t.vertices.end());
  if (k == 2) {
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) nodes.push_back(0.5 * (t[a] + t[b]));
  }
  return nodes;
}

std::vector<LagrangeInterpolant::Exponent> monomial_exponents(int k) {
  std::vector<LagrangeInterpolant::Exponent> out;
  for (int total = 0; total <= k; ++total)
    for (int a = total; a >= 0; --a)
      for (int b = total - a; b >= 0; --b) out.push_back({a, b, total - a - b});
  return out;
}

LagrangeInterpolant lagrange_interpolate(const Tetrahedron& t, int k,
                                         const std::function<double(Point3)>& f) {
  require_nondegenerate(t);
  const auto nodes = lagrange_nodes(t, k);
  const auto exps = monomial_exponents(k);
  const Point3 center = 0.25 * (t[0] + t[1] + t[2] + t[3]);
  const double scale = diameter(t);

  const auto n = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXd V(n, n);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto xi = local(nodes[r], center, scale);
    for (Eigen::Index c = 0; c < n; ++c) V(r, c) = monomial_derivative(exps[c], {0, 0, 0}, xi);
    rhs(r) = f(nodes[r]);
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(V);
  const auto& sv = svd.singularValues();
  const double cond = sv(n - 1) > 0.0 ? sv(0) / sv(n - 1) : std::numeric_limits<double>::infinity();
  if (!(cond < kMaxVandermondeCondition)) {
    std::ostringstream msg;
    msg << "nodal Vandermonde system is numerically singular (condition " << cond << ")";
    throw SolveFailure(msg.str(), cond);
  }
  const Eigen::VectorXd coef = V.colPivHouseholderQr().solve(rhs);
  const double residual = (V * coef - rhs).cwiseAbs().maxCoeff();

  return LagrangeInterpolant(k, center, scale, exps,
                             std::vector<double>(coef.data(), coef.data() + n), nodes, cond,
                             residual);
}

LagrangeInterpolant lagrange_interpolate(const Tetrahedron& t, int k, const TestFunction& f) {
  return lagrange_interpolate(t, k, [&f](Point3 x) { return f.value(x); });
}

bool is_admissible(int k, int m, double p) {
  if (k < 1 || m < 0 || m > k || std::isnan(p)) return false;
  if (k - m == 0) return p > 2.0;
  if (k == 1 && m == 0) return p > 1.5;
  return p >= 1.0;
}

void require_admissible(int k, int m, double p) {
  if (is_admissible(k, m, p)) return;
  std::ostringstream msg;
  msg << "inadmissible exponents (k=" << k << ", m=" << m << ", p=" << p << "): ";
  if (k < 1 || m < 0 || m > k)
    msg << "need 0 <= m <= k and k >= 1";
  else if (k - m == 0)
    msg << "k-m = 0 requires p > 2";
  else if (k == 1 && m == 0)
    msg << "k = 1, m = 0 requires p > 3/2";
  else
    msg << "k >= 2, k-m >= 1 requires p >= 1";
  throw InadmissibleExponents(msg.str());
}

void require_supported_p(double p) {
  if (!(p == 2.0 || (std::isinf(p) && p > 0.0)))
    throw InvalidArgument("only p = 2 and p = inf are evaluated");
}

double seminorm(const Tetrahedron& t, const std::function<Jet(Point3)>& g, int order, double p) {
  require_supported_p(p);
  if (order < 0 || order > 3) throw InvalidArgument("seminorm order must be in 0..3");
  if (std::isinf(p)) {
    double worst = 0.0;
    for (const auto& b : sup_lattice()) {
      for (double d : partials_of_order(g(from_barycentric(t, b)), order))
        worst = std::max(worst, std::abs(d));
    }
    return worst;
  }
  double sum = 0.0;
  for (const auto& q : seminorm_rule()) {
    double local_sum = 0.0;
    for (double d : partials_of_order(g(from_barycentric(t, q.bary)), order)) local_sum += d * d;
    sum += q.weight * local_sum;
  }
  // Negative weights can push a vanishing integral a hair below zero.
  return std::sqrt(std::max(0.0, volume(t) * sum));
}

double seminorm_error(const Tetrahedron& t, const TestFunction& f,
                      const LagrangeInterpolant& interpolant, int m, double p) {
  require_admissible(interpolant.degree(), m, p);
  return seminorm(
      t,
      [&](Point3 x) {
        Jet e = f.jet(x);
        e -= interpolant.jet(x);
        return e;
      },
      m, p);
}

double function_seminorm(const Tetrahedron& t, const TestFunction& f, int order, double p) {
  return seminorm(t, [&f](Point3 x) { return f.jet(x); }, order, p);
}

}  // namespace tetmac
