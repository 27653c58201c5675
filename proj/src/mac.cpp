#include "tetmac/mac.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tetmac/classify.hpp"
#include "tetmac/errors.hpp"

namespace tetmac {

namespace {
constexpr double kPi = std::numbers::pi;
}

void require_gamma(double gamma) {
  if (!(gamma >= kPi / 3.0 && gamma < kPi)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "gamma = " << gamma << " rad is outside [pi/3, pi)";
    throw InvalidGamma(msg.str());
  }
}

bool satisfies_mac(double max_angle, double gamma) {
  require_gamma(gamma);
  return max_angle <= gamma + kMacSlack;
}

bool satisfies_mac(const Tetrahedron& t, double gamma) {
  require_gamma(gamma);
  return satisfies_mac(max_angle(t), gamma);
}

double sin2_delta_bound(double gamma) {
  require_gamma(gamma);
  return (std::cos(gamma) + 1.0) / (std::sin(gamma / 2.0) + 1.0);
}

double triangle_sine_floor(double gamma_max) {
  require_gamma(gamma_max);
  return std::min(std::sin((kPi - gamma_max) / 2.0), std::sin(gamma_max));
}

double gamma_of(double x) { return kPi - std::asin(x); }

ForwardConstants forward_constants(double gamma_max) {
  require_gamma(gamma_max);
  ForwardConstants c;
  c.gamma_max = gamma_max;
  c.C1 = triangle_sine_floor(gamma_max);
  c.sin_delta = std::sqrt(sin2_delta_bound(gamma_max));
  c.delta = std::asin(std::min(c.sin_delta, 1.0));
  c.C0 = std::min(c.sin_delta, std::sin(gamma_max));
  c.D = 6.0 / (c.C0 * c.C1 * c.C1);
  return c;
}

BackwardConstants backward_constants(double D) {
  if (!(D > 6.0) || !std::isfinite(D)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "ratio bound D = " << D << " must be finite and greater than 6";
    throw InvalidBound(msg.str());
  }
  BackwardConstants c;
  c.D = D;
  c.M = 6.0 / D;
  const double m2 = c.M * c.M;
  c.gamma_M = gamma_of(c.M);
  c.gamma_half_M = gamma_of(c.M / 2.0);
  c.type1_dihedral = std::acos(-std::sqrt(1.0 - m2) * std::sqrt(1.0 - m2 / 4.0));
  c.type2_dihedral = std::acos(m2 - 1.0);
  c.gamma_type1 = std::max(c.gamma_half_M, c.type1_dihedral);
  c.gamma_type2 = std::max(c.gamma_M, c.type2_dihedral);
  c.gamma_uniform = std::max(c.gamma_type1, c.gamma_type2);
  return c;
}

TheoremCheck theorem_check(double ratio_H, double max_angle) {
  TheoremCheck r;
  r.ratio_H = ratio_H;
  r.max_angle = max_angle;
  // Every tetrahedron has a face angle of at least pi/3; clamp only roundoff.
  r.D = forward_constants(std::max(max_angle, kPi / 3.0)).D;
  r.gamma_uniform = backward_constants(std::max(ratio_H, 6.0 + kRatioFloorSlack)).gamma_uniform;
  r.forward_ok = ratio_H <= r.D;
  r.backward_ok = max_angle <= r.gamma_uniform + kMacSlack;
  return r;
}

TheoremCheck theorem_check(const Tetrahedron& t) {
  const QualityMetrics q = quality_metrics(t);
  return theorem_check(q.ratio_H, q.max_angle);
}

}  // namespace tetmac
