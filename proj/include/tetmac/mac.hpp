#pragma once

#include "tetmac/geometry.hpp"

namespace tetmac {

/// Absolute slack (radians) when comparing an angle against a MAC bound.
inline constexpr double kMacSlack = 1e-12;

/// theorem_check lifts H_T/h_T to at least 6 + this before inverting it.
inline constexpr double kRatioFloorSlack = 1e-9;

/// Constants of the direction "max angle <= gamma_max  =>  H_T/h_T <= D".
struct ForwardConstants {
  double gamma_max = 0.0;
  double C1 = 0.0;         // lower bound on sines of the two largest face angles
  double sin_delta = 0.0;
  double delta = 0.0;      // lower bound on one of the two adjacent dihedrals
  double C0 = 0.0;         // min(sin delta, sin gamma_max)
  double D = 0.0;          // 6 / (C0 C1^2)
};

/// Constants of the direction "H_T/h_T <= D  =>  max angle <= gamma".
struct BackwardConstants {
  double D = 0.0;
  double M = 0.0;              // 6 / D
  double gamma_M = 0.0;        // pi - asin(M)
  double gamma_half_M = 0.0;   // pi - asin(M/2)
  double type1_dihedral = 0.0; // acos(-sqrt(1-M^2) sqrt(1-M^2/4))
  double type2_dihedral = 0.0; // acos(M^2 - 1)
  double gamma_type1 = 0.0;
  double gamma_type2 = 0.0;
  double gamma_uniform = 0.0;
};

struct TheoremCheck {
  double ratio_H = 0.0;
  double max_angle = 0.0;
  double D = 0.0;              // forward bound evaluated at max_angle
  double gamma_uniform = 0.0;  // backward bound evaluated at ratio_H
  bool forward_ok = false;
  bool backward_ok = false;

  bool ok() const { return forward_ok && backward_ok; }
};

/// Throws InvalidGamma unless gamma is in [pi/3, pi).
void require_gamma(double gamma);

bool satisfies_mac(const Tetrahedron& t, double gamma);
bool satisfies_mac(double max_angle, double gamma);

/// (cos g + 1) / (sin(g/2) + 1), which lies in (0, 1] on [pi/3, pi).
double sin2_delta_bound(double gamma);

/// min{ sin((pi - g)/2), sin g }: floor on the sines of the two largest angles
/// of any triangle whose largest angle is at most g.
double triangle_sine_floor(double gamma_max);

/// pi - asin(x), for x in (0, 1).
double gamma_of(double x);

ForwardConstants forward_constants(double gamma_max);

/// Throws InvalidBound when D <= 6 (no tetrahedron has H_T/h_T <= 6).
BackwardConstants backward_constants(double D);

TheoremCheck theorem_check(const Tetrahedron& t);
TheoremCheck theorem_check(double ratio_H, double max_angle);

}  // namespace tetmac
