#pragma once

#include <array>

#include "tetmac/geometry.hpp"

namespace tetmac {

enum class ElementType { Type1 = 1, Type2 = 2 };

/// Edge lengths within this relative distance of each other (scaled by h_T) are
/// treated as tied; ties go to the lexicographically smallest vertex pair.
inline constexpr double kTieTolerance = 1e-12;

/// Closed half-space slack for the bisector-plane test, relative to h_T.
inline constexpr double kPlaneTolerance = 1e-12;

/// Result of the two-type classification.
///
/// `role[r]` is the original vertex index that plays role P_{r+1}. In the
/// relabeled element, e1 = P1P2 and e2 is the shortest edge: P1P3 for Type 1,
/// P2P3 for Type 2. P1 and P4 lie in the same closed half-space of the
/// perpendicular bisector plane of e1.
struct Classification {
  ElementType kind = ElementType::Type1;
  std::array<int, 4> role{0, 1, 2, 3};
  double alpha1 = 0.0;  // |P1P2|
  double alpha2 = 0.0;  // |e2| = shortest edge
  double alpha3 = 0.0;  // |P1P4|
  VertexPair e1{};      // original indices, ascending
  VertexPair e2{};
};

struct QualityMetrics {
  double h_T = 0.0;
  double volume = 0.0;
  double R_T = 0.0;
  double H_T = 0.0;
  double ratio_R = 0.0;  // R_T / h_T
  double ratio_H = 0.0;  // H_T / h_T
  double rho_T = 0.0;    // inscribed ball diameter
  double shape_ratio = 0.0;
  double max_face_angle = 0.0;
  double max_dihedral = 0.0;
  double max_angle = 0.0;
};

Classification classify(const Tetrahedron& t);

/// Vertices reordered so that index r holds role P_{r+1}.
Tetrahedron relabeled(const Tetrahedron& t, const Classification& c);

QualityMetrics quality_metrics(const Tetrahedron& t);
QualityMetrics quality_metrics(const Tetrahedron& t, const Classification& c, const AngleSet& angles);

/// Volume from the classification lengths and one face/edge-face angle pair:
/// |T| = alpha1 alpha2 alpha3 sin(theta) sin(phi) / 6, with (theta, phi) = (theta_1^4, phi_1^4)
/// for Type 1 and (theta_2^4, phi_1^4) for Type 2 in the relabeled element.
double volume_via_angles(const Tetrahedron& t, const Classification& c);

/// The type-specific (sin theta, sin phi) pair for which H_T/h_T = 6 / (sin theta sin phi).
std::array<double, 2> volume_angle_sines(const Tetrahedron& t, const Classification& c);

}  // namespace tetmac
