#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

namespace tetmac {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return s * a; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

using Point3 = Vec3;

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline double distance(Point3 a, Point3 b) { return norm(b - a); }

/// Angle between two nonzero vectors, atan2-based so it stays accurate near 0 and pi.
inline double angle_between(Vec3 a, Vec3 b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

bool is_finite(Point3 p) noexcept;

/// Four labeled vertices. Index i (0-based) plays the role of vertex P_{i+1};
/// face i is the face opposite vertex i.
struct Tetrahedron {
  std::array<Point3, 4> vertices{};

  const Point3& operator[](std::size_t i) const { return vertices[i]; }
  Point3& operator[](std::size_t i) { return vertices[i]; }
};

using VertexPair = std::pair<int, int>;  // always (smaller, larger)

/// The six edge lengths sorted ascending; ties ordered by vertex pair.
struct EdgeSpectrum {
  std::array<double, 6> lengths{};
  std::array<VertexPair, 6> edge_of{};
  double h_T = 0.0;

  double shortest() const { return lengths[0]; }
};

/// All angle families, indexed by 0-based vertex/face numbers. Diagonal entries are unused (0).
///   theta[i][j] : internal angle of face i at vertex j
///   psi[i][j]   : dihedral angle between faces i and j (symmetric)
///   phi[i][j]   : angle between face i and the edge from vertex i to vertex j
struct AngleSet {
  std::array<std::array<double, 4>, 4> theta{};
  std::array<std::array<double, 4>, 4> psi{};
  std::array<std::array<double, 4>, 4> phi{};
};

/// |T| <= kDegeneracyFactor * h_T^3 marks a flat (degenerate) element.
inline constexpr double kDegeneracyFactor = 1e-14;

/// Coincident-vertex cutoff, relative to the longest edge.
inline constexpr double kCoincidenceFactor = 1e-14;

// The functions below throw DegenerateInput on non-finite coordinates or when
// their result is ill-defined for a degenerate element.

EdgeSpectrum edge_spectrum(const Tetrahedron& t);

/// Determinant volume. Never throws on flat input; returns 0 (or roundoff-level values).
double volume(const Tetrahedron& t);

/// Longest pairwise vertex distance.
double diameter(const Tetrahedron& t);

bool is_degenerate(const Tetrahedron& t);

/// Throws DegenerateInput unless the element passes the scale-free volume cutoff.
void require_nondegenerate(const Tetrahedron& t);

AngleSet angle_set(const Tetrahedron& t);

double max_face_angle(const AngleSet& a);
double max_dihedral_angle(const AngleSet& a);

/// Largest of the 12 face angles and 6 dihedral angles (edge-face angles excluded).
double max_angle(const Tetrahedron& t);
double max_angle(const AngleSet& a);

double face_area(const Tetrahedron& t, int face);

/// Diameter of the inscribed ball, 6|T| / (sum of face areas).
double inscribed_ball_diameter(const Tetrahedron& t);

/// Largest absolute residual of the two spherical cosine rules at every vertex,
/// over every ordering of the three faces meeting there.
double verify_cosine_rules(const Tetrahedron& t);
double verify_cosine_rules(const AngleSet& a);

/// Largest |sin phi_n^j - sin theta_n^k sin psi^{k,j}| over all admissible index tuples.
double verify_sine_identity(const AngleSet& a);

/// Largest |sum of face angles - pi| over the four faces.
double face_angle_sum_residual(const AngleSet& a);

/// Returns the three vertex indices other than `i`, ascending.
std::array<int, 3> others(int i);

/// Returns the two vertex indices other than `i` and `j`, ascending.
std::array<int, 2> others(int i, int j);

}  // namespace tetmac
