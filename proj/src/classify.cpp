#include "tetmac/classify.hpp"

#include <algorithm>

#include "tetmac/errors.hpp"

namespace tetmac {

namespace {

constexpr std::array<VertexPair, 6> kEdges = {
    VertexPair{0, 1}, VertexPair{0, 2}, VertexPair{0, 3},
    VertexPair{1, 2}, VertexPair{1, 3}, VertexPair{2, 3}};

VertexPair ordered(int a, int b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

bool shares_one_vertex(VertexPair a, VertexPair b) {
  const int common = (a.first == b.first) + (a.first == b.second) + (a.second == b.first) +
                     (a.second == b.second);
  return common == 1;
}

int shared_vertex(VertexPair a, VertexPair b) {
  return (a.first == b.first || a.first == b.second) ? a.first : a.second;
}

int other_end(VertexPair e, int v) { return e.first == v ? e.second : e.first; }

double length(const Tetrahedron& t, VertexPair e) { return distance(t[e.first], t[e.second]); }

}  // namespace

Classification classify(const Tetrahedron& t) {
  require_nondegenerate(t);
  const EdgeSpectrum spectrum = edge_spectrum(t);
  const double h = spectrum.h_T;

  // kEdges is lexicographic, so the first edge inside the tie band wins.
  VertexPair e2{};
  for (auto e : kEdges) {
    if (length(t, e) <= spectrum.shortest() + kTieTolerance * h) {
      e2 = e;
      break;
    }
  }

  double longest = 0.0;
  for (auto e : kEdges)
    if (shares_one_vertex(e, e2)) longest = std::max(longest, length(t, e));
  VertexPair e1{};
  for (auto e : kEdges) {
    if (shares_one_vertex(e, e2) && length(t, e) >= longest - kTieTolerance * h) {
      e1 = e;
      break;
    }
  }

  const int s = shared_vertex(e1, e2);
  const int o = other_end(e1, s);
  const int x = other_end(e2, s);
  const int y = others(s, o)[0] == x ? others(s, o)[1] : others(s, o)[0];

  // Signed distance to the bisector plane of e1; negative on the side of s.
  const Vec3 axis = (1.0 / norm(t[o] - t[s])) * (t[o] - t[s]);
  const Point3 mid = 0.5 * (t[s] + t[o]);
  const double dx = dot(t[x] - mid, axis);
  const double dy = dot(t[y] - mid, axis);
  const double tol = kPlaneTolerance * h;
  const bool x_on = std::abs(dx) <= tol;
  const bool y_on = std::abs(dy) <= tol;

  Classification c;
  if (x_on || y_on || ((dx < 0.0) == (dy < 0.0))) {
    c.kind = ElementType::Type1;
    if (x_on && dy > tol) {
      // x is equidistant from both ends of e1, so o-x is an equally short edge;
      // rooting e2 at o keeps P4 on the P1 side.
      c.role = {o, s, x, y};
    } else {
      c.role = {s, o, x, y};
    }
    c.e2 = ordered(c.role[0], c.role[2]);
  } else {
    c.kind = ElementType::Type2;
    c.role = {o, s, x, y};
    c.e2 = ordered(c.role[1], c.role[2]);
  }
  c.e1 = e1;
  c.alpha1 = distance(t[c.role[0]], t[c.role[1]]);
  c.alpha2 = length(t, c.e2);
  c.alpha3 = distance(t[c.role[0]], t[c.role[3]]);
  return c;
}

Tetrahedron relabeled(const Tetrahedron& t, const Classification& c) {
  Tetrahedron r;
  for (int k = 0; k < 4; ++k) r[k] = t[c.role[k]];
  return r;
}

std::array<double, 2> volume_angle_sines(const Tetrahedron& t, const Classification& c) {
  const AngleSet a = angle_set(relabeled(t, c));
  // theta_1^4 (Type 1) or theta_2^4 (Type 2): face opposite P4, at P1 or P2.
  const int apex = c.kind == ElementType::Type1 ? 0 : 1;
  return {std::sin(a.theta[3][apex]), std::sin(a.phi[3][0])};
}

double volume_via_angles(const Tetrahedron& t, const Classification& c) {
  const auto [sin_theta, sin_phi] = volume_angle_sines(t, c);
  return c.alpha1 * c.alpha2 * c.alpha3 * sin_theta * sin_phi / 6.0;
}

QualityMetrics quality_metrics(const Tetrahedron& t, const Classification& c,
                               const AngleSet& angles) {
  const EdgeSpectrum spectrum = edge_spectrum(t);
  QualityMetrics q;
  q.h_T = spectrum.h_T;
  q.volume = volume(t);
  q.R_T = spectrum.lengths[0] * spectrum.lengths[1] * q.h_T * q.h_T / q.volume;
  q.H_T = c.alpha1 * c.alpha2 * c.alpha3 * q.h_T / q.volume;
  q.ratio_R = q.R_T / q.h_T;
  q.ratio_H = q.H_T / q.h_T;
  q.rho_T = inscribed_ball_diameter(t);
  q.shape_ratio = q.h_T / q.rho_T;
  q.max_face_angle = max_face_angle(angles);
  q.max_dihedral = max_dihedral_angle(angles);
  q.max_angle = std::max(q.max_face_angle, q.max_dihedral);
  return q;
}

QualityMetrics quality_metrics(const Tetrahedron& t) {
  return quality_metrics(t, classify(t), angle_set(t));
}

}  // namespace tetmac
