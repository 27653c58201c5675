#include "tetmac/geometry.hpp"

#include <algorithm>
#include <numbers>

#include "tetmac/errors.hpp"

namespace tetmac {

namespace {

constexpr std::array<VertexPair, 6> kEdges = {
    VertexPair{0, 1}, VertexPair{0, 2}, VertexPair{0, 3},
    VertexPair{1, 2}, VertexPair{1, 3}, VertexPair{2, 3}};

void require_finite(const Tetrahedron& t) {
  for (const auto& p : t.vertices) {
    if (!is_finite(p)) throw DegenerateInput("tetrahedron has a non-finite coordinate");
  }
}

// Component of v orthogonal to the unit direction e.
Vec3 reject(Vec3 v, Vec3 e) { return v - dot(v, e) * e; }

}  // namespace

bool is_finite(Point3 p) noexcept {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

std::array<int, 3> others(int i) {
  std::array<int, 3> out{};
  int n = 0;
  for (int v = 0; v < 4; ++v)
    if (v != i) out[n++] = v;
  return out;
}

std::array<int, 2> others(int i, int j) {
  std::array<int, 2> out{};
  int n = 0;
  for (int v = 0; v < 4; ++v)
    if (v != i && v != j) out[n++] = v;
  return out;
}

EdgeSpectrum edge_spectrum(const Tetrahedron& t) {
  require_finite(t);
  std::array<std::pair<double, VertexPair>, 6> edges{};
  for (std::size_t e = 0; e < 6; ++e) {
    auto [a, b] = kEdges[e];
    edges[e] = {distance(t[a], t[b]), kEdges[e]};
  }
  // kEdges is already lexicographic, so a stable sort breaks exact ties by vertex pair.
  std::stable_sort(edges.begin(), edges.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });

  EdgeSpectrum s;
  for (std::size_t e = 0; e < 6; ++e) {
    s.lengths[e] = edges[e].first;
    s.edge_of[e] = edges[e].second;
  }
  s.h_T = s.lengths[5];
  if (!(s.lengths[0] > kCoincidenceFactor * s.h_T)) {
    throw DegenerateInput("coincident vertices " + std::to_string(s.edge_of[0].first) + " and " +
                          std::to_string(s.edge_of[0].second));
  }
  return s;
}

double volume(const Tetrahedron& t) {
  const Vec3 a = t[1] - t[0];
  const Vec3 b = t[2] - t[0];
  const Vec3 c = t[3] - t[0];
  return std::abs(dot(a, cross(b, c))) / 6.0;
}

double diameter(const Tetrahedron& t) {
  double h = 0.0;
  for (auto [a, b] : kEdges) h = std::max(h, distance(t[a], t[b]));
  return h;
}

bool is_degenerate(const Tetrahedron& t) {
  for (const auto& p : t.vertices)
    if (!is_finite(p)) return true;
  const double h = diameter(t);
  if (!(h > 0.0)) return true;
  return volume(t) <= kDegeneracyFactor * h * h * h;
}

void require_nondegenerate(const Tetrahedron& t) {
  require_finite(t);
  if (is_degenerate(t)) throw DegenerateInput("tetrahedron volume is below the degeneracy threshold");
}

AngleSet angle_set(const Tetrahedron& t) {
  require_nondegenerate(t);
  AngleSet s;

  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      auto [a, b] = others(i, j);
      s.theta[i][j] = angle_between(t[a] - t[j], t[b] - t[j]);
    }
  }

  // Dihedral along the edge shared by faces i and j, measured between the
  // in-face perpendiculars dropped from vertex j (in face i) and vertex i (in face j).
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      auto [k, m] = others(i, j);
      const Vec3 edge = t[m] - t[k];
      const Vec3 e = (1.0 / norm(edge)) * edge;
      const Vec3 u = reject(t[j] - t[k], e);
      const Vec3 v = reject(t[i] - t[k], e);
      s.psi[i][j] = s.psi[j][i] = angle_between(u, v);
    }
  }

  for (int i = 0; i < 4; ++i) {
    auto [a, b, c] = others(i);
    const Vec3 n = cross(t[b] - t[a], t[c] - t[a]);
    const double nn = norm(n);
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      const Vec3 d = t[j] - t[i];
      const double arg = std::clamp(std::abs(dot(d, n)) / (norm(d) * nn), -1.0, 1.0);
      s.phi[i][j] = std::asin(arg);
    }
  }
  return s;
}

double max_face_angle(const AngleSet& a) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) m = std::max(m, a.theta[i][j]);
  return m;
}

double max_dihedral_angle(const AngleSet& a) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) m = std::max(m, a.psi[i][j]);
  return m;
}

double max_angle(const AngleSet& a) { return std::max(max_face_angle(a), max_dihedral_angle(a)); }

double max_angle(const Tetrahedron& t) { return max_angle(angle_set(t)); }

double face_area(const Tetrahedron& t, int face) {
  auto [a, b, c] = others(face);
  return 0.5 * norm(cross(t[b] - t[a], t[c] - t[a]));
}

double inscribed_ball_diameter(const Tetrahedron& t) {
  require_nondegenerate(t);
  double area = 0.0;
  for (int f = 0; f < 4; ++f) area += face_area(t, f);
  return 6.0 * volume(t) / area;
}

double verify_cosine_rules(const AngleSet& a) {
  double worst = 0.0;
  for (int j = 0; j < 4; ++j) {
    auto idx = others(j);  // ascending, so next_permutation visits all six orders
    do {
      const int k = idx[0], m = idx[1], n = idx[2];
      const double side_rule =
          std::cos(a.theta[k][j]) - (std::cos(a.theta[m][j]) * std::cos(a.theta[n][j]) +
                                     std::sin(a.theta[m][j]) * std::sin(a.theta[n][j]) *
                                         std::cos(a.psi[m][n]));
      const double angle_rule =
          std::cos(a.psi[n][m]) -
          (std::sin(a.psi[m][k]) * std::sin(a.psi[n][k]) * std::cos(a.theta[k][j]) -
           std::cos(a.psi[m][k]) * std::cos(a.psi[n][k]));
      worst = std::max({worst, std::abs(side_rule), std::abs(angle_rule)});
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return worst;
}

double verify_cosine_rules(const Tetrahedron& t) { return verify_cosine_rules(angle_set(t)); }

double verify_sine_identity(const AngleSet& a) {
  double worst = 0.0;
  for (int j = 0; j < 4; ++j) {
    for (int n = 0; n < 4; ++n) {
      if (n == j) continue;
      const double lhs = std::sin(a.phi[j][n]);
      for (int k : others(j, n)) {
        worst = std::max(worst, std::abs(lhs - std::sin(a.theta[k][n]) * std::sin(a.psi[k][j])));
      }
    }
  }
  return worst;
}

double face_angle_sum_residual(const AngleSet& a) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    double sum = 0.0;
    for (int j : others(i)) sum += a.theta[i][j];
    worst = std::max(worst, std::abs(sum - std::numbers::pi));
  }
  return worst;
}

}  // namespace tetmac
