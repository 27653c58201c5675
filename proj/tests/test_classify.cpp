#include <doctest.h>

#include "support.hpp"
#include "tetmac/classify.hpp"
#include "tetmac/errors.hpp"
#include "tetmac/family.hpp"

using namespace tetmac;
using namespace tetmac::test;

namespace {

// Straight-line reading of the two-type rule, written without any of the
// library's helpers. Returns the type only; ties do not occur for random input.
int brute_force_type(const Tetrahedron& t) {
  int sa = -1, sb = -1;
  double shortest = 1e300;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (oracle::len(t, a, b) < shortest) shortest = oracle::len(t, a, b), sa = a, sb = b;
  int la = -1, lb = -1;
  double longest = -1;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const int shared = (a == sa) + (a == sb) + (b == sa) + (b == sb);
      if (shared == 1 && oracle::len(t, a, b) > longest) longest = oracle::len(t, a, b), la = a, lb = b;
    }
  const int s = (la == sa || la == sb) ? la : lb;
  const int o = s == la ? lb : la;
  const Point3 mid = 0.5 * (t[s] + t[o]);
  const Vec3 n = t[o] - t[s];
  int free_side[2];
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != s && v != o) free_side[k++] = dot(t[v] - mid, n) < 0 ? -1 : 1;
  return free_side[0] == free_side[1] ? 1 : 2;
}

double signed_side(const Tetrahedron& r, int v) {
  return dot(r[v] - 0.5 * (r[0] + r[1]), r[1] - r[0]);
}

}  // namespace

TEST_CASE("classification of the worked example") {
  const auto t = example_tetra();
  const auto c = classify(t);
  CHECK(c.kind == ElementType::Type1);
  CHECK(c.role == std::array<int, 4>{2, 1, 0, 3});
  CHECK(c.e2 == VertexPair{0, 2});
  CHECK(c.e1 == VertexPair{1, 2});
  CHECK(c.alpha1 == doctest::Approx(std::sqrt(1.01)).epsilon(1e-15));
  CHECK(c.alpha2 == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(c.alpha3 == doctest::Approx(std::sqrt(0.05)).epsilon(1e-15));
}

TEST_CASE("quality metrics of the worked example") {
  const auto q = quality_metrics(example_tetra());
  CHECK(q.volume == doctest::Approx(1.0 / 300).epsilon(1e-14));
  CHECK(q.h_T == doctest::Approx(std::sqrt(1.04)).epsilon(1e-15));
  CHECK(q.R_T == doctest::Approx(6.24).epsilon(1e-13));
  CHECK(q.H_T == doctest::Approx(6.8751727251).epsilon(1e-10));
  CHECK(0.5 * q.H_T <= q.R_T);
  CHECK(q.R_T <= 2 * q.H_T);
  CHECK(volume_via_angles(example_tetra(), classify(example_tetra())) ==
        doctest::Approx(1.0 / 300).epsilon(1e-12));
}

TEST_CASE("regular tetrahedron") {
  const auto t = regular_tetra();
  const auto c = classify(t);
  CHECK(c.kind == ElementType::Type1);
  CHECK(c.alpha1 == doctest::Approx(1).epsilon(1e-15));
  CHECK(c.alpha2 == doctest::Approx(1).epsilon(1e-15));
  CHECK(c.alpha3 == doctest::Approx(1).epsilon(1e-15));
  const auto q = quality_metrics(t);
  CHECK(q.R_T == doctest::Approx(6 * std::sqrt(2.0)).epsilon(1e-13));
  CHECK(q.H_T == doctest::Approx(6 * std::sqrt(2.0)).epsilon(1e-13));
  CHECK(q.ratio_R == doctest::Approx(6 * std::sqrt(2.0)).epsilon(1e-13));
  CHECK(q.ratio_H == doctest::Approx(6 * std::sqrt(2.0)).epsilon(1e-13));
  CHECK(volume_via_angles(t, c) == doctest::Approx(std::sqrt(2.0) / 12).epsilon(1e-12));
}

TEST_CASE("corner tetrahedron metrics") {
  const auto q = quality_metrics(corner_tetra());
  CHECK(q.R_T == doctest::Approx(12).epsilon(1e-14));
  CHECK(q.ratio_R == doctest::Approx(12 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::abs(q.max_angle - kPi / 2) < 1e-12);
  CHECK(q.shape_ratio == doctest::Approx(std::sqrt(2.0) * (1.5 + std::sqrt(3.0) / 2)).epsilon(1e-14));
}

TEST_CASE("planar-collapse member at eps = 0.01 is Type 1") {
  // The free vertices (1,0,0) and (0,1,0) both sit 5e-5/|n| on the origin side
  // of the bisector plane of the longest adjacent edge (0,0,0)-(1,1,0.01).
  const auto t = family_member(FamilyKind::PlanarCollapse, 0.01);
  const auto c = classify(t);
  CHECK(brute_force_type(t) == 1);
  CHECK(c.kind == ElementType::Type1);
  CHECK(c.e2 == VertexPair{0, 1});
  CHECK(c.e1 == VertexPair{0, 3});
}

TEST_CASE("needle member at eps = 0.1 is Type 1") {
  CHECK(classify(family_member(FamilyKind::Needle, 0.1)).kind == ElementType::Type1);
}

TEST_CASE("a Type 2 element") {
  // Shortest edge 01, longest edge touching it 02; vertex 3 sits nearer to
  // vertex 2 than to vertex 0, across the bisector plane from vertex 1.
  const Tetrahedron t{{Point3{0, 0, 0}, Point3{0.3, 0, 0}, Point3{2, 0.1, 0}, Point3{1.6, 0.8, 0.6}}};
  REQUIRE(brute_force_type(t) == 2);
  const auto c = classify(t);
  CHECK(c.kind == ElementType::Type2);
  CHECK(c.role == std::array<int, 4>{2, 0, 1, 3});
  const auto r = relabeled(t, c);
  CHECK(distance(r[1], r[2]) == doctest::Approx(c.alpha2).epsilon(1e-15));
}

TEST_CASE("classification agrees with the brute-force rule") {
  TetraSampler gen(21, 2.0);
  int type2 = 0;
  for (int n = 0; n < 20000; ++n) {
    const auto t = gen.next();
    const int expect = brute_force_type(t);
    type2 += expect == 2;
    REQUIRE(static_cast<int>(classify(t).kind) == expect);
  }
  // Both types must actually be exercised.
  CHECK(type2 > 100);
  CHECK(type2 < 19900);
}

TEST_CASE("structural properties of the relabeled element") {
  TetraSampler gen(22, 1.0);
  for (int n = 0; n < 5000; ++n) {
    const auto t = gen.next();
    const auto c = classify(t);
    const auto r = relabeled(t, c);
    const auto spec = edge_spectrum(t);
    const double tol = 1e-12 * spec.h_T;

    CHECK(distance(r[0], r[1]) == doctest::Approx(c.alpha1).epsilon(1e-15));
    CHECK(distance(r[0], r[3]) == doctest::Approx(c.alpha3).epsilon(1e-15));
    CHECK(c.alpha2 == doctest::Approx(spec.shortest()).epsilon(1e-15));
    const int e2_start = c.kind == ElementType::Type1 ? 0 : 1;
    CHECK(distance(r[e2_start], r[2]) == doctest::Approx(c.alpha2).epsilon(1e-15));
    // P1 and P4 on the same closed side of the bisector plane of P1P2.
    CHECK(signed_side(r, 0) * signed_side(r, 3) >= -tol * tol);
    CHECK(c.alpha2 <= c.alpha3 + tol);
    if (c.kind == ElementType::Type1) CHECK(c.alpha3 <= c.alpha1 + tol);
    // e1 is the longest edge touching e2 in exactly one vertex.
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        const int shared = (a == c.e2.first) + (a == c.e2.second) + (b == c.e2.first) +
                           (b == c.e2.second);
        if (shared == 1) CHECK(oracle::len(t, a, b) <= c.alpha1 + tol);
      }
  }
}

TEST_CASE("half-H, twice-H sandwich and volume via angles on random elements") {
  TetraSampler gen(23, 3.0);
  for (int n = 0; n < 20000; ++n) {
    const auto t = gen.next();
    const auto c = classify(t);
    const auto q = quality_metrics(t);
    REQUIRE(q.R_T >= 0.5 * q.H_T * (1 - 1e-12));
    REQUIRE(q.R_T <= 2.0 * q.H_T * (1 + 1e-12));
    REQUIRE(close_rel(volume_via_angles(t, c), q.volume, 1e-9));
    const auto s = volume_angle_sines(t, c);
    REQUIRE(close_rel(q.ratio_H, 6.0 / (s[0] * s[1]), 1e-9));
  }
}

TEST_CASE("dimensionless metrics are scale invariant") {
  TetraSampler gen(24, 2.0);
  for (int n = 0; n < 500; ++n) {
    const auto t = gen.next();
    const auto q = quality_metrics(t);
    for (double s : {1e-3, 7.0, 1e4}) {
      const auto qs = quality_metrics(scaled(t, s));
      CHECK(close_rel(qs.ratio_R, q.ratio_R, 1e-9));
      CHECK(close_rel(qs.ratio_H, q.ratio_H, 1e-9));
      CHECK(close_rel(qs.shape_ratio, q.shape_ratio, 1e-9));
      CHECK(close_rel(qs.max_angle, q.max_angle, 1e-9));
    }
  }
}

TEST_CASE("degenerate elements are rejected") {
  const Tetrahedron flat{{Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{1, 1, 0}}};
  CHECK_THROWS_AS(classify(flat), DegenerateInput);
  CHECK_THROWS_AS(quality_metrics(flat), DegenerateInput);
}
