#include <doctest.h>

#include "support.hpp"
#include "tetmac/errors.hpp"
#include "tetmac/test_functions.hpp"

using namespace tetmac;
using namespace tetmac::test;

namespace {

Point3 shifted(Point3 x, int axis, double h) {
  Point3 y = x;
  (axis == 0 ? y.x : axis == 1 ? y.y : y.z) += h;
  return y;
}

}  // namespace

TEST_CASE("registry") {
  const auto ids = test_function_ids();
  CHECK(ids == std::vector<std::string>{"affine", "exp", "quadratic", "runge", "sin123", "x2"});
  for (const auto& id : ids) CHECK(test_function(id).id() == id);
  CHECK_THROWS_AS(test_function("cosh"), InvalidArgument);
}

TEST_CASE("point values") {
  CHECK(test_function("affine").value({1, 1, 1}) == 5.0);
  CHECK(test_function("x2").value({3, 7, -1}) == 9.0);
  CHECK(test_function("sin123").value({0.1, 0.2, 0.3}) == doctest::Approx(std::sin(1.4)));
  CHECK(test_function("exp").value({1, 2, 2}) == doctest::Approx(std::exp(0.0)));
  CHECK(test_function("runge").value({0.5, 0, 0}) == doctest::Approx(0.5));
  // quadratic = x^T A x + b.x + c at (1, 1, 1): sum(A) + sum(b) - 1.
  CHECK(test_function("quadratic").value({1, 1, 1}) == doctest::Approx(3.0 - 0.5 - 1.0));
}

TEST_CASE("analytic derivatives agree with central differences") {
  TetraSampler gen(41);
  const double h = 1e-5;
  for (const auto& id : test_function_ids()) {
    const auto& f = test_function(id);
    for (int n = 0; n < 20; ++n) {
      const Point3 x{gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1)};
      const Jet j = f.jet(x);
      for (int r = 0; r < 3; ++r) {
        const Jet p = f.jet(shifted(x, r, h)), m = f.jet(shifted(x, r, -h));
        CHECK(j.grad[r] == doctest::Approx((p.value - m.value) / (2 * h)).epsilon(1e-6).scale(1));
        for (int s = 0; s < 3; ++s) {
          CHECK(j.hess[r][s] == doctest::Approx((p.grad[s] - m.grad[s]) / (2 * h)).epsilon(1e-6).scale(1));
          for (int t = 0; t < 3; ++t)
            CHECK(j.third[r][s][t] ==
                  doctest::Approx((p.hess[s][t] - m.hess[s][t]) / (2 * h)).epsilon(1e-6).scale(1));
        }
      }
    }
  }
}

TEST_CASE("partials of each order") {
  const Jet j = test_function("sin123").jet({0.3, -0.2, 0.7});
  CHECK(partials_of_order(j, 0).size() == 1);
  CHECK(partials_of_order(j, 1).size() == 3);
  CHECK(partials_of_order(j, 2).size() == 6);
  CHECK(partials_of_order(j, 3).size() == 10);
  CHECK_THROWS_AS(partials_of_order(j, 4), InvalidArgument);
  // d^2/dydz of sin(x + 2y + 3z) = -6 sin(.)
  const double s = std::sin(0.3 - 0.4 + 2.1);
  const auto second = partials_of_order(j, 2);
  CHECK(std::find_if(second.begin(), second.end(),
                     [&](double v) { return std::abs(v + 6 * s) < 1e-14; }) != second.end());
}

TEST_CASE("custom quadratic") {
  const auto q = make_quadratic("q", {{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}}, {1, 0, 0}, 4);
  CHECK(q->id() == "q");
  CHECK(q->value({1, 1, 1}) == 11.0);
  const Jet j = q->jet({1, 1, 1});
  CHECK(j.grad[0] == 3.0);
  CHECK(j.hess[2][2] == 6.0);
  CHECK(j.third[0][0][0] == 0.0);
}

TEST_CASE("jet subtraction") {
  Jet a = test_function("exp").jet({0.1, 0.2, 0.3});
  const Jet b = a;
  a -= b;
  CHECK(a.value == 0.0);
  CHECK(a.third[1][2][0] == 0.0);
}
