#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "riley/polynomial.hpp"

using namespace riley;

namespace {

// expand prod (x - r_i) into ascending coefficients
Poly from_roots(const std::vector<double>& roots) {
  Poly p{{1.0}};
  for (double r : roots) {
    std::vector<double> c(p.c.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.c.size(); ++i) {
      c[i + 1] += p.c[i];
      c[i] -= r * p.c[i];
    }
    p.c = c;
  }
  return p;
}

}  // namespace

TEST_CASE("evaluation and derivative") {
  Poly p{{1, -3, 0, 2}};  // 2x^3 - 3x + 1
  CHECK(p.degree() == 3);
  CHECK(p(2.0) == doctest::Approx(11.0));
  Poly d = p.derivative();
  REQUIRE(d.c.size() == 3);
  CHECK(d.c[0] == -3);
  CHECK(d.c[1] == 0);
  CHECK(d.c[2] == 6);
  CHECK(Poly{{1, 2, 1e-20}}.trimmed(1e-15).degree() == 1);
}

TEST_CASE("simple roots are isolated") {
  Poly p = from_roots({-1.5, 0.25, 0.5, 2.0});
  auto r = isolate_roots(p, -3, 3);
  REQUIRE(r.size() == 4);
  const double want[4] = {-1.5, 0.25, 0.5, 2.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(r[i].x == doctest::Approx(want[i]).epsilon(1e-12));
    CHECK(r[i].multiplicity == 1);
  }
  CHECK(isolate_roots(p, 0.3, 1.0).size() == 1);
}

TEST_CASE("double roots carry multiplicity and full precision") {
  double s = std::sqrt(7.0 / 5.0);
  Poly p = from_roots({-s, -s, s, s});
  auto r = isolate_roots(p, -2, 2);
  REQUIRE(r.size() == 2);
  CHECK(r[0].multiplicity == 2);
  CHECK(r[1].multiplicity == 2);
  CHECK(std::abs(r[0].x + s) < 1e-12);
  CHECK(std::abs(r[1].x - s) < 1e-12);

  auto t = isolate_roots(from_roots({1.0, 1.0, 1.0, -0.5}), -2, 2);
  REQUIRE(t.size() == 2);
  CHECK(t[1].multiplicity == 3);
  CHECK(std::abs(t[1].x - 1.0) < 1e-9);
}

TEST_CASE("no real roots") {
  CHECK(isolate_roots(Poly{{1, 0, 1}}, -10, 10).empty());
  CHECK(isolate_roots(Poly{{2, 0, 0, 0, 1}}, -10, 10).empty());
}

TEST_CASE("unit interval query") {
  RootReport a = has_root_in_unit_interval(from_roots({-3, 0.5, 2, 4}), 1e-9);
  CHECK(a.found);
  CHECK(!a.degraded);
  REQUIRE(a.roots.size() == 1);
  CHECK(a.roots[0].x == doctest::Approx(0.5));
  CHECK(!has_root_in_unit_interval(from_roots({-3, -2, 2, 4}), 1e-9).found);
  // leading coefficient not positive: sampling fallback
  Poly neg = from_roots({-3, 0.5, 2, 4});
  for (double& c : neg.c) c = -c;
  RootReport b = has_root_in_unit_interval(neg, 1e-9);
  CHECK(b.degraded);
  CHECK(b.found);
  CHECK(!b.warning.empty());
  CHECK_THROWS(has_root_in_unit_interval(Poly{{1, 2, 3}}, 1e-9));
}

TEST_CASE("quartic discriminant") {
  // roots 1,2,3,4: prod of squared differences = 1*4*9*1*4*1
  Poly p = from_roots({1, 2, 3, 4});
  CHECK(quartic_discriminant(p.c[0], p.c[1], p.c[2], p.c[3], p.c[4]) == doctest::Approx(144.0));
  Poly q = from_roots({1, 1, 3, 4});
  CHECK(std::abs(quartic_discriminant(q.c[0], q.c[1], q.c[2], q.c[3], q.c[4])) < 1e-9);
  BigFloat one(1), zero(0);
  // x^4 + 1: discriminant 256
  CHECK(static_cast<double>(quartic_discriminant(one, zero, zero, zero, one)) == doctest::Approx(256.0));
}

TEST_CASE("rational snapping") {
  auto r = snap_rational(0.375);
  REQUIRE(r);
  CHECK(*r == Rational(3, 8));
  CHECK(rational_string(*r) == "3/8");
  CHECK(*snap_rational(1.5) == Rational(3, 2));
  CHECK(!snap_rational(std::sqrt(2.0)));
  CHECK(!snap_rational(NAN));
}
