#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "riley/moduli.hpp"

using namespace riley;

namespace {

std::vector<Params> sample(int n, double lo, double hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(lo, hi);
  std::vector<Params> out;
  for (int i = 0; i < n; ++i) out.push_back(Params::make(U(rng), U(rng)));
  return out;
}

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

}  // namespace

TEST_CASE("exact values of D and G") {
  CHECK(poly_D(Rational(4), Rational(4)) == 1225);
  CHECK(poly_D(Rational(4), Rational(3, 2)) == 0);
  CHECK(poly_D(Rational(3), Rational(4)) == 0);
  CHECK(poly_G(Rational(4), Rational(3, 2)) == 0);

  RegionClass o = region_classify(Params::make(0, 0));
  CHECK(o.exact);
  CHECK(o.D == 1225);
  CHECK(o.tag == RegionTag::Z_interior);
  RegionClass l = region_classify(Params::limit());
  CHECK(l.tag == RegionTag::Z_boundary);
  CHECK(commutator_class(Params::limit()).tag == CommutatorTag::Parabolic);
  RegionClass c = region_classify(Params::make(kPi / 6, 0));
  CHECK(c.tag == RegionTag::Z_boundary);
  CHECK(std::abs(c.D) < 1e-9);
}

TEST_CASE("limit parameters") {
  CHECK(alpha2_lim() == doctest::Approx(std::acos(std::sqrt(3.0 / 8.0))));
  Params p = Params::limit();
  CHECK(p.X() == doctest::Approx(4.0));
  CHECK(p.Y() == doctest::Approx(1.5));
  CHECK_THROWS_AS(Params::make(kPi / 2, 0), DomainError);
  CHECK_THROWS_AS(Params::make(0, NAN), DomainError);
}

TEST_CASE("generators satisfy the defining identities") {
  for (const Params& p : sample(100, -1.5, 1.5, 5)) {
    GroupData g = build_group(p);
    CHECK(std::abs(g.A.trace() - 3.0) < 1e-12);
    CHECK(std::abs((g.A * g.B).trace() - 3.0) < 1e-12);
    CHECK(std::abs(g.S.trace()) < 1e-12);
    CHECK(std::abs(g.T.trace()) < 1e-12);
    CHECK(projective_residual((g.S * g.T).m, g.A.m) < 1e-10);
    CHECK(projective_residual((g.T * g.S).m, g.B.m) < 1e-10);
    CHECK(is_scalar((g.S * g.S * g.S).m, 1e-10));
    cplx want = p.x1 * p.x1 * p.Y() * std::polar(1.0, p.alpha1 / 3);
    CHECK(std::abs((g.S * g.T.inverse()).trace() - want) < 1e-10 * std::max(1.0, std::abs(want)));
    CHECK(classify(g.A).tag == IsoTag::Unipotent);
    CHECK(classify(g.B).tag == IsoTag::Unipotent);
  }
}

TEST_CASE("cartan invariants of the fixed points") {
  for (const Params& p : sample(20, -1.4, 1.4, 6)) {
    GroupData g = build_group(p);
    CHECK(std::abs(cartan_invariant(g.pA, g.pAB, g.pB) - p.alpha1) < 1e-10);
    CHECK(std::abs(cartan_invariant(g.pA, g.pAB, g.pBA) - p.alpha2) < 1e-10);
  }
}

TEST_CASE("quartic L on the axes") {
  Poly l0 = quartic_L(Params::make(0, 0));
  Poly ll = quartic_L(Params::limit());
  const double w0[5] = {49, 0, -70, 0, 25}, wl[5] = {9, 0, -30, 0, 25};
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(l0.c[i] - w0[i]) < 1e-12);
    CHECK(std::abs(ll.c[i] - wl[i]) < 1e-12);
  }
  auto r = isolate_roots(l0, -2, 2);
  REQUIRE(r.size() == 2);
  CHECK(r[1].multiplicity == 2);
  CHECK(std::abs(r[1].x - std::sqrt(7.0 / 5)) < 1e-12);
  // alpha2 = 0 gives a perfect square with roots outside [-1, 1]
  Params p = Params::make(0.3, 0);
  for (const Root& t : isolate_roots(quartic_L(p), -5, 5)) {
    CHECK(t.multiplicity == 2);
    CHECK(std::abs(t.x) > 1);
  }
  CHECK(leading_coefficient_lower_bound() > 0);
}

TEST_CASE("closed discriminant matches the algebraic one") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> U1(-kPi / 6, kPi / 6), U2(-alpha2_lim(), alpha2_lim());
  for (int i = 0; i < 200; ++i) {
    Params p = Params::make(U1(rng), U2(rng));
    CHECK(rel(discriminant(p), discriminant_algebraic(p)) < 1e-9);
  }
}

TEST_CASE("region tags are point symmetric") {
  for (const Params& p : sample(200, -1.5, 1.5, 9))
    CHECK(region_classify(p).tag == region_classify(Params::make(-p.alpha1, -p.alpha2)).tag);
}

TEST_CASE("elliptic commutator outside the rectangle") {
  Params p = Params::make(0, 1.4);
  CHECK(region_classify(p).tag == RegionTag::E_elliptic);
  CommutatorClass cc = commutator_class(p);
  CHECK(cc.tag == CommutatorTag::Elliptic);
  CHECK(cc.direct.tag == IsoTag::RegularElliptic);
  CHECK(commutator_class(Params::make(0, 0)).tag == CommutatorTag::Loxodromic);
}

TEST_CASE("phi squares to A and symmetries exist on the axes") {
  for (const Params& p : sample(30, -1.2, 1.2, 10)) {
    Symmetries s = symmetry_maps(p);
    GroupData g = build_group(p);
    GroupElement phi2 = s.phi * s.phi;
    CHECK(projective_residual(Mat3(phi2.m / phi2.m.norm()), Mat3(g.A.m / g.A.m.norm())) < 1e-10);
  }
  Symmetries s = symmetry_maps(Params::make(0, 0.4));
  REQUIRE(s.st_real);
  GroupData g = build_group(Params::make(0, 0.4));
  CHECK(projective_residual((s.st_real->I2 * s.st_real->I1).m, g.S.m) < 1e-10);
  CHECK(projective_residual((s.st_real->I1 * s.st_real->I3).m, g.T.m) < 1e-10);
  Symmetries r = symmetry_maps(Params::make(0.3, 0));
  REQUIRE(r.ab_real);
  GroupData h = build_group(Params::make(0.3, 0));
  for (const GroupElement* inv : {&r.ab_real->I1, &r.ab_real->I2, &r.ab_real->I3})
    CHECK(is_scalar((*inv * *inv).m, 1e-10));
  CHECK(projective_residual((r.ab_real->I2 * r.ab_real->I1).m, h.A.m) < 1e-10);
  CHECK(projective_residual((r.ab_real->I1 * r.ab_real->I3).m, h.B.m) < 1e-10);
  CHECK(!symmetry_maps(Params::make(0.3, 0.2)).st_real.has_value());
}

TEST_CASE("traced boundary curves lie on their zero sets") {
  TracedBoundary z = trace_boundary(BoundaryCurve::Z, 100);
  CHECK(z.failures.empty());
  REQUIRE(!z.points.empty());
  for (auto [a1, a2] : z.points) {
    Params p = Params::make(a1, a2);
    CHECK(std::abs(poly_D(p.X(), p.Y())) < 1e-6);
  }
  TracedBoundary g = trace_boundary(BoundaryCurve::P, 100);
  CHECK(g.failures.empty());
  for (auto [a1, a2] : g.points) {
    Params p = Params::make(a1, a2);
    CHECK(std::abs(poly_G(p.X(), p.Y())) < 1e-6);
  }
}
