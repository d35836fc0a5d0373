#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "riley/limit.hpp"

using namespace riley;

namespace {

const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s15 = std::sqrt(15.0);

double lift_gap(const Lift& a, const Lift& b) { return (a.standard().v - b.standard().v).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("parabolic fixed points of the limit group") {
  auto shown = displayed_parabolic_lifts();
  // p_{ST^-1}, p_{S^-1T}, p_{TST}, p_{STS}
  CHECK(lift_gap(shown[0], Lift(cplx(-0.25, s15 / 4), cplx(s3 / 4, s5 / 4), 1)) < 1e-15);
  CHECK(lift_gap(shown[1], Lift(cplx(-0.25, -s15 / 4), cplx(-s3 / 4, s5 / 4), 1)) < 1e-15);
  CHECK(lift_gap(shown[2], Lift(cplx(-1, 0), cplx(-3 * s3 / 4, s5 / 4), 1)) < 1e-15);
  CHECK(lift_gap(shown[3], Lift(cplx(-1, 0), cplx(3 * s3 / 4, s5 / 4), 1)) < 1e-15);

  LimitData d = limit_group();
  CHECK(d.all_unipotent);
  CHECK(d.lift_residual < 1e-12);
  CHECK(d.fixed_residual < 1e-12);
  CHECK(d.phi_orbit_residual < 1e-12);
  CHECK(d.phi_squared_residual < 1e-12);
  CHECK(d.matrix_residual < 1e-12);
  CHECK(lift_gap(d.p_STi, shown[0]) < 1e-12);
  // the displayed A
  Mat3 A;
  A << 1, -s3, cplx(-1.5, s15 / 2), 0, 1, s3, 0, 0, 1;
  CHECK(projective_residual(d.group.A.m, A) < 1e-12);
}

TEST_CASE("tangencies at the new parabolic fixed points") {
  TangencyReport t = tangency_check();
  CHECK(std::abs(t.mod_pBA - 1) < 1e-12);
  CHECK(std::abs(t.mod_ApB - 1) < 1e-12);
  CHECK(std::abs(t.mod_b_Ai - 1) < 1e-12);
  CHECK(std::abs(t.mod_b_pAB - 1) < 1e-12);
  CHECK(std::abs(t.disc_gap_a) < 1e-12);
  CHECK(std::abs(t.disc_gap_b) < 1e-12);
  CHECK(t.triple.points.size() == 2);
  CHECK(t.triple_residual < 1e-12);
  CHECK(t.pass());
}

TEST_CASE("cycle graph") {
  CycleGraph g = cycle_graph();
  CHECK(g.pass);
  CHECK(g.quadrilaterals > 0);
  CHECK(g.triangles > 0);
  for (const CycleCertificate& c : g.cycles) {
    CHECK(c.ok);
    if (c.path.size() == 4) CHECK(c.tag == IsoTag::Unipotent);
  }
  CHECK(g.T_inv_S_cubed_residual < 1e-10);
}

TEST_CASE("fans and the slab") {
  CHECK(Fan{0}.offset() == doctest::Approx(std::sqrt(2.0) / 2));
  CHECK(Fan{-1}.offset() == doctest::Approx(-4 * std::sqrt(2.0)));
  for (int k : {-1, 0, 1})
    for (double xi : {-1.0, 0.2})
      for (double eta : {-0.7, 1.5}) {
        HeisPoint q = HeisPoint::from_lift(Fan{k}.point(xi, eta));
        CHECK(fan_value(q) == doctest::Approx(Fan{k}.offset()).epsilon(1e-12));
      }
  // f(0, sqrt15/4) is p_{ST^-1}
  CHECK(lift_gap(Fan{0}.point(0, s15 / 4), displayed_parabolic_lifts()[0]) < 1e-12);
  CHECK(in_DA(HeisPoint{0, 0, 0}));
  CHECK(!in_DA(HeisPoint{cplx(1, 0), 0, 0}));
  CHECK(in_DA(HeisPoint::from_lift(displayed_parabolic_lifts()[1])));
  CHECK(slab_equivariance().pass());
}

TEST_CASE("fan meets the ridge only at two points") {
  FanRidgeReport r = fan_ridge_intersection();
  REQUIRE(r.solutions.size() == 2);
  for (auto [xi, eta] : r.solutions) {
    CHECK(std::abs(xi) < 1e-12);
    CHECK(std::abs(std::abs(eta) - s15 / 4) < 1e-12);
  }
  CHECK(r.max_residual < 1e-12);
  CHECK(r.scan_clusters == 2);
  CHECK(r.q0_separates);
  CHECK(r.pass());
}

TEST_CASE("fan and sphere table") {
  FanSphereTable t = fan_sphere_table();
  using H = FanHit;
  const H f0[8] = {H::Empty, H::Empty, H::Point, H::Empty, H::Circle, H::Circle, H::Empty, H::Point};
  const H fm1[8] = {H::Point, H::Empty, H::Circle, H::Circle, H::Empty, H::Point, H::Empty, H::Empty};
  for (int i = 0; i < 8; ++i) {
    CHECK(t.computed[0][i] == f0[i]);
    CHECK(t.computed[1][i] == fm1[i]);
  }
  CHECK(t.pass());
}

TEST_CASE("boundary cell complex of the slab") {
  BoundaryComplex b = boundary_cell_complex();
  CHECK(b.complex.vertices.size() == 5);
  CHECK(b.complex.edges.size() == 11);
  CHECK(b.complex.faces.size() == 8);
  CHECK(b.complex.euler() == 2);
  CHECK(b.complex.problems().empty());
  CHECK(b.positions_ok);
}

TEST_CASE("octahedron") {
  Octahedron o = octahedron();
  CHECK(o.pre.faces.size() == 10);
  CHECK(o.pre.edges.size() == 14);
  CHECK(o.pre.pairings.size() == 5);
  CHECK(o.post.faces.size() == 8);
  CHECK(o.post.edges.size() == 12);
  CHECK(o.post.vertices.size() == 6);
  CHECK(o.post.euler() == 2);
  CHECK(o.post.pairings.size() == 4);
  CHECK(o.post.problems().empty());
  CHECK(o.max_pairing_residual <= 1e-10);
  CHECK(o.merge_maps_agree);
  CHECK(o.relator_trivial);
  CHECK(o.pass());
}

TEST_CASE("delta_phi stays inside I_0^+") {
  DeltaPhiReport r = delta_phi_exclusion();
  CHECK(r.max_d4 == doctest::Approx(529.0 / 1024.0));
  CHECK(r.pass());
}

TEST_CASE("quadrilateral and bigon") {
  SplitReport s = quad_bigon_split(128, 256);
  CHECK(s.components == 2);
  CHECK(s.pass());
}
