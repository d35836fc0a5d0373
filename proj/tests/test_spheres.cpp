#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "riley/ford.hpp"
#include "riley/spheres.hpp"

using namespace riley;

namespace {

std::vector<Params> sample(int n, double lo, double hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(lo, hi);
  std::vector<Params> out;
  for (int i = 0; i < n; ++i) out.push_back(Params::make(U(rng), U(rng)));
  return out;
}

double heis_gap(const HeisPoint& a, const HeisPoint& b) { return std::abs(a.z - b.z) + std::abs(a.t - b.t); }

}  // namespace

TEST_CASE("sphere family agrees with the isometric spheres of the side pairings") {
  for (const Params& p : sample(20, -1.3, 1.3, 41)) {
    GroupData g = build_group(p);
    SphereFamily f{p};
    for (int k = -3; k <= 3; ++k) {
      // I_k^+ is the isometric sphere of A^k S A^-k, I_k^- that of A^k S^-1 A^-k
      CyganSphere plus = isometric_sphere(side_pairing(g, {Sign::Plus, k}));
      CyganSphere minus = isometric_sphere(side_pairing(g, {Sign::Minus, k}));
      CHECK(heis_gap(plus.centre, f.plus(k).centre) < 1e-10);
      CHECK(heis_gap(minus.centre, f.minus(k).centre) < 1e-10);
      CHECK(plus.radius == doctest::Approx(1.0));
      CHECK(minus.radius == doctest::Approx(1.0));
      // centres are A^k p_B and A^k p_AB
      CHECK(heis_gap(HeisPoint::from_lift(g.A.pow(k).apply(g.pB)), f.plus(k).centre) < 1e-10);
      CHECK(heis_gap(HeisPoint::from_lift(g.A.pow(k).apply(g.pAB)), f.minus(k).centre) < 1e-10);
    }
  }
  CHECK(sphere_label(Sign::Minus, -1) == "I-1-");
}

TEST_CASE("geographical coordinates land on the sphere") {
  Params p = Params::make(0.2, 0.5);
  CyganSphere s = SphereFamily{p}.minus(1);
  for (double a : {-1.2, -0.3, 0.0, 0.9})
    for (double b : {0.1, 1.0, 2.5}) {
      double wmax = std::sqrt(2 * std::cos(a));
      for (double w : {-wmax, 0.0, 0.5 * wmax}) {
        HeisPoint q = geo_to_heis(s, {a, b, w});
        CHECK(std::abs(cygan_distance(q, s.centre) - s.radius) < 1e-12);
        CHECK(membership(s, geo_to_point(s, {a, b, w})) == Side::On);
        CHECK(std::abs(sphere_function(s, q)) < 1e-12);
      }
    }
  CHECK_THROWS_AS(geo_to_heis(s, {0.0, 0.0, 2.0}), DomainError);
  CHECK(membership(s, s.centre.lift()) == Side::Interior);
  CHECK(membership(s, Lift::q_inf()) == Side::Exterior);
}

TEST_CASE("closed forms for distances between centres") {
  for (const Params& p : sample(100, -1.5, 1.5, 42)) {
    GroupData g = build_group(p);
    HeisPoint pB = HeisPoint::from_lift(g.pB);
    for (int k = -5; k <= 5; ++k) {
      DisjointnessReport r = pairwise_disjointness_certificate(p, k);
      double dp = cygan_distance(HeisPoint::from_lift(g.A.pow(k).apply(g.pB)), pB);
      double dm = cygan_distance(HeisPoint::from_lift(g.A.pow(k).apply(g.pAB)), pB);
      CHECK(std::abs(std::pow(dp, 4) - r.plus_d4) <= 1e-12 * std::max(1.0, r.plus_d4));
      CHECK(std::abs(std::pow(dm, 4) - r.minus_d4) <= 1e-12 * std::max(1.0, r.minus_d4));
    }
  }
  CHECK(pairwise_disjointness_certificate(Params::limit(), 1).minus_d4 == doctest::Approx(16.0).epsilon(1e-13));
}

TEST_CASE("disjointness claims inside Z") {
  for (const Params& p : {Params::make(0, 0), Params::make(0.3, 0.4), Params::make(-0.1, -0.7)}) {
    for (int k = -5; k <= 5; ++k) {
      DisjointnessReport r = pairwise_disjointness_certificate(p, k);
      CHECK(r.plus_ok);
      CHECK(r.minus_ok);
    }
    CHECK(asymptotic_growth_certificate(p, 5));
  }
}

TEST_CASE("f closed forms match the direct products") {
  for (const Params& p : sample(30, -0.5, 0.5, 43)) {
    for (double a : {-1.0, 0.0, 0.7})
      for (double b : {0.3, 1.9}) {
        double w = 0.4 * std::sqrt(2 * std::cos(a));
        FValues v = f_functions(p, {a, b, w});
        CHECK(std::abs(v.f0 - v.f0_direct) < 1e-10 * std::max(1.0, std::abs(v.f0)));
        CHECK(std::abs(v.fm1 - v.fm1_direct) < 1e-10 * std::max(1.0, std::abs(v.fm1)));
      }
  }
}

TEST_CASE("triple intersection") {
  TripleResult origin = triple_intersection(Params::make(0, 0));
  CHECK(origin.empty);
  CHECK(origin.consistent);

  TripleResult lim = triple_intersection(Params::limit());
  CHECK(!lim.empty);
  REQUIRE(lim.points.size() == 2);
  // g(+-arccos(1/4), pi/2, 1/sqrt2)
  for (const GeoCoord& c : lim.points) {
    CHECK(std::abs(std::abs(c.alpha) - std::acos(0.25)) < 1e-12);
    CHECK(std::abs(c.beta - kPi / 2) < 1e-12);
    CHECK(std::abs(c.w - 1 / std::sqrt(2.0)) < 1e-12);
  }
  CHECK(lim.points[0].alpha * lim.points[1].alpha < 0);
}

TEST_CASE("quartic verdict matches the meridian sampling on a coarse grid") {
  for (int i = -5; i <= 5; ++i)
    for (int j = -5; j <= 5; ++j) {
      Params p = Params::make(i * (kPi / 6) / 5.5, j * alpha2_lim() / 5.5);
      TripleResult t = triple_intersection(p);
      OracleResult o = meridian_oracle(p);
      CHECK(t.empty == !o.nonempty);
    }
}

TEST_CASE("grid components") {
  // two blobs on a cylinder of width 8, one wrapping across the seam
  std::vector<unsigned char> m(4 * 8, 0);
  m[0 * 8 + 0] = m[0 * 8 + 7] = 1;
  m[2 * 8 + 3] = m[3 * 8 + 3] = 1;
  CHECK(grid_components(m, 4, 8) == 2);
}

TEST_CASE("intersection loci on I_0^+") {
  Params p = Params::make(0, 0);
  SphereFamily f{p};
  // I_0^+ meets I_0^- along a single ridge and misses I_2^+
  CHECK(intersection_locus(f.plus(0), f.minus(0), 128, 64).components >= 1);
  CHECK(intersection_locus(f.plus(0), f.plus(2), 128, 64).cells == 0);
}
