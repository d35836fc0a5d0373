#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "riley/core.hpp"

using namespace riley;

namespace {

HeisPoint hp(double x, double y, double t, double u = 0) { return HeisPoint{cplx(x, y), t, u}; }

// hand-rolled Cygan distance on the boundary: |  |z-w|^2 + i(t - s + 2 Im z conj w) |^(1/2)
double cygan_ref(const HeisPoint& p, const HeisPoint& q) {
  double re = std::norm(p.z - q.z);
  double im = p.t - q.t + 2 * std::imag(p.z * std::conj(q.z));
  return std::pow(re * re + im * im, 0.25);
}

}  // namespace

TEST_CASE("hermitian form is antidiagonal") {
  Vec3 x(cplx(1, 2), cplx(0, 1), cplx(3, 0));
  Vec3 y(cplx(2, 0), cplx(1, 1), cplx(0, -1));
  cplx expect = x(0) * std::conj(y(2)) + x(1) * std::conj(y(1)) + x(2) * std::conj(y(0));
  CHECK(std::abs(hermitian_product(x, y) - expect) < 1e-15);
}

TEST_CASE("standard lifts are null and round-trip") {
  HeisPoint q = hp(0.3, -1.2, 0.7);
  Lift l = q.lift();
  CHECK(std::abs(l[2] - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(hermitian_product(l, l)) < 1e-14);
  // (-|z|^2 + i t, z sqrt2, 1)
  CHECK(std::abs(l[0] - cplx(-(0.09 + 1.44), 0.7)) < 1e-14);
  CHECK(std::abs(l[1] - cplx(0.3, -1.2) * std::sqrt(2.0)) < 1e-14);
  HeisPoint back = HeisPoint::from_lift(Lift(l.v * cplx(2, -3)));
  CHECK(std::abs(back.z - q.z) < 1e-14);
  CHECK(back.t == doctest::Approx(q.t).epsilon(1e-14));
  CHECK(Lift::q_inf().is_infinity());
}

TEST_CASE("cygan distance") {
  CHECK(cygan_distance(hp(0, 0, 0), hp(1, 0, 0)) == doctest::Approx(1.0));
  CHECK(cygan_distance(hp(0, 0, 0), hp(0, 0, 16)) == doctest::Approx(4.0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-2, 2);
  for (int i = 0; i < 50; ++i) {
    HeisPoint p = hp(U(rng), U(rng), U(rng)), q = hp(U(rng), U(rng), U(rng));
    CHECK(cygan_distance(p, q) == doctest::Approx(cygan_ref(p, q)).epsilon(1e-13));
    CHECK(cygan_distance(p, q) == doctest::Approx(cygan_distance(q, p)).epsilon(1e-13));
    // left Heisenberg translation is an isometry
    HeisPoint g = hp(U(rng), U(rng), U(rng));
    CHECK(cygan_distance(heisenberg_translate(g, p), heisenberg_translate(g, q)) ==
          doctest::Approx(cygan_distance(p, q)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(cygan_distance(hp(0, 0, 0, -1), hp(0, 0, 0)), DomainError);
}

TEST_CASE("heisenberg matrices act as translations") {
  cplx w(0.4, -0.9);
  double s = 1.3;
  GroupElement g = GroupElement::from(heisenberg_matrix(w, s));
  HeisPoint q = hp(-0.2, 0.5, 2.0);
  HeisPoint moved = HeisPoint::from_lift(g.apply(q.lift()));
  HeisPoint expect = heisenberg_translate(HeisPoint{w, s, 0}, q);
  CHECK(std::abs(moved.z - expect.z) < 1e-13);
  CHECK(moved.t == doctest::Approx(expect.t).epsilon(1e-13));
  CHECK(g.apply(Lift::q_inf()).is_infinity());
}

TEST_CASE("goldman discriminant") {
  CHECK(goldman_F(cplx(3, 0)) == doctest::Approx(0.0));
  CHECK(goldman_F(cplx(-1, 0)) == doctest::Approx(0.0));  // trace of an order-three rotation
  CHECK(goldman_F(cplx(5, 0)) > 0);
  CHECK(goldman_F(cplx(1, 0)) < 0);
}

TEST_CASE("classification of simple elements") {
  CHECK(classify(GroupElement()).tag == IsoTag::Identity);
  GroupElement n = GroupElement::from(heisenberg_matrix(cplx(1, 0), 0));
  CHECK(classify(n).tag == IsoTag::Unipotent);
  Mat3 d = Mat3::Zero();
  d(0, 0) = 2;
  d(1, 1) = 1;
  d(2, 2) = 0.5;
  CHECK(classify(GroupElement::from(d)).tag == IsoTag::Loxodromic);
  // rotation about the interior point (1, 0, -1): eigenbasis orthogonal for the form
  Mat3 P;
  P << 1, 0, 1, 0, 1, 0, -1, 0, 1;
  Mat3 L = Mat3::Zero();
  L(0, 0) = std::polar(1.0, 0.4);
  L(1, 1) = std::polar(1.0, 1.1);
  L(2, 2) = std::polar(1.0, -1.5);
  Mat3 r = P * L * P.inverse();
  CHECK(classify(GroupElement::from(r)).tag == IsoTag::RegularElliptic);
}

TEST_CASE("inverse preserves the form") {
  GroupElement g = GroupElement::from(heisenberg_matrix(cplx(0.3, 0.2), -0.7));
  Mat3 prod = (g * g.inverse()).m;
  CHECK((prod - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((g.pow(-3) * g.pow(3)).m.isIdentity(1e-12));
}

TEST_CASE("cartan invariant on chains and complex lines") {
  Lift inf = Lift::q_inf(), o = hp(0, 0, 0).lift();
  CHECK(cartan_invariant(inf, o, hp(1, 0, 0).lift()) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(std::abs(cartan_invariant(inf, o, hp(0, 0, 1).lift())) == doctest::Approx(kPi / 2));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int i = 0; i < 20; ++i) {
    double a = cartan_invariant(hp(U(rng), U(rng), U(rng)).lift(), o, inf);
    CHECK(a >= -kPi / 2 - 1e-12);
    CHECK(a <= kPi / 2 + 1e-12);
  }
  CHECK_THROWS_AS(cartan_invariant(o, o, inf), DomainError);
}

TEST_CASE("parabolic fixed point of a translation is q_inf") {
  GroupElement n = GroupElement::from(heisenberg_matrix(cplx(0, 1), 2));
  CHECK(parabolic_fixed_point(n).is_infinity(1e-9));
}

TEST_CASE("epsilon override") {
  double old = eps();
  set_eps(1e-7);
  CHECK(eps() == 1e-7);
  set_eps(old);
  CHECK(sign_verdict(1.0, 1e-9) == Verdict::Yes);
  CHECK(sign_verdict(-1.0, 1e-9) == Verdict::No);
  CHECK(sign_verdict(1e-12, 1e-9) == Verdict::Marginal);
}

TEST_CASE("cartan invariant under isometries and complex conjugation") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> U(-2, 2);
  GroupElement g = GroupElement::from(heisenberg_matrix(cplx(0.7, -0.1), 0.4));
  for (int i = 0; i < 20; ++i) {
    Lift a = hp(U(rng), U(rng), U(rng)).lift(), b = hp(U(rng), U(rng), U(rng)).lift(),
         c = hp(U(rng), U(rng), U(rng)).lift();
    double base = cartan_invariant(a, b, c);
    CHECK(std::abs(cartan_invariant(g.apply(a), g.apply(b), g.apply(c)) - base) < 1e-10);
    auto bar = [](const Lift& l) { return Lift(Vec3(l.v.conjugate())); };
    CHECK(std::abs(cartan_invariant(bar(a), bar(b), bar(c)) + base) < 1e-10);
  }
}
