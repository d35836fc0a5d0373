#include "riley/moduli.hpp"

#include <cmath>

namespace riley {

double alpha2_lim() {
  static const double v = std::acos(std::sqrt(3.0 / 8.0));
  return v;
}

Params Params::make(double a1, double a2, double guard) {
  const double lim = kPi / 2 - guard;
  if (!std::isfinite(a1) || !std::isfinite(a2) || std::abs(a1) >= lim || std::abs(a2) >= lim)
    throw DomainError("parameters must lie in the open square (-pi/2, pi/2)^2 minus the guard");
  Params p;
  p.alpha1 = a1;
  p.alpha2 = a2;
  p.x1 = std::sqrt(2 * std::cos(a1));
  p.x2 = std::sqrt(2 * std::cos(a2));
  p.ell_A = p.x1 * p.x2 * p.x2 / std::sqrt(2.0);
  p.t_A = p.x1 * p.x1 * p.x2 * p.x2 * std::sin(a2);
  return p;
}

GroupData build_group(const Params& p) {
  const double a1 = p.alpha1, a2 = p.alpha2, x1 = p.x1, x2 = p.x2;
  auto e = [](double t) { return std::polar(1.0, t); };
  const double k = x1 * x2 * x2;       // x1 x2^2
  const double kk = x1 * x1 * x2 * x2;  // x1^2 x2^2

  Mat3 A;
  A << 1, -k, -kk * e(-a2),
       0, 1, k,
       0, 0, 1;
  Mat3 B;
  B << 1, 0, 0,
       k * e(-a1), 1, 0,
       -kk * e(a2), -k * e(a1), 1;
  Mat3 S;
  S << e(a1), x1 * e(a1 - a2), -1,
       -x1 * e(a2), -e(a1), 0,
       -1, 0, 0;
  S *= e(-a1 / 3);
  Mat3 T;
  T << 0, 0, -1,
       0, -e(-a1), -x1 * e(-a1 - a2),
       -1, x1 * e(a2), e(-a1);
  T *= e(a1 / 3);

  GroupData g;
  g.p = p;
  g.A = GroupElement::from(A);
  g.B = GroupElement::from(B);
  g.S = GroupElement::from(S);
  g.T = GroupElement::from(T);
  g.pA = Lift(1, 0, 0);
  g.pB = Lift(0, 0, 1);
  g.pAB = Lift(-e(a1), x1 * e(a2), 1);
  g.pBA = Lift(-e(a1), -x1 * e(-a2), 1);

  for (const GroupElement* h : {&g.A, &g.B}) {
    if (classify(*h).tag != IsoTag::Unipotent) throw DomainError("generator is not unipotent at these parameters");
  }
  if (classify(g.A * g.B).tag != IsoTag::Unipotent) throw DomainError("AB is not unipotent at these parameters");
  return g;
}

Symmetries symmetry_maps(const Params& p, double e) {
  GroupData g = build_group(p);
  Symmetries s;
  Mat3 n = Mat3::Zero();
  n(0, 2) = 1;
  n(1, 1) = std::polar(1.0, -p.alpha1);
  n(2, 0) = 1;
  s.iota = AntiHolo{n};
  s.phi = g.S * s.iota;
  if (std::abs(p.alpha1) <= e) {
    Mat3 i1 = Mat3::Zero();
    i1(0, 2) = 1;
    i1(1, 1) = -std::polar(1.0, p.alpha1);
    i1(2, 0) = 1;
    Involutions inv;
    inv.I1 = GroupElement::from(i1);
    inv.I2 = g.S * inv.I1;
    inv.I3 = inv.I1 * g.T;
    s.st_real = inv;
  }
  if (std::abs(p.alpha2) <= e) {
    // diag(1, -1, 1) up to sign, scaled to determinant one
    Mat3 i1 = -Mat3::Identity();
    i1(1, 1) = 1;
    Involutions inv;
    inv.I1 = GroupElement::from(i1);
    inv.I2 = g.A * inv.I1;
    inv.I3 = inv.I1 * g.B;
    s.ab_real = inv;
  }
  return s;
}

HeisPoint delta_phi(const Params& p, double x) {
  double r = std::sqrt(std::cos(p.alpha1)) * std::sin(p.alpha2);
  HeisPoint h;
  h.z = cplx(x, r / 2);
  h.t = x * r - std::sin(p.alpha1) / 2;
  return h;
}

const char* to_string(RegionTag t) {
  switch (t) {
    case RegionTag::Z_interior: return "Z_interior";
    case RegionTag::Z_boundary: return "Z_boundary";
    case RegionTag::L_outside_Z: return "L_outside_Z";
    case RegionTag::P_curve: return "P_curve";
    case RegionTag::E_elliptic: return "E_elliptic";
  }
  return "?";
}

const char* to_string(CommutatorTag t) {
  switch (t) {
    case CommutatorTag::Loxodromic: return "Loxodromic";
    case CommutatorTag::Parabolic: return "Parabolic";
    case CommutatorTag::Elliptic: return "Elliptic";
  }
  return "?";
}

bool in_rectangle(const Params& p, double e) {
  return std::abs(p.alpha1) <= kPi / 6 + e && std::abs(p.alpha2) <= alpha2_lim() + e;
}

namespace {

struct QuarticCoords {
  double X, Y;
  std::optional<Rational> qx, qy;
};

QuarticCoords quartic_coords(const Params& p) {
  QuarticCoords c;
  double c1 = std::cos(p.alpha1), c2 = std::cos(p.alpha2);
  c.X = 4 * c1 * c1;
  c.Y = 4 * c2 * c2;
  c.qx = snap_rational(c.X);
  c.qy = snap_rational(c.Y);
  return c;
}

RegionTag tag_from_signs(int dsign, int gsign, bool rect) {
  if (rect && dsign > 0) return RegionTag::Z_interior;
  if (rect && dsign == 0) return RegionTag::Z_boundary;
  if (gsign < 0) return RegionTag::E_elliptic;
  if (gsign == 0) return RegionTag::P_curve;
  return RegionTag::L_outside_Z;
}

int rsign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

RegionClass region_classify_exact(const Rational& x, const Rational& y) {
  RegionClass rc;
  Rational d = poly_D(x, y), g = poly_G(x, y);
  rc.D = static_cast<double>(d);
  rc.G = static_cast<double>(g);
  rc.exact = true;
  rc.in_rectangle = x >= 3 && x <= 4 && y >= Rational(3, 2) && y <= 4;
  rc.tag = tag_from_signs(rsign(d), rsign(g), rc.in_rectangle);
  return rc;
}

RegionClass region_classify(const Params& p, double e) {
  QuarticCoords q = quartic_coords(p);
  RegionClass rc;
  if (q.qx && q.qy) {
    rc = region_classify_exact(*q.qx, *q.qy);
    rc.in_rectangle = in_rectangle(p, e);
    rc.tag = tag_from_signs(rsign(poly_D(*q.qx, *q.qy)), rsign(poly_G(*q.qx, *q.qy)), rc.in_rectangle);
  } else {
    rc.D = poly_D(q.X, q.Y);
    rc.G = poly_G(q.X, q.Y);
    rc.in_rectangle = in_rectangle(p, e);
    auto sg = [e](double v) { return v > e ? 1 : (v < -e ? -1 : 0); };
    rc.tag = tag_from_signs(sg(rc.D), sg(rc.G), rc.in_rectangle);
    rc.marginal = (rc.in_rectangle && std::abs(rc.D) <= e) || std::abs(rc.G) <= e;
  }
  rc.Delta = discriminant(p);
  return rc;
}

CommutatorClass commutator_class(const Params& p, double e) {
  QuarticCoords q = quartic_coords(p);
  CommutatorClass cc;
  int s;
  if (q.qx && q.qy) {
    Rational g = poly_G(*q.qx, *q.qy);
    cc.G = static_cast<double>(g);
    s = rsign(g);
  } else {
    cc.G = poly_G(q.X, q.Y);
    s = cc.G > e ? 1 : (cc.G < -e ? -1 : 0);
    cc.marginal = s == 0;
  }
  cc.tag = s > 0 ? CommutatorTag::Loxodromic : (s < 0 ? CommutatorTag::Elliptic : CommutatorTag::Parabolic);
  GroupData g = build_group(p);
  cc.direct = classify(g.A * g.B * g.A.inverse() * g.B.inverse());
  return cc;
}

Poly quartic_L(const Params& p) {
  auto c = quartic_L_coeffs<double>(p.alpha1, p.alpha2);
  return Poly{{c[0], c[1], c[2], c[3], c[4]}};
}

double leading_coefficient_lower_bound() {
  // with s = x1^2 in [sqrt3, 2] and Y in [3/2, 4]:
  // c4 = 2 Y s (s - 2) + s^2 + 10 s + 1, and s (s - 2) lies in [sqrt3 (sqrt3 - 2), 0]
  const double s_lo = std::sqrt(3.0);
  double bilinear_min = 2 * 4.0 * (s_lo * (s_lo - 2));
  double rest_min = s_lo * s_lo + 10 * s_lo + 1;
  return bilinear_min + rest_min;
}

double discriminant(const Params& p) { return discriminant_closed<double>(p.alpha1, p.alpha2); }

double discriminant_algebraic(const Params& p) {
  auto c = quartic_L_coeffs<BigFloat>(BigFloat(p.alpha1), BigFloat(p.alpha2));
  return static_cast<double>(quartic_discriminant(c[0], c[1], c[2], c[3], c[4]));
}

namespace {

// root of f on [lo,hi] given f(lo) <= 0 <= f(hi); nullopt without a sign change
template <class F>
std::optional<double> bisect_increasing(F f, double lo, double hi) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0)) return std::nullopt;
  bool rising = fhi > 0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm > 0) == rising)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

void push_quadrants(std::vector<std::pair<double, double>>& out, double a1, double a2) {
  out.emplace_back(a1, a2);
  out.emplace_back(-a1, a2);
  out.emplace_back(-a1, -a2);
  out.emplace_back(a1, -a2);
}

double alpha_from_quartic(double v) { return std::acos(std::min(1.0, std::sqrt(v) / 2)); }

}  // namespace

TracedBoundary trace_boundary(BoundaryCurve which, int samples) {
  if (samples < 2) throw DomainError("trace_boundary needs at least 2 samples");
  TracedBoundary tb;
  for (int i = 0; i < samples; ++i) {
    double x, ylo, yhi;
    if (which == BoundaryCurve::Z) {
      x = 3.0 + static_cast<double>(i) / (samples - 1);
      ylo = 1.5;
      yhi = 4.0;
    } else {
      // G(x,4) = 9(32x - 3) vanishes at the left end
      double amax = std::acos(std::sqrt(3.0 / 128.0));
      double a = amax * i / (samples - 1);
      x = 4 * std::cos(a) * std::cos(a);
      if (i == samples - 1) x = 3.0 / 32.0;
      ylo = 0.0;
      yhi = 4.0;
    }
    auto f = [&](double y) { return which == BoundaryCurve::Z ? poly_D(x, y) : poly_G(x, y); };
    auto y = bisect_increasing(f, ylo, yhi);
    if (!y) {
      tb.failures.push_back(i);
      continue;
    }
    push_quadrants(tb.points, alpha_from_quartic(x), alpha_from_quartic(*y));
  }
  return tb;
}

}  // namespace riley
