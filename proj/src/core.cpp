#include "riley/core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>

namespace riley {

namespace {

double initial_eps() {
  const char* s = std::getenv("RILEY_EPS");
  if (s == nullptr || *s == '\0') return 1e-9;
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || !(v > 0) || !std::isfinite(v)) return 1e-9;
  return v;
}

std::atomic<double>& eps_slot() {
  static std::atomic<double> slot{initial_eps()};
  return slot;
}

const cplx kOmega[3] = {cplx(1, 0), std::polar(1.0, 2 * kPi / 3), std::polar(1.0, -2 * kPi / 3)};

}  // namespace

double eps() { return eps_slot().load(std::memory_order_relaxed); }
void set_eps(double e) {
  if (!(e > 0)) throw DomainError("epsilon must be positive");
  eps_slot().store(e, std::memory_order_relaxed);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Marginal: return "marginal";
  }
  return "?";
}

Verdict sign_verdict(double value, double e) {
  if (value > e) return Verdict::Yes;
  if (value < -e) return Verdict::No;
  return Verdict::Marginal;
}

const Mat3& form_H() {
  static const Mat3 h = [] {
    Mat3 m = Mat3::Zero();
    m(0, 2) = 1;
    m(1, 1) = 1;
    m(2, 0) = 1;
    return m;
  }();
  return h;
}

bool Lift::is_infinity(double e) const {
  double mx = v.cwiseAbs().maxCoeff();
  return std::abs(v(2)) < e * mx;
}

Lift Lift::standard(double e) const {
  if (v.cwiseAbs().maxCoeff() == 0) throw DomainError("zero lift");
  if (is_infinity(e)) return q_inf();
  Vec3 w = v / v(2);
  w(2) = 1;
  return Lift(w);
}

Lift HeisPoint::lift() const {
  return Lift(cplx(-std::norm(z) - u, t), z * std::sqrt(2.0), cplx(1, 0));
}

HeisPoint HeisPoint::from_lift(const Lift& p, double e) {
  Lift s = p.standard(e);
  if (s.is_infinity(e)) throw DomainError("q_inf has no Heisenberg coordinates");
  HeisPoint h;
  h.z = s.v(1) / std::sqrt(2.0);
  h.t = s.v(0).imag();
  h.u = -s.v(0).real() - std::norm(h.z);
  if (std::abs(h.u) < 1e-14 * (1 + std::abs(s.v(0)))) h.u = 0;
  return h;
}

cplx hermitian_product(const Vec3& x, const Vec3& y) {
  return x(0) * std::conj(y(2)) + x(1) * std::conj(y(1)) + x(2) * std::conj(y(0));
}

double cygan_distance(const HeisPoint& p, const HeisPoint& q) {
  if (p.u < 0 || q.u < 0) throw DomainError("negative height");
  double re = std::norm(p.z - q.z) + std::abs(p.u - q.u);
  double im = p.t - q.t + 2 * std::imag(p.z * std::conj(q.z));
  return std::sqrt(std::hypot(re, im));
}

double cygan_distance(const Lift& p, const Lift& q) {
  return cygan_distance(HeisPoint::from_lift(p), HeisPoint::from_lift(q));
}

HeisPoint heisenberg_translate(const HeisPoint& ws, const HeisPoint& zt) {
  HeisPoint r;
  r.z = ws.z + zt.z;
  r.t = ws.t + zt.t - 2 * std::imag(zt.z * std::conj(ws.z));
  r.u = zt.u;
  return r;
}

Mat3 heisenberg_matrix(cplx w, double s) {
  const double r2 = std::sqrt(2.0);
  Mat3 m = Mat3::Identity();
  m(0, 1) = -std::conj(w) * r2;
  m(0, 2) = cplx(-std::norm(w), s);
  m(1, 2) = w * r2;
  return m;
}

GroupElement GroupElement::unchecked(const Mat3& raw) {
  GroupElement g;
  g.m = raw;
  return g;
}

GroupElement GroupElement::from(const Mat3& raw, double e) {
  const Mat3& h = form_H();
  double scale = std::max(1.0, raw.squaredNorm());
  double form_err = (raw.adjoint() * h * raw - h).cwiseAbs().maxCoeff();
  // |det| = 1 is implied by form preservation; allow any unit scalar first
  cplx d = raw.determinant();
  if (std::abs(std::abs(d) - 1) > e * scale) throw DomainError("matrix does not have a unit determinant");
  if (form_err > e * scale) throw DomainError("matrix does not preserve the Hermitian form");
  bool cube_root_of_unity = false;
  for (const cplx& w : kOmega) cube_root_of_unity |= std::abs(d - w) < e * scale;
  if (!cube_root_of_unity) throw DomainError("determinant is not a cube root of unity");
  GroupElement g;
  g.m = raw;
  if (std::abs(d - 1.0) > e * scale) g.m /= std::pow(d, 1.0 / 3.0);
  return g;
}

GroupElement GroupElement::inverse() const {
  const Mat3& h = form_H();
  return unchecked(h * m.adjoint() * h);
}

GroupElement GroupElement::pow(int n) const {
  GroupElement base = n < 0 ? inverse() : *this;
  GroupElement r;
  for (int k = std::abs(n); k > 0; k >>= 1) {
    if (k & 1) r = r * base;
    base = base * base;
  }
  return r;
}

AntiHolo operator*(const GroupElement& g, const AntiHolo& a) { return AntiHolo{g.m * a.n}; }

const char* to_string(IsoTag t) {
  switch (t) {
    case IsoTag::Loxodromic: return "Loxodromic";
    case IsoTag::RegularElliptic: return "RegularElliptic";
    case IsoTag::Unipotent: return "Unipotent";
    case IsoTag::ParabolicOrSpecialEllipticOther: return "ParabolicOrSpecialElliptic";
    case IsoTag::Identity: return "Identity";
  }
  return "?";
}

double goldman_F(cplx z) {
  double n = std::norm(z);
  return n * n - 8 * std::real(z * z * z) + 18 * n - 27;
}

bool is_scalar(const Mat3& m, double e) {
  cplx d = m(0, 0);
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  Mat3 r = m - d * Mat3::Identity();
  return r.cwiseAbs().maxCoeff() <= e * scale;
}

IsometryClass classify(const GroupElement& g, double e) {
  IsometryClass c;
  cplx z = g.trace();
  c.witness = goldman_F(z);
  double s = std::max(1.0, g.m.squaredNorm());
  if (is_scalar(g.m, e * s)) {
    c.tag = IsoTag::Identity;
    return c;
  }
  double tol = 4 * std::max(27.0, std::pow(std::abs(z), 3)) * e * s;
  if (c.witness > tol) {
    c.tag = IsoTag::Loxodromic;
    c.marginal = c.witness < 10 * tol;
  } else if (c.witness < -tol) {
    c.tag = IsoTag::RegularElliptic;
    c.marginal = c.witness > -10 * tol;
  } else {
    c.tag = IsoTag::ParabolicOrSpecialEllipticOther;
    for (const cplx& w : kOmega)
      if (std::abs(z - 3.0 * w) <= std::sqrt(e) * s) c.tag = IsoTag::Unipotent;
  }
  return c;
}

double cartan_invariant(const Lift& p1, const Lift& p2, const Lift& p3, double e) {
  Vec3 a = p1.v.normalized(), b = p2.v.normalized(), c = p3.v.normalized();
  cplx ab = hermitian_product(a, b), bc = hermitian_product(b, c), ca = hermitian_product(c, a);
  if (std::abs(ab) < e || std::abs(bc) < e || std::abs(ca) < e)
    throw DomainError("cartan invariant needs pairwise distinct boundary points");
  double r = std::arg(-ab * bc * ca);
  if (r <= -kPi) r = kPi;
  return r;
}

Lift polar_vector(const Lift& p, const Lift& q, double e) {
  Vec3 c = p.v.cross(q.v);
  if (c.norm() <= e * p.v.norm() * q.v.norm()) throw DomainError("polar vector of projectively equal points");
  return Lift(Vec3(form_H() * c.conjugate()));
}

double projective_residual(const Vec3& v, const Vec3& w) {
  cplx c = w.dot(v) / w.squaredNorm();  // Eigen's dot conjugates the left side
  return (v - c * w).cwiseAbs().maxCoeff();
}

double projective_residual(const Mat3& a, const Mat3& b) {
  cplx c = (b.adjoint() * a).trace() / b.squaredNorm();
  return (a - c * b).cwiseAbs().maxCoeff();
}

double projective_gap(const Vec3& v, const Vec3& w) {
  return projective_residual(Vec3(v / v.norm()), Vec3(w / w.norm()));
}

double distance_to_identity(const Mat3& m) {
  double best = INFINITY;
  for (const cplx& w : kOmega) best = std::min(best, (m / w - Mat3::Identity()).norm());
  return best;
}

Lift parabolic_fixed_point(const GroupElement& g, double e) {
  Mat3 k = g.m - (g.trace() / 3.0) * Mat3::Identity();
  Eigen::JacobiSVD<Mat3> svd(k, Eigen::ComputeFullV);
  auto sv = svd.singularValues();
  Mat3 V = svd.matrixV();
  double top = std::max(sv(0), 1e-300);
  if (sv(2) > e * top) throw DomainError("element has no eigenvector for tr/3");
  Vec3 v = V.col(2);
  if (sv(1) <= e * top) {
    // two-dimensional kernel: pick its null line
    Vec3 a = V.col(1), b = V.col(2);
    cplx aa = hermitian_product(a, a), ab = hermitian_product(a, b), bb = hermitian_product(b, b);
    // <a + x b, a + x b> = aa + 2 Re(conj(x) ab) + |x|^2 bb; try real x first
    double A2 = bb.real(), B2 = 2 * ab.real(), C2 = aa.real();
    double disc = B2 * B2 - 4 * A2 * C2;
    if (std::abs(A2) > 1e-14 && disc >= 0) {
      double x = (-B2 + std::sqrt(disc)) / (2 * A2);
      v = a + x * b;
    } else if (std::abs(bb) < 1e-12) {
      v = b;
    } else {
      double Bi = 2 * ab.imag();  // x = i y
      double di = Bi * Bi - 4 * A2 * C2;
      if (di < 0) throw DomainError("kernel of parabolic contains no null vector");
      double y = (-Bi + std::sqrt(di)) / (2 * A2);
      v = a + cplx(0, y) * b;
    }
  }
  return Lift(v).standard();
}

}  // namespace riley
