// Siegel-model arithmetic: Hermitian form, lifts, Heisenberg coordinates,
// Cygan metric, trace classification, Cartan invariant, polar vectors.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace riley {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3cd;

inline constexpr double kPi = 3.14159265358979323846;

// Violated preconditions (bad parameters, q_inf where a finite point is
// needed, coincident points, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Process-wide epsilon for zero/unit predicates. Starts at 1e-9, or the
// value of RILEY_EPS if set and parseable.
double eps();
void set_eps(double e);

enum class Verdict { Yes, No, Marginal };
const char* to_string(Verdict v);

// sign test under the epsilon margin: Yes if value > e, No if < -e
Verdict sign_verdict(double value, double e);

const Mat3& form_H();

struct Lift {
  Vec3 v = Vec3(1, 0, 0);

  Lift() = default;
  explicit Lift(const Vec3& x) : v(x) {}
  Lift(cplx a, cplx b, cplx c) : v(a, b, c) {}

  static Lift q_inf() { return Lift(1, 0, 0); }
  bool is_infinity(double e = eps()) const;
  // (1,0,0) for q_inf, otherwise divide by the third coordinate
  Lift standard(double e = eps()) const;
  cplx operator[](int i) const { return v(i); }
};

// [z,t] with optional height u >= 0 (horospherical coordinates)
struct HeisPoint {
  cplx z{0, 0};
  double t = 0;
  double u = 0;

  Lift lift() const;
  static HeisPoint from_lift(const Lift& p, double e = eps());
};

cplx hermitian_product(const Vec3& x, const Vec3& y);
inline cplx hermitian_product(const Lift& x, const Lift& y) { return hermitian_product(x.v, y.v); }

double cygan_distance(const HeisPoint& p, const HeisPoint& q);
// |<p,q>|^{1/2} on standard lifts, for points of the closed ball
double cygan_distance(const Lift& p, const Lift& q);

HeisPoint heisenberg_translate(const HeisPoint& ws, const HeisPoint& zt);
Mat3 heisenberg_matrix(cplx w, double s);

struct GroupElement {
  Mat3 m = Mat3::Identity();

  GroupElement() = default;
  // validates form preservation and rescales det to 1
  static GroupElement from(const Mat3& raw, double e = eps());
  static GroupElement unchecked(const Mat3& raw);

  GroupElement operator*(const GroupElement& o) const { return unchecked(m * o.m); }
  GroupElement inverse() const;
  GroupElement pow(int n) const;
  Lift apply(const Lift& p) const { return Lift(m * p.v).standard(); }
  Vec3 apply_raw(const Vec3& v) const { return m * v; }
  cplx trace() const { return m.trace(); }
};

// anti-holomorphic map v -> n * conj(v)
struct AntiHolo {
  Mat3 n = Mat3::Identity();
  Lift apply(const Lift& p) const { return Lift(Vec3(n * p.v.conjugate())).standard(); }
  AntiHolo operator*(const GroupElement& g) const { return AntiHolo{n * g.m.conjugate()}; }
  GroupElement operator*(const AntiHolo& o) const { return GroupElement::unchecked(n * o.n.conjugate()); }
};
AntiHolo operator*(const GroupElement& g, const AntiHolo& a);

enum class IsoTag { Loxodromic, RegularElliptic, Unipotent, ParabolicOrSpecialEllipticOther, Identity };
const char* to_string(IsoTag t);

struct IsometryClass {
  IsoTag tag = IsoTag::Identity;
  double witness = 0;  // Goldman's F(tr)
  bool marginal = false;
};

double goldman_F(cplx z);
IsometryClass classify(const GroupElement& g, double e = eps());

double cartan_invariant(const Lift& p1, const Lift& p2, const Lift& p3, double e = eps());
Lift polar_vector(const Lift& p, const Lift& q, double e = eps());

// max |v - c w| over the best scalar c; zero iff v and w are proportional
double projective_residual(const Vec3& v, const Vec3& w);
double projective_residual(const Mat3& a, const Mat3& b);
// relative version: residual after scaling both to unit max-norm
double projective_gap(const Vec3& v, const Vec3& w);
// min over cube roots of unity mu of ||m/mu - I||_F (m assumed det 1)
double distance_to_identity(const Mat3& m);
bool is_scalar(const Mat3& m, double e);

// a boundary fixed point of a parabolic element (null vector of m - tr/3)
Lift parabolic_fixed_point(const GroupElement& g, double e = 1e-7);

}  // namespace riley
