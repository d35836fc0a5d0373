// The (alpha1, alpha2) parameter square: generators, fixed points,
// symmetries, commutator type, the region polynomials and the quartic L.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "riley/core.hpp"
#include "riley/polynomial.hpp"

namespace riley {

inline constexpr double kGuard = 1e-6;

// arccos sqrt(3/8)
double alpha2_lim();

struct Params {
  double alpha1 = 0, alpha2 = 0;
  double x1 = 0, x2 = 0;
  double ell_A = 0, t_A = 0;

  static Params make(double a1, double a2, double guard = kGuard);
  static Params limit() { return make(0, alpha2_lim()); }
  double X() const { return x1 * x1 * x1 * x1; }  // 4 cos^2 alpha1
  double Y() const { return x2 * x2 * x2 * x2; }
};

struct GroupData {
  Params p;
  GroupElement A, B, S, T;
  Lift pA, pB, pAB, pBA;
};

GroupData build_group(const Params& p);

struct Involutions {
  GroupElement I1, I2, I3;
};

struct Symmetries {
  AntiHolo iota, phi;
  std::optional<Involutions> st_real;  // alpha1 = 0: S = I2 I1, T = I1 I3
  std::optional<Involutions> ab_real;  // alpha2 = 0: A = I2 I1, B = I1 I3
};

Symmetries symmetry_maps(const Params& p, double e = eps());

// point of the phi-invariant line parametrised by x
HeisPoint delta_phi(const Params& p, double x);

template <class T>
T poly_D(const T& x, const T& y) {
  return x * x * x * y * y * y - 9 * x * x * y * y - 27 * x * y * y + 81 * x * y - 27 * x - 27;
}

template <class T>
T poly_G(const T& x, const T& y) {
  return x * x * y * y * y * y - 4 * x * x * y * y * y + 18 * x * y * y - 27;
}

enum class RegionTag { Z_interior, Z_boundary, L_outside_Z, P_curve, E_elliptic };
const char* to_string(RegionTag t);

struct RegionClass {
  RegionTag tag = RegionTag::L_outside_Z;
  double D = 0, G = 0, Delta = 0;
  bool exact = false;  // D and G came from rational arithmetic
  bool marginal = false;
  bool in_rectangle = false;
};

bool in_rectangle(const Params& p, double e = 0);
RegionClass region_classify(const Params& p, double e = eps());
// exact evaluation at rational (x1^4, x2^4)
RegionClass region_classify_exact(const Rational& x, const Rational& y);

enum class CommutatorTag { Loxodromic, Parabolic, Elliptic };
const char* to_string(CommutatorTag t);

struct CommutatorClass {
  CommutatorTag tag = CommutatorTag::Loxodromic;
  double G = 0;
  bool marginal = false;
  IsometryClass direct;  // classify([A,B])
};

CommutatorClass commutator_class(const Params& p, double e = eps());

// coefficients of L in ascending powers of T = tan(alpha/2)
template <class T>
std::array<T, 5> quartic_L_coeffs(const T& a1, const T& a2) {
  using std::cos;
  using std::sin;
  T X1sq = 2 * cos(a1);
  T X1 = X1sq * X1sq;
  T c2 = cos(a2);
  T X2 = 4 * c2 * c2;  // x2^4
  T s1 = sin(a1);
  std::array<T, 5> c;
  c[4] = 2 * X1 * X2 - 4 * X1sq * X2 + X1 + 10 * X1sq + 1;
  c[3] = -8 * s1 * (X1sq * X2 - X1sq - 1);
  c[2] = -2 * (2 * X1 * X2 + 3 * X1 - 9);
  c[1] = 8 * s1 * (X1sq * X2 - X1sq + 1);
  c[0] = 2 * X1 * X2 + 4 * X1sq * X2 + X1 - 10 * X1sq + 1;
  return c;
}

Poly quartic_L(const Params& p);

// interval lower bound of L's leading coefficient over the rectangle
double leading_coefficient_lower_bound();

// closed-form discriminant of L; 4 - x2^4 uses sin^2 to avoid cancellation
template <class T>
T discriminant_closed(const T& a1, const T& a2) {
  using std::cos;
  using std::sin;
  T X1sq = 2 * cos(a1);
  T X1 = X1sq * X1sq;
  T s2 = sin(a2), c2 = cos(a2);
  T four_minus_Y = 4 * s2 * s2;
  T Y = 4 * c2 * c2;
  return T(65536) * X1 * (X1 + 1) * (X1 + 1) * four_minus_Y * four_minus_Y * poly_D(X1, Y);
}

double discriminant(const Params& p);
// the standard quartic expansion applied to L in 50-digit arithmetic
double discriminant_algebraic(const Params& p);

enum class BoundaryCurve { Z, P };

struct TracedBoundary {
  std::vector<std::pair<double, double>> points;  // (alpha1, alpha2), all quadrants
  std::vector<int> failures;                      // sample indices without a sign change
};

TracedBoundary trace_boundary(BoundaryCurve which, int samples);

}  // namespace riley
