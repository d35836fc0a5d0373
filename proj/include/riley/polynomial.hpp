// Real polynomials: Sturm-sequence root isolation on an interval, the
// degree-4 discriminant, and rational recognition of doubles.
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace riley {

using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

// coefficients in ascending order: c[0] + c[1] T + ...
struct Poly {
  std::vector<double> c;

  int degree() const;
  double operator()(double x) const;
  Poly derivative() const;
  Poly trimmed(double rel) const;
};

std::optional<Rational> snap_rational(double x, long max_den = 1024, double tol = 1e-12);
std::string rational_string(const Rational& r);

struct Root {
  double x = 0;
  int multiplicity = 1;
};

struct RootReport {
  bool found = false;
  std::vector<Root> roots;  // sorted
  bool degraded = false;    // dense-sampling fallback was used
  std::string warning;
};

// distinct real roots in [lo,hi] via Sturm counts and bisection
std::vector<Root> isolate_roots(const Poly& p, double lo, double hi, int max_iter = 80, double width = 1e-13);

RootReport has_root_in_unit_interval(const Poly& quartic, double e);

// standard expansion of the quartic discriminant; c ascending
template <class T>
T quartic_discriminant(const T& e, const T& d, const T& c, const T& b, const T& a) {
  // a T^4 + b T^3 + c T^2 + d T + e
  return 256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e - 128 * a * a * c * c * e * e +
         144 * a * a * c * d * d * e - 27 * a * a * d * d * d * d + 144 * a * b * b * c * e * e -
         6 * a * b * b * d * d * e - 80 * a * b * c * c * d * e + 18 * a * b * c * d * d * d +
         16 * a * c * c * c * c * e - 4 * a * c * c * c * d * d - 27 * b * b * b * b * e * e +
         18 * b * b * b * c * d * e - 4 * b * b * b * d * d * d - 4 * b * b * c * c * c * e +
         b * b * c * c * d * d;
}

}  // namespace riley
