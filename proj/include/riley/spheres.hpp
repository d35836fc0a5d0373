// Cygan spheres, geographical coordinates, the isometric-sphere family
// I_k^{+/-}, pairwise distance certificates and the triple intersection.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riley/core.hpp"
#include "riley/moduli.hpp"

namespace riley {

struct CyganSphere {
  HeisPoint centre;
  double radius = 1;
};

struct GeoCoord {
  double alpha = 0, beta = 0, w = 0;
};

enum class Sign { Plus, Minus };

struct SphereFamily {
  Params p;
  CyganSphere plus(int k) const;
  CyganSphere minus(int k) const;
  CyganSphere get(Sign s, int k) const { return s == Sign::Plus ? plus(k) : minus(k); }
};

std::string sphere_label(Sign s, int k);

CyganSphere isometric_sphere(const GroupElement& g, double e = eps());

Lift geo_to_point(const CyganSphere& sphere, const GeoCoord& c);
HeisPoint geo_to_heis(const CyganSphere& sphere, const GeoCoord& c);
// boundary point of a unit sphere; beta' in [0, 2 pi) absorbs the sign of w
GeoCoord boundary_geo(double alpha, double beta_full);

enum class Side { Interior, On, Exterior };
const char* to_string(Side s);

// d(q, centre)^4 - r^4, the signed defining function
double sphere_function(const CyganSphere& s, const HeisPoint& q);
Side membership(const CyganSphere& sphere, const Lift& q, double e = eps());

struct Disc {
  cplx centre;
  double radius;
};
Disc vertical_projection(const CyganSphere& s);

struct DisjointnessReport {
  int k = 0;
  double plus_d4 = 0;   // d(A^k pB, pB)^4, closed form
  double minus_d4 = 0;  // d(A^k pAB, pB)^4, closed form
  bool plus_claimed_disjoint = false;
  bool minus_claimed_disjoint = false;
  bool plus_ok = true, minus_ok = true;
  bool marginal = false;
};

DisjointnessReport pairwise_disjointness_certificate(const Params& p, int k, double e = eps());
// the k^4 terms dominate beyond the window: returns true if the closed forms
// are increasing in |k| from the window edge onwards
bool asymptotic_growth_certificate(const Params& p, int window);

struct FValues {
  double f0 = 0, fm1 = 0;                // closed trigonometric forms
  double f0_direct = 0, fm1_direct = 0;  // |<q,pAB>|^2 - 1, |<q,pBA>|^2 - 1
};
FValues f_functions(const Params& p, const GeoCoord& q);

// f on the meridian, closed form, with w = sqrt(2 cos alpha)
double f_meridian(const Params& p, double alpha);
double meridian_beta(const Params& p);

struct TripleResult {
  bool empty = true;
  std::vector<GeoCoord> points;
  std::vector<double> roots;  // T = tan(alpha/2)
  bool sign_plus = true;      // w >= 0 realises the contact
  bool consistent = true;     // quartic verdict agrees with sampling of f
  std::string diagnostic;
};

TripleResult triple_intersection(const Params& p, double e = eps());

struct OracleResult {
  bool nonempty = false;
  double min_f0 = 0;
  double at_alpha = 0;
  int sign = 1;
};

// brute-force scan of |<q,pAB>|^2 - 1 along the boundary of the meridian,
// both signs of w, with Brent refinement of every grid-local minimum
OracleResult meridian_oracle(const Params& p, double resolution = 1e-3);

// number of connected components (8-adjacency, periodic in longitude, poles
// merged) of a boolean mask on the geographical grid
int grid_components(const std::vector<unsigned char>& mask, int n_alpha, int n_long);

struct LocusReport {
  int components = 0;
  int cells = 0;
  int n_alpha = 0, n_beta = 0;
};

// sign-change locus of `other` sampled on the boundary geographical grid of
// `host` (n_beta per half-turn, two signs of w)
LocusReport intersection_locus(const CyganSphere& host, const CyganSphere& other, int n_alpha = 512, int n_beta = 256);

}  // namespace riley
