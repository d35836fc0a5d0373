// Grid scans over the parameter square: the region map and the agreement of
// the quartic verdict with the brute-force meridian scan. Each kernel has a
// serial reference and an OpenMP version producing identical output.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "riley/ford.hpp"
#include "riley/moduli.hpp"

namespace riley {

struct Bounds {
  double a1_lo = 0, a1_hi = 0, a2_lo = 0, a2_hi = 0;
};

// the square pulled in by 1e-3 from each side
Bounds default_bounds();
// the rectangle |alpha1| <= pi/6, |alpha2| <= alpha2_lim
Bounds rectangle_bounds();
// parses "a1lo,a1hi,a2lo,a2hi"; throws DomainError if outside the open square minus the guard
Bounds parse_bounds(const std::string& text);
void validate(const Bounds& b);

// n points mirrored exactly about the midpoint, endpoints included
std::vector<double> symmetric_grid(double lo, double hi, int n);

struct ScanCell {
  double alpha1 = 0, alpha2 = 0;
  double D = 0, G = 0;
  RegionTag tag = RegionTag::L_outside_Z;
};

struct RegionScan {
  int n = 0;
  Bounds bounds;
  std::vector<double> a1, a2;
  std::vector<ScanCell> cells;  // row-major: alpha2 outer, alpha1 inner
  const ScanCell& at(int i1, int i2) const { return cells[static_cast<std::size_t>(i2) * n + i1]; }
};

RegionScan region_scan(int n, const Bounds& b, Policy policy = Policy::Parallel, double e = eps());

struct RegionTopology {
  int z_components = 0;
  bool flip1_symmetric = false;  // alpha1 -> -alpha1
  bool flip2_symmetric = false;  // alpha2 -> -alpha2
  double a1_extent = 0;          // half-width of Z along the row next to the alpha1-axis
  double a2_extent = 0;
  double cell1 = 0, cell2 = 0;   // grid spacing
  bool extents_match = false;    // pi/6 and alpha2_lim within one cell
};
// assumes a scan symmetric about the origin
RegionTopology region_topology(const RegionScan& s);

struct OracleAgreement {
  int tested = 0, skipped = 0, agree = 0;
  std::vector<std::pair<double, double>> disagreements;
  bool pass() const { return tested > 0 && agree == tested; }
};

// |D| / |grad_alpha D|, a first-order distance to the curve D = 0
double distance_to_Z_boundary(double a1, double a2);

OracleAgreement oracle_agreement(int n, double margin = 1e-4, double resolution = 1e-3,
                                 Policy policy = Policy::Parallel);

}  // namespace riley
