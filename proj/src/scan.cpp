#include "riley/scan.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace riley {

namespace {

bool in_Z(RegionTag t) { return t == RegionTag::Z_interior || t == RegionTag::Z_boundary; }

int components_8(const std::vector<unsigned char>& mask, int n) {
  std::vector<int> parent(mask.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      int c = j * n + i;
      if (!mask[c]) continue;
      const int nb[4][2] = {{1, 0}, {-1, 1}, {0, 1}, {1, 1}};
      for (auto& d : nb) {
        int ii = i + d[0], jj = j + d[1];
        if (ii < 0 || ii >= n || jj >= n) continue;
        int o = jj * n + ii;
        if (mask[o]) parent[find(c)] = find(o);
      }
    }
  int count = 0;
  for (int c = 0; c < int(mask.size()); ++c)
    if (mask[c] && find(c) == c) ++count;
  return count;
}

}  // namespace

Bounds default_bounds() {
  const double h = kPi / 2 - 1e-3;
  return {-h, h, -h, h};
}

Bounds rectangle_bounds() { return {-kPi / 6, kPi / 6, -alpha2_lim(), alpha2_lim()}; }

void validate(const Bounds& b) {
  const double lim = kPi / 2 - kGuard;
  for (double v : {b.a1_lo, b.a1_hi, b.a2_lo, b.a2_hi})
    if (!std::isfinite(v) || std::abs(v) >= lim) throw DomainError("bounds must lie inside the open square minus the guard");
  if (!(b.a1_lo < b.a1_hi) || !(b.a2_lo < b.a2_hi)) throw DomainError("bounds must be increasing");
}

Bounds parse_bounds(const std::string& text) {
  std::stringstream ss(text);
  ss.imbue(std::locale::classic());
  double v[4];
  for (int i = 0; i < 4; ++i) {
    if (!(ss >> v[i])) throw DomainError("bounds must be a1lo,a1hi,a2lo,a2hi");
    if (i < 3 && ss.get() != ',') throw DomainError("bounds must be a1lo,a1hi,a2lo,a2hi");
  }
  ss >> std::ws;
  if (!ss.eof()) throw DomainError("trailing characters in bounds");
  Bounds b{v[0], v[1], v[2], v[3]};
  validate(b);
  return b;
}

std::vector<double> symmetric_grid(double lo, double hi, int n) {
  if (n < 2) throw DomainError("grid needs at least 2 points per axis");
  const double mid = (lo + hi) / 2, half = (hi - lo) / 2;
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = mid + half * (2.0 * i - (n - 1)) / (n - 1);
  return g;
}

RegionScan region_scan(int n, const Bounds& b, Policy policy, double e) {
  validate(b);
  RegionScan s;
  s.n = n;
  s.bounds = b;
  s.a1 = symmetric_grid(b.a1_lo, b.a1_hi, n);
  s.a2 = symmetric_grid(b.a2_lo, b.a2_hi, n);
  s.cells.resize(static_cast<std::size_t>(n) * n);
  auto cell = [&](long c) {
    int i1 = int(c % n), i2 = int(c / n);
    RegionClass rc = region_classify(Params::make(s.a1[i1], s.a2[i2]), e);
    s.cells[c] = {s.a1[i1], s.a2[i2], rc.D, rc.G, rc.tag};
  };
  const long total = long(n) * n;
  if (policy == Policy::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long c = 0; c < total; ++c) cell(c);
  } else {
    for (long c = 0; c < total; ++c) cell(c);
  }
  return s;
}

RegionTopology region_topology(const RegionScan& s) {
  const int n = s.n;
  RegionTopology t;
  std::vector<unsigned char> mask(s.cells.size());
  for (std::size_t c = 0; c < s.cells.size(); ++c) mask[c] = in_Z(s.cells[c].tag);
  t.z_components = components_8(mask, n);
  t.flip1_symmetric = t.flip2_symmetric = true;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (s.at(i, j).tag != s.at(n - 1 - i, j).tag) t.flip1_symmetric = false;
      if (s.at(i, j).tag != s.at(i, n - 1 - j).tag) t.flip2_symmetric = false;
    }
  t.cell1 = s.a1[1] - s.a1[0];
  t.cell2 = s.a2[1] - s.a2[0];
  // rows adjacent to the axes: the middle one for odd n, the upper of the two for even n
  const int mid = n / 2;
  // the boundary lies between the last Z cell and the next one: take the midpoint
  int i = mid, j = mid;
  while (i + 1 < n && in_Z(s.at(i + 1, mid).tag)) ++i;
  while (j + 1 < n && in_Z(s.at(mid, j + 1).tag)) ++j;
  if (in_Z(s.at(mid, mid).tag)) {
    t.a1_extent = i + 1 < n ? 0.5 * (s.a1[i] + s.a1[i + 1]) : s.a1[i];
    t.a2_extent = j + 1 < n ? 0.5 * (s.a2[j] + s.a2[j + 1]) : s.a2[j];
  }
  t.extents_match = std::abs(t.a1_extent - kPi / 6) <= t.cell1 && std::abs(t.a2_extent - alpha2_lim()) <= t.cell2;
  return t;
}

double distance_to_Z_boundary(double a1, double a2) {
  auto D = [](double b1, double b2) {
    double c1 = std::cos(b1), c2 = std::cos(b2);
    return poly_D(4 * c1 * c1, 4 * c2 * c2);
  };
  const double h = 1e-5;
  double v0 = D(a1, a2);
  double g1 = (D(a1 + h, a2) - D(a1 - h, a2)) / (2 * h);
  double g2 = (D(a1, a2 + h) - D(a1, a2 - h)) / (2 * h);
  double g = std::hypot(g1, g2);
  double v = std::abs(v0);
  if (v == 0) return 0;
  // D has a double zero where the boundary meets the alpha2-axis, so the
  // linear estimate alone can blow up; the quadratic one covers that case
  double h11 = (D(a1 + h, a2) - 2 * v0 + D(a1 - h, a2)) / (h * h);
  double h22 = (D(a1, a2 + h) - 2 * v0 + D(a1, a2 - h)) / (h * h);
  double h12 = (D(a1 + h, a2 + h) - D(a1 + h, a2 - h) - D(a1 - h, a2 + h) + D(a1 - h, a2 - h)) / (4 * h * h);
  double hn = std::sqrt(h11 * h11 + 2 * h12 * h12 + h22 * h22);
  double lin = g > 0 ? v / g : INFINITY;
  double quad = hn > 0 ? std::sqrt(2 * v / hn) : INFINITY;
  return std::min(lin, quad);
}

OracleAgreement oracle_agreement(int n, double margin, double resolution, Policy policy) {
  Bounds b = rectangle_bounds();
  auto g1 = symmetric_grid(b.a1_lo, b.a1_hi, n), g2 = symmetric_grid(b.a2_lo, b.a2_hi, n);
  const long total = long(n) * n;
  // 0 skipped, 1 agree, 2 disagree
  std::vector<signed char> result(total, 0);
  auto point = [&](long c) {
    double a1 = g1[c % n], a2 = g2[c / n];
    if (distance_to_Z_boundary(a1, a2) < margin) return;
    Params p = Params::make(a1, a2);
    bool quartic_nonempty = !triple_intersection(p).empty;
    bool oracle_nonempty = meridian_oracle(p, resolution).nonempty;
    result[c] = quartic_nonempty == oracle_nonempty ? 1 : 2;
  };
  if (policy == Policy::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long c = 0; c < total; ++c) point(c);
  } else {
    for (long c = 0; c < total; ++c) point(c);
  }
  OracleAgreement r;
  for (long c = 0; c < total; ++c) {
    if (result[c] == 0) {
      ++r.skipped;
      continue;
    }
    ++r.tested;
    if (result[c] == 1)
      ++r.agree;
    else
      r.disagreements.push_back({g1[c % n], g2[c / n]});
  }
  return r;
}

}  // namespace riley
