#include "riley/limit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

namespace riley {

namespace {

const double kS3 = std::sqrt(3.0), kS5 = std::sqrt(5.0), kS15 = std::sqrt(15.0), kS2 = std::sqrt(2.0);

HeisPoint heis(const Lift& p) { return HeisPoint::from_lift(p); }

double entry_residual(const Vec3& a, const Vec3& b) { return (a - b).cwiseAbs().maxCoeff(); }

double on_sphere(const CyganSphere& s, const Lift& p) { return std::abs(cygan_distance(heis(p), s.centre) - s.radius); }

// fixed point as a standard lift
Lift fixed_point(const GroupElement& g) { return parabolic_fixed_point(g).standard(); }

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// F0 in its own coordinates
Lift fan0_point(double xi, double eta) {
  cplx v0(-xi * xi - kS15 * xi / 4 - 0.25, eta - xi / 4);
  cplx v1(kS5 * xi / 4 + kS3 / 4, 3 * kS3 * xi / 4 + kS5 / 4);
  return Lift(v0, v1, cplx(1, 0));
}

// |<f, pB>|^2 and |<f, pAB>|^2 as closed expansions
double expansion_B(double xi, double eta) {
  double s = xi * xi + 0.25;
  return s * s + xi * xi + eta * eta + xi * (kS15 * xi * xi + kS15 / 4 - eta) / 2;
}
double expansion_AB(double xi, double eta) {
  double s = xi * xi + 0.25;
  return s * s + xi * xi + eta * eta - xi * (kS15 * xi * xi + kS15 / 4 - eta) / 2;
}

const Lift& limit_pAB() {
  static const Lift v = build_group(Params::limit()).pAB;
  return v;
}

double F1(double xi, double eta) { return std::norm(hermitian_product(fan0_point(xi, eta), Lift(0, 0, 1))) - 1; }
double F2(double xi, double eta) { return std::norm(hermitian_product(fan0_point(xi, eta), limit_pAB())) - 1; }

// eta on F0 & I_0^{+/-} for a given xi: eta^2 -/+ (xi/2) eta + C = 0
std::vector<double> arc_eta(double xi, bool plus) {
  double s = xi * xi + 0.25;
  double lin = plus ? -xi / 2 : xi / 2;
  double C = s * s + xi * xi + (plus ? 1 : -1) * xi * kS15 * s / 2 - 1;
  double disc = lin * lin - 4 * C;
  if (disc < 0) return {};
  double r = std::sqrt(disc);
  return {(-lin + r) / 2, (-lin - r) / 2};
}

FanArc build_arc(bool plus, int n) {
  // c_0^+ runs over xi < 0 on I_0^+, c_0^- over xi > 0 on I_0^-
  double dir = plus ? -1 : 1;
  auto has = [&](double xi) { return !arc_eta(xi, plus).empty(); };
  double lo = 0, hi = 0.001;
  while (has(dir * hi) && hi < 4) {
    lo = hi;
    hi *= 1.5;
  }
  for (int it = 0; it < 200; ++it) {
    double mid = (lo + hi) / 2;
    (has(dir * mid) ? lo : hi) = mid;
  }
  double extent = lo;
  FanArc arc;
  arc.label = plus ? "c0+" : "c0-";
  arc.from = "p_ST^-1";
  arc.to = "q0";
  arc.min_margin = INFINITY;
  std::vector<std::pair<double, double>> upper, lower;
  for (int i = 1; i < n; ++i) {
    // cosine spacing crowds the turning point
    double s = extent * (1 - std::cos(kPi / 2 * i / n));
    double xi = dir * s;
    auto r = arc_eta(xi, plus);
    if (r.empty()) continue;
    upper.push_back({xi, r[0]});
    lower.push_back({xi, r[1]});
  }
  arc.samples.push_back({0, kS15 / 4});
  arc.samples.insert(arc.samples.end(), upper.begin(), upper.end());
  arc.samples.insert(arc.samples.end(), lower.rbegin(), lower.rend());
  arc.samples.push_back({0, -kS15 / 4});
  for (std::size_t i = 1; i + 1 < arc.samples.size(); ++i) {
    auto [xi, eta] = arc.samples[i];
    double other = plus ? F2(xi, eta) : F1(xi, eta);
    arc.min_margin = std::min(arc.min_margin, other);
  }
  return arc;
}

std::string power_label(int k, const std::string& base) {
  if (k == 0) return base;
  return "A^" + std::to_string(k) + " " + base;
}

}  // namespace

std::array<Lift, 4> displayed_parabolic_lifts() {
  return {Lift(cplx(-0.25, kS15 / 4), cplx(kS3 / 4, kS5 / 4), 1),
          Lift(cplx(-0.25, -kS15 / 4), cplx(-kS3 / 4, kS5 / 4), 1),
          Lift(-1, cplx(-3 * kS3 / 4, kS5 / 4), 1),
          Lift(-1, cplx(3 * kS3 / 4, kS5 / 4), 1)};
}

LimitData limit_group() {
  LimitData d;
  d.group = build_group(Params::limit());
  const GroupData& g = d.group;
  d.STi = g.S * g.T.inverse();
  d.SiT = g.S.inverse() * g.T;
  d.TST = g.T * g.S * g.T;
  d.STS = g.S * g.T * g.S;
  const GroupElement* words[4] = {&d.STi, &d.SiT, &d.TST, &d.STS};
  Lift* pts[4] = {&d.p_STi, &d.p_SiT, &d.p_TST, &d.p_STS};
  auto shown = displayed_parabolic_lifts();
  d.all_unipotent = true;
  for (int i = 0; i < 4; ++i) {
    *pts[i] = fixed_point(*words[i]);
    d.lift_residual = std::max(d.lift_residual, entry_residual(pts[i]->v, shown[i].v));
    d.fixed_residual = std::max(d.fixed_residual, projective_gap(words[i]->apply_raw(pts[i]->v), pts[i]->v));
    if (classify(*words[i]).tag != IsoTag::Unipotent) d.all_unipotent = false;
  }

  Mat3 A, S, T;
  const cplx i(0, 1);
  A << 1, -kS3, -1.5 + i * kS15 / 2.0,
       0, 1, kS3,
       0, 0, 1;
  S << 1, kS3 / 2 - i * kS5 / 2.0, -1,
       -kS3 / 2 - i * kS5 / 2.0, -1, 0,
       -1, 0, 0;
  T << 0, 0, -1,
       0, -1, -kS3 / 2 + i * kS5 / 2.0,
       -1, kS3 / 2 + i * kS5 / 2.0, 1;
  d.matrix_residual = std::max({projective_residual(A, g.A.m), projective_residual(S, g.S.m),
                                projective_residual(T, g.T.m)});

  Symmetries sym = symmetry_maps(g.p);
  const Lift orbit[4] = {d.p_TST, d.p_SiT, d.p_STi, d.p_STS};
  for (int k = 0; k + 1 < 4; ++k)
    d.phi_orbit_residual = std::max(d.phi_orbit_residual, projective_gap(sym.phi.apply(orbit[k]).v, orbit[k + 1].v));
  GroupElement phi2 = sym.phi * sym.phi;
  d.phi_squared_residual = projective_residual(Mat3(phi2.m / phi2.m.norm()), Mat3(g.A.m / g.A.m.norm()));
  return d;
}

bool TangencyReport::pass(double tol) const {
  return std::abs(mod_pBA - 1) <= tol && std::abs(mod_ApB - 1) <= tol && std::abs(mod_b_Ai - 1) <= tol &&
         std::abs(mod_b_pAB - 1) <= tol && std::abs(disc_gap_a) <= tol && std::abs(disc_gap_b) <= tol &&
         !triple.empty && triple.points.size() == 2 && triple_residual <= tol;
}

TangencyReport tangency_check() {
  LimitData d = limit_group();
  const GroupData& g = d.group;
  TangencyReport r;
  r.mod_pBA = std::abs(hermitian_product(d.p_STi, g.pBA));
  r.mod_ApB = std::abs(hermitian_product(d.p_STi, g.A.apply(g.pB)));
  r.mod_b_Ai = std::abs(hermitian_product(d.p_SiT, g.A.inverse().apply(g.pB)));
  r.mod_b_pAB = std::abs(hermitian_product(d.p_SiT, g.pAB));
  SphereFamily fam{g.p};
  r.disc_gap_a = std::abs(fam.plus(1).centre.z - fam.minus(-1).centre.z) - 2;
  r.disc_gap_b = std::abs(fam.plus(-1).centre.z - fam.minus(0).centre.z) - 2;

  r.triple = triple_intersection(g.p);
  // each triple point must match one of the two parabolic points, and both must be hit
  bool hit[2] = {false, false};
  const Lift targets[2] = {d.p_STi, d.p_SiT};
  auto shown = displayed_parabolic_lifts();
  for (const GeoCoord& c : r.triple.points) {
    Lift q = geo_to_point(fam.plus(0), c).standard();
    double best = INFINITY;
    int which = 0;
    for (int k = 0; k < 2; ++k) {
      double res = entry_residual(q.v, shown[k].v);
      if (res < best) best = res, which = k;
    }
    hit[which] = true;
    r.triple_residual = std::max(r.triple_residual, best);
    r.triple_residual = std::max(r.triple_residual, entry_residual(q.v, targets[which].v));
  }
  if (!hit[0] || !hit[1]) r.triple_residual = INFINITY;
  return r;
}

CycleGraph cycle_graph(int K, int max_len) {
  LimitData d = limit_group();
  const GroupData& g = d.group;
  SphereFamily fam{g.p};
  CycleGraph cg;
  std::vector<Lift> pts;
  for (int k = -K; k <= K; ++k) {
    pts.push_back(g.A.pow(k).apply(d.p_STi));
    cg.vertices.push_back(power_label(k, "p_ST^-1"));
    pts.push_back(g.A.pow(k).apply(d.p_SiT));
    cg.vertices.push_back(power_label(k, "p_S^-1T"));
  }
  auto find = [&](const Lift& q) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (projective_gap(pts[i].v, q.v) < 1e-9) return int(i);
    return -1;
  };
  std::vector<GroupElement> edge_g;
  for (int v = 0; v < int(pts.size()); ++v) {
    for (int j = -K - 2; j <= K + 2; ++j) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        if (on_sphere(fam.get(s, j), pts[v]) > 1e-9) continue;
        SideTag tag{s, j};
        GroupElement sigma = side_pairing(g, tag);
        int to = find(sigma.apply(pts[v]));
        if (to < 0) continue;
        cg.edges.push_back({v, to, tag});
        edge_g.push_back(sigma);
      }
    }
  }

  cg.pass = true;
  const int base_k = K;  // index offset of k = 0
  for (int base : {2 * base_k, 2 * base_k + 1}) {
    std::vector<int> path;
    std::function<void(int, const GroupElement&, const SideTag*)> dfs = [&](int v, const GroupElement& acc,
                                                                           const SideTag* arrived_on) {
      if (!path.empty() && v == base) {
        CycleCertificate c;
        c.base = cg.vertices[base];
        for (int e : path) c.path.push_back(to_string(cg.edges[e].side));
        c.tag = classify(acc).tag;
        c.fixed_residual = projective_gap(acc.apply_raw(pts[base].v), pts[base].v);
        c.ok = c.tag == IsoTag::Identity || (c.tag == IsoTag::Unipotent && c.fixed_residual < 1e-9);
        if (path.size() == 3) ++cg.triangles;
        if (path.size() == 4) ++cg.quadrilaterals;
        cg.pass = cg.pass && c.ok;
        cg.cycles.push_back(std::move(c));
        return;
      }
      if (int(path.size()) == max_len) return;
      for (int e = 0; e < int(cg.edges.size()); ++e) {
        const auto& ed = cg.edges[e];
        if (ed.from != v) continue;
        // no immediate return through the paired side
        if (arrived_on && ed.side.k == arrived_on->k && ed.side.sign != arrived_on->sign) continue;
        path.push_back(e);
        dfs(ed.to, edge_g[e] * acc, &ed.side);
        path.pop_back();
      }
    };
    dfs(base, GroupElement{}, nullptr);
  }
  if (cg.triangles + cg.quadrilaterals == 0) cg.pass = false;

  GroupElement quad = g.A.inverse() * g.S * g.A * g.S.inverse() * g.A * g.S * g.A.inverse() * g.S.inverse();
  GroupElement tis = g.T.inverse() * g.S;
  cg.T_inv_S_cubed_residual = projective_residual(quad.m, (tis * tis * tis).m);
  if (cg.T_inv_S_cubed_residual > 1e-10 || classify(quad).tag != IsoTag::Unipotent) cg.pass = false;
  return cg;
}

double fan_value(const HeisPoint& q) { return 3 * kS3 * q.z.real() - kS5 * q.z.imag(); }

double Fan::offset() const { return kS2 / 2 + 4.5 * kS2 * k; }

Lift Fan::point(double xi, double eta) const {
  static const GroupElement A = build_group(Params::limit()).A;
  return A.pow(k).apply(fan0_point(xi, eta));
}

bool in_DA(const HeisPoint& q, double e) {
  double v = fan_value(q);
  return v >= -4 * kS2 - e && v <= kS2 / 2 + e;
}

FanResidualScan fan_residual_scan(double res, Policy policy) {
  const int n = static_cast<int>(std::lround(6.0 / res));
  const double h = 6.0 / n;
  FanResidualScan out;
  out.n = n;
  std::vector<std::vector<std::pair<int, int>>> rows(n);
  auto row = [&](int i) {
    std::vector<double> a1(n + 1), a2(n + 1), b1(n + 1), b2(n + 1);
    double x0 = -3 + i * h, x1 = x0 + h;
    for (int j = 0; j <= n; ++j) {
      double eta = -3 + j * h;
      a1[j] = F1(x0, eta);
      a2[j] = F2(x0, eta);
      b1[j] = F1(x1, eta);
      b2[j] = F2(x1, eta);
    }
    auto changes = [](double p, double q, double r, double s) {
      double lo = std::min({p, q, r, s}), hi = std::max({p, q, r, s});
      return lo <= 0 && hi >= 0;
    };
    for (int j = 0; j < n; ++j)
      if (changes(a1[j], a1[j + 1], b1[j], b1[j + 1]) && changes(a2[j], a2[j + 1], b2[j], b2[j + 1]))
        rows[i].push_back({i, j});
  };
  if (policy == Policy::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) row(i);
  } else {
    for (int i = 0; i < n; ++i) row(i);
  }
  std::vector<std::pair<int, int>> cells;
  for (auto& r : rows) cells.insert(cells.end(), r.begin(), r.end());
  std::map<std::pair<int, int>, int> index;
  for (int c = 0; c < int(cells.size()); ++c) index[cells[c]] = c;
  Dsu dsu(int(cells.size()));
  for (int c = 0; c < int(cells.size()); ++c)
    for (int di = -1; di <= 1; ++di)
      for (int dj = -1; dj <= 1; ++dj) {
        auto it = index.find({cells[c].first + di, cells[c].second + dj});
        if (it != index.end()) dsu.unite(c, it->second);
      }
  std::map<int, std::tuple<double, double, int>> acc;
  for (int c = 0; c < int(cells.size()); ++c) {
    auto& [sx, sy, cnt] = acc[dsu.find(c)];
    sx += -3 + (cells[c].first + 0.5) * h;
    sy += -3 + (cells[c].second + 0.5) * h;
    ++cnt;
  }
  std::vector<std::pair<double, double>> centres;
  for (auto& [root, v] : acc) {
    auto [sx, sy, cnt] = v;
    centres.push_back({sx / cnt, sy / cnt});
  }
  // where the two zero curves are tangent the flagged cells come in strings
  // with gaps; single linkage at 0.1 joins them
  Dsu link(int(centres.size()));
  for (int a = 0; a < int(centres.size()); ++a)
    for (int b = a + 1; b < int(centres.size()); ++b)
      if (std::hypot(centres[a].first - centres[b].first, centres[a].second - centres[b].second) < 0.1) link.unite(a, b);
  std::map<int, std::tuple<double, double, int>> merged;
  for (int a = 0; a < int(centres.size()); ++a) {
    auto& [sx, sy, cnt] = merged[link.find(a)];
    sx += centres[a].first;
    sy += centres[a].second;
    ++cnt;
  }
  for (auto& [root, v] : merged) {
    auto [sx, sy, cnt] = v;
    out.cluster_centres.push_back({sx / cnt, sy / cnt});
  }
  std::sort(out.cluster_centres.begin(), out.cluster_centres.end());
  return out;
}

bool FanRidgeReport::pass() const {
  return solutions.size() == 2 && max_residual <= 1e-10 && expansion_residual <= 1e-10 && p_STi_residual <= 1e-12 &&
         scan_clusters == 2 && scan_clusters_at_solutions && c0_plus.min_margin > 0 && c0_minus.min_margin > 0 &&
         q0_separates && I2_residual <= 1e-10;
}

FanRidgeReport fan_ridge_intersection(double scan_res, Policy policy) {
  LimitData d = limit_group();
  FanRidgeReport r;
  // subtracting the expansions leaves xi = 0 or eta = sqrt15 (xi^2 + 1/4)
  std::vector<std::pair<double, double>> cand = {{0, kS15 / 4}, {0, -kS15 / 4}};
  // second branch: (4 xi^2 + 1)^2 + xi^2 = 1, i.e. 16 xi^4 + 9 xi^2 = 0
  std::vector<Root> second = isolate_roots(Poly{{0, 0, 9, 0, 16}}, -3, 3);
  for (const Root& rt : second) cand.push_back({rt.x, kS15 * (rt.x * rt.x + 0.25)});
  for (auto c : cand) {
    bool dup = false;
    for (auto s : r.solutions)
      if (std::abs(s.first - c.first) < 1e-9 && std::abs(s.second - c.second) < 1e-9) dup = true;
    if (!dup) r.solutions.push_back(c);
  }
  for (auto [xi, eta] : r.solutions)
    r.max_residual = std::max({r.max_residual, std::abs(F1(xi, eta)), std::abs(F2(xi, eta))});

  for (int i = -6; i <= 6; ++i)
    for (int j = -6; j <= 6; ++j) {
      double xi = 0.37 * i, eta = 0.41 * j;
      r.expansion_residual = std::max({r.expansion_residual, std::abs(expansion_B(xi, eta) - 1 - F1(xi, eta)),
                                       std::abs(expansion_AB(xi, eta) - 1 - F2(xi, eta))});
    }
  r.p_STi_residual = entry_residual(fan0_point(0, kS15 / 4).v, d.p_STi.v);
  r.q0 = fan0_point(0, -kS15 / 4);

  FanResidualScan scan = fan_residual_scan(scan_res, policy);
  r.scan_clusters = int(scan.cluster_centres.size());
  r.scan_clusters_at_solutions = r.scan_clusters == 2;
  for (auto [cx, cy] : scan.cluster_centres) {
    bool near = false;
    for (auto [xi, eta] : r.solutions)
      if (std::hypot(cx - xi, cy - eta) < 0.05) near = true;
    r.scan_clusters_at_solutions = r.scan_clusters_at_solutions && near;
  }

  r.c0_plus = build_arc(true, 200);
  r.c0_minus = build_arc(false, 200);

  double c0 = kS2 / 2;
  r.q0_separates = (fan_value(heis(d.p_SiT)) - c0) * (fan_value(heis(d.p_STS)) - c0) < 0;
  Symmetries sym = symmetry_maps(d.group.p);
  const GroupElement& I2 = sym.st_real->I2;
  for (double xi : {-1.1, -0.3, 0.0, 0.6, 1.7})
    for (double eta : {-2.0, -0.5, 0.9})
      r.I2_residual = std::max(r.I2_residual, projective_gap(I2.apply_raw(fan0_point(xi, eta).v), fan0_point(-xi, eta).v));
  r.I2_residual = std::max(r.I2_residual, projective_gap(I2.apply_raw(d.p_SiT.v), d.p_STS.v));
  return r;
}

const char* to_string(FanHit h) {
  switch (h) {
    case FanHit::Empty: return "empty";
    case FanHit::Point: return "point";
    case FanHit::Circle: return "circle";
  }
  return "?";
}

std::array<std::pair<Sign, int>, 8> FanSphereTable::columns() {
  return {{{Sign::Minus, -2}, {Sign::Plus, -2}, {Sign::Minus, -1}, {Sign::Plus, -1},
           {Sign::Minus, 0}, {Sign::Plus, 0}, {Sign::Minus, 1}, {Sign::Plus, 1}}};
}

bool FanSphereTable::pass() const {
  return computed == expected && point_residual <= 1e-10 && b_interior && translates_outside;
}

FanSphereTable fan_sphere_table() {
  LimitData d = limit_group();
  const GroupData& g = d.group;
  SphereFamily fam{g.p};
  FanSphereTable t;
  using H = FanHit;
  t.expected = {{{H::Empty, H::Empty, H::Point, H::Empty, H::Circle, H::Circle, H::Empty, H::Point},
                 {H::Point, H::Empty, H::Circle, H::Circle, H::Empty, H::Point, H::Empty, H::Empty}}};
  const Fan fans[2] = {Fan{0}, Fan{-1}};
  const Lift named[2] = {d.p_STi, d.p_TST};
  auto cols = FanSphereTable::columns();
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 8; ++c) {
      CyganSphere s = fam.get(cols[c].first, cols[c].second);
      // the vertical projection of a unit Cygan sphere is the unit disc
      double dist = std::abs(fan_value(s.centre) - fans[r].offset()) / (4 * kS2);
      H hit = std::abs(dist - 1) <= 1e-9 ? H::Point : (dist < 1 ? H::Circle : H::Empty);
      t.computed[r][c] = hit;
      if (hit == H::Point) {
        t.point_residual = std::max({t.point_residual, on_sphere(s, named[r]),
                                     std::abs(fan_value(heis(named[r])) - fans[r].offset())});
      }
    }
  }
  const double lo = Fan{-1}.offset(), hi = Fan{0}.offset(), m = 1e-9;
  double vb = fan_value(heis(d.p_SiT));
  t.b_interior = vb > lo + m && vb < hi - m;
  t.translates_outside = true;
  for (int k = -5; k <= 5; ++k) {
    double va = fan_value(heis(g.A.pow(k).apply(d.p_STi)));
    double vk = fan_value(heis(g.A.pow(k).apply(d.p_SiT)));
    // A^0 p_{ST^-1} lies on F_0 and A^-1 p_{ST^-1} = p_TST on F_-1
    if (k == 0)
      t.translates_outside = t.translates_outside && std::abs(va - hi) < m;
    else if (k == -1)
      t.translates_outside = t.translates_outside && std::abs(va - lo) < m;
    else
      t.translates_outside = t.translates_outside && (va < lo - m || va > hi + m);
    if (k != 0) t.translates_outside = t.translates_outside && (vk < lo - m || vk > hi + m);
  }
  return t;
}

int CellComplex::vertex(const std::string& label) const {
  for (int i = 0; i < int(vertices.size()); ++i)
    if (vertices[i].label == label) return i;
  return -1;
}

std::vector<std::string> CellComplex::problems() const {
  std::vector<std::string> out;
  std::vector<int> uses(edges.size(), 0);
  for (const CellFace& f : faces) {
    if (f.vertices.size() != f.edges.size()) {
      out.push_back(f.label + ": vertex and edge counts differ");
      continue;
    }
    for (std::size_t i = 0; i < f.edges.size(); ++i) {
      const CellEdge& e = edges[f.edges[i]];
      ++uses[f.edges[i]];
      int u = f.vertices[i], v = f.vertices[(i + 1) % f.vertices.size()];
      if (!((e.v0 == u && e.v1 == v) || (e.v0 == v && e.v1 == u)))
        out.push_back(f.label + ": edge " + e.label + " does not join consecutive vertices");
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (uses[e] != 2) out.push_back("edge " + edges[e].label + " lies in " + std::to_string(uses[e]) + " faces");
  return out;
}

double CellComplex::certify_pairings() {
  double worst = 0;
  for (FacePairing& p : pairings) {
    const CellFace& s = faces[p.source];
    const CellFace& t = faces[p.target];
    p.residual = s.vertices.size() == t.vertices.size() ? 0 : INFINITY;
    for (std::size_t i = 0; i < s.vertices.size() && i < t.vertices.size(); ++i) {
      Vec3 img = p.g.apply_raw(vertices[s.vertices[i]].lift.v);
      p.residual = std::max(p.residual, projective_gap(img, vertices[t.vertices[i]].lift.v));
    }
    worst = std::max(worst, p.residual);
  }
  return worst;
}

BoundaryComplex boundary_cell_complex() {
  LimitData d = limit_group();
  const GroupData& g = d.group;
  SphereFamily fam{g.p};
  BoundaryComplex out;
  CellComplex& cx = out.complex;
  Lift q0 = Fan{0}.point(0, -kS15 / 4);
  Lift q1 = g.A.inverse().apply(q0);
  cx.vertices = {{"p_ST^-1", d.p_STi}, {"p_S^-1T", d.p_SiT}, {"p_TST", d.p_TST}, {"q0", q0}, {"q-1", q1}};
  enum { a, b, c, Q0, Q1 };
  cx.edges = {{"r0- (b,c)", b, c},    {"r0- (c,a)", c, a},    {"c0+", a, Q0},          {"r0+ (q0,b)", Q0, b},
              {"r0+ (a,b)", a, b},    {"c0-", a, Q0},         {"r0- (a,b)", a, b},     {"r-1+ (c,b)", c, b},
              {"r-1+ (b,q-1)", b, Q1}, {"c-1+", Q1, c},       {"c-1-", Q1, c}};
  cx.faces = {{"Q'0+", {b, c, a, Q0}, {0, 1, 2, 3}},
              {"Q'-1-", {c, a, b, Q1}, {1, 6, 8, 10}},
              {"T0-", {b, a, Q0}, {4, 5, 3}},
              {"T-1+", {c, b, Q1}, {7, 8, 9}},
              {"B0+", {a, b}, {4, 6}},
              {"B-1-", {b, c}, {0, 7}},
              {"F0 & D^c", {a, Q0}, {2, 5}},
              {"F-1 & D^c", {c, Q1}, {9, 10}}};
  out.notes.push_back("Q'-1- vertex set inferred by A-translation");

  // vertex positions: spheres through each vertex, and the fan it sits on
  struct Where {
    int v;
    std::vector<std::pair<Sign, int>> spheres;
    int fan;  // 0 = F_0, -1 = F_-1, 1 = none
  };
  const std::vector<Where> where = {
      {a, {{Sign::Plus, 0}, {Sign::Minus, 0}, {Sign::Plus, 1}, {Sign::Minus, -1}}, 0},
      {b, {{Sign::Plus, 0}, {Sign::Minus, 0}, {Sign::Plus, -1}, {Sign::Minus, -1}}, 1},
      {c, {{Sign::Plus, -1}, {Sign::Minus, -1}, {Sign::Plus, 0}, {Sign::Minus, -2}}, -1},
      {Q0, {{Sign::Plus, 0}, {Sign::Minus, 0}}, 0},
      {Q1, {{Sign::Plus, -1}, {Sign::Minus, -1}}, -1}};
  for (const Where& w : where) {
    const Lift& p = cx.vertices[w.v].lift;
    for (auto [s, k] : w.spheres) out.position_residual = std::max(out.position_residual, on_sphere(fam.get(s, k), p));
    if (w.fan != 1)
      out.position_residual = std::max(out.position_residual, std::abs(fan_value(heis(p)) - Fan{w.fan}.offset()));
    else if (!in_DA(heis(p), -1e-9))
      out.position_residual = INFINITY;
  }
  out.positions_ok = out.position_residual <= 1e-10;
  return out;
}

namespace {

// fold a bigon into the face sharing one of its edges; the bigon's other edge
// replaces the shared one
void merge_bigon(CellComplex& cx, int face, int bigon) {
  CellFace& f = cx.faces[face];
  const CellFace& bg = cx.faces[bigon];
  int shared = -1, other = -1;
  for (int e : bg.edges)
    if (std::find(f.edges.begin(), f.edges.end(), e) != f.edges.end()) shared = e;
  for (int e : bg.edges)
    if (e != shared) other = e;
  if (shared < 0 || other < 0) throw std::logic_error("bigon does not share an edge with the face");
  std::replace(f.edges.begin(), f.edges.end(), shared, other);
  cx.edges.erase(cx.edges.begin() + shared);
  for (CellFace& g : cx.faces)
    for (int& e : g.edges)
      if (e > shared) --e;
  cx.faces.erase(cx.faces.begin() + bigon);
  std::vector<FacePairing> kept;
  for (FacePairing p : cx.pairings) {
    if (p.source == bigon || p.target == bigon) continue;
    if (p.source > bigon) --p.source;
    if (p.target > bigon) --p.target;
    kept.push_back(p);
  }
  cx.pairings = kept;
}

}  // namespace

bool Octahedron::pass() const {
  bool cycles_ok = !vertex_cycles.empty() &&
                   std::all_of(vertex_cycles.begin(), vertex_cycles.end(), [](const CycleCertificate& c) { return c.ok; });
  return pre.euler() == 2 && post.euler() == 2 && pre.problems().empty() && post.problems().empty() &&
         pre.pairings.size() == 5 && post.pairings.size() == 4 && post.faces.size() == 8 && post.edges.size() == 12 &&
         post.vertices.size() == 6 && merge_maps_agree && relator_trivial && max_pairing_residual <= 1e-10 &&
         vertex_lift_residual <= 1e-12 && cycles_ok;
}

Octahedron octahedron() {
  LimitData d = limit_group();
  const GroupData& g = d.group;
  Octahedron oct;
  CellComplex& cx = oct.pre;
  cx.vertices = {{"p_ST", Lift::q_inf()}, {"p_TS", g.pB},       {"p_ST^-1", d.p_STi},
                 {"p_S^-1T", d.p_SiT},   {"p_TST", d.p_TST},    {"p_STS", d.p_STS}};
  enum { ST, TS, a, b, TST, STS };

  // the edges [a,STS] and [STS,b] are doubled by the two bigons
  std::map<std::tuple<int, int, int>, int> edge_id;
  auto edge = [&](int u, int v, int variant = 0) {
    auto key = std::make_tuple(std::min(u, v), std::max(u, v), variant);
    auto it = edge_id.find(key);
    if (it != edge_id.end()) return it->second;
    std::string label = cx.vertices[std::min(u, v)].label + " " + cx.vertices[std::max(u, v)].label;
    if (variant) label += variant == 1 ? " (i)" : " (ii)";
    cx.edges.push_back({label, std::min(u, v), std::max(u, v)});
    return edge_id[key] = int(cx.edges.size()) - 1;
  };
  auto tri = [&](const std::string& label, int u, int v, int w, std::array<int, 3> variants = {0, 0, 0}) {
    cx.faces.push_back({label, {u, v, w}, {edge(u, v, variants[0]), edge(v, w, variants[1]), edge(w, u, variants[2])}});
    return int(cx.faces.size()) - 1;
  };
  int s1 = tri("TS source", TS, b, STS, {0, 2, 0});
  int t1 = tri("TS target", TS, TST, a);
  int s2 = tri("ST source", ST, TST, b);
  int t2 = tri("ST target", ST, a, STS, {0, 2, 0});
  int s3 = tri("T source", ST, TST, a);
  int t3 = tri("T target", TS, b, TST);
  int s4 = tri("S source", TS, a, STS, {0, 1, 0});
  int t4 = tri("S target", ST, STS, b, {0, 1, 0});
  cx.faces.push_back({"B0-", {a, STS}, {edge(a, STS, 1), edge(STS, a, 2)}});
  int bm = int(cx.faces.size()) - 1;
  cx.faces.push_back({"S^-1 B0+", {STS, b}, {edge(STS, b, 1), edge(b, STS, 2)}});
  int bs = int(cx.faces.size()) - 1;

  cx.pairings = {{"TS", g.T * g.S, s1, t1},
                 {"ST", g.S * g.T, s2, t2},
                 {"T", g.T, s3, t3},
                 {"S", g.S, s4, t4},
                 {"S (bigon)", g.S, bm, bs}};
  double pre_res = cx.certify_pairings();

  oct.merge_maps_agree = projective_residual(cx.pairings[3].g.m, cx.pairings[4].g.m) < 1e-12;
  oct.post = oct.pre;
  // remove the later face first so the earlier index stays valid
  merge_bigon(oct.post, t4, bs);
  merge_bigon(oct.post, s4, bm);
  double post_res = oct.post.certify_pairings();
  oct.max_pairing_residual = std::max(pre_res, post_res);

  auto shown = displayed_parabolic_lifts();
  const int named[4] = {a, b, TST, STS};
  for (int i = 0; i < 4; ++i)
    oct.vertex_lift_residual =
        std::max(oct.vertex_lift_residual, entry_residual(oct.post.vertices[named[i]].lift.v, shown[i].v));

  oct.relator_trivial = reduce_word(whitehead_relator(parse_word("st"), parse_word("tst"))).empty();

  // closed walks in the vertex-pairing graph; every return must be unipotent
  struct Arrow {
    int from, to;
    GroupElement g;
    std::string label;
    int twin;
  };
  std::vector<Arrow> arrows;
  for (const FacePairing& p : oct.post.pairings) {
    const auto& src = oct.post.faces[p.source].vertices;
    const auto& dst = oct.post.faces[p.target].vertices;
    for (std::size_t i = 0; i < src.size(); ++i) {
      int n = int(arrows.size());
      arrows.push_back({src[i], dst[i], p.g, p.label, n + 1});
      arrows.push_back({dst[i], src[i], p.g.inverse(), p.label + "^-1", n});
    }
  }
  const auto& verts = oct.post.vertices;
  for (int base = 0; base < int(verts.size()); ++base) {
    std::vector<int> path;
    std::function<void(int, const GroupElement&)> walk = [&](int v, const GroupElement& acc) {
      if (!path.empty() && v == base) {
        CycleCertificate c;
        c.base = verts[base].label;
        for (int e : path) c.path.push_back(arrows[e].label);
        c.tag = classify(acc).tag;
        c.fixed_residual = projective_gap(acc.apply_raw(verts[base].lift.v), verts[base].lift.v);
        c.ok = c.tag == IsoTag::Identity || (c.tag == IsoTag::Unipotent && c.fixed_residual < 1e-9);
        oct.vertex_cycles.push_back(std::move(c));
      }
      if (path.size() == 4) return;
      for (int e = 0; e < int(arrows.size()); ++e) {
        if (arrows[e].from != v) continue;
        if (!path.empty() && arrows[path.back()].twin == e) continue;
        path.push_back(e);
        walk(arrows[e].to, arrows[e].g * acc);
        path.pop_back();
      }
    };
    walk(base, GroupElement{});
  }
  return oct;
}

DeltaPhiReport delta_phi_exclusion(int samples) {
  Params p = Params::limit();
  DeltaPhiReport r;
  const double m = std::sqrt(3.0 / 8.0);
  for (int i = 0; i < samples; ++i) {
    double x = -m + 2 * m * i / (samples - 1);
    double d = cygan_distance(HeisPoint{}, delta_phi(p, x));
    double d4 = d * d * d * d;
    r.max_d4 = std::max(r.max_d4, d4);
    double closed = x * x * x * x + 15 * x * x / 16 + 25.0 / 1024;
    r.closed_form_residual = std::max(r.closed_form_residual, std::abs(d4 - closed));
  }
  return r;
}

SlabReport slab_equivariance() {
  GroupData g = build_group(Params::limit());
  SphereFamily fam{g.p};
  SlabReport r;
  for (double xi = -2; xi <= 2; xi += 0.25)
    for (double eta = -2; eta <= 2; eta += 0.25) {
      Lift lo = Fan{-1}.point(xi, eta);
      r.fan_residual = std::max({r.fan_residual, std::abs(fan_value(heis(lo)) - Fan{-1}.offset()),
                                 projective_gap(g.A.apply_raw(lo.v), Fan{0}.point(xi, eta).v)});
    }
  GroupElement Ai = g.A.inverse();
  for (bool plus : {true, false}) {
    FanArc arc = build_arc(plus, 100);
    CyganSphere s = plus ? fam.plus(-1) : fam.minus(-1);
    for (auto [xi, eta] : arc.samples) {
      Lift q = Ai.apply(fan0_point(xi, eta));
      r.arc_residual = std::max({r.arc_residual, std::abs(fan_value(heis(q)) - Fan{-1}.offset()), on_sphere(s, q)});
    }
  }
  return r;
}

SplitReport quad_bigon_split(int na, int nl) {
  Params p = Params::limit();
  SphereFamily fam{p};
  CyganSphere host = fam.plus(0), m0 = fam.minus(0), m1 = fam.minus(-1);
  std::vector<unsigned char> mask(static_cast<std::size_t>(na) * nl, 0);
  for (int i = 0; i < na; ++i) {
    double alpha = -kPi / 2 + (i + 0.5) * kPi / na;
    for (int j = 0; j < nl; ++j) {
      HeisPoint q = geo_to_heis(host, boundary_geo(alpha, (j + 0.5) * 2 * kPi / nl));
      mask[i * nl + j] = sphere_function(m0, q) > 0 && sphere_function(m1, q) > 0;
    }
  }
  SplitReport r;
  r.components = grid_components(mask, na, nl);
  for (const HeisPoint& q : sample_ridge(p, Sign::Plus, 32, 32)) {
    HeisPoint img{-std::conj(q.z), -q.t, q.u};
    r.iota_residual = std::max({r.iota_residual, std::abs(sphere_function(host, img)), std::abs(sphere_function(m1, img))});
  }
  return r;
}

}  // namespace riley
