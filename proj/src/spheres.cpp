#include "riley/spheres.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <numeric>

namespace riley {

CyganSphere SphereFamily::plus(int k) const {
  CyganSphere s;
  s.centre.z = cplx(k * p.ell_A, 0);
  s.centre.t = k * p.t_A;
  return s;
}

CyganSphere SphereFamily::minus(int k) const {
  CyganSphere s;
  s.centre.z = k * p.ell_A + std::sqrt(std::cos(p.alpha1)) * std::polar(1.0, p.alpha2);
  s.centre.t = -std::sin(p.alpha1);
  return s;
}

std::string sphere_label(Sign s, int k) { return "I" + std::to_string(k) + (s == Sign::Plus ? "+" : "-"); }

CyganSphere isometric_sphere(const GroupElement& g, double e) {
  cplx gg = g.m(2, 0), h = g.m(2, 1), j = g.m(2, 2);
  if (std::abs(gg) <= e) throw DomainError("element fixes q_inf: no isometric sphere");
  CyganSphere s;
  s.centre.z = std::conj(h) / (std::conj(gg) * std::sqrt(2.0));
  s.centre.t = std::imag(std::conj(j) / std::conj(gg));
  s.radius = 1 / std::sqrt(std::abs(gg));
  return s;
}

HeisPoint geo_to_heis(const CyganSphere& sphere, const GeoCoord& c) {
  double lim = 2 * std::cos(c.alpha);
  if (c.w * c.w > lim + 1e-12) throw DomainError("geographical coordinate with w^2 > 2 cos(alpha)");
  double r = sphere.radius;
  HeisPoint local;
  local.z = r * c.w * std::polar(1.0, -c.alpha / 2 + c.beta) / std::sqrt(2.0);
  local.t = r * r * std::sin(c.alpha);
  local.u = std::max(0.0, r * r * (std::cos(c.alpha) - c.w * c.w / 2));
  return heisenberg_translate(sphere.centre, local);
}

Lift geo_to_point(const CyganSphere& sphere, const GeoCoord& c) { return geo_to_heis(sphere, c).lift(); }

GeoCoord boundary_geo(double alpha, double beta_full) {
  double w = std::sqrt(std::max(0.0, 2 * std::cos(alpha)));
  if (beta_full < kPi) return {alpha, beta_full, w};
  return {alpha, beta_full - kPi, -w};
}

const char* to_string(Side s) {
  switch (s) {
    case Side::Interior: return "Interior";
    case Side::On: return "On";
    case Side::Exterior: return "Exterior";
  }
  return "?";
}

double sphere_function(const CyganSphere& s, const HeisPoint& q) {
  HeisPoint inv{-s.centre.z, -s.centre.t, 0};
  HeisPoint d = heisenberg_translate(inv, q);
  double re = std::norm(d.z) + d.u;
  double r2 = s.radius * s.radius;
  return re * re + d.t * d.t - r2 * r2;
}

Side membership(const CyganSphere& sphere, const Lift& q, double e) {
  if (q.is_infinity()) return Side::Exterior;
  double d = cygan_distance(HeisPoint::from_lift(q), sphere.centre);
  double diff = d - sphere.radius;
  if (diff > e * sphere.radius) return Side::Exterior;
  if (diff < -e * sphere.radius) return Side::Interior;
  return Side::On;
}

Disc vertical_projection(const CyganSphere& s) { return {s.centre.z, s.radius}; }

namespace {

struct ClosedFormCoeffs {
  double xy2, xy, four_minus_y;
};

ClosedFormCoeffs closed_form_coeffs(const Params& p) {
  double X = p.X(), Y = p.Y();
  double s2 = std::sin(p.alpha2);
  return {X * Y * Y, X * Y, 4 * s2 * s2};
}

double plus_d4(const ClosedFormCoeffs& c, double k) {
  return (k * k * k * k * c.xy2 + k * k * c.xy * c.four_minus_y) / 4;
}

double minus_d4(const ClosedFormCoeffs& c, double k) {
  return 1 + (k * k * (k + 1) * (k + 1) * c.xy2 + 2 * k * (k + 1) * c.xy) / 4;
}

}  // namespace

DisjointnessReport pairwise_disjointness_certificate(const Params& p, int k, double e) {
  auto c = closed_form_coeffs(p);
  DisjointnessReport r;
  r.k = k;
  r.plus_d4 = plus_d4(c, k);
  r.minus_d4 = minus_d4(c, k);
  r.plus_claimed_disjoint = std::abs(k) >= 2;
  r.minus_claimed_disjoint = k >= 1 || k <= -2;
  const double tol = 16 * e;
  if (r.plus_claimed_disjoint) {
    r.plus_ok = r.plus_d4 >= 16 - tol;
    r.marginal |= std::abs(r.plus_d4 - 16) <= tol;
  }
  if (r.minus_claimed_disjoint) {
    r.minus_ok = r.minus_d4 >= 16 - tol;
    r.marginal |= std::abs(r.minus_d4 - 16) <= tol;
  }
  return r;
}

bool asymptotic_growth_certificate(const Params& p, int window) {
  auto c = closed_form_coeffs(p);
  // nonnegative coefficients make both forms monotone in |k| (k(k+1) for minus)
  bool coeffs = c.xy2 > 0 && c.xy >= 0 && c.four_minus_y >= 0;
  bool edge = plus_d4(c, window) >= 16 && plus_d4(c, -window) >= 16 && minus_d4(c, window) >= 16 &&
              minus_d4(c, -window - 1) >= 16;
  // leading k^4 term alone already clears the sum of radii at the edge
  double w4 = static_cast<double>(window) * window * window * window;
  bool lead = c.xy2 * w4 / 4 >= 16;
  return coeffs && edge && lead;
}

FValues f_functions(const Params& p, const GeoCoord& q) {
  const double a1 = p.alpha1, a2 = p.alpha2, x1 = p.x1;
  double c = std::cos(q.alpha / 2 - a1 / 2);
  double base = 2 * c * c + std::cos(q.alpha - a1) + q.w * q.w * x1 * x1;
  FValues f;
  f.f0 = base - 4 * q.w * x1 * c * std::cos(q.beta + a1 / 2 - a2);
  f.fm1 = base + 4 * q.w * x1 * c * std::cos(q.beta + a1 / 2 + a2);
  Lift l = geo_to_point(SphereFamily{p}.plus(0), q);
  Lift pAB(-std::polar(1.0, a1), x1 * std::polar(1.0, a2), 1);
  Lift pBA(-std::polar(1.0, a1), -x1 * std::polar(1.0, -a2), 1);
  f.f0_direct = std::norm(hermitian_product(l, pAB)) - 1;
  f.fm1_direct = std::norm(hermitian_product(l, pBA)) - 1;
  return f;
}

double meridian_beta(const Params& p) { return (kPi - p.alpha1) / 2; }

double f_meridian(const Params& p, double alpha) {
  const double a1 = p.alpha1;
  double c = std::cos(alpha / 2 - a1 / 2);
  double ca = std::max(0.0, std::cos(alpha));
  return 4 * c * c + 2 * std::cos(alpha - a1) + 8 * ca * std::cos(a1) -
         16 * std::sqrt(ca * std::cos(a1)) * c * std::abs(std::sin(p.alpha2));
}

TripleResult triple_intersection(const Params& p, double e) {
  TripleResult r;
  Poly L = quartic_L(p);
  RootReport rep = has_root_in_unit_interval(L, e);
  r.sign_plus = p.alpha2 >= 0;
  double beta = meridian_beta(p);
  double fscale = 1;
  for (const Root& root : rep.roots) {
    double alpha = 2 * std::atan(root.x);
    double w = std::sqrt(std::max(0.0, 2 * std::cos(alpha)));
    r.points.push_back({alpha, beta, r.sign_plus ? w : -w});
    r.roots.push_back(root.x);
    if (std::abs(f_meridian(p, alpha)) > 1e-6 * fscale) {
      r.consistent = false;
      r.diagnostic = "quartic root is not a zero of f";
    }
  }
  r.empty = r.points.empty();
  if (r.empty) {
    const int n = 2001;
    for (int i = 0; i < n; ++i) {
      double alpha = -kPi / 2 + kPi * i / (n - 1);
      if (f_meridian(p, alpha) < -1e-9) {
        r.consistent = false;
        r.diagnostic = "sampled f is negative but the quartic has no root in [-1,1]";
        break;
      }
    }
  }
  if (rep.degraded) r.diagnostic = rep.warning;
  return r;
}

OracleResult meridian_oracle(const Params& p, double resolution) {
  const double a1 = p.alpha1, x1 = p.x1;
  const cplx conj_pab2 = std::conj(x1 * std::polar(1.0, p.alpha2));
  const cplx conj_pab1 = std::conj(-std::polar(1.0, a1));
  const double beta = meridian_beta(p);
  auto f0 = [&](double alpha, int sgn) {
    double w = sgn * std::sqrt(std::max(0.0, 2 * std::cos(alpha)));
    cplx q1 = -std::polar(1.0, -alpha);
    cplx q2 = w * std::polar(1.0, -alpha / 2 + beta);
    return std::norm(q1 + q2 * conj_pab2 + conj_pab1) - 1;
  };
  const int n = static_cast<int>(std::ceil(kPi / resolution)) + 1;
  const double h = kPi / (n - 1);
  OracleResult best;
  best.min_f0 = INFINITY;
  std::vector<double> vals(n);
  for (int sgn : {1, -1}) {
    for (int i = 0; i < n; ++i) vals[i] = f0(-kPi / 2 + h * i, sgn);
    for (int i = 0; i < n; ++i) {
      double v = vals[i];
      double a = -kPi / 2 + h * i;
      bool local_min = (i == 0 || vals[i - 1] >= v) && (i == n - 1 || vals[i + 1] >= v);
      if (local_min) {
        double lo = std::max(-kPi / 2, a - h), hi = std::min(kPi / 2, a + h);
        auto res = boost::math::tools::brent_find_minima([&](double x) { return f0(x, sgn); }, lo, hi, 50);
        if (res.second < v) {
          v = res.second;
          a = res.first;
        }
      }
      if (v < best.min_f0) {
        best.min_f0 = v;
        best.at_alpha = a;
        best.sign = sgn;
      }
    }
  }
  best.nonempty = best.min_f0 <= 0;
  return best;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int grid_components(const std::vector<unsigned char>& mask, int na, int nl) {
  Dsu dsu(na * nl);
  auto at = [&](int i, int j) { return i * nl + ((j % nl) + nl) % nl; };
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nl; ++j) {
      if (!mask[at(i, j)]) continue;
      for (int di = 0; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj <= 0) continue;
          int ii = i + di;
          if (ii >= na) continue;
          if (mask[at(ii, j + dj)]) dsu.unite(at(i, j), at(ii, j + dj));
        }
      }
    }
  }
  // polar rows collapse to single points
  for (int row : {0, na - 1}) {
    int first = -1;
    for (int j = 0; j < nl; ++j) {
      if (!mask[at(row, j)]) continue;
      if (first < 0)
        first = at(row, j);
      else
        dsu.unite(at(row, j), first);
    }
  }
  int count = 0;
  for (int c = 0; c < na * nl; ++c)
    if (mask[c] && dsu.find(c) == c) ++count;
  return count;
}

LocusReport intersection_locus(const CyganSphere& host, const CyganSphere& other, int na, int nb) {
  const int nl = 2 * nb;
  std::vector<signed char> sg(static_cast<std::size_t>(na) * nl);
  for (int i = 0; i < na; ++i) {
    double alpha = -kPi / 2 + (i + 0.5) * kPi / na;
    for (int j = 0; j < nl; ++j) {
      double bf = (j + 0.5) * kPi / nb;
      HeisPoint q = geo_to_heis(host, boundary_geo(alpha, bf));
      sg[i * nl + j] = sphere_function(other, q) > 0 ? 1 : -1;
    }
  }
  std::vector<unsigned char> mask(sg.size(), 0);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nl; ++j) {
      int here = i * nl + j;
      int right = i * nl + (j + 1) % nl;
      if (sg[here] != sg[right]) mask[here] = mask[right] = 1;
      if (i + 1 < na && sg[here] != sg[here + nl]) mask[here] = mask[here + nl] = 1;
    }
  }
  LocusReport rep;
  rep.n_alpha = na;
  rep.n_beta = nb;
  rep.components = grid_components(mask, na, nl);
  rep.cells = static_cast<int>(std::count(mask.begin(), mask.end(), 1));
  return rep;
}

}  // namespace riley
