#include "riley/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace riley {

int Poly::degree() const { return static_cast<int>(c.size()) - 1; }

double Poly::operator()(double x) const {
  double r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::derivative() const {
  Poly d;
  for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * static_cast<double>(i));
  if (d.c.empty()) d.c.push_back(0);
  return d;
}

Poly Poly::trimmed(double rel) const {
  Poly p = *this;
  double mx = 0;
  for (double v : p.c) mx = std::max(mx, std::abs(v));
  while (p.c.size() > 1 && std::abs(p.c.back()) <= rel * mx) p.c.pop_back();
  return p;
}

namespace {

// remainder of a / b
Poly poly_rem(const Poly& a, const Poly& b) {
  std::vector<double> r = a.c;
  int db = b.degree();
  double lead = b.c.back();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    double q = r[i] / lead;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= q * b.c[j];
    r[i] = 0;
  }
  r.resize(std::max(db, 1));
  return Poly{r};
}

double max_abs(const Poly& p) {
  double m = 0;
  for (double v : p.c) m = std::max(m, std::abs(v));
  return m;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, p.derivative()};
  const double scale = max_abs(p);
  while (chain.back().degree() > 0) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    for (double& v : r.c) v = -v;
    // remainders at rounding level mean the exact remainder is zero
    if (max_abs(r) <= 1e-10 * std::max(scale, max_abs(chain.back()))) break;
    chain.push_back(r.trimmed(1e-14));
  }
  return chain;
}

int sign_changes(const std::vector<Poly>& chain, double x) {
  int changes = 0;
  double prev = 0;
  for (const Poly& q : chain) {
    double v = q(x);
    if (v == 0) continue;
    if (prev != 0 && (v > 0) != (prev > 0)) ++changes;
    prev = v;
  }
  return changes;
}

int multiplicity_at(const Poly& p, double x) {
  double scale = max_abs(p);
  Poly d = p;
  int m = 0;
  while (d.degree() > 0 && std::abs(d(x)) <= 1e-6 * scale) {
    ++m;
    d = d.derivative();
    scale = std::max(max_abs(d), 1e-300);
  }
  return std::max(m, 1);
}

// a root of multiplicity m is a simple root of the (m-1)-th derivative
double polish(const Poly& p, int m, double x) {
  Poly d = p;
  for (int i = 1; i < m; ++i) d = d.derivative();
  Poly dd = d.derivative();
  double y = x;
  for (int i = 0; i < 50; ++i) {
    double f = d(y), fp = dd(y);
    if (fp == 0) break;
    double step = f / fp;
    y -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(y))) break;
  }
  return std::abs(y - x) < 1e-4 ? y : x;
}

}  // namespace

std::vector<Root> isolate_roots(const Poly& p0, double lo, double hi, int max_iter, double width) {
  Poly p = p0.trimmed(1e-15);
  std::vector<Root> out;
  if (p.degree() < 1) return out;
  auto chain = sturm_chain(p);
  // counts distinct roots in (a,b]; nudge endpoints off exact roots
  auto count = [&](double a, double b) { return sign_changes(chain, a) - sign_changes(chain, b); };
  double a0 = lo - 1e-14, b0 = hi + 1e-14;
  struct Span {
    double a, b;
    int n;
  };
  std::vector<Span> work{{a0, b0, count(a0, b0)}};
  while (!work.empty()) {
    Span s = work.back();
    work.pop_back();
    if (s.n <= 0) continue;
    int iter = 0;
    while (s.n > 1 && iter < max_iter && s.b - s.a > width) {
      double mid = 0.5 * (s.a + s.b);
      int left = count(s.a, mid);
      if (left > 0 && left < s.n) {
        work.push_back({mid, s.b, s.n - left});
        s = {s.a, mid, left};
      } else if (left == 0) {
        s.a = mid;
      } else {
        s.b = mid;
      }
      ++iter;
    }
    for (int i = 0; i < max_iter && s.b - s.a > width; ++i) {
      double mid = 0.5 * (s.a + s.b);
      if (count(s.a, mid) > 0)
        s.b = mid;
      else
        s.a = mid;
    }
    double x = 0.5 * (s.a + s.b);
    int m = multiplicity_at(p, x);
    if (m > 1) x = polish(p, m, x);
    if (x >= lo - 1e-12 && x <= hi + 1e-12) out.push_back({std::clamp(x, lo, hi), m});
  }
  std::sort(out.begin(), out.end(), [](const Root& u, const Root& v) { return u.x < v.x; });
  return out;
}

RootReport has_root_in_unit_interval(const Poly& quartic, double e) {
  RootReport rep;
  if (quartic.c.size() != 5) throw std::invalid_argument("expected 5 coefficients");
  if (quartic.c[4] <= e) {
    // degraded path: dense sampling for sign changes and near-zeros
    rep.degraded = true;
    rep.warning = "leading coefficient not positive; dense-sampling fallback";
    const int n = 200001;
    double prev = quartic(-1.0);
    for (int i = 1; i < n; ++i) {
      double x = -1.0 + 2.0 * i / (n - 1);
      double v = quartic(x);
      if ((v > 0) != (prev > 0) || std::abs(v) < e) rep.roots.push_back({x, 1});
      prev = v;
    }
  } else {
    rep.roots = isolate_roots(quartic, -1.0, 1.0);
  }
  rep.found = !rep.roots.empty();
  return rep;
}

std::optional<Rational> snap_rational(double x, long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  for (long q = 1; q <= max_den; ++q) {
    double num = std::round(x * static_cast<double>(q));
    if (std::abs(num / static_cast<double>(q) - x) <= tol * std::max(1.0, std::abs(x)))
      return Rational(static_cast<long long>(num), q);
  }
  return std::nullopt;
}

std::string rational_string(const Rational& r) { return r.str(); }

}  // namespace riley
