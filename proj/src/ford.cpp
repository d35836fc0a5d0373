#include "riley/ford.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace riley {

std::string to_string(const SideTag& s) { return std::string("s") + std::to_string(s.k) + (s.sign == Sign::Plus ? "+" : "-"); }
std::string to_string(const RidgeTag& r) { return std::string("r") + std::to_string(r.k) + (r.kind == Sign::Plus ? "+" : "-"); }

GroupElement side_pairing(const GroupData& g, const SideTag& tag) {
  GroupElement core = tag.sign == Sign::Plus ? g.S : g.S.inverse();
  return g.A.pow(tag.k) * core * g.A.pow(-tag.k);
}

RidgeCycle ridge_cycle(const GroupData& g, const RidgeTag& tag, double e) {
  RidgeCycle rc;
  rc.rho = tag.kind == Sign::Plus ? g.A.pow(tag.k) * g.S * g.A.pow(-tag.k) : g.A.pow(tag.k - 1) * g.S * g.A.pow(-tag.k);
  GroupElement acc = rc.rho;
  for (int n = 1; n <= 6; ++n) {
    if (is_scalar(acc.m, e * std::max(1.0, acc.m.cwiseAbs().maxCoeff()))) {
      rc.order = n;
      rc.lambda = acc.m(0, 0);
      break;
    }
    acc = acc * rc.rho;
  }
  return rc;
}

const char* to_string(DMembership::Kind k) {
  switch (k) {
    case DMembership::Kind::Inside: return "Inside";
    case DMembership::Kind::OnSide: return "OnSide";
    case DMembership::Kind::Outside: return "Outside";
  }
  return "?";
}

DMembership FordDomain::membership(const Lift& q, double e) const {
  if (q.is_infinity()) throw DomainError("membership_D is undefined at q_inf");
  HeisPoint h = HeisPoint::from_lift(q);
  // D is A-invariant: bring Re z into [0, ell_A) first
  int m = static_cast<int>(std::floor(h.z.real() / p.ell_A));
  HeisPoint shifted = heisenberg_translate(HeisPoint{cplx(-m * p.ell_A, 0), -m * p.t_A, 0}, h);
  // a sphere can only contain points whose projection is within 1 of its centre
  int needed = static_cast<int>(std::ceil((2 + p.ell_A) / p.ell_A)) + 1;
  DMembership r;
  r.window_used = std::max(window, needed);
  double best = INFINITY;
  for (int k = -r.window_used; k <= r.window_used; ++k) {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      CyganSphere sp = family.get(s, k);
      double d = cygan_distance(shifted, sp.centre);
      double diff = d - sp.radius;
      SideTag tag{s, k + m};
      if (diff < -e) {
        if (d < best) {
          best = d;
          r.witness = tag;
        }
      } else if (diff <= e) {
        r.on.push_back(tag);
      }
    }
  }
  if (r.witness)
    r.kind = DMembership::Kind::Outside;
  else if (!r.on.empty())
    r.kind = DMembership::Kind::OnSide;
  return r;
}

Presentation presentation(const Params& p) {
  RegionClass rc = region_classify(p);
  if (rc.tag != RegionTag::Z_interior && rc.tag != RegionTag::Z_boundary)
    throw DomainError("presentation is only certified on the closure of Z");
  Presentation pr;
  pr.relations_SA = {"S^3 = id", "(A^-1 S)^3 = id"};
  pr.relations_ST = {"S^3 = id", "T^3 = id"};
  return pr;
}

FreenessReport freeness_probe(const Params& p, int max_len, Policy policy, double delta) {
  GroupData g = build_group(p);
  FreenessReport rep;
  rep.max_len = max_len;
  rep.delta = delta;
  auto words = enumerate_reduced(max_len);
  auto free_words = enumerate_free(max_len);
  std::vector<double> dist(words.size()), free_dist(free_words.size());
  const long nw = static_cast<long>(words.size()), nf = static_cast<long>(free_words.size());
  if (policy == Policy::Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < nw; ++i) dist[i] = distance_to_identity(eval_word(words[i], g.S.m, g.T.m));
#pragma omp parallel for schedule(static)
    for (long i = 0; i < nf; ++i) free_dist[i] = distance_to_identity(eval_free(free_words[i], g.A.m, g.B.m));
  } else {
    for (long i = 0; i < nw; ++i) dist[i] = distance_to_identity(eval_word(words[i], g.S.m, g.T.m));
    for (long i = 0; i < nf; ++i) free_dist[i] = distance_to_identity(eval_free(free_words[i], g.A.m, g.B.m));
  }
  rep.words_checked = words.size();
  rep.free_words_checked = free_words.size();
  rep.min_distance = INFINITY;
  for (long i = 0; i < nw; ++i) {
    if (dist[i] < rep.min_distance) {
      rep.min_distance = dist[i];
      rep.closest_word = to_string(words[i]);
    }
    if (dist[i] < delta) rep.counterexamples.push_back(to_string(words[i]));
  }
  for (long i = 0; i < nf; ++i) {
    if (free_dist[i] < rep.min_distance) {
      rep.min_distance = free_dist[i];
      rep.closest_word = free_words[i];
    }
    if (free_dist[i] < delta) rep.counterexamples.push_back(free_words[i]);
  }
  return rep;
}

std::vector<HeisPoint> sample_ridge(const Params& p, Sign which, int na, int nb) {
  std::vector<HeisPoint> out;
  const double a1 = p.alpha1, x1 = p.x1;
  const CyganSphere host = SphereFamily{p}.plus(0);
  for (int i = 0; i < na; ++i) {
    double alpha = -kPi / 2 + (i + 0.5) * kPi / na;
    double c = std::cos(alpha / 2 - a1 / 2);
    double c0 = 2 * c * c + std::cos(alpha - a1);
    double wmax = std::sqrt(2 * std::cos(alpha));
    for (int j = 0; j < nb; ++j) {
      double beta = (j + 0.5) * kPi / nb;
      // x1^2 w^2 + b w + c0 = 0
      double b = which == Sign::Plus ? -4 * c * x1 * std::cos(beta + a1 / 2 - p.alpha2)
                                     : 4 * c * x1 * std::cos(beta + a1 / 2 + p.alpha2);
      double a = x1 * x1;
      double disc = b * b - 4 * a * c0;
      if (disc < 0) continue;
      for (double sg : {-1.0, 1.0}) {
        double w = (-b + sg * std::sqrt(disc)) / (2 * a);
        if (std::abs(w) <= wmax) out.push_back(geo_to_heis(host, {alpha, beta, w}));
      }
    }
  }
  return out;
}

TessellationReport local_tessellation(const Params& p, const HeisPoint& w, double radius, int samples, double shell,
                                      unsigned seed) {
  GroupData g = build_group(p);
  FordDomain dom(p);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  TessellationReport rep;
  rep.samples = samples;
  for (int n = 0; n < samples; ++n) {
    HeisPoint d{cplx(radius * U(rng), radius * U(rng)), radius * U(rng), 0};
    HeisPoint q = heisenberg_translate(w, d);
    q.u = std::max(0.0, w.u + radius * U(rng));
    Lift lq = q.lift();
    Lift images[3] = {lq, g.S.inverse().apply(lq), g.S.apply(lq)};  // tests D, S(D), S^-1(D)
    int inside = 0;
    bool in_shell = false;
    for (const Lift& im : images) {
      if (im.is_infinity()) continue;
      DMembership m = dom.membership(im, shell);
      if (m.kind == DMembership::Kind::OnSide) in_shell = true;
      if (m.kind == DMembership::Kind::Inside) ++inside;
    }
    if (in_shell) {
      ++rep.shell_skipped;
      continue;
    }
    if (inside == 1)
      ++rep.covered_once;
    else if (inside == 0)
      ++rep.uncovered;
    else
      ++rep.overlapping;
  }
  return rep;
}

}  // namespace riley
