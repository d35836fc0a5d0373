// The Ford polyhedron D: sides, ridges, pairings, cycle relations,
// membership, presentation, and the freeness probe.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riley/moduli.hpp"
#include "riley/spheres.hpp"
#include "riley/words.hpp"

namespace riley {

enum class Policy { Serial, Parallel };

struct SideTag {
  Sign sign = Sign::Plus;
  int k = 0;
};

struct RidgeTag {
  Sign kind = Sign::Plus;  // r_k^+ = s_k^+ & s_k^-, r_k^- = s_k^+ & s_{k-1}^-
  int k = 0;
};

std::string to_string(const SideTag& s);
std::string to_string(const RidgeTag& r);

GroupElement side_pairing(const GroupData& g, const SideTag& tag);

struct RidgeCycle {
  GroupElement rho;
  int order = 0;  // smallest n <= 6 with rho^n scalar, 0 if none
  cplx lambda{0, 0};
};
RidgeCycle ridge_cycle(const GroupData& g, const RidgeTag& tag, double e = 1e-10);

struct DMembership {
  enum class Kind { Inside, OnSide, Outside } kind = Kind::Inside;
  std::vector<SideTag> on;      // spheres within epsilon of contact
  std::optional<SideTag> witness;
  int window_used = 0;
};
const char* to_string(DMembership::Kind k);

struct FordDomain {
  Params p;
  SphereFamily family;
  int window = 5;

  explicit FordDomain(const Params& params, int w = 5) : p(params), family{params}, window(w) {}
  DMembership membership(const Lift& q, double e = eps()) const;
};

struct Presentation {
  std::vector<std::string> relations_SA;  // <S, A | ...>
  std::vector<std::string> relations_ST;  // <S, T | ...>
};
// refuses (throws DomainError) outside the closure of Z
Presentation presentation(const Params& p);

struct FreenessReport {
  int max_len = 0;
  double delta = 1e-6;
  std::size_t words_checked = 0;
  std::size_t free_words_checked = 0;
  double min_distance = 0;
  std::string closest_word;
  std::vector<std::string> counterexamples;
  bool pass() const { return counterexamples.empty(); }
};

FreenessReport freeness_probe(const Params& p, int max_len, Policy policy = Policy::Parallel, double delta = 1e-6);

// sampled points of I0+ & I0- (which = +) or I0+ & I-1- (which = -) from the
// quadratic in w on the geographical grid of I0+
std::vector<HeisPoint> sample_ridge(const Params& p, Sign which, int n_alpha, int n_beta);

struct TessellationReport {
  int samples = 0;
  int shell_skipped = 0;
  int covered_once = 0;
  int uncovered = 0;
  int overlapping = 0;
  bool pass() const { return uncovered == 0 && overlapping == 0; }
};

// D, S(D), S^-1(D) near a point of the open side s_0^+
TessellationReport local_tessellation(const Params& p, const HeisPoint& w, double radius = 1e-2, int samples = 1000,
                                      double shell = 1e-4, unsigned seed = 7);

}  // namespace riley
