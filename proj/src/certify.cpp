#include "riley/certify.hpp"

#include <cmath>
#include <random>

#include "riley/limit.hpp"
#include "riley/output.hpp"
#include "riley/scan.hpp"

namespace riley {

namespace {

using J = nlohmann::ordered_json;

Check make(const std::string& name, bool pass, double residual, J witnesses = J::object(), J params = J::object(),
           double resolution = 0) {
  Check c;
  c.check = name;
  c.pass = pass;
  c.residual = residual;
  c.witnesses = std::move(witnesses);
  c.params = std::move(params);
  c.resolution = resolution;
  return c;
}

J pt(double a1, double a2) { return J{{"alpha1", a1}, {"alpha2", a2}}; }

std::vector<Params> random_params(int n, double lo, double hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U1(lo, hi);
  std::vector<Params> out;
  for (int i = 0; i < n; ++i) {
    double a1 = U1(rng), a2 = U1(rng);
    out.push_back(Params::make(a1, a2));
  }
  return out;
}

std::vector<Params> random_rectangle(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U1(-kPi / 6, kPi / 6), U2(-alpha2_lim(), alpha2_lim());
  std::vector<Params> out;
  for (int i = 0; i < n; ++i) {
    double a1 = U1(rng), a2 = U2(rng);
    out.push_back(Params::make(a1, a2));
  }
  return out;
}

// ---- core -----------------------------------------------------------------

Check cygan_metric() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-2, 2);
  double res = 0;
  for (int i = 0; i < 200; ++i) {
    HeisPoint p{cplx(U(rng), U(rng)), U(rng), 0}, q{cplx(U(rng), U(rng)), U(rng), 0}, g{cplx(U(rng), U(rng)), U(rng), 0};
    double d = cygan_distance(p, q);
    res = std::max(res, std::abs(d - cygan_distance(q, p)));
    res = std::max(res, std::abs(d - cygan_distance(heisenberg_translate(g, p), heisenberg_translate(g, q))));
    // the lift form of the same distance
    res = std::max(res, std::abs(d - cygan_distance(p.lift(), q.lift())));
  }
  return make("cygan_metric_symmetric_and_left_invariant", res < 1e-12, res, {{"samples", 200}});
}

Check heisenberg_law() {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> U(-2, 2);
  double res = 0;
  for (int i = 0; i < 200; ++i) {
    HeisPoint g{cplx(U(rng), U(rng)), U(rng), 0}, p{cplx(U(rng), U(rng)), U(rng), 0};
    Lift image = Lift(heisenberg_matrix(g.z, g.t) * p.lift().v).standard();
    res = std::max(res, projective_gap(image.v, heisenberg_translate(g, p).lift().v));
  }
  return make("heisenberg_law_matches_matrix_action", res < 1e-12, res, {{"samples", 200}});
}

Check classify_known() {
  GroupData g = build_group(Params::make(0, 0));
  Mat3 lox = Mat3::Zero();
  lox(0, 0) = 2;
  lox(1, 1) = 1;
  lox(2, 2) = 0.5;
  IsoTag ti = classify(GroupElement{}).tag, ta = classify(g.A).tag, ts = classify(g.S).tag,
         tl = classify(GroupElement::from(lox)).tag;
  bool ok = ti == IsoTag::Identity && ta == IsoTag::Unipotent && ts == IsoTag::RegularElliptic &&
            tl == IsoTag::Loxodromic;
  return make("classification_of_reference_elements", ok, 0,
              {{"identity", to_string(ti)}, {"A", to_string(ta)}, {"S", to_string(ts)}, {"diag(2,1,1/2)", to_string(tl)}});
}

Check cartan_range() {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> U(-2, 2);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    Lift a = HeisPoint{cplx(U(rng), U(rng)), U(rng), 0}.lift(), b = HeisPoint{cplx(U(rng), U(rng)), U(rng), 0}.lift(),
         c = HeisPoint{cplx(U(rng), U(rng)), U(rng), 0}.lift();
    worst = std::max(worst, std::abs(cartan_invariant(a, b, c)));
  }
  return make("cartan_invariant_in_range", worst <= kPi / 2 + 1e-12, std::max(0.0, worst - kPi / 2),
              {{"max_abs", worst}});
}

Check relator() {
  Word w = whitehead_relator(parse_word("st"), parse_word("tst"));
  Word r = reduce_word(w);
  return make("relator_st_tst_reduces_to_identity", r.empty(), double(r.size()),
              {{"relator_length", w.size()}, {"reduced", to_string(r)}});
}

// ---- moduli ---------------------------------------------------------------

Check exact_values() {
  Rational four(4), three(3), half3(Rational(3, 2));
  Rational d44 = poly_D(four, four), d4h = poly_D(four, half3), d34 = poly_D(three, four), g4h = poly_G(four, half3);
  bool ok = d44 == 1225 && d4h == 0 && d34 == 0 && g4h == 0;
  return make("exact_region_values", ok, 0,
              {{"D(4,4)", rational_string(d44)}, {"D(4,3/2)", rational_string(d4h)}, {"D(3,4)", rational_string(d34)},
               {"G(4,3/2)", rational_string(g4h)}});
}

Check generator_identities() {
  double res = 0;
  for (const Params& p : random_params(100, -kPi / 2 + 1e-2, kPi / 2 - 1e-2, 21)) {
    GroupData g = build_group(p);
    GroupElement AB = g.A * g.B, S3 = g.S * g.S * g.S;
    cplx want = p.x1 * p.x1 * p.Y() * std::polar(1.0, p.alpha1 / 3);
    res = std::max({res, std::abs(g.A.trace() - 3.0), std::abs(AB.trace() - 3.0), std::abs(g.S.trace()),
                    std::abs(g.T.trace()), projective_residual((g.S * g.T).m, g.A.m),
                    projective_residual((g.T * g.S).m, g.B.m), is_scalar(S3.m, 1e-10) ? 0.0 : 1.0,
                    std::abs((g.S * g.T.inverse()).trace() - want) / std::max(1.0, std::abs(want))});
  }
  return make("generator_identities", res < 1e-10, res, {{"samples", 100}});
}

Check quartic_factorisations() {
  Poly l0 = quartic_L(Params::make(0, 0)), ll = quartic_L(Params::limit());
  // (5T^2 - 7)^2 and (5T^2 - 3)^2
  const double w0[5] = {49, 0, -70, 0, 25}, wl[5] = {9, 0, -30, 0, 25};
  double res = 0;
  for (int i = 0; i < 5; ++i) res = std::max({res, std::abs(l0.c[i] - w0[i]), std::abs(ll.c[i] - wl[i])});
  auto r0 = isolate_roots(l0, -2, 2), rl = isolate_roots(ll, -2, 2);
  auto roots_ok = [](const std::vector<Root>& r, double v) {
    return r.size() == 2 && r[0].multiplicity == 2 && r[1].multiplicity == 2 && std::abs(r[0].x + v) < 1e-9 &&
           std::abs(r[1].x - v) < 1e-9;
  };
  bool ok = res < 1e-12 && roots_ok(r0, std::sqrt(7.0 / 5)) && roots_ok(rl, std::sqrt(3.0 / 5));
  J roots = J::array();
  for (const Root& r : r0) roots.push_back({r.x, r.multiplicity});
  for (const Root& r : rl) roots.push_back({r.x, r.multiplicity});
  return make("quartic_factorisations", ok, res, {{"roots", roots}});
}

Check discriminant_identity() {
  double worst = 0;
  for (const Params& p : random_rectangle(1000, 22)) {
    double a = discriminant(p), b = discriminant_algebraic(p);
    worst = std::max(worst, std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}));
  }
  return make("discriminant_identity", worst < 1e-9, worst, {{"samples", 1000}});
}

Check region_symmetry() {
  RegionScan s = region_scan(41, default_bounds());
  int bad = 0;
  for (int j = 0; j < s.n; ++j)
    for (int i = 0; i < s.n; ++i)
      if (s.at(i, j).tag != s.at(s.n - 1 - i, s.n - 1 - j).tag) ++bad;
  return make("region_point_symmetry", bad == 0, bad, {{"grid", 41}});
}

Check phi_squared() {
  double res = 0;
  for (const Params& p : random_params(50, -1.2, 1.2, 23)) {
    Symmetries s = symmetry_maps(p);
    GroupData g = build_group(p);
    GroupElement phi2 = s.phi * s.phi;
    res = std::max(res, projective_residual(Mat3(phi2.m / phi2.m.norm()), Mat3(g.A.m / g.A.m.norm())));
  }
  return make("phi_squared_is_A", res < 1e-10, res, {{"samples", 50}});
}

Check traced_curves() {
  TracedBoundary z = trace_boundary(BoundaryCurve::Z, 200), p = trace_boundary(BoundaryCurve::P, 200);
  bool ok = z.failures.empty() && p.failures.empty();
  return make("boundary_curves_traced", ok, double(z.failures.size() + p.failures.size()),
              {{"Z_points", z.points.size()}, {"P_points", p.points.size()}});
}

// ---- spheres --------------------------------------------------------------

Check cygan_closed_forms() {
  double res = 0;
  for (const Params& p : random_params(100, -kPi / 2 + 1e-2, kPi / 2 - 1e-2, 31)) {
    GroupData g = build_group(p);
    HeisPoint pB = HeisPoint::from_lift(g.pB);
    for (int k = -5; k <= 5; ++k) {
      DisjointnessReport r = pairwise_disjointness_certificate(p, k);
      GroupElement Ak = g.A.pow(k);
      double dp = cygan_distance(HeisPoint::from_lift(Ak.apply(g.pB)), pB);
      double dm = cygan_distance(HeisPoint::from_lift(Ak.apply(g.pAB)), pB);
      res = std::max(res, std::abs(std::pow(dp, 4) - r.plus_d4) / std::max(1.0, r.plus_d4));
      res = std::max(res, std::abs(std::pow(dm, 4) - r.minus_d4) / std::max(1.0, r.minus_d4));
    }
  }
  DisjointnessReport lim = pairwise_disjointness_certificate(Params::limit(), 1);
  bool eq = std::abs(lim.minus_d4 - 16) < 1e-12;
  return make("cygan_closed_forms", res < 1e-12 && eq, res, {{"k_range", {-5, 5}}, {"limit_k1_minus_d4", lim.minus_d4}});
}

Check disjointness() {
  int bad = 0, tested = 0;
  for (const Params& p : random_rectangle(200, 32)) {
    RegionClass rc = region_classify(p);
    if (rc.tag != RegionTag::Z_interior) continue;
    ++tested;
    for (int k = -5; k <= 5; ++k) {
      DisjointnessReport r = pairwise_disjointness_certificate(p, k);
      if (!r.plus_ok || !r.minus_ok) ++bad;
    }
    if (!asymptotic_growth_certificate(p, 5)) ++bad;
  }
  return make("pairwise_disjointness_in_Z", bad == 0 && tested > 0, bad, {{"params_tested", tested}});
}

Check triple_limit() {
  TangencyReport t = tangency_check();
  return make("triple_intersection_at_limit", !t.triple.empty && t.triple.points.size() == 2 && t.triple_residual <= 1e-12,
              t.triple_residual, {{"points", t.triple.points.size()}}, pt(0, alpha2_lim()));
}

Check triple_origin() {
  TripleResult r = triple_intersection(Params::make(0, 0));
  return make("triple_intersection_empty_at_origin", r.empty && r.consistent, 0, {{"diagnostic", r.diagnostic}},
              pt(0, 0));
}

Check f_closed_vs_direct() {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> U(-1.4, 1.4), B(0, kPi);
  double res = 0;
  for (const Params& p : random_params(30, -1.2, 1.2, 34)) {
    for (int i = 0; i < 20; ++i) {
      double alpha = U(rng);
      double wmax = std::sqrt(2 * std::cos(alpha));
      GeoCoord q{alpha, B(rng), wmax * U(rng) / 1.4};
      FValues f = f_functions(p, q);
      res = std::max({res, std::abs(f.f0 - f.f0_direct), std::abs(f.fm1 - f.fm1_direct)});
    }
  }
  // the limit sum identity on beta = pi/2
  Params lim = Params::limit();
  double sum_res = 0;
  for (int i = 0; i < 50; ++i) {
    double alpha = -1.4 + 2.8 * i / 49, w = std::sqrt(2 * std::cos(alpha)) * (i % 7 - 3) / 3.0;
    FValues f = f_functions(lim, {alpha, kPi / 2, w});
    double c = std::cos(alpha / 2);
    double want = std::pow(2 * c - std::sqrt(5.0) * w, 2) + (2 * std::cos(alpha) - w * w);
    sum_res = std::max(sum_res, std::abs(f.f0 + f.fm1 - want));
  }
  return make("f_functions_closed_forms", res < 1e-10 && sum_res < 1e-12, std::max(res, sum_res),
              {{"limit_sum_residual", sum_res}});
}

Check oracle_small() {
  OracleAgreement a = oracle_agreement(24);
  return make("quartic_vs_meridian_scan", a.pass(), double(a.tested - a.agree),
              {{"tested", a.tested}, {"skipped", a.skipped}, {"agree", a.agree}}, J{{"grid", 24}}, 1e-3);
}

// ---- ford -----------------------------------------------------------------

Check ridge_orders() {
  int bad = 0;
  for (const Params& p : {Params::make(0, 0), Params::make(0.3, -0.2), Params::limit()}) {
    GroupData g = build_group(p);
    for (int k = -2; k <= 2; ++k)
      for (Sign s : {Sign::Plus, Sign::Minus})
        if (ridge_cycle(g, {s, k}).order != 3) ++bad;
  }
  return make("ridge_cycles_of_order_three", bad == 0, bad);
}

Check presentations() {
  bool inside = false, refused = false;
  try {
    Presentation pr = presentation(Params::make(0, 0));
    inside = pr.relations_SA.size() == 2 && pr.relations_ST.size() == 2;
    presentation(Params::limit());
  } catch (const DomainError&) {
    inside = false;
  }
  try {
    presentation(Params::make(0, 1.4));
  } catch (const DomainError&) {
    refused = true;
  }
  return make("presentation_on_closure_of_Z_only", inside && refused, 0, {{"refused_outside", refused}});
}

Check freeness() {
  FreenessReport a = freeness_probe(Params::make(0, 0), 8), b = freeness_probe(Params::limit(), 8);
  return make("no_short_relations", a.pass() && b.pass(), std::min(a.min_distance, b.min_distance),
              {{"words", a.words_checked + a.free_words_checked},
               {"closest_origin", a.closest_word},
               {"closest_limit", b.closest_word},
               {"min_distance_origin", a.min_distance},
               {"min_distance_limit", b.min_distance}},
              J{{"max_len", 8}}, 1e-6);
}

Check membership_samples() {
  Params p = Params::make(0, 0);
  FordDomain D(p);
  GroupData g = build_group(p);
  DMembership high = D.membership(HeisPoint{cplx(0.3, 0.1), 0.2, 25}.lift());
  DMembership centre = D.membership(g.pB);
  Params lim = Params::limit();
  DMembership tangent = FordDomain(lim).membership(limit_group().p_STi, 1e-9);
  bool ok = high.kind == DMembership::Kind::Inside && centre.kind == DMembership::Kind::Outside && centre.witness &&
            to_string(*centre.witness) == "s0+" && tangent.kind == DMembership::Kind::OnSide;
  return make("domain_membership_samples", ok, 0,
              {{"high_point", to_string(high.kind)}, {"centre_of_I0+", to_string(centre.kind)},
               {"p_ST^-1_at_limit", to_string(tangent.kind)}});
}

Check tessellation() {
  TessellationReport r = local_tessellation(Params::make(0, 0), HeisPoint{0, 0, 1});
  return make("local_tessellation_across_s0+", r.pass() && r.covered_once > 0, r.uncovered + r.overlapping,
              {{"covered_once", r.covered_once}, {"shell_skipped", r.shell_skipped}}, pt(0, 0), 1e-2);
}

// ---- limit ----------------------------------------------------------------

Check limit_points() {
  LimitData d = limit_group();
  bool ok = d.lift_residual <= 1e-12 && d.fixed_residual <= 1e-12 && d.all_unipotent && d.phi_orbit_residual <= 1e-12 &&
            d.phi_squared_residual <= 1e-12 && d.matrix_residual <= 1e-12;
  double res = std::max({d.lift_residual, d.fixed_residual, d.phi_orbit_residual, d.phi_squared_residual,
                         d.matrix_residual});
  return make("limit_parabolic_points", ok, res,
              {{"lift_residual", d.lift_residual},
               {"phi_orbit_residual", d.phi_orbit_residual},
               {"matrix_residual", d.matrix_residual}},
              pt(0, alpha2_lim()));
}

Check tangency() {
  TangencyReport t = tangency_check();
  double res = std::max({std::abs(t.mod_pBA - 1), std::abs(t.mod_ApB - 1), std::abs(t.mod_b_Ai - 1),
                         std::abs(t.mod_b_pAB - 1), std::abs(t.disc_gap_a), std::abs(t.disc_gap_b)});
  return make("tangencies", t.pass(), res, {{"|<p_ST^-1,p_BA>|", t.mod_pBA}, {"|<p_ST^-1,A p_B>|", t.mod_ApB}},
              pt(0, alpha2_lim()));
}

Check cycles() {
  CycleGraph cg = cycle_graph();
  return make("cycle_graph_parabolicity", cg.pass, cg.T_inv_S_cubed_residual,
              {{"vertices", cg.vertices.size()},
               {"edges", cg.edges.size()},
               {"triangles", cg.triangles},
               {"quadrilaterals", cg.quadrilaterals}});
}

Check fan_ridge() {
  FanRidgeReport r = fan_ridge_intersection();
  J sols = J::array();
  for (auto [x, y] : r.solutions) sols.push_back({x, y});
  return make("fan_ridge_solutions", r.pass(), r.max_residual,
              {{"solutions", sols}, {"scan_clusters", r.scan_clusters}, {"c0+_margin", r.c0_plus.min_margin},
               {"c0-_margin", r.c0_minus.min_margin}},
              J::object(), 1e-3);
}

Check fan_table() {
  FanSphereTable t = fan_sphere_table();
  J rows = J::array();
  for (int r = 0; r < 2; ++r) {
    J row = J::array();
    for (FanHit h : t.computed[r]) row.push_back(to_string(h));
    rows.push_back(row);
  }
  return make("fan_sphere_table", t.pass(), t.point_residual,
              {{"F0_and_F-1", rows}, {"p_S^-1T_interior", t.b_interior}, {"translates_outside", t.translates_outside}});
}

Check boundary_complex() {
  BoundaryComplex b = boundary_cell_complex();
  const CellComplex& c = b.complex;
  bool ok = c.vertices.size() == 5 && c.edges.size() == 11 && c.faces.size() == 8 && c.euler() == 2 &&
            c.problems().empty() && b.positions_ok;
  return make("slab_boundary_euler_characteristic", ok, b.position_residual,
              {{"V", c.vertices.size()}, {"E", c.edges.size()}, {"F", c.faces.size()}, {"chi", c.euler()},
               {"notes", b.notes}});
}

Check octahedron_check() {
  Octahedron o = octahedron();
  return make("octahedron_pairings", o.pass(), o.max_pairing_residual,
              {{"pairings", o.post.pairings.size()}, {"pre_merge_pairings", o.pre.pairings.size()},
               {"chi", o.post.euler()}, {"vertex_walks", o.vertex_cycles.size()}});
}

Check delta_phi() {
  DeltaPhiReport r = delta_phi_exclusion();
  return make("delta_phi_inside_I0+", r.pass(), r.closed_form_residual, {{"max_d4", r.max_d4}, {"bound", 529.0 / 1024}},
              J::object(), 1e-3);
}

Check slab() {
  SlabReport r = slab_equivariance();
  return make("slab_A_equivariance", r.pass(), std::max(r.fan_residual, r.arc_residual));
}

Check split() {
  SplitReport r = quad_bigon_split();
  return make("quadrilateral_bigon_split", r.pass(), r.iota_residual, {{"components", r.components}});
}

// entry names stand in for the check name when a check throws
using Battery = std::vector<std::pair<const char*, Check (*)()>>;

const Battery& battery(const std::string& s) {
  static const Battery core{
      {"cygan_metric", cygan_metric}, {"heisenberg_law", heisenberg_law}, {"classify_known", classify_known},
      {"cartan_range", cartan_range}, {"relator", relator}};
  static const Battery moduli{
      {"exact_values", exact_values}, {"generator_identities", generator_identities},
      {"quartic_factorisations", quartic_factorisations}, {"discriminant_identity", discriminant_identity},
      {"region_symmetry", region_symmetry}, {"phi_squared", phi_squared}, {"traced_curves", traced_curves}};
  static const Battery spheres{
      {"cygan_closed_forms", cygan_closed_forms}, {"disjointness", disjointness}, {"triple_limit", triple_limit},
      {"triple_origin", triple_origin}, {"f_closed_vs_direct", f_closed_vs_direct}, {"oracle_small", oracle_small}};
  static const Battery ford{
      {"ridge_orders", ridge_orders}, {"presentations", presentations}, {"freeness", freeness},
      {"membership_samples", membership_samples}, {"tessellation", tessellation}};
  static const Battery limit{
      {"limit_points", limit_points}, {"tangency", tangency}, {"cycles", cycles}, {"fan_ridge", fan_ridge},
      {"fan_table", fan_table}, {"boundary_complex", boundary_complex}, {"octahedron_check", octahedron_check},
      {"delta_phi", delta_phi}, {"slab", slab}, {"split", split}};
  if (s == "core") return core;
  if (s == "moduli") return moduli;
  if (s == "spheres") return spheres;
  if (s == "ford") return ford;
  if (s == "limit") return limit;
  throw DomainError("unknown suite: " + s);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"core", "moduli", "spheres", "ford", "limit", "all"};
  return n;
}

std::vector<Check> run_suite(const std::string& suite) {
  std::vector<std::string> parts;
  if (suite == "all")
    parts = {"core", "moduli", "spheres", "ford", "limit"};
  else
    parts = {suite};
  std::vector<Check> out;
  for (const std::string& s : parts) {
    for (auto [name, fn] : battery(s)) {
      Check c;
      try {
        c = fn();
      } catch (const std::exception& ex) {
        c.pass = false;
        c.witnesses = {{"exception", ex.what()}};
      }
      c.check = s + "." + (c.check.empty() ? std::string(name) : c.check);
      out.push_back(std::move(c));
    }
  }
  return out;
}

nlohmann::ordered_json checks_json(const std::string& suite, const std::vector<Check>& checks) {
  J arr = J::array();
  bool all = true;
  for (const Check& c : checks) {
    all = all && c.pass;
    arr.push_back({{"check", c.check},
                   {"params", c.params},
                   {"resolution", c.resolution},
                   {"verdict", c.pass ? "pass" : "fail"},
                   {"witnesses", c.witnesses},
                   {"residual", std::isfinite(c.residual) ? J(c.residual) : J(nullptr)}});
  }
  return J{{"suite", suite}, {"pass", all}, {"checks", arr}};
}

}  // namespace riley
