#include "riley/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace riley {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const RegionScan& s) {
  os << "alpha1,alpha2,D,G,region\n";
  for (const ScanCell& c : s.cells)
    os << fmt17(c.alpha1) << ',' << fmt17(c.alpha2) << ',' << fmt17(c.D) << ',' << fmt17(c.G) << ','
       << to_string(c.tag) << '\n';
}

namespace {

const char* region_colour(RegionTag t) {
  switch (t) {
    case RegionTag::Z_interior:
    case RegionTag::Z_boundary: return "#f3e5ab";
    case RegionTag::L_outside_Z: return "#c98b5a";
    case RegionTag::E_elliptic: return "#4b2e1a";
    case RegionTag::P_curve: return "#000000";
  }
  return "#ffffff";
}

constexpr double kCanvas = 640, kMargin = 40;

struct Frame {
  double x0, x1, y0, y1;  // world box
  double scale() const { return (kCanvas - 2 * kMargin) / std::max(x1 - x0, y1 - y0); }
  double X(double x) const { return kMargin + (x - x0) * scale(); }
  double Y(double y) const { return kCanvas - kMargin - (y - y0) * scale(); }
};

void svg_open(std::ostream& os) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas << "\" height=\"" << kCanvas
     << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas << "\" fill=\"#ffffff\"/>\n";
}

void polyline(std::ostream& os, const Frame& f, const std::vector<std::pair<double, double>>& pts, const char* colour) {
  if (pts.size() < 2) return;
  os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i)
    os << (i ? " " : "") << fmt17(f.X(pts[i].first)) << ',' << fmt17(f.Y(pts[i].second));
  os << "\"/>\n";
}

}  // namespace

void write_region_svg(std::ostream& os, const RegionScan& s, int curve_samples) {
  const double h = kPi / 2;
  Frame f{-h, h, -h, h};
  svg_open(os);
  const int n = s.n;
  const double w1 = s.a1[1] - s.a1[0], w2 = s.a2[1] - s.a2[0];
  os << "<g shape-rendering=\"crispEdges\">\n";
  for (int j = 0; j < n; ++j) {
    int i = 0;
    while (i < n) {
      int k = i;
      while (k + 1 < n && s.at(k + 1, j).tag == s.at(i, j).tag) ++k;
      double xa = s.a1[i] - w1 / 2, xb = s.a1[k] + w1 / 2, yb = s.a2[j] + w2 / 2;
      os << "<rect x=\"" << fmt17(f.X(xa)) << "\" y=\"" << fmt17(f.Y(yb)) << "\" width=\""
         << fmt17(f.X(xb) - f.X(xa)) << "\" height=\"" << fmt17(w2 * f.scale()) << "\" fill=\""
         << region_colour(s.at(i, j).tag) << "\"/>\n";
      i = k + 1;
    }
  }
  os << "</g>\n";
  for (auto [which, colour] : {std::pair{BoundaryCurve::Z, "#1f4e9c"}, std::pair{BoundaryCurve::P, "#b22222"}}) {
    TracedBoundary tb = trace_boundary(which, curve_samples);
    for (int q = 0; q < 4; ++q) {
      std::vector<std::pair<double, double>> pts;
      for (std::size_t i = q; i < tb.points.size(); i += 4) pts.push_back(tb.points[i]);
      polyline(os, f, pts, colour);
    }
  }
  os << "<line x1=\"" << fmt17(f.X(-h)) << "\" y1=\"" << fmt17(f.Y(0)) << "\" x2=\"" << fmt17(f.X(h)) << "\" y2=\""
     << fmt17(f.Y(0)) << "\" stroke=\"#555555\" stroke-width=\"0.5\"/>\n";
  os << "<line x1=\"" << fmt17(f.X(0)) << "\" y1=\"" << fmt17(f.Y(-h)) << "\" x2=\"" << fmt17(f.X(0)) << "\" y2=\""
     << fmt17(f.Y(h)) << "\" stroke=\"#555555\" stroke-width=\"0.5\"/>\n";
  os << "<text x=\"" << kCanvas - kMargin << "\" y=\"" << kCanvas - 12
     << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"end\">alpha1</text>\n";
  os << "<text x=\"12\" y=\"" << kMargin - 12 << "\" font-family=\"sans-serif\" font-size=\"14\">alpha2</text>\n";
  os << "</svg>\n";
}

namespace {

struct LabelledDisc {
  std::string label;
  Disc d;
};

std::vector<LabelledDisc> discs(const Params& p, int k_range) {
  SphereFamily fam{p};
  std::vector<LabelledDisc> out;
  for (int k = -k_range; k <= k_range; ++k)
    for (Sign s : {Sign::Plus, Sign::Minus}) out.push_back({sphere_label(s, k), vertical_projection(fam.get(s, k))});
  return out;
}

}  // namespace

std::vector<std::string> disc_neighbours(const Params& p, int k_range, double e) {
  auto ds = discs(p, k_range);
  Disc host = vertical_projection(SphereFamily{p}.plus(0));
  std::vector<std::string> out;
  for (const auto& d : ds) {
    double gap = std::abs(d.d.centre - host.centre);
    if (gap > e && gap < d.d.radius + host.radius - e) out.push_back(d.label);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> tangent_discs(const Params& p, int k_range, double e) {
  auto ds = discs(p, k_range);
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j)
      if (std::abs(std::abs(ds[i].d.centre - ds[j].d.centre) - ds[i].d.radius - ds[j].d.radius) <= e)
        out.push_back({ds[i].label, ds[j].label});
  return out;
}

void write_spheres_svg(std::ostream& os, const Params& p, int k_range) {
  auto ds = discs(p, k_range);
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& d : ds) {
    x0 = std::min(x0, d.d.centre.real() - d.d.radius);
    x1 = std::max(x1, d.d.centre.real() + d.d.radius);
    y0 = std::min(y0, d.d.centre.imag() - d.d.radius);
    y1 = std::max(y1, d.d.centre.imag() + d.d.radius);
  }
  // square world box centred on the discs
  double side = std::max(x1 - x0, y1 - y0), cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  Frame f{cx - side / 2, cx + side / 2, cy - side / 2, cy + side / 2};
  svg_open(os);
  for (const auto& d : ds) {
    bool plus = d.label.back() == '+';
    os << "<circle class=\"disc\" cx=\"" << fmt17(f.X(d.d.centre.real())) << "\" cy=\"" << fmt17(f.Y(d.d.centre.imag()))
       << "\" r=\"" << fmt17(d.d.radius * f.scale()) << "\" fill=\"" << (plus ? "#9ecae1" : "#fdae6b")
       << "\" fill-opacity=\"0.35\" stroke=\"" << (plus ? "#08519c" : "#a63603") << "\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << fmt17(f.X(d.d.centre.real())) << "\" y=\"" << fmt17(f.Y(d.d.centre.imag()))
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << d.label << "</text>\n";
  }
  for (auto [a, b] : tangent_discs(p, k_range)) {
    cplx ca, cb;
    for (const auto& d : ds) {
      if (d.label == a) ca = d.d.centre;
      if (d.label == b) cb = d.d.centre;
    }
    cplx m = (ca + cb) / 2.0;
    os << "<circle class=\"tangency\" cx=\"" << fmt17(f.X(m.real())) << "\" cy=\"" << fmt17(f.Y(m.imag()))
       << "\" r=\"3\" fill=\"#000000\"/>\n";
  }
  os << "</svg>\n";
}

ojson lift_json(const Lift& p) {
  ojson a = ojson::array();
  for (int i = 0; i < 3; ++i) a.push_back({p.v(i).real(), p.v(i).imag()});
  return a;
}

ojson matrix_json(const Mat3& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < 3; ++i) {
    ojson r = ojson::array();
    for (int j = 0; j < 3; ++j) r.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(r);
  }
  return rows;
}

ojson classify_json(const Params& p) {
  RegionClass rc = region_classify(p);
  CommutatorClass cc = commutator_class(p);
  GroupData g = build_group(p);
  RootReport roots = has_root_in_unit_interval(quartic_L(p), eps());
  ojson j;
  j["alpha1"] = p.alpha1;
  j["alpha2"] = p.alpha2;
  j["D"] = rc.D;
  j["G"] = rc.G;
  j["Delta"] = rc.Delta;
  j["exact"] = rc.exact;
  j["region"] = to_string(rc.tag);
  j["in_rectangle"] = rc.in_rectangle;
  j["marginal"] = rc.marginal;
  j["commutator_type"] = to_string(cc.tag);
  j["commutator_direct"] = to_string(cc.direct.tag);
  ojson r = ojson::array();
  for (const Root& x : roots.roots) r.push_back({{"T", x.x}, {"multiplicity", x.multiplicity}});
  j["quartic_roots_in_unit_interval"] = r;
  if (roots.degraded) j["warning"] = roots.warning;
  auto tr = [](const GroupElement& e) { return ojson::array({e.trace().real(), e.trace().imag()}); };
  j["traces"] = {{"A", tr(g.A)}, {"B", tr(g.B)}, {"AB", tr(g.A * g.B)}, {"S", tr(g.S)}, {"T", tr(g.T)},
                 {"ST^-1", tr(g.S * g.T.inverse())}, {"[A,B]", tr(g.A * g.B * g.A.inverse() * g.B.inverse())}};
  return j;
}

ojson region_json(const RegionScan& s) {
  ojson j;
  j["grid"] = s.n;
  j["bounds"] = {s.bounds.a1_lo, s.bounds.a1_hi, s.bounds.a2_lo, s.bounds.a2_hi};
  ojson cells = ojson::array();
  for (const ScanCell& c : s.cells)
    cells.push_back({{"alpha1", c.alpha1}, {"alpha2", c.alpha2}, {"D", c.D}, {"G", c.G}, {"region", to_string(c.tag)}});
  j["cells"] = cells;
  return j;
}

namespace {

ojson complex_json(const CellComplex& cx) {
  ojson j;
  ojson vs = ojson::array();
  for (const CellVertex& v : cx.vertices) {
    ojson e{{"label", v.label}, {"lift", lift_json(v.lift)}};
    if (v.lift.is_infinity()) {
      e["heisenberg"] = nullptr;
    } else {
      HeisPoint h = HeisPoint::from_lift(v.lift);
      e["heisenberg"] = {{"z", {h.z.real(), h.z.imag()}}, {"t", h.t}};
    }
    vs.push_back(e);
  }
  j["vertices"] = vs;
  ojson es = ojson::array();
  for (const CellEdge& e : cx.edges)
    es.push_back({{"label", e.label}, {"ends", {cx.vertices[e.v0].label, cx.vertices[e.v1].label}}});
  j["edges"] = es;
  ojson fs = ojson::array();
  for (const CellFace& f : cx.faces) {
    ojson cyc = ojson::array();
    for (int v : f.vertices) cyc.push_back(cx.vertices[v].label);
    fs.push_back({{"label", f.label}, {"vertices", cyc}});
  }
  j["faces"] = fs;
  ojson ps = ojson::array();
  for (const FacePairing& p : cx.pairings)
    ps.push_back({{"label", p.label},
                  {"source", cx.faces[p.source].label},
                  {"target", cx.faces[p.target].label},
                  {"matrix", matrix_json(p.g.m)},
                  {"residual", p.residual}});
  j["pairings"] = ps;
  j["euler_characteristic"] = cx.euler();
  return j;
}

}  // namespace

ojson octahedron_json(const Octahedron& oct) {
  ojson j;
  j["post_merge"] = complex_json(oct.post);
  j["pre_merge"] = complex_json(oct.pre);
  int unipotent = 0, identity = 0, bad = 0;
  for (const CycleCertificate& c : oct.vertex_cycles) {
    if (!c.ok)
      ++bad;
    else if (c.tag == IsoTag::Identity)
      ++identity;
    else
      ++unipotent;
  }
  j["vertex_cycles"] = {{"walks", oct.vertex_cycles.size()}, {"identity", identity}, {"unipotent", unipotent},
                        {"failed", bad}};
  j["relator"] = {{"word", to_string(whitehead_relator(parse_word("st"), parse_word("tst")))},
                  {"reduced", to_string(reduce_word(whitehead_relator(parse_word("st"), parse_word("tst"))))},
                  {"trivial", oct.relator_trivial}};
  j["max_pairing_residual"] = oct.max_pairing_residual;
  j["vertex_lift_residual"] = oct.vertex_lift_residual;
  j["pass"] = oct.pass();
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open " + path + " for writing");
  f << text;
  f.close();
  if (!f) throw std::ios_base::failure("write to " + path + " failed");
}

}  // namespace riley
