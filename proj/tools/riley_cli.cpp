// riley: command-line front end.
//   exit codes: 0 ok, 1 failed verification, 2 usage or domain error, 3 I/O error

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "riley/certify.hpp"
#include "riley/limit.hpp"
#include "riley/output.hpp"
#include "riley/scan.hpp"

using namespace riley;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  try {
    write_file(out, text);
  } catch (const std::ios_base::failure& e) {
    throw IoError(e.what());
  }
}

std::string json_text(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unipotent two-generator subgroups of PU(2,1): classification, scans and certificates"};
  app.require_subcommand(1);

  double alpha1 = 0, alpha2 = 0, epsilon = 0;
  int grid = 200, k_range = 2;
  std::string bounds, out, format = "csv", suite = "all";

  auto add_eps = [&](CLI::App* c) { c->add_option("--epsilon", epsilon, "tolerance (overrides RILEY_EPS)"); };
  auto add_params = [&](CLI::App* c) {
    c->add_option("--alpha1", alpha1, "first angle parameter")->required();
    c->add_option("--alpha2", alpha2, "second angle parameter")->required();
  };

  auto* classify_cmd = app.add_subcommand("classify", "region, commutator type and quartic data at one point");
  add_params(classify_cmd);
  classify_cmd->add_option("--out", out, "output path (stdout if omitted)");
  add_eps(classify_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "region map over a grid of the parameter square");
  scan_cmd->add_option("--grid", grid, "points per axis")->check(CLI::Range(2, 20000));
  scan_cmd->add_option("--bounds", bounds, "a1lo,a1hi,a2lo,a2hi");
  scan_cmd->add_option("--format", format, "csv, svg or json")->check(CLI::IsMember({"csv", "svg", "json"}));
  scan_cmd->add_option("--out", out, "output path (stdout if omitted)");
  add_eps(scan_cmd);

  auto* spheres_cmd = app.add_subcommand("spheres", "SVG of the vertical projections of the isometric spheres");
  add_params(spheres_cmd);
  spheres_cmd->add_option("--k-range", k_range, "draw I_k for |k| <= k-range")->check(CLI::Range(0, 50));
  spheres_cmd->add_option("--out", out, "output path (stdout if omitted)");
  add_eps(spheres_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run a certificate battery");
  verify_cmd->add_option("--suite", suite, "core, moduli, spheres, ford, limit or all")
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--out", out, "output path (stdout if omitted)");
  add_eps(verify_cmd);

  auto* oct_cmd = app.add_subcommand("octahedron", "export the octahedron of the limit group");
  oct_cmd->add_option("--out", out, "output path (stdout if omitted)");
  add_eps(oct_cmd);

  auto* trace_cmd = app.add_subcommand("trace", "trace the boundary of Z and the curve P");
  trace_cmd->add_option("--grid", grid, "samples per curve")->check(CLI::Range(2, 1000000));
  trace_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  trace_cmd->add_option("--out", out, "output path (stdout if omitted)");
  add_eps(trace_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "riley: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    for (CLI::App* c : app.get_subcommands())
      if (c->count("--epsilon")) {
        if (!(epsilon > 0)) throw DomainError("--epsilon must be positive");
        set_eps(epsilon);
      }

    if (*classify_cmd) {
      emit(out, json_text(classify_json(Params::make(alpha1, alpha2))));
    } else if (*scan_cmd) {
      Bounds b = bounds.empty() ? default_bounds() : parse_bounds(bounds);
      RegionScan s = region_scan(grid, b);
      std::ostringstream os;
      if (format == "csv")
        write_csv(os, s);
      else if (format == "svg")
        write_region_svg(os, s);
      else
        os << json_text(region_json(s));
      emit(out, os.str());
    } else if (*spheres_cmd) {
      Params p = Params::make(alpha1, alpha2);
      std::ostringstream os;
      write_spheres_svg(os, p, k_range);
      emit(out, os.str());
    } else if (*verify_cmd) {
      std::vector<Check> checks = run_suite(suite);
      ojson j = checks_json(suite, checks);
      emit(out, json_text(j));
      for (const Check& c : checks)
        if (!c.pass) std::cerr << "riley: check failed: " << c.check << "\n";
      return j["pass"].get<bool>() ? 0 : 1;
    } else if (*oct_cmd) {
      Octahedron o = octahedron();
      emit(out, json_text(octahedron_json(o)));
      if (!o.pass()) {
        std::cerr << "riley: octahedron certificate failed\n";
        return 1;
      }
    } else if (*trace_cmd) {
      std::ostringstream os;
      ojson j = ojson::object();
      if (format == "csv") os << "curve,alpha1,alpha2\n";
      for (auto [which, name] : {std::pair{BoundaryCurve::Z, "Z"}, std::pair{BoundaryCurve::P, "P"}}) {
        TracedBoundary tb = trace_boundary(which, grid);
        if (!tb.failures.empty()) std::cerr << "riley: " << tb.failures.size() << " samples of " << name << " failed\n";
        ojson pts = ojson::array();
        for (auto [a1, a2] : tb.points) {
          if (format == "csv")
            os << name << ',' << fmt17(a1) << ',' << fmt17(a2) << '\n';
          else
            pts.push_back({a1, a2});
        }
        if (format == "json") j[name] = pts;
      }
      if (format == "json") os << json_text(j);
      emit(out, os.str());
    }
  } catch (const DomainError& e) {
    std::cerr << "riley: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "riley: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "riley: internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
