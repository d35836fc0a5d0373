// The limit group at (alpha1, alpha2) = (0, arccos sqrt(3/8)): parabolic
// fixed points, tangencies, the cycle graph, the fans bounding the slab D_A,
// the cell structure of the slab and the octahedron with its face pairings.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "riley/ford.hpp"

namespace riley {

struct LimitData {
  GroupData group;
  GroupElement STi, SiT, TST, STS;  // ST^-1, S^-1 T, TST, STS
  Lift p_STi, p_SiT, p_TST, p_STS;  // computed fixed points, standard lifts
  double lift_residual = 0;         // entrywise, against the displayed lifts
  double fixed_residual = 0;        // max projective residual of g(p) vs p
  bool all_unipotent = false;
  double phi_orbit_residual = 0;    // phi: TST -> S^-1T -> ST^-1 -> STS
  double phi_squared_residual = 0;  // phi^2 vs A
  double matrix_residual = 0;       // A, S, T against the displayed matrices
};

// lifts as displayed for p_{ST^-1}, p_{S^-1T}, p_{TST}, p_{STS}
std::array<Lift, 4> displayed_parabolic_lifts();
LimitData limit_group();

struct TangencyReport {
  double mod_pBA = 0;   // |<p_{ST^-1}, p_BA>|
  double mod_ApB = 0;   // |<p_{ST^-1}, A p_B>|
  double mod_b_Ai = 0;  // |<p_{S^-1T}, A^-1 p_B>|
  double mod_b_pAB = 0; // |<p_{S^-1T}, p_AB>|
  double disc_gap_a = 0;  // |c(I_1^+) - c(I_-1^-)| - 2
  double disc_gap_b = 0;  // |c(I_-1^+) - c(I_0^-)| - 2
  TripleResult triple;
  double triple_residual = 0;  // triple points vs p_{ST^-1}, p_{S^-1T}
  bool pass(double tol = 1e-12) const;
};
TangencyReport tangency_check();

struct CycleCertificate {
  std::string base;
  std::vector<std::string> path;  // side or pairing labels, in order of application
  IsoTag tag = IsoTag::Identity;
  double fixed_residual = 0;
  bool ok = false;
};

struct CycleGraph {
  std::vector<std::string> vertices;
  struct Edge {
    int from = 0, to = 0;
    SideTag side;
  };
  std::vector<Edge> edges;
  std::vector<CycleCertificate> cycles;
  int triangles = 0, quadrilaterals = 0;
  double T_inv_S_cubed_residual = 0;  // the quadrilateral word at p_{S^-1T} vs (T^-1 S)^3
  bool pass = false;
};
CycleGraph cycle_graph(int K = 3, int max_len = 4);

// value of 3x sqrt3 - y sqrt5 at [x + iy, t]
double fan_value(const HeisPoint& q);

struct Fan {
  int k = 0;  // F_0, F_-1, ...: A^k F_0
  double offset() const;
  Lift point(double xi, double eta) const;
};

// closed slab between F_-1 and F_0
bool in_DA(const HeisPoint& q, double e = 1e-12);

struct FanArc {
  std::string label, from, to;
  std::vector<std::pair<double, double>> samples;  // (xi, eta)
  double min_margin = 0;                            // |<f, other>|^2 - 1 along the arc
};

struct FanRidgeReport {
  std::vector<std::pair<double, double>> solutions;
  double max_residual = 0;
  double expansion_residual = 0;  // closed expansions vs direct products
  double p_STi_residual = 0;      // f(0, sqrt15/4) vs p_{ST^-1}
  Lift q0;
  int scan_clusters = 0;
  bool scan_clusters_at_solutions = false;
  FanArc c0_plus, c0_minus;
  bool q0_separates = false;       // p_{S^-1T}, p_{STS} on opposite sides of F_0
  double I2_residual = 0;          // I2 f(xi, eta) = f(-xi, eta) and swaps the two
  bool pass() const;
};
FanRidgeReport fan_ridge_intersection(double scan_resolution = 1e-3, Policy policy = Policy::Parallel);

struct FanResidualScan {
  int n = 0;
  std::vector<std::pair<double, double>> cluster_centres;
};
// cells of [-3,3]^2 where both |<f,pB>|^2 - 1 and |<f,pAB>|^2 - 1 change sign
FanResidualScan fan_residual_scan(double resolution, Policy policy);

enum class FanHit { Empty, Point, Circle };
const char* to_string(FanHit h);

struct FanSphereTable {
  // columns I_-2^-, I_-2^+, I_-1^-, I_-1^+, I_0^-, I_0^+, I_1^-, I_1^+
  static std::array<std::pair<Sign, int>, 8> columns();
  std::array<std::array<FanHit, 8>, 2> computed{}, expected{};  // rows F_0, F_-1
  double point_residual = 0;  // named tangency points on fan and sphere
  bool b_interior = false;
  bool translates_outside = false;
  bool pass() const;
};
FanSphereTable fan_sphere_table();

struct CellVertex {
  std::string label;
  Lift lift;
};
struct CellEdge {
  std::string label;
  int v0 = 0, v1 = 0;
};
struct CellFace {
  std::string label;
  std::vector<int> vertices;  // cyclic
  std::vector<int> edges;     // edges[i] joins vertices[i] and vertices[i+1]
};
struct FacePairing {
  std::string label;
  GroupElement g;
  int source = 0, target = 0;
  double residual = 0;  // max normalised residual of g(v_i) vs w_i
};

struct CellComplex {
  std::vector<CellVertex> vertices;
  std::vector<CellEdge> edges;
  std::vector<CellFace> faces;
  std::vector<FacePairing> pairings;

  int euler() const { return int(vertices.size()) - int(edges.size()) + int(faces.size()); }
  int vertex(const std::string& label) const;
  // incidence problems: edges not in exactly two faces, faces whose edges do
  // not join consecutive vertices
  std::vector<std::string> problems() const;
  double certify_pairings();
};

struct BoundaryComplex {
  CellComplex complex;
  double position_residual = 0;  // vertices on their spheres and fans
  bool positions_ok = false;
  std::vector<std::string> notes;
};
BoundaryComplex boundary_cell_complex();

struct Octahedron {
  CellComplex pre, post;
  std::vector<CycleCertificate> vertex_cycles;
  bool merge_maps_agree = false;
  bool relator_trivial = false;
  double max_pairing_residual = 0;
  double vertex_lift_residual = 0;
  bool pass() const;
};
Octahedron octahedron();

// d(pB, delta_phi(x))^4 over x in [-sqrt(3/8), sqrt(3/8)]
struct DeltaPhiReport {
  double max_d4 = 0;
  double closed_form_residual = 0;
  bool pass() const { return max_d4 <= 529.0 / 1024.0 + 1e-15 && closed_form_residual < 1e-12; }
};
DeltaPhiReport delta_phi_exclusion(int samples = 1000);

struct SlabReport {
  double fan_residual = 0;  // A maps F_-1 onto F_0
  double arc_residual = 0;  // A^-1 c_0 lies on F_-1 and on I_-1^{+/-}
  bool pass() const { return fan_residual < 1e-10 && arc_residual < 1e-10; }
};
SlabReport slab_equivariance();

struct SplitReport {
  int components = 0;
  double iota_residual = 0;  // iota_1 maps r_0^+ samples onto r_0^-
  bool pass() const { return components == 2 && iota_residual < 1e-10; }
};
SplitReport quad_bigon_split(int n_alpha = 256, int n_long = 512);

}  // namespace riley
