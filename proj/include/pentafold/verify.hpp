#ifndef PENTAFOLD_VERIFY_HPP
#define PENTAFOLD_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pentafold/betafun.hpp"
#include "pentafold/contour.hpp"
#include "pentafold/crossratio.hpp"
#include "pentafold/exactlin.hpp"
#include "pentafold/meshout.hpp"
#include "pentafold/tessellation.hpp"

namespace pentafold::verify {

using exactlin::MatFloat;
using exactlin::MatRat;
using exactlin::Vec6d;
using exactlin::Vec6q;

struct Check {
  std::string id;
  std::string desc;
  bool pass = false;
  double value = 0.0;  // measured quantity (residual, count, ...)
  double tol = 0.0;    // 0 means exact
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Shared helpers

// Deterministic small rationals in [0,1] for exact sampling.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : state_(seed) {}
  Rational unit() {
    long long q = 7 + static_cast<long long>(next() % 57);  // 7..63
    long long p = static_cast<long long>(next() % (q + 1));
    return Rational(p, q);
  }
  Rational unit_open() {
    long long q = 7 + static_cast<long long>(next() % 57);
    long long p = 1 + static_cast<long long>(next() % (q - 1));
    return Rational(p, q);
  }
  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 17;
  }

 private:
  std::uint64_t state_;
};

// The 24 double-cover patches: tags 1..12 are the + lifts of faces 1..12,
// tags 13..24 the - lifts.
struct Patch {
  int face;  // 1..12
  int sign;  // +1 / -1
};

inline Patch patch_of_tag(int tag) {
  return tag <= 12 ? Patch{tag, +1} : Patch{tag - 12, -1};
}

inline std::array<int, 5> patch_corner_ids(int tag) {
  Patch p = patch_of_tag(tag);
  auto ids = tess::face_corner_ids(p.face);
  if (p.sign < 0)
    for (auto& id : ids) id = -id;
  return ids;
}

// Glued-edge incidence of the 24 patches: each unordered signed vertex pair
// appears on exactly two (patch, boundary segment) slots.
struct SeamEdge {
  std::pair<int, int> verts;  // signed ids, normalized order
  std::array<std::pair<int, int>, 2> slots;  // (tag, segment)
};

inline std::vector<SeamEdge> seam_edges() {
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> inc;
  for (int tag = 1; tag <= 24; ++tag) {
    auto ids = patch_corner_ids(tag);
    for (int c = 0; c < 5; ++c) {
      int a = ids[c], b = ids[(c + 1) % 5];
      auto key = std::minmax(a, b);
      inc[key].emplace_back(tag, c);
    }
  }
  std::vector<SeamEdge> out;
  for (const auto& [key, slots] : inc) {
    if (slots.size() != 2)
      throw DomainError("seam_edges: signed pair not shared by exactly two patches");
    out.push_back({key, {slots[0], slots[1]}});
  }
  return out;
}

inline Vec6d patch_boundary_point(int tag, int segment, double t, const MatFloat& p) {
  Patch pa = patch_of_tag(tag);
  auto [u, v] = tess::boundary_segment_uv(segment, t);
  return tess::symmetric_embedding_f(pa.face, pa.sign, u, v, p);
}

inline double dist6(const Vec6d& a, const Vec6d& b) {
  double s = 0;
  for (int i = 0; i < 6; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Distance from a point to the neighbouring patch's boundary curve: coarse
// scan then golden-section refinement in the curve parameter.
inline double distance_to_boundary_curve(const Vec6d& pt, int tag, int segment,
                                         const MatFloat& p) {
  auto d = [&](double t) { return dist6(patch_boundary_point(tag, segment, t, p), pt); };
  double best_t = 0, best = d(0);
  const int coarse = 64;
  for (int i = 1; i <= coarse; ++i) {
    double t = static_cast<double>(i) / coarse;
    double v = d(t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  double lo = std::max(0.0, best_t - 1.0 / coarse), hi = std::min(1.0, best_t + 1.0 / coarse);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = d(x1), f2 = d(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = d(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = d(x2);
    }
  }
  return std::min(f1, f2);
}

// Worst seam gap over every glued edge, sampling one side and projecting onto
// the other.
inline double max_seam_mismatch(int samples_per_edge, const MatFloat& p) {
  double worst = 0;
  for (const auto& e : seam_edges()) {
    auto [tag_a, seg_a] = e.slots[0];
    auto [tag_b, seg_b] = e.slots[1];
    for (int s = 0; s < samples_per_edge; ++s) {
      double t = static_cast<double>(s) / (samples_per_edge - 1);
      Vec6d pt = patch_boundary_point(tag_a, seg_a, t, p);
      worst = std::max(worst, distance_to_boundary_curve(pt, tag_b, seg_b, p));
    }
  }
  return worst;
}

// The 30 embedded signed vertices P v_j / sqrt(v^t Q v) and their antipodes,
// indexed by signed id.
inline std::map<int, Vec6d> embedded_vertices(const MatFloat& p) {
  std::map<int, Vec6d> out;
  const auto& verts = tess::vertex_table();
  const auto& q = exactlin::q_reference();
  for (int j = 0; j < 15; ++j) {
    Vec6q v;
    for (int i = 0; i < 6; ++i) v[i] = Rational(verts[j][i]);
    double norm = std::sqrt(exactlin::quadratic_form(q, v).to_double());
    Vec6d x{};
    for (int i = 0; i < 6; ++i) x[i] = verts[j][i] / norm;
    Vec6d px = p.apply(x);
    out[j + 1] = px;
    for (auto& c : px) c = -c;
    out[-(j + 1)] = px;
  }
  return out;
}

// How a single orthogonal transform permutes the embedded signed vertices;
// throws if some image misses the vertex set by more than tol.
inline std::map<int, int> vertex_permutation(const MatFloat& gamma,
                                             const std::map<int, Vec6d>& embedded,
                                             double tol = 1e-9) {
  std::map<int, int> perm;
  for (const auto& [id, x] : embedded) {
    Vec6d gx = gamma.apply(x);
    int best_id = 0;
    double best = 1e9;
    for (const auto& [jd, y] : embedded) {
      double d = dist6(gx, y);
      if (d < best) {
        best = d;
        best_id = jd;
      }
    }
    if (best > tol)
      throw DomainError("vertex_permutation: image misses the vertex set by " +
                        std::to_string(best));
    perm[id] = best_id;
  }
  return perm;
}

// ---------------------------------------------------------------------------
// Suites

inline VerifyReport verify_group() {
  using namespace exactlin;
  VerifyReport rep;
  rep.suite = "group";
  auto g120 = group_closure({x5(), x2()});
  auto g240 = group_closure({x5(), x2(), -MatRat::identity(6)});
  rep.checks.push_back({"order120", "closure of {X5,X2} has 120 elements",
                        g120.size() == 120, static_cast<double>(g120.size()), 0});
  rep.checks.push_back({"order240", "closure of {X5,X2,-I} has 240 elements",
                        g240.size() == 240, static_cast<double>(g240.size()), 0});
  rep.checks.push_back({"x5_cycle", "closure of {X5} alone has 5 elements",
                        group_closure({x5()}).size() == 5, 5, 0});
  rep.checks.push_back(
      {"x2_involution", "X2 squares to the identity", involution_check(x2()), 1, 0});
  MatRat q = invariant_form(g120, Rational(1, 70));
  rep.checks.push_back(
      {"q_matrix", "(1/70) sum g^t g reproduces the invariant form", q == q_reference(), 1, 0});
  bool inv = true;
  for (const auto& g : g120)
    if (g.transpose() * q * g != q) inv = false;
  rep.checks.push_back({"q_invariance", "g^t Q g = Q exactly for all 120 elements", inv, 1, 0});
  MatFloat p = factor_form(q);
  double resid = (p.transpose() * p).max_abs_diff(to_float(q));
  rep.checks.push_back(
      {"cholesky", "upper-triangular P with max|P^t P - Q| <= 1e-12", resid <= 1e-12, resid,
       1e-12});
  std::set<MatRat> set240(g240.begin(), g240.end());
  bool seeds = true;
  for (const auto& g : tess::gamma_seeds())
    if (!set240.count(g)) seeds = false;
  rep.checks.push_back(
      {"gamma_seeds", "all 12 patch-transform conjugands lie in the 240-closure", seeds, 1, 0});
  return rep;
}

inline VerifyReport verify_tessellation() {
  VerifyReport rep;
  rep.suite = "tessellation";
  auto single = tess::build_complex(tess::Cover::Single);
  auto si = tess::euler_and_genus(single);
  rep.checks.push_back({"single_counts", "single cover has (V,E,F) = (15,30,12)",
                        single.num_vertices() == 15 && single.num_edges() == 30 &&
                            single.num_faces() == 12,
                        static_cast<double>(single.num_edges()), 0});
  rep.checks.push_back({"single_chi", "single cover: chi=-3, non-orientable, 5 crosscaps",
                        si.chi == -3 && !si.orientable && si.genus_or_crosscaps == 5 &&
                            si.connected,
                        static_cast<double>(si.chi), 0});
  auto dbl = tess::build_complex(tess::Cover::Double);
  auto di = tess::euler_and_genus(dbl);
  rep.checks.push_back({"double_counts", "double cover has (V,E,F) = (30,60,24)",
                        dbl.num_vertices() == 30 && dbl.num_edges() == 60 &&
                            dbl.num_faces() == 24,
                        static_cast<double>(dbl.num_edges()), 0});
  rep.checks.push_back({"double_chi", "double cover: chi=-6, orientable, genus 4",
                        di.chi == -6 && di.orientable && di.genus_or_crosscaps == 4 &&
                            di.connected,
                        static_cast<double>(di.chi), 0});
  rep.checks.push_back({"double_oriented", "face cycles orient the double cover as given",
                        cell::orientation_consistent_as_given(dbl), 1, 0});
  auto degs = single.vertex_face_degrees();
  bool deg4 = std::all_of(degs.begin(), degs.end(), [](int d) { return d == 4; });
  rep.checks.push_back({"vertex_degree", "every single-cover vertex lies on 4 faces", deg4,
                        static_cast<double>(degs[0]), 0});

  bool verts_on_variety = true;
  for (const auto& vz : tess::vertex_table()) {
    Vec6q v;
    for (int i = 0; i < 6; ++i) v[i] = Rational(vz[i]);
    for (const auto& r : crossratio::projective_residuals(v))
      if (!r.is_zero()) verts_on_variety = false;
  }
  rep.checks.push_back(
      {"vertex_residuals", "all 15 vertices satisfy the five quadrics", verts_on_variety, 1, 0});

  bool corner_sets = true;
  for (int i = 1; i <= 12; ++i) {
    auto ids = tess::face_corner_ids(i);
    std::set<int> got(ids.begin(), ids.end());
    const auto& row = tess::face_table()[2 * (i - 1)];
    std::set<int> want(row.begin(), row.end());
    if (got != want) corner_sets = false;
  }
  rep.checks.push_back({"corner_sets", "face corner values reproduce the signed face table",
                        corner_sets, 1, 0});

  // antipodal map sends face k to its conjugate, reversing orientation
  bool antipodal = true;
  const auto& ft = tess::face_table();
  for (int k = 0; k < 12; ++k) {
    std::array<int, 5> neg;
    for (int j = 0; j < 5; ++j) neg[j] = -ft[2 * k][j];
    std::array<int, 5> rev;
    for (int j = 0; j < 5; ++j) rev[j] = ft[2 * k + 1][4 - j];
    bool match = false;
    for (int rot = 0; rot < 5 && !match; ++rot) {
      bool ok = true;
      for (int j = 0; j < 5; ++j)
        if (neg[j] != rev[(j + rot) % 5]) ok = false;
      match = ok;
    }
    if (!match) antipodal = false;
  }
  rep.checks.push_back({"antipodal_faces",
                        "negating a face cycle gives its conjugate with reversed orientation",
                        antipodal, 1, 0});

  // branch hexagons: the incidence walks run along double-cover edges and
  // visit exactly the listed vertex sets
  std::set<std::pair<int, int>> dedges;
  for (const auto& row : ft)
    for (int j = 0; j < 5; ++j) dedges.insert(std::minmax(row[j], row[(j + 1) % 5]));
  bool hex_ok = true;
  const auto& listed = tess::branch_hexagons();
  const auto& walks = tess::branch_hexagon_cycles();
  for (int h = 0; h < 10; ++h) {
    for (int j = 0; j < 6; ++j)
      if (!dedges.count(std::minmax(walks[h][j], walks[h][(j + 1) % 6]))) hex_ok = false;
    if (std::set<int>(listed[h].begin(), listed[h].end()) !=
        std::set<int>(walks[h].begin(), walks[h].end()))
      hex_ok = false;
  }
  rep.checks.push_back(
      {"branch_hexagons", "all 10 hexagon walks run along double-cover edges", hex_ok, 1, 0});

  // membership: random points of every face satisfy the quadrics exactly
  RationalSampler rng(20260808);
  bool member = true;
  for (int i = 1; i <= 12 && member; ++i)
    for (int rep_i = 0; rep_i < 8; ++rep_i) {
      auto z = tess::face_param_raw(i, rng.unit(), rng.unit());
      for (const auto& r : crossratio::projective_residuals(z))
        if (!r.is_zero()) member = false;
    }
  rep.checks.push_back(
      {"face_membership", "random face samples satisfy the quadrics exactly", member, 1, 0});
  return rep;
}

inline VerifyReport verify_contour() {
  VerifyReport rep;
  rep.suite = "contour";
  auto r5 = contour::build_phase_surface(5);
  auto inv = cell::euler_and_genus(r5.complex);
  rep.checks.push_back({"counts", "32 sheets glue into (V,E,F) = (40,80,32)",
                        r5.complex.num_vertices() == 40 && r5.complex.num_edges() == 80 &&
                            r5.complex.num_faces() == 32,
                        static_cast<double>(r5.complex.num_vertices()), 0});
  rep.checks.push_back({"genus5", "chi=-8, orientable, connected, genus 5",
                        inv.chi == -8 && inv.orientable && inv.connected &&
                            inv.genus_or_crosscaps == 5,
                        static_cast<double>(inv.chi), 0});
  rep.checks.push_back({"parity_orientation", "label-parity orientation is globally consistent",
                        cell::orientation_consistent_as_given(r5.complex), 1, 0});
  rep.checks.push_back({"involution", "edge gluing is an involution",
                        r5.surface.gluing_is_involution(), 1, 0});
  rep.checks.push_back({"corner_disks", "exactly 40 corner holes get capped",
                        r5.surface.count_corner_disks() == 40,
                        static_cast<double>(r5.surface.count_corner_disks()), 0});
  bool comm = true;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j && !r5.surface.corner_cycle_check(i, j)) comm = false;
  rep.checks.push_back(
      {"commutators", "every corner commutator closes on every sheet", comm, 1, 0});
  contour::PhaseSurface mut(5);
  mut.reglue(0, 0u ^ (1u << 0) ^ (1u << 2), 0);
  auto mc = mut.to_complex();
  bool mut_detected = !mut.corner_cycle_check(0, 1) || mc.euler_characteristic() != -8;
  rep.checks.push_back(
      {"mutation", "a flipped gluing breaks the commutator and the Euler count", mut_detected,
       static_cast<double>(mc.euler_characteristic()), 0});
  auto r2 = contour::build_phase_surface(2);
  rep.checks.push_back({"loop_k2", "k=2 gives the 4-segment commutator loop, chi=0",
                        r2.complex.num_vertices() == 4 && r2.complex.num_edges() == 4 &&
                            r2.complex.num_faces() == 0 &&
                            r2.complex.euler_characteristic() == 0 && r2.complex.connected(),
                        static_cast<double>(r2.complex.euler_characteristic()), 0});
  return rep;
}

inline VerifyReport verify_betafun() {
  using namespace betafun;
  VerifyReport rep;
  rep.suite = "betafun";
  double g_half = std::abs(gamma_c(cxd(0.5, 0)) - std::sqrt(M_PI));
  rep.checks.push_back({"gamma_half", "Gamma(1/2) = sqrt(pi)", g_half <= 1e-12, g_half, 1e-12});
  double g5 = std::abs(gamma_c(cxd(5, 0)) - 24.0);
  rep.checks.push_back({"gamma_5", "Gamma(5) = 24", g5 <= 1e-10, g5, 1e-10});

  double grid_worst = 0;
  for (double a1 : {0.1, 0.5, 1.3, 2.2, 4.0})
    for (double a2 : {0.1, 0.5, 1.3, 2.2, 4.0}) {
      Alpha2 a{cxd(a1), cxd(a2)};
      grid_worst = std::max(grid_worst, std::abs(b4_quadrature(a) - b4_gamma(a)));
    }
  rep.checks.push_back({"b4_oracle_grid", "|B4 quadrature - Gamma ratio| <= 1e-8 on 25 pairs",
                        grid_worst <= 1e-8, grid_worst, 1e-8});

  double poch_worst = 0;
  const double pairs[10][2] = {{0.3, 0.7},  {0.5, 0.5},  {1.5, 2.25}, {0.9, 0.4}, {0.25, 1.75},
                               {2.5, 0.35}, {1.25, 1.25}, {0.6, 3.4}, {3.3, 0.15}, {0.85, 2.15}};
  for (const auto& pr : pairs) {
    Alpha2 a{cxd(pr[0]), cxd(pr[1])};
    cxd ratio = contour::pochhammer_b4(a) / product_factor(a);
    poch_worst = std::max(poch_worst, std::abs(ratio - b4_gamma(a)));
  }
  rep.checks.push_back({"pochhammer_ratio",
                        "contour / product factor matches the Gamma ratio at 10 pairs",
                        poch_worst <= 1e-7, poch_worst, 1e-7});

  double v1 = std::abs(contour::pochhammer_b4({cxd(1), cxd(1)}));
  rep.checks.push_back({"poch_integer", "epsilon(1,1) vanishes", v1 <= 1e-8, v1, 1e-8});
  double v2 = std::abs(contour::pochhammer_b4({cxd(0.5), cxd(-0.5)}));
  rep.checks.push_back({"poch_sum_zero", "epsilon(1/2,-1/2) vanishes", v2 <= 1e-6, v2, 1e-6});

  quad::QuadratureSpec s5;
  s5.level = 8;
  s5.abs_tol = 1e-10;
  double b5a = std::abs(b5_quadrature({cxd(1), cxd(1), cxd(1), cxd(1), cxd(1)}, s5) -
                        M_PI * M_PI / 6);
  rep.checks.push_back({"b5_zeta2", "B5(1,1,1,1,1) = pi^2/6", b5a <= 1e-8, b5a, 1e-8});
  double b5b = std::abs(b5_quadrature({cxd(2), cxd(1), cxd(1), cxd(1), cxd(1)}, s5) - 1.0);
  rep.checks.push_back({"b5_one_a", "B5(2,1,1,1,1) = 1", b5b <= 1e-8, b5b, 1e-8});
  double b5c = std::abs(b5_quadrature({cxd(1), cxd(1), cxd(2), cxd(1), cxd(1)}, s5) - 1.0);
  rep.checks.push_back({"b5_one_b", "B5(1,1,2,1,1) = 1", b5c <= 1e-8, b5c, 1e-8});

  std::mt19937 mt(991);
  std::uniform_real_distribution<double> re(0.5, 2.0);
  double cyc_worst = 0;
  for (int it = 0; it < 3; ++it) {
    Alpha5 a;
    for (auto& x : a) x = cxd(re(mt), 0);
    Alpha5 sh{a[2], a[3], a[4], a[0], a[1]};
    cyc_worst = std::max(cyc_worst,
                         std::abs(b5_quadrature(a, s5) - b5_quadrature(sh, s5)));
  }
  rep.checks.push_back({"b5_cyclic", "B5 is invariant under the double cyclic shift",
                        cyc_worst <= 1e-7, cyc_worst, 1e-7});

  bool primed_ok = true;
  std::uniform_real_distribution<double> any(-2.0, 2.0);
  for (int it = 0; it < 20; ++it) {
    Alpha5 a;
    cxd sum_a = 0;
    for (auto& x : a) {
      x = cxd(any(mt), any(mt));
      sum_a += x;
    }
    auto pr = primed_exponents(a);
    cxd sum_p = 0;
    for (const auto& x : pr) sum_p += x;
    if (std::abs(sum_p - (5.0 - sum_a)) > 1e-12) primed_ok = false;
  }
  rep.checks.push_back(
      {"primed_sum", "sum of primed exponents is 5 - sum of exponents", primed_ok, 1, 1e-12});
  return rep;
}

inline VerifyReport verify_mesh() {
  using namespace meshout;
  VerifyReport rep;
  rep.suite = "mesh";
  std::mt19937 mt(412);
  std::normal_distribution<double> nd;
  double worst3 = 0, worst21 = 0, worst18 = 0, anti = 0;
  for (int it = 0; it < 1000; ++it) {
    std::array<double, 3> x{nd(mt), nd(mt), nd(mt)};
    double n3 = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    for (auto& c : x) c /= n3;
    auto w = veronese3(x);
    double s = 0;
    for (double c : w) s += c * c;
    worst3 = std::max(worst3, std::abs(std::sqrt(s) - 1.0));
    std::array<double, 3> mx{-x[0], -x[1], -x[2]};
    auto w2 = veronese3(mx);
    for (int i = 0; i < 6; ++i) anti = std::max(anti, std::abs(w[i] - w2[i]));

    Vec6d r;
    double n6 = 0;
    for (auto& c : r) {
      c = nd(mt);
      n6 += c * c;
    }
    n6 = std::sqrt(n6);
    for (auto& c : r) c /= n6;
    Vec6d mr;
    for (int i = 0; i < 6; ++i) mr[i] = -r[i];
    for (auto variant : {VeroneseVariant::R21, VeroneseVariant::R18}) {
      auto v = veronese6(r, variant), vm = veronese6(mr, variant);
      double sv = 0;
      for (double c : v) sv += c * c;
      double& slot = variant == VeroneseVariant::R21 ? worst21 : worst18;
      slot = std::max(slot, std::abs(std::sqrt(sv) - 1.0));
      for (std::size_t i = 0; i < v.size(); ++i) anti = std::max(anti, std::abs(v[i] - vm[i]));
    }
  }
  rep.checks.push_back(
      {"veronese3_sphere", "veronese3 is sphere-to-sphere", worst3 <= 1e-12, worst3, 1e-12});
  rep.checks.push_back(
      {"veronese21_sphere", "R21 map is sphere-to-sphere", worst21 <= 1e-12, worst21, 1e-12});
  rep.checks.push_back(
      {"veronese18_sphere", "R18 map is sphere-to-sphere", worst18 <= 1e-12, worst18, 1e-12});
  rep.checks.push_back(
      {"antipode", "both maps identify antipodes", anti <= 1e-12, anti, 1e-12});

  // b4 components solve the linear constraint and chain through the hexagon
  double b4resid = 0;
  for (int seg = 0; seg < 3; ++seg)
    for (int i = 0; i <= 16; ++i) {
      double t = i / 16.0;
      auto h = B4Components::segment(seg, t);
      b4resid = std::max(b4resid, std::abs(h[0] - h[1] - h[2]));
    }
  rep.checks.push_back({"b4_constraint", "A,B,C satisfy z0 - z1 - z2 = 0 identically",
                        b4resid == 0.0, b4resid, 0});

  auto p = exactlin::factor_form(exactlin::q_reference());
  double unit_worst = 0;
  auto mesh = sample_surface(SurfaceTarget::Symmetric, 9);
  for (int i = 0; i < mesh.num_vertices(); ++i) {
    double s = 0;
    for (int c = 0; c < 6; ++c) s += mesh.vertices[6 * i + c] * mesh.vertices[6 * i + c];
    unit_worst = std::max(unit_worst, std::abs(std::sqrt(s) - 1.0));
  }
  rep.checks.push_back({"unit_norm", "symmetric samples are unit vectors to 1e-12",
                        unit_worst <= 1e-12, unit_worst, 1e-12});

  double seam = max_seam_mismatch(9, p);
  rep.checks.push_back(
      {"seams", "glued patch boundaries agree to 1e-9", seam <= 1e-9, seam, 1e-9});

  // round-trip a small OBJ
  auto small = sample_surface(SurfaceTarget::Double, 2);
  auto proj = project(small, {1, 2, 3});
  std::string path = "/tmp/pentafold_roundtrip.obj";
  write_obj(proj, path);
  auto back = read_obj(path);
  bool rt = back.num_vertices() == proj.num_vertices() && back.faces.size() == proj.faces.size();
  if (rt)
    for (std::size_t f = 0; f < back.faces.size(); ++f)
      if (back.faces[f].indices != proj.faces[f].indices ||
          back.faces[f].tag != proj.faces[f].tag)
        rt = false;
  rep.checks.push_back({"obj_roundtrip", "written OBJ parses back to the same structure", rt,
                        static_cast<double>(back.faces.size()), 0});
  return rep;
}

inline std::vector<VerifyReport> run_suites(const std::string& which) {
  std::vector<VerifyReport> reports;
  auto want = [&](const std::string& name) { return which == "all" || which == name; };
  if (want("group")) reports.push_back(verify_group());
  if (want("tessellation")) reports.push_back(verify_tessellation());
  if (want("contour")) reports.push_back(verify_contour());
  if (want("betafun")) reports.push_back(verify_betafun());
  if (want("mesh")) reports.push_back(verify_mesh());
  if (reports.empty()) throw OutOfDomain("unknown verify suite '" + which + "'");
  return reports;
}

}  // namespace pentafold::verify

#endif
