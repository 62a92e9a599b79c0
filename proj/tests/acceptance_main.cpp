// Acceptance suite: every headline quantity of the construction, checked at
// its stated tolerance, one line per criterion.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include "pentafold/betafun.hpp"
#include "pentafold/contour.hpp"
#include "pentafold/crossratio.hpp"
#include "pentafold/meshout.hpp"
#include "pentafold/tessellation.hpp"
#include "pentafold/verify.hpp"

using namespace pentafold;
using cxd = std::complex<double>;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

void report(int number, bool pass, const std::string& what, const std::string& detail) {
  auto now = std::chrono::steady_clock::now();
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - mark).count();
  mark = now;
  std::printf("criterion %02d [%s] %s  (%s) [%lld ms]\n", number, pass ? "PASS" : "FAIL",
              what.c_str(), detail.c_str(), static_cast<long long>(ms));
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void criterion_1_group_orders() {
  using namespace exactlin;
  auto g120 = group_closure({x5(), x2()});
  auto g240 = group_closure({x5(), x2(), -MatRat::identity(6)});
  report(1, g120.size() == 120 && g240.size() == 240, "group orders 120 and 240",
         "|G|=" + std::to_string(g120.size()) + " |G~|=" + std::to_string(g240.size()));
}

void criterion_2_invariant_form() {
  using namespace exactlin;
  auto g120 = group_closure({x5(), x2()});
  MatRat q = invariant_form(g120, Rational(1, 70));
  report(2, q == q_reference(), "averaged form equals the invariant matrix entry-for-entry",
         "exact rational comparison");
}

void criterion_3_q_invariance() {
  using namespace exactlin;
  auto g120 = group_closure({x5(), x2()});
  MatRat q = q_reference();
  int bad = 0;
  for (const auto& g : g120)
    if (g.transpose() * q * g != q) ++bad;
  report(3, bad == 0, "g^t Q g = Q exactly for all 120 elements",
         std::to_string(bad) + " violations");
}

void criterion_4_tessellation() {
  auto si = tess::euler_and_genus(tess::build_complex(tess::Cover::Single));
  auto s = tess::build_complex(tess::Cover::Single);
  auto d = tess::build_complex(tess::Cover::Double);
  auto di = tess::euler_and_genus(d);
  bool single_ok = s.num_vertices() == 15 && s.num_edges() == 30 && s.num_faces() == 12 &&
                   si.chi == -3 && !si.orientable && si.genus_or_crosscaps == 5;
  bool double_ok = d.num_vertices() == 30 && d.num_edges() == 60 && d.num_faces() == 24 &&
                   di.chi == -6 && di.orientable && di.genus_or_crosscaps == 4;
  report(4, single_ok && double_ok,
         "single cover (15,30,12) chi=-3 five crosscaps; double cover (30,60,24) chi=-6 genus 4",
         "chi=" + std::to_string(si.chi) + "/" + std::to_string(di.chi));
}

void criterion_5_corners() {
  bool ok = true;
  for (int i = 1; i <= 12; ++i) {
    auto ids = tess::face_corner_ids(i);
    std::set<int> got(ids.begin(), ids.end());
    const auto& row = tess::face_table()[2 * (i - 1)];
    if (got != std::set<int>(row.begin(), row.end())) ok = false;
  }
  // face 1 corners against the listed coordinates
  const char* expect[5] = {"[1,1,0,0,1,1]", "[1,1,1,0,0,1]", "[1,1,1,1,0,0]", "[1,0,1,1,1,0]",
                           "[1,0,0,1,1,1]"};
  const auto& corners = tess::pentagon_corner_params();
  for (int c = 0; c < 5; ++c) {
    auto p = tess::face_param(1, corners[c].first, corners[c].second);
    if (p.to_string() != expect[c]) ok = false;
  }
  report(5, ok, "face corner values reproduce the face table; face 1 hits v1..v5",
         "exact GCD-cancelled corner evaluation");
}

void criterion_6_membership_rank() {
  verify::RationalSampler rng(20260806);
  int bad = 0;
  for (int i = 1; i <= 12; ++i)
    for (int it = 0; it < 100; ++it) {
      auto z = tess::face_param_raw(i, rng.unit(), rng.unit());
      for (const auto& r : crossratio::projective_residuals(z))
        if (!r.is_zero()) ++bad;
    }
  int bad_rank = 0;
  int found = 0;
  while (found < 20) {
    Rational s = rng.unit_open(), t = rng.unit_open();
    if (s == t) continue;
    ++found;
    auto j = crossratio::affine_jacobian(
        crossratio::affine_point(crossratio::five_from_params(s, t)));
    if (exactlin::rank_exact(j) != 3) ++bad_rank;
  }
  report(6, bad == 0 && bad_rank == 0,
         "1200 random face samples satisfy the quadrics; Jacobian rank 3 at 20 points",
         std::to_string(bad) + " residual / " + std::to_string(bad_rank) + " rank failures");
}

void criterion_7_symmetric_embedding() {
  auto p = exactlin::factor_form(exactlin::q_reference());
  auto gammas = tess::gamma_transforms(p);
  double worst_orth = 0;
  for (const auto& g : gammas)
    worst_orth =
        std::max(worst_orth, (g.transpose() * g).max_abs_diff(exactlin::MatFloat::identity()));
  double worst_norm = 0;
  for (int i = 0; i < 33; ++i)
    for (int j = 0; j < 33; ++j) {
      auto f = tess::symmetric_embedding_f(1, +1, i / 32.0, j / 32.0, p);
      worst_norm = std::max(worst_norm, std::abs(tess::norm6(f) - 1.0));
    }
  for (int face = 1; face <= 12; ++face)
    for (int sgn : {+1, -1})
      for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
          auto f = tess::symmetric_embedding_f(face, sgn, i / 8.0, j / 8.0, p);
          worst_norm = std::max(worst_norm, std::abs(tess::norm6(f) - 1.0));
        }
  double seam = verify::max_seam_mismatch(33, p);
  report(7,
         worst_orth <= 1e-10 && worst_norm <= 1e-12 && seam <= 1e-9,
         "24 gammas orthogonal to 1e-10; unit norm to 1e-12; seams closed to 1e-9",
         "orth=" + fmt(worst_orth) + " norm=" + fmt(worst_norm) + " seam=" + fmt(seam));
}

void criterion_8_phase_surface() {
  auto rep = contour::build_phase_surface(5);
  const auto& c = rep.complex;
  auto inv = cell::euler_and_genus(c);
  bool base = c.num_vertices() == 40 && c.num_edges() == 80 && c.num_faces() == 32 &&
              inv.chi == -8 && inv.orientable && inv.connected && inv.genus_or_crosscaps == 5;
  bool disks = rep.surface.count_corner_disks() == 40;
  bool comm = true;
  for (int j = 0; j < 5; ++j)
    if (!rep.surface.corner_cycle_check(j, (j + 1) % 5)) comm = false;
  contour::PhaseSurface mut(5);
  mut.reglue(0u, 0u ^ (1u << 0) ^ (1u << 2), 0);
  bool mut_fails =
      !mut.corner_cycle_check(0, 1) && mut.to_complex().euler_characteristic() != -8;
  report(8, base && disks && comm && mut_fails,
         "phase surface (40,80,32) chi=-8 genus 5, 40 commuting corners, mutation detected",
         "chi=" + std::to_string(inv.chi) + " disks=" +
             std::to_string(rep.surface.count_corner_disks()));
}

void criterion_9_b4() {
  using namespace betafun;
  double grid_worst = 0;
  for (double a1 : {0.1, 0.5, 1.3, 2.2, 4.0})
    for (double a2 : {0.1, 0.5, 1.3, 2.2, 4.0}) {
      Alpha2 a{cxd(a1), cxd(a2)};
      grid_worst = std::max(grid_worst, std::abs(b4_quadrature(a) - b4_gamma(a)));
    }
  const double pairs[10][2] = {{0.3, 0.7},  {0.5, 0.5},   {1.5, 2.25}, {0.9, 0.4},
                               {0.25, 1.75}, {2.5, 0.35}, {1.25, 1.25}, {0.6, 3.4},
                               {3.3, 0.15},  {0.85, 2.15}};
  double poch_worst = 0;
  for (const auto& pr : pairs) {
    Alpha2 a{cxd(pr[0]), cxd(pr[1])};
    cxd ratio = contour::pochhammer_b4(a) / product_factor(a);
    poch_worst = std::max(poch_worst, std::abs(ratio - b4_gamma(a)));
  }
  double v_int = std::abs(contour::pochhammer_b4({cxd(1), cxd(1)}));
  double v_sum = std::abs(contour::pochhammer_b4({cxd(0.5), cxd(-0.5)}));
  report(9,
         grid_worst <= 1e-8 && poch_worst <= 1e-7 && v_int <= 1e-6 && v_sum <= 1e-6,
         "B4: quadrature-vs-gamma 1e-8 on 25 pairs; contour ratio 1e-7; vanishing cases 1e-6",
         "grid=" + fmt(grid_worst) + " poch=" + fmt(poch_worst) + " eps11=" + fmt(v_int) +
             " eps+-=" + fmt(v_sum));
}

void criterion_10_b5() {
  using namespace betafun;
  quad::QuadratureSpec s5;
  s5.level = 8;
  s5.abs_tol = 1e-10;
  double e1 = std::abs(b5_quadrature({cxd(1), cxd(1), cxd(1), cxd(1), cxd(1)}, s5) -
                       M_PI * M_PI / 6);
  double e2 = std::abs(b5_quadrature({cxd(2), cxd(1), cxd(1), cxd(1), cxd(1)}, s5) - 1.0);
  double e3 = std::abs(b5_quadrature({cxd(1), cxd(1), cxd(2), cxd(1), cxd(1)}, s5) - 1.0);
  std::mt19937 mt(20260807);
  std::uniform_real_distribution<double> re(0.5, 2.0);
  double cyc = 0;
  for (int it = 0; it < 10; ++it) {
    Alpha5 a;
    for (auto& x : a) x = cxd(re(mt), 0);
    Alpha5 sh{a[2], a[3], a[4], a[0], a[1]};
    cyc = std::max(cyc, std::abs(b5_quadrature(a, s5) - b5_quadrature(sh, s5)));
  }
  report(10, e1 <= 1e-8 && e2 <= 1e-8 && e3 <= 1e-8 && cyc <= 1e-7,
         "B5 closed forms to 1e-8; cyclic-shift invariance to 1e-7 at 10 tuples",
         "pi2/6=" + fmt(e1) + " ones=" + fmt(std::max(e2, e3)) + " cyc=" + fmt(cyc));
}

void criterion_11_veronese() {
  std::mt19937 mt(20260808);
  std::normal_distribution<double> nd;
  double worst = 0;
  for (int it = 0; it < 1000; ++it) {
    std::array<double, 3> x{nd(mt), nd(mt), nd(mt)};
    double n3 = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    for (auto& c : x) c /= n3;
    auto w = meshout::veronese3(x);
    double s = 0;
    for (double c : w) s += c * c;
    worst = std::max(worst, std::abs(std::sqrt(s) - 1.0));
    auto wm = meshout::veronese3({-x[0], -x[1], -x[2]});
    for (int i = 0; i < 6; ++i) worst = std::max(worst, std::abs(w[i] - wm[i]));

    exactlin::Vec6d r;
    double n6 = 0;
    for (auto& c : r) {
      c = nd(mt);
      n6 += c * c;
    }
    n6 = std::sqrt(n6);
    for (auto& c : r) c /= n6;
    exactlin::Vec6d rm;
    for (int i = 0; i < 6; ++i) rm[i] = -r[i];
    for (auto variant : {meshout::VeroneseVariant::R21, meshout::VeroneseVariant::R18}) {
      auto v = meshout::veronese6(r, variant);
      auto vm = meshout::veronese6(rm, variant);
      double sv = 0;
      for (double c : v) sv += c * c;
      worst = std::max(worst, std::abs(std::sqrt(sv) - 1.0));
      for (std::size_t i = 0; i < v.size(); ++i)
        worst = std::max(worst, std::abs(v[i] - vm[i]));
    }
  }
  report(11, worst <= 1e-12,
         "veronese maps sphere-to-sphere and antipode-invariant on 1000 unit vectors",
         "worst=" + fmt(worst));
}

void criterion_12_counting() {
  const std::pair<int, std::pair<std::uint64_t, std::uint64_t>> rows[] = {
      {4, {2, 3}},     {5, {5, 12}},     {6, {9, 60}},     {7, {14, 360}},
      {8, {20, 2520}}, {9, {27, 20160}}, {10, {35, 181440}}};
  bool ok = true;
  for (const auto& [n, want] : rows)
    if (crossratio::counting(n) != want) ok = false;
  report(12, ok, "counting formulas reproduce all table rows for N=4..10", "exact");
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  criterion_1_group_orders();
  criterion_2_invariant_form();
  criterion_3_q_invariance();
  criterion_4_tessellation();
  criterion_5_corners();
  criterion_6_membership_rank();
  criterion_7_symmetric_embedding();
  criterion_8_phase_surface();
  criterion_9_b4();
  criterion_10_b5();
  criterion_11_veronese();
  criterion_12_counting();
  auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
  std::printf("acceptance: %d/12 criteria passed in %lld ms\n", 12 - failures,
              static_cast<long long>(ms));
  return failures == 0 ? 0 : 1;
}
