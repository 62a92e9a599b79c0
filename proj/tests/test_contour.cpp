#include <doctest.h>

#include <complex>

#include "pentafold/betafun.hpp"
#include "pentafold/contour.hpp"

using namespace pentafold;
using namespace pentafold::contour;
using betafun::Alpha2;
using cxd = std::complex<double>;

TEST_SUITE_BEGIN("contour");

TEST_CASE("pentagon edges carry the exponents in boundary order") {
  auto m = edge_phase_exponents();
  CHECK(m.at(PentagonEdge::Z2Zero) == 2);
  CHECK(m.at(PentagonEdge::BlowupA) == 1);
  CHECK(m.at(PentagonEdge::BlowupB) == 4);
  CHECK(m.at(PentagonEdge::Z1One) == 3);
  CHECK(m.at(PentagonEdge::Diagonal) == 5);
}

TEST_CASE("32 sheets close into the genus-five surface") {
  auto rep = build_phase_surface(5);
  const auto& c = rep.complex;
  CHECK(c.num_vertices() == 40);
  CHECK(c.num_edges() == 80);
  CHECK(c.num_faces() == 32);
  CHECK(c.euler_characteristic() == -8);
  auto inv = cell::euler_and_genus(c);
  CHECK(inv.orientable);
  CHECK(inv.genus_or_crosscaps == 5);
  CHECK(inv.connected);
  CHECK(rep.surface.connected());
  CHECK(rep.surface.gluing_is_involution());
  CHECK(rep.surface.count_corner_disks() == 40);
  CHECK(cell::orientation_consistent_as_given(c));
}

TEST_CASE("four sheets make the commutator loop") {
  auto rep = build_phase_surface(2);
  const auto& c = rep.complex;
  CHECK(c.num_vertices() == 4);
  CHECK(c.num_edges() == 4);
  CHECK(c.num_faces() == 0);
  CHECK(c.euler_characteristic() == 0);
  CHECK(c.connected());
  for (int v = 0; v < 4; ++v) {
    int deg = 0;
    for (const auto& e : c.edges()) deg += (e[0] == v) + (e[1] == v);
    CHECK(deg == 2);
  }
  // walking the loop alternates the two branch factors, so the sheet phases
  // come in the order 1, e(a1), e(a1+a2), e(a2)
  const auto& s = rep.surface;
  unsigned w = 0;
  w = s.partner(w, 0);
  CHECK(w == 1u);  // picked up a1
  w = s.partner(w, 1);
  CHECK(w == 3u);  // a1 + a2
  w = s.partner(w, 0);
  CHECK(w == 2u);  // a2
  w = s.partner(w, 1);
  CHECK(w == 0u);  // home
}

TEST_CASE("intermediate cases: sphere at k=3, torus at k=4") {
  auto rep3 = build_phase_surface(3);
  auto r3 = cell::euler_and_genus(rep3.complex);
  CHECK(r3.chi == 2);
  CHECK(r3.genus_or_crosscaps == 0);
  CHECK(rep3.surface.count_corner_disks() == 6);  // 3 corners x 2 cosets
  auto rep4 = build_phase_surface(4);
  auto r4 = cell::euler_and_genus(rep4.complex);
  CHECK(r4.chi == 0);
  CHECK(r4.orientable);
  CHECK(r4.genus_or_crosscaps == 1);
  CHECK(rep4.surface.count_corner_disks() == 16);  // 4 corners x 4 cosets
}

TEST_CASE("corner commutators close for every pair and every sheet") {
  auto rep = build_phase_surface(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) CHECK(rep.surface.corner_cycle_check(i, j));
  CHECK_THROWS(rep.surface.corner_cycle_check(2, 2));
}

TEST_CASE("a flipped gluing breaks the commutator and the topology") {
  PhaseSurface mut(5);
  mut.reglue(0u, 0u ^ (1u << 0) ^ (1u << 2), 0);
  CHECK(mut.gluing_is_involution());
  CHECK_FALSE(mut.corner_cycle_check(0, 1));
  auto c = mut.to_complex();
  bool same = c.euler_characteristic() == -8;
  if (same) {
    auto inv = cell::euler_and_genus(c);
    same = inv.orientable && inv.genus_or_crosscaps == 5;
  }
  CHECK_FALSE(same);
}

TEST_CASE("pochhammer at (1/2,1/2) gives four pi") {
  auto eps = pochhammer_b4({cxd(0.5), cxd(0.5)});
  CHECK(std::abs(eps - cxd(4 * M_PI)) <= 1e-9);
}

TEST_CASE("vanishing cases: integer exponent and zero sum") {
  CHECK(std::abs(pochhammer_b4({cxd(1), cxd(1)})) <= 1e-8);
  CHECK(std::abs(pochhammer_b4({cxd(0.5), cxd(-0.5)})) <= 1e-6);
  CHECK(std::abs(pochhammer_b4({cxd(3), cxd(0.75)})) <= 1e-8);
}

TEST_CASE("deformation invariance in the loop radius") {
  const double grid[4] = {0.3, 0.7, 1.5, 2.25};
  for (double a1 : grid)
    for (double a2 : grid) {
      Alpha2 a{cxd(a1), cxd(a2)};
      auto big = pochhammer_b4(a, 1e-2), small = pochhammer_b4(a, 1e-3);
      CHECK(std::abs(big - small) <= 1e-7);
    }
}

TEST_CASE("continuation identity against the gamma oracle") {
  const double pairs[6][2] = {{0.3, 0.7},  {1.5, 2.25}, {0.9, 0.4},
                              {0.25, 1.75}, {2.5, 0.35}, {1.25, 1.25}};
  for (const auto& pr : pairs) {
    Alpha2 a{cxd(pr[0]), cxd(pr[1])};
    cxd ratio = pochhammer_b4(a) / betafun::product_factor(a);
    CHECK(std::abs(ratio - betafun::b4_gamma(a)) <= 1e-7);
  }
}

TEST_CASE("complex exponents continue smoothly") {
  Alpha2 a{cxd(0.5, 0.3), cxd(1.2, -0.4)};
  cxd ratio = pochhammer_b4(a) / betafun::product_factor(a);
  CHECK(std::abs(ratio - betafun::b4_gamma(a)) <= 1e-7);
}

TEST_CASE("the contour continues past the convergence region") {
  // the direct integral diverges here; the loop still reproduces the
  // gamma-ratio continuation
  for (Alpha2 a : {Alpha2{cxd(-1.3), cxd(2.7)}, Alpha2{cxd(-0.4), cxd(-0.6)},
                   Alpha2{cxd(-2.2, 0.5), cxd(1.3)}}) {
    cxd ratio = pochhammer_b4(a, 1e-2) / betafun::product_factor(a);
    cxd ref = betafun::b4_gamma(a);
    CHECK(std::abs(ratio - ref) <= 1e-7 * (1 + std::abs(ref)));
  }
}

TEST_CASE("small circles fade as the radius shrinks when Re alpha > 0") {
  Alpha2 a{cxd(0.6), cxd(1.4)};
  auto big = pochhammer_b4_pieces(a, 1e-2);
  auto small = pochhammer_b4_pieces(a, 1e-4);
  // the loops scale like r^(min Re alpha) = r^0.6, so two decades of radius
  // shrink them by at least a factor of ten
  CHECK(std::abs(small.circle_part) <= 0.1 * std::abs(big.circle_part));
  // and the total stays put
  CHECK(std::abs(big.total() - small.total()) <= 1e-7);
}

TEST_CASE("radius preconditions") {
  CHECK_THROWS_AS(pochhammer_b4({cxd(0.5), cxd(0.5)}, 0.7), DomainError);
  CHECK_THROWS_AS(pochhammer_b4({cxd(0.5), cxd(0.5)}, 0.0), DomainError);
}

TEST_SUITE_END();
