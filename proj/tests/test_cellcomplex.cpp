#include <doctest.h>

#include "pentafold/cellcomplex.hpp"

using namespace pentafold;
using namespace pentafold::cell;

TEST_SUITE_BEGIN("cellcomplex");

TEST_CASE("tetrahedron is a sphere") {
  auto c = CellComplex::from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
  auto inv = euler_and_genus(c);
  CHECK(c.num_edges() == 6);
  CHECK(inv.chi == 2);
  CHECK(inv.orientable);
  CHECK(inv.genus_or_crosscaps == 0);
  CHECK(inv.connected);
  CHECK(orientation_consistent_as_given(c));
}

TEST_CASE("cube surface is a sphere") {
  auto c = CellComplex::from_faces(8, {{0, 1, 2, 3},
                                       {4, 7, 6, 5},
                                       {0, 4, 5, 1},
                                       {1, 5, 6, 2},
                                       {2, 6, 7, 3},
                                       {3, 7, 4, 0}});
  auto inv = euler_and_genus(c);
  CHECK(c.num_edges() == 12);
  CHECK(inv.chi == 2);
  CHECK(inv.orientable);
  CHECK(inv.connected);
}

TEST_CASE("an open disk is rejected") {
  auto c = CellComplex::from_faces(3, {{0, 1, 2}});
  CHECK_THROWS_AS(euler_and_genus(c), NotClosedSurface);
}

TEST_CASE("flipping one face orientation is repaired by propagation") {
  auto c = CellComplex::from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {2, 3, 1}});
  auto inv = euler_and_genus(c);
  CHECK(inv.orientable);               // still a sphere after reorienting one face
  CHECK_FALSE(orientation_consistent_as_given(c));
}

TEST_CASE("vertex face degrees and edge counts") {
  auto c = CellComplex::from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
  auto deg = c.vertex_face_degrees();
  for (int d : deg) CHECK(d == 3);
  for (int cnt : c.edge_face_counts()) CHECK(cnt == 2);
}

TEST_SUITE_END();
