#include <doctest.h>

#include <cstdio>
#include <random>

#include "pentafold/meshout.hpp"
#include "pentafold/verify.hpp"

using namespace pentafold;
using namespace pentafold::meshout;

TEST_SUITE_BEGIN("meshout");

TEST_CASE("veronese3 axis case and sphere property") {
  auto w = veronese3({1, 0, 0});
  CHECK(w == std::array<double, 6>{0, 0, 0, 1, 0, 0});
  std::mt19937 mt(61);
  std::normal_distribution<double> nd;
  for (int it = 0; it < 500; ++it) {
    std::array<double, 3> x{nd(mt), nd(mt), nd(mt)};
    double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    for (auto& c : x) c /= n;
    auto v = veronese3(x);
    double s = 0;
    for (double c : v) s += c * c;
    CHECK(std::abs(std::sqrt(s) - 1.0) <= 1e-12);
    auto vm = veronese3({-x[0], -x[1], -x[2]});
    for (int i = 0; i < 6; ++i) CHECK(v[i] == doctest::Approx(vm[i]).epsilon(1e-15));
  }
  CHECK_THROWS_AS(veronese3({1, 1, 0}), NotUnit);
}

TEST_CASE("veronese6 axis and paired-difference cases") {
  exactlin::Vec6d e0{1, 0, 0, 0, 0, 0};
  auto w21 = veronese6(e0, VeroneseVariant::R21);
  CHECK(w21.size() == 21);
  CHECK(w21[15] == 1.0);  // the r0^2 slot
  for (int i = 0; i < 21; ++i)
    if (i != 15) CHECK(w21[i] == 0.0);

  double s = 1 / std::sqrt(2.0);
  exactlin::Vec6d r{s, s, 0, 0, 0, 0};
  auto w18 = veronese6(r, VeroneseVariant::R18);
  CHECK(w18.size() == 18);
  CHECK(w18[0] == doctest::Approx(1.0));   // 2 r0 r1
  CHECK(w18[15] == doctest::Approx(0.0));  // r0^2 - r1^2
  for (int i = 1; i < 15; ++i) CHECK(w18[i] == 0.0);
  CHECK_THROWS_AS(veronese6({1, 1, 0, 0, 0, 0}, VeroneseVariant::R21), NotUnit);
}

TEST_CASE("b4 components: endpoints and the linear constraint") {
  auto p = B4Components::endpoints();
  CHECK(B4Components::segment(0, 0.0) == p[0]);  // A(0) = [1,0,1]
  CHECK(B4Components::segment(1, 0.0) == p[1]);  // B(0) = [1,1,0]
  CHECK(B4Components::segment(2, 0.0) == p[2]);  // C(0) = [0,1,-1]
  // chains: A(1) = p2, B(1) = p3, C(1) = -p1
  CHECK(B4Components::segment(0, 1.0) == p[1]);
  CHECK(B4Components::segment(1, 1.0) == p[2]);
  CHECK(B4Components::segment(2, 1.0) == std::array<double, 3>{-1, 0, -1});
  for (int seg = 0; seg < 3; ++seg)
    for (int i = 0; i <= 10; ++i) {
      auto h = B4Components::segment(seg, i / 10.0);
      CHECK(std::abs(h[0] - h[1] - h[2]) <= 1e-15);
    }
}

TEST_CASE("b4 hexagon mesh folds onto three closed curves") {
  auto mesh = sample_surface(SurfaceTarget::B4Hexagon, 17);
  CHECK(mesh.dim == 6);
  CHECK(mesh.polylines.size() == 6);
  // antipodal segments map to the same veronese image, pointwise
  for (int seg = 0; seg < 3; ++seg) {
    const auto& a = mesh.polylines[seg];
    const auto& b = mesh.polylines[seg + 3];
    for (std::size_t k = 0; k < a.size(); ++k)
      for (int c = 0; c < 6; ++c)
        CHECK(mesh.vertices[6 * a[k] + c] ==
              doctest::Approx(mesh.vertices[6 * b[k] + c]).epsilon(1e-12));
  }
}

TEST_CASE("sampled double cover: counts and corner matching at n=2") {
  auto mesh = sample_surface(SurfaceTarget::Double, 2);
  CHECK(mesh.dim == 6);
  CHECK(mesh.num_vertices() == 24 * 4);
  CHECK(mesh.faces.size() == 24);

  // grid corners (0,0),(1,0),(1,1),(0,1) are pentagon corners 5,2,3,4 of the
  // boundary order; compare against the lifted vertex coordinates
  const auto& q = exactlin::q_reference();
  const auto& verts = tess::vertex_table();
  for (int patch = 0; patch < 24; ++patch) {
    // patches alternate +/- per face; tags put conjugates at 13..24
    int face = patch / 2 + 1;
    int tag = patch % 2 == 0 ? face : 12 + face;
    auto ids = verify::patch_corner_ids(tag);
    // grid vertex layout: (u,v) = (0,0),(0,1),(1,0),(1,1) at offsets 0,1,2,3
    std::pair<int, int> offsets[4] = {{0, 4}, {1, 3}, {2, 1}, {3, 2}};
    for (auto [off, corner] : offsets) {
      int vid = patch * 4 + off;
      int sid = ids[corner];
      exactlin::Vec6q v;
      for (int i = 0; i < 6; ++i) v[i] = Rational(verts[std::abs(sid) - 1][i]);
      double norm = std::sqrt(exactlin::quadratic_form(q, v).to_double());
      for (int i = 0; i < 6; ++i) {
        double want = (sid > 0 ? 1 : -1) * verts[std::abs(sid) - 1][i] / norm;
        CHECK(std::abs(mesh.vertices[6 * vid + i] - want) <= 1e-9);
      }
    }
  }
}

TEST_CASE("sampled symmetric cover is unit norm; veronese targets too") {
  for (auto target : {SurfaceTarget::Symmetric, SurfaceTarget::Veronese21,
                      SurfaceTarget::Veronese18, SurfaceTarget::Single}) {
    auto mesh = sample_surface(target, 5);
    for (int i = 0; i < mesh.num_vertices(); ++i) {
      double s = 0;
      for (int c = 0; c < mesh.dim; ++c)
        s += mesh.vertices[mesh.dim * i + c] * mesh.vertices[mesh.dim * i + c];
      CHECK(std::abs(std::sqrt(s) - 1.0) <= 1e-12);
    }
  }
  auto m17 = sample_surface(SurfaceTarget::Symmetric, 17);
  CHECK(m17.num_vertices() == 24 * 17 * 17);
  CHECK(m17.faces.size() == 24 * 16 * 16);
}

TEST_CASE("seams of the symmetric embedding close to 1e-9") {
  auto p = exactlin::factor_form(exactlin::q_reference());
  CHECK(verify::max_seam_mismatch(33, p) <= 1e-9);
}

TEST_CASE("projection selects axes and rejects bad ones") {
  auto mesh = sample_surface(SurfaceTarget::Veronese21, 3);
  auto pr = project(mesh, {1, 2, 5});
  CHECK(pr.dim == 3);
  CHECK(pr.num_vertices() == mesh.num_vertices());
  for (int i = 0; i < pr.num_vertices(); ++i) {
    CHECK(pr.vertices[3 * i + 0] == mesh.vertices[21 * i + 0]);
    CHECK(pr.vertices[3 * i + 2] == mesh.vertices[21 * i + 4]);
  }
  CHECK_THROWS_AS(project(mesh, {0, 1, 2}), BadAxes);
  CHECK_THROWS_AS(project(mesh, {1, 1, 2}), BadAxes);
  CHECK_THROWS_AS(project(mesh, {1, 2, 22}), BadAxes);
  // identity on an already 3-d mesh
  auto same = project(pr, {1, 2, 3});
  CHECK(same.vertices == pr.vertices);
}

TEST_CASE("obj writing: smallest mesh and round-trip") {
  MeshBuffer quad;
  quad.dim = 3;
  double pts[4][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0.25}};
  for (auto& p : pts) quad.push_vertex(p);
  quad.faces.push_back({{0, 1, 2, 3}, 7});
  std::string path = "/tmp/pentafold_test_quad.obj";
  write_obj(quad, path);

  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("v 0 0 0\n") != std::string::npos);
  CHECK(text.find("g face_07\n") != std::string::npos);
  CHECK(text.find("f 1 2 3 4\n") != std::string::npos);

  auto back = read_obj(path);
  CHECK(back.num_vertices() == 4);
  REQUIRE(back.faces.size() == 1);
  CHECK(back.faces[0].indices == std::vector<int>{0, 1, 2, 3});
  CHECK(back.faces[0].tag == 7);
  std::remove(path.c_str());
}

TEST_CASE("round-trip of a sampled mesh preserves indices and tags") {
  auto mesh = project(sample_surface(SurfaceTarget::Symmetric, 3), {1, 2, 3});
  std::string path = "/tmp/pentafold_test_mesh.obj";
  write_obj(mesh, path);
  auto back = read_obj(path);
  CHECK(back.num_vertices() == mesh.num_vertices());
  REQUIRE(back.faces.size() == mesh.faces.size());
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    CHECK(back.faces[f].indices == mesh.faces[f].indices);
    CHECK(back.faces[f].tag == mesh.faces[f].tag);
  }
  std::remove(path.c_str());
}

TEST_CASE("ply writing carries face ids and edges") {
  auto mesh = project(sample_surface(SurfaceTarget::Double, 2), {1, 2, 3});
  std::string path = "/tmp/pentafold_test_mesh.ply";
  write_ply(mesh, path);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("element vertex 96") != std::string::npos);
  CHECK(text.find("element face 24") != std::string::npos);
  CHECK(text.find("property int face_id") != std::string::npos);
  std::remove(path.c_str());

  auto hex = project(sample_surface(SurfaceTarget::B4Hexagon, 5), {1, 2, 6});
  write_ply(hex, path);
  std::ifstream in2(path);
  std::string t2((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
  CHECK(t2.find("element edge 24") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("dimension guard on writers") {
  auto mesh = sample_surface(SurfaceTarget::Symmetric, 2);  // dim 6
  CHECK_THROWS_AS(write_obj(mesh, "/tmp/should_not_exist.obj"), IoError);
}

TEST_CASE("unwritable paths report an io error") {
  auto mesh = project(sample_surface(SurfaceTarget::Double, 2), {1, 2, 3});
  CHECK_THROWS_AS(write_obj(mesh, "/nonexistent_dir/out.obj"), IoError);
  CHECK_THROWS_AS(write_mesh(mesh, "stl", "/tmp/x.stl"), IoError);
}

TEST_SUITE_END();
