#ifndef PENTAFOLD_MESHOUT_HPP
#define PENTAFOLD_MESHOUT_HPP

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pentafold/errors.hpp"
#include "pentafold/tessellation.hpp"

namespace pentafold::meshout {

using exactlin::Vec6d;

// ---------------------------------------------------------------------------
// Quadratic sphere-to-sphere maps identifying antipodes

inline std::array<double, 6> veronese3(const std::array<double, 3>& x) {
  double n2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
    throw NotUnit("veronese3: input must be a unit vector");
  const double c = std::sqrt(2.0);
  return {c * x[0] * x[1], c * x[0] * x[2], c * x[1] * x[2],
          x[0] * x[0],     x[1] * x[1],     x[2] * x[2]};
}

enum class VeroneseVariant { R21, R18 };

inline std::vector<double> veronese6(const Vec6d& r, VeroneseVariant variant) {
  double n2 = 0;
  for (double v : r) n2 += v * v;
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
    throw NotUnit("veronese6: input must be a unit vector");
  const double c = std::sqrt(2.0);
  if (variant == VeroneseVariant::R21) {
    std::vector<double> w;
    w.reserve(21);
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) w.push_back(c * r[a] * r[b]);
    for (int a = 0; a < 6; ++a) w.push_back(r[a] * r[a]);
    return w;
  }
  // R18: doubled coefficient on the three paired products, squared differences
  // instead of squares.
  std::vector<double> w(18);
  w[0] = 2 * r[0] * r[1];
  w[1] = c * r[0] * r[2];
  w[2] = c * r[0] * r[3];
  w[3] = c * r[0] * r[4];
  w[4] = c * r[0] * r[5];
  w[5] = c * r[1] * r[2];
  w[6] = c * r[1] * r[3];
  w[7] = c * r[1] * r[4];
  w[8] = c * r[1] * r[5];
  w[9] = 2 * r[2] * r[3];
  w[10] = c * r[2] * r[4];
  w[11] = c * r[2] * r[5];
  w[12] = c * r[3] * r[4];
  w[13] = c * r[3] * r[5];
  w[14] = 2 * r[4] * r[5];
  w[15] = r[0] * r[0] - r[1] * r[1];
  w[16] = r[2] * r[2] - r[3] * r[3];
  w[17] = r[4] * r[4] - r[5] * r[5];
  return w;
}

// ---------------------------------------------------------------------------
// The three components of the four-point cross-ratio line in RP^2

// Homogeneous segments A(t) = [1, t, 1-t], B(t) = [1-t, 1, -t],
// C(t) = [-t, 1-t, -1]; their endpoints chain through p1, p2, p3 and the
// antipodes, closing a hexagon in R^3.
struct B4Components {
  static std::array<double, 3> segment(int which, double t) {
    switch (which) {
      case 0: return {1.0, t, 1.0 - t};
      case 1: return {1.0 - t, 1.0, -t};
      case 2: return {-t, 1.0 - t, -1.0};
      default: throw OutOfDomain("B4Components: segment index must be 0..2");
    }
  }
  static std::array<std::array<double, 3>, 3> endpoints() {
    return {{{1, 0, 1}, {1, 1, 0}, {0, 1, -1}}};
  }
};

// ---------------------------------------------------------------------------
// Mesh buffers

struct MeshBuffer {
  int dim = 3;
  std::vector<double> vertices;  // dim-strided
  struct Face {
    std::vector<int> indices;  // 0-based
    int tag = 0;
  };
  std::vector<Face> faces;
  std::vector<std::vector<int>> polylines;

  int num_vertices() const { return static_cast<int>(vertices.size()) / dim; }

  int push_vertex(const double* p) {
    vertices.insert(vertices.end(), p, p + dim);
    return num_vertices() - 1;
  }
};

enum class SurfaceTarget { Single, Double, Symmetric, Veronese21, Veronese18, B4Hexagon };

inline SurfaceTarget parse_target(const std::string& s) {
  if (s == "single") return SurfaceTarget::Single;
  if (s == "double") return SurfaceTarget::Double;
  if (s == "symmetric") return SurfaceTarget::Symmetric;
  if (s == "veronese21") return SurfaceTarget::Veronese21;
  if (s == "veronese18") return SurfaceTarget::Veronese18;
  if (s == "b4") return SurfaceTarget::B4Hexagon;
  throw OutOfDomain("unknown surface target '" + s + "'");
}

// Each pentagon patch is sampled on its n x n parameter grid (the pentagon
// corner at (1/2,0) sits mid-edge of the square seam by construction). Patch
// tags: faces 1..12 carry tag = face id; their conjugates 13..24 when the
// double cover is sampled.
inline MeshBuffer sample_surface(SurfaceTarget target, int n) {
  if (n < 2) throw OutOfDomain("sample_surface: need n >= 2 samples per side");

  if (target == SurfaceTarget::B4Hexagon) {
    // the six linear arcs of the doubled hexagon, on S^2, through veronese3
    MeshBuffer mesh;
    mesh.dim = 6;
    for (int sgn : {+1, -1}) {
      for (int seg = 0; seg < 3; ++seg) {
        std::vector<int> line;
        for (int i = 0; i < n; ++i) {
          double t = static_cast<double>(i) / (n - 1);
          auto h = B4Components::segment(seg, t);
          double norm = std::sqrt(h[0] * h[0] + h[1] * h[1] + h[2] * h[2]);
          std::array<double, 3> s{sgn * h[0] / norm, sgn * h[1] / norm, sgn * h[2] / norm};
          auto w = veronese3(s);
          line.push_back(mesh.push_vertex(w.data()));
        }
        mesh.polylines.push_back(std::move(line));
      }
    }
    return mesh;
  }

  const bool both_signs = target == SurfaceTarget::Double || target == SurfaceTarget::Symmetric;
  auto p = exactlin::factor_form(exactlin::q_reference());

  MeshBuffer mesh;
  switch (target) {
    case SurfaceTarget::Double:
    case SurfaceTarget::Symmetric: mesh.dim = 6; break;
    case SurfaceTarget::Single:
    case SurfaceTarget::Veronese21: mesh.dim = 21; break;
    case SurfaceTarget::Veronese18: mesh.dim = 18; break;
    default: break;
  }

  for (int face = 1; face <= 12; ++face) {
    for (int sgn : both_signs ? std::vector<int>{+1, -1} : std::vector<int>{+1}) {
      int tag = sgn > 0 ? face : 12 + face;
      int base = mesh.num_vertices();
      for (int i = 0; i < n; ++i) {
        double u = static_cast<double>(i) / (n - 1);
        for (int j = 0; j < n; ++j) {
          double v = static_cast<double>(j) / (n - 1);
          Vec6d pt;
          switch (target) {
            case SurfaceTarget::Double: pt = tess::lift_double_f(face, sgn, u, v); break;
            default: pt = tess::symmetric_embedding_f(face, sgn, u, v, p); break;
          }
          if (target == SurfaceTarget::Double || target == SurfaceTarget::Symmetric) {
            mesh.push_vertex(pt.data());
          } else {
            auto w = veronese6(pt, target == SurfaceTarget::Veronese18 ? VeroneseVariant::R18
                                                                       : VeroneseVariant::R21);
            mesh.push_vertex(w.data());
          }
        }
      }
      for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) {
          MeshBuffer::Face f;
          f.tag = tag;
          f.indices = {base + i * n + j, base + (i + 1) * n + j, base + (i + 1) * n + j + 1,
                       base + i * n + j + 1};
          mesh.faces.push_back(std::move(f));
        }
    }
  }
  return mesh;
}

// Coordinate projection; axes are 1-based.
inline MeshBuffer project(const MeshBuffer& mesh, const std::array<int, 3>& axes) {
  for (int a : axes)
    if (a < 1 || a > mesh.dim) throw BadAxes("project: axis out of range 1.." +
                                             std::to_string(mesh.dim));
  if (axes[0] == axes[1] || axes[0] == axes[2] || axes[1] == axes[2])
    throw BadAxes("project: axes must be distinct");
  MeshBuffer out;
  out.dim = 3;
  out.faces = mesh.faces;
  out.polylines = mesh.polylines;
  int nv = mesh.num_vertices();
  out.vertices.reserve(3 * nv);
  for (int i = 0; i < nv; ++i)
    for (int a : axes) out.vertices.push_back(mesh.vertices[i * mesh.dim + (a - 1)]);
  return out;
}

// ---------------------------------------------------------------------------
// File formats (ascii OBJ and PLY, 9 significant digits)

inline std::string fmt9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

inline void write_obj(const MeshBuffer& mesh, const std::string& path) {
  if (mesh.dim != 3) throw IoError("write_obj: project to 3 coordinates first");
  std::ofstream out(path);
  if (!out) throw IoError("write_obj: cannot open " + path);
  int nv = mesh.num_vertices();
  for (int i = 0; i < nv; ++i)
    out << "v " << fmt9(mesh.vertices[3 * i]) << ' ' << fmt9(mesh.vertices[3 * i + 1]) << ' '
        << fmt9(mesh.vertices[3 * i + 2]) << '\n';
  int group = INT32_MIN;
  for (const auto& f : mesh.faces) {
    if (f.tag != group) {
      group = f.tag;
      char buf[32];
      std::snprintf(buf, sizeof buf, "g face_%02d", group);
      out << buf << '\n';
    }
    out << 'f';
    for (int idx : f.indices) out << ' ' << idx + 1;
    out << '\n';
  }
  if (!mesh.polylines.empty()) {
    out << "g lines\n";
    for (const auto& line : mesh.polylines) {
      out << 'l';
      for (int idx : line) out << ' ' << idx + 1;
      out << '\n';
    }
  }
  if (!out) throw IoError("write_obj: write failed for " + path);
}

inline void write_ply(const MeshBuffer& mesh, const std::string& path) {
  if (mesh.dim != 3) throw IoError("write_ply: project to 3 coordinates first");
  std::ofstream out(path);
  if (!out) throw IoError("write_ply: cannot open " + path);
  std::size_t n_edges = 0;
  for (const auto& line : mesh.polylines) n_edges += line.size() > 1 ? line.size() - 1 : 0;
  out << "ply\nformat ascii 1.0\n";
  out << "element vertex " << mesh.num_vertices() << '\n';
  out << "property float x\nproperty float y\nproperty float z\n";
  out << "element face " << mesh.faces.size() << '\n';
  out << "property list uchar int vertex_indices\nproperty int face_id\n";
  if (n_edges) {
    out << "element edge " << n_edges << '\n';
    out << "property int vertex1\nproperty int vertex2\n";
  }
  out << "end_header\n";
  int nv = mesh.num_vertices();
  for (int i = 0; i < nv; ++i)
    out << fmt9(mesh.vertices[3 * i]) << ' ' << fmt9(mesh.vertices[3 * i + 1]) << ' '
        << fmt9(mesh.vertices[3 * i + 2]) << '\n';
  for (const auto& f : mesh.faces) {
    out << f.indices.size();
    for (int idx : f.indices) out << ' ' << idx;
    out << ' ' << f.tag << '\n';
  }
  for (const auto& line : mesh.polylines)
    for (std::size_t i = 0; i + 1 < line.size(); ++i)
      out << line[i] << ' ' << line[i + 1] << '\n';
  if (!out) throw IoError("write_ply: write failed for " + path);
}

inline void write_mesh(const MeshBuffer& mesh, const std::string& format,
                       const std::string& path) {
  if (format == "obj")
    write_obj(mesh, path);
  else if (format == "ply")
    write_ply(mesh, path);
  else
    throw IoError("write_mesh: format must be obj or ply");
}

// Minimal OBJ reader for round-trip checks: v/f/l/g records only.
inline MeshBuffer read_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("read_obj: cannot open " + path);
  MeshBuffer mesh;
  mesh.dim = 3;
  std::string line;
  int tag = 0;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string word;
    if (!(ss >> word)) continue;
    if (word == "v") {
      double x, y, z;
      ss >> x >> y >> z;
      double p[3] = {x, y, z};
      mesh.push_vertex(p);
    } else if (word == "g") {
      std::string name;
      ss >> name;
      tag = 0;
      auto us = name.rfind('_');
      if (us != std::string::npos) tag = std::atoi(name.c_str() + us + 1);
    } else if (word == "f") {
      MeshBuffer::Face f;
      f.tag = tag;
      int idx;
      while (ss >> idx) f.indices.push_back(idx - 1);
      mesh.faces.push_back(std::move(f));
    } else if (word == "l") {
      std::vector<int> pl;
      int idx;
      while (ss >> idx) pl.push_back(idx - 1);
      mesh.polylines.push_back(std::move(pl));
    }
  }
  return mesh;
}

}  // namespace pentafold::meshout

#endif
