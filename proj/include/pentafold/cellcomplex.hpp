#ifndef PENTAFOLD_CELLCOMPLEX_HPP
#define PENTAFOLD_CELLCOMPLEX_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pentafold/errors.hpp"

namespace pentafold::cell {

// Polygonal cell complex. Faces are oriented vertex cycles; edges are derived
// (or supplied explicitly for 1-complexes). Vertex ids are dense 0-based; an
// optional label keeps the external (signed) naming.
class CellComplex {
 public:
  struct Face {
    std::vector<int> vertices;           // cyclic
    std::vector<std::pair<int, bool>> edges;  // (edge id, traversed forward)
  };

  CellComplex() = default;

  static CellComplex from_faces(int n_vertices, const std::vector<std::vector<int>>& cycles) {
    CellComplex c;
    c.n_vertices_ = n_vertices;
    std::map<std::pair<int, int>, int> edge_id;
    for (const auto& cyc : cycles) {
      Face f;
      f.vertices = cyc;
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
        if (a == b) throw DomainError("CellComplex: degenerate face edge");
        std::pair<int, int> key = std::minmax(a, b);
        auto it = edge_id.find(key);
        int id;
        if (it == edge_id.end()) {
          id = static_cast<int>(c.edges_.size());
          edge_id.emplace(key, id);
          c.edges_.push_back({key.first, key.second});
        } else {
          id = it->second;
        }
        f.edges.emplace_back(id, a == c.edges_[id][0]);
      }
      c.faces_.push_back(std::move(f));
    }
    return c;
  }

  // For complexes whose edges are combinatorial objects in their own right
  // (parallel edges allowed): cycles reference edge ids directly.
  static CellComplex from_faces_with_edges(int n_vertices,
                                           const std::vector<std::array<int, 2>>& edges,
                                           const std::vector<std::vector<std::pair<int, bool>>>&
                                               face_edges) {
    CellComplex c;
    c.n_vertices_ = n_vertices;
    c.edges_ = edges;
    for (const auto& fe : face_edges) {
      Face f;
      f.edges = fe;
      for (const auto& [id, fwd] : fe) f.vertices.push_back(fwd ? edges[id][0] : edges[id][1]);
      c.faces_.push_back(std::move(f));
    }
    return c;
  }

  // Edge-only complex (used for the degenerate 4-segment commutator loop).
  static CellComplex from_edges(int n_vertices, const std::vector<std::array<int, 2>>& edges) {
    CellComplex c;
    c.n_vertices_ = n_vertices;
    c.edges_ = edges;
    return c;
  }

  int num_vertices() const { return n_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  long long euler_characteristic() const {
    return static_cast<long long>(n_vertices_) - num_edges() + num_faces();
  }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  std::vector<int> vertex_face_degrees() const {
    std::vector<int> deg(n_vertices_, 0);
    for (const auto& f : faces_)
      for (int v : f.vertices) ++deg[v];
    return deg;
  }

  std::vector<int> edge_face_counts() const {
    std::vector<int> cnt(edges_.size(), 0);
    for (const auto& f : faces_)
      for (const auto& [id, fwd] : f.edges) ++cnt[id];
    return cnt;
  }

  bool connected() const {
    if (n_vertices_ == 0) return true;
    std::vector<std::vector<int>> adj(n_vertices_);
    for (const auto& e : edges_) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
    std::vector<char> vis(n_vertices_, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int seen = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!vis[w]) {
          vis[w] = 1;
          ++seen;
          stack.push_back(w);
        }
    }
    return seen == n_vertices_;
  }

 private:
  int n_vertices_ = 0;
  std::vector<std::array<int, 2>> edges_;
  std::vector<Face> faces_;
};

struct SurfaceInvariants {
  long long chi = 0;
  bool orientable = false;
  int genus_or_crosscaps = 0;  // genus if orientable, crosscap count otherwise
  bool connected = false;
};

// Euler characteristic, orientability by orientation propagation over the face
// adjacency graph, and genus (2-chi)/2 or crosscap count 2-chi.
inline SurfaceInvariants euler_and_genus(const CellComplex& c) {
  auto counts = c.edge_face_counts();
  for (std::size_t e = 0; e < counts.size(); ++e)
    if (counts[e] != 2)
      throw NotClosedSurface("euler_and_genus: edge " + std::to_string(e) + " lies on " +
                             std::to_string(counts[e]) + " faces, expected 2");

  // incident (face, direction) pairs per edge
  std::vector<std::vector<std::pair<int, bool>>> inc(counts.size());
  const auto& faces = c.faces();
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi)
    for (const auto& [id, fwd] : faces[fi].edges) inc[id].emplace_back(fi, fwd);

  // Consistent global orientation needs the two traversals of each edge to run
  // in opposite directions after face flips: flip[a] xor flip[b] = 1 xor da xor db.
  // That is a parity 2-coloring problem on the face adjacency graph.
  struct Constraint {
    int a, b;
    int parity;
  };
  std::vector<Constraint> cons;
  bool orientable = true;
  for (const auto& slots : inc) {
    int a = slots[0].first, b = slots[1].first;
    int parity = 1 ^ (slots[0].second ? 1 : 0) ^ (slots[1].second ? 1 : 0);
    if (a == b) {
      if (parity != 0) orientable = false;  // face meets itself coherently
    } else {
      cons.push_back({a, b, parity});
    }
  }
  std::vector<std::vector<std::pair<int, int>>> adj(faces.size());
  for (const auto& k : cons) {
    adj[k.a].emplace_back(k.b, k.parity);
    adj[k.b].emplace_back(k.a, k.parity);
  }
  std::vector<int> flip(faces.size(), -1);
  for (int start = 0; start < static_cast<int>(faces.size()); ++start) {
    if (flip[start] != -1) continue;
    flip[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (auto [g, parity] : adj[f]) {
        int want = flip[f] ^ parity;
        if (flip[g] == -1) {
          flip[g] = want;
          stack.push_back(g);
        } else if (flip[g] != want) {
          orientable = false;
        }
      }
    }
  }

  SurfaceInvariants s;
  s.chi = c.euler_characteristic();
  s.orientable = orientable;
  s.connected = c.connected();
  s.genus_or_crosscaps =
      orientable ? static_cast<int>((2 - s.chi) / 2) : static_cast<int>(2 - s.chi);
  return s;
}

// True when the face cycles as stored already orient the surface coherently
// (every edge is traversed once in each direction, with no flips needed).
inline bool orientation_consistent_as_given(const CellComplex& c) {
  std::vector<int> fwd(c.num_edges(), 0), bwd(c.num_edges(), 0);
  for (const auto& f : c.faces())
    for (const auto& [id, forward] : f.edges) ++(forward ? fwd[id] : bwd[id]);
  for (int e = 0; e < c.num_edges(); ++e)
    if (fwd[e] != 1 || bwd[e] != 1) return false;
  return true;
}

}  // namespace pentafold::cell

#endif
