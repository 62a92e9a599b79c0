#ifndef PENTAFOLD_CONTOUR_HPP
#define PENTAFOLD_CONTOUR_HPP

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "pentafold/betafun.hpp"
#include "pentafold/cellcomplex.hpp"
#include "pentafold/errors.hpp"
#include "pentafold/quadrature.hpp"

namespace pentafold::contour {

using betafun::Alpha2;
using cxd = std::complex<double>;

// ---------------------------------------------------------------------------
// Phase bookkeeping

// Sheet label: which of the k branch factors e^{2 pi i alpha_j} have been
// accumulated. Parity of the popcount fixes the sheet orientation.
struct PhaseLabel {
  unsigned bits = 0;
  int parity() const { return __builtin_popcount(bits) & 1 ? -1 : +1; }
};

// The five branch lines bounding the base pentagon, in boundary order, and
// the exponent index each one carries.
enum class PentagonEdge { BlowupA, Z2Zero, Z1One, BlowupB, Diagonal };

// edge -> alpha index (1-based): A, z2=0, z1=1, B, z1-z2=0 carry
// alpha_1..alpha_5 respectively.
inline int edge_phase_exponent(PentagonEdge e) {
  switch (e) {
    case PentagonEdge::BlowupA: return 1;
    case PentagonEdge::Z2Zero: return 2;
    case PentagonEdge::Z1One: return 3;
    case PentagonEdge::BlowupB: return 4;
    case PentagonEdge::Diagonal: return 5;
  }
  return 0;
}

inline std::map<PentagonEdge, int> edge_phase_exponents() {
  return {{PentagonEdge::BlowupA, 1},
          {PentagonEdge::Z2Zero, 2},
          {PentagonEdge::Z1One, 3},
          {PentagonEdge::BlowupB, 4},
          {PentagonEdge::Diagonal, 5}};
}

// In the (u,v) square chart of face 1: left side u=0 is the blow-up line A,
// bottom-left v=0 (u<1/2) is z2=0, bottom-right is z1=1, right side u=1 is the
// blow-up line B, top v=1 is the diagonal z1=z2. Going around the pentagon the
// exponents appear in cyclic order, so corners join alpha_j to alpha_{j+1}.

// 2^k k-gon sheets glued edge-to-edge; sheets are joined along edge j exactly
// when their phase labels differ by alpha_j. The gluing map is kept explicit
// so a deliberate mis-gluing can be injected for testing.
class PhaseSurface {
 public:
  explicit PhaseSurface(int k) : k_(k) {
    if (k < 2) throw DomainError("PhaseSurface: need k >= 2 exponents");
    if (k > 16) throw DomainError("PhaseSurface: k > 16 is not a desk-scale object");
    sheets_ = 1u << k;
    partner_.assign(sheets_, std::vector<unsigned>(k));
    for (unsigned p = 0; p < sheets_; ++p)
      for (int j = 0; j < k; ++j) partner_[p][j] = p ^ (1u << j);
  }

  int k() const { return k_; }
  unsigned num_sheets() const { return sheets_; }
  unsigned partner(unsigned sheet, int edge) const { return partner_[sheet][edge]; }

  // Swap the partners of (p, edge) and (q, edge), keeping gluing an involution.
  void reglue(unsigned p, unsigned q, int edge) {
    unsigned p2 = partner_[p][edge], q2 = partner_[q][edge];
    partner_[p][edge] = q;
    partner_[q][edge] = p;
    partner_[p2][edge] = q2;
    partner_[q2][edge] = p2;
  }

  bool gluing_is_involution() const {
    for (unsigned p = 0; p < sheets_; ++p)
      for (int j = 0; j < k_; ++j)
        if (partner_[partner_[p][j]][j] != p) return false;
    return true;
  }

  // Walk the corner hole boundary at the meeting of edges i and j: cross i,
  // then j, then i, then j. True iff the walk closes for every start sheet —
  // the commutator certificate that lets the hole be capped by a disk.
  bool corner_cycle_check(int i, int j) const {
    if (i == j) throw DomainError("corner_cycle_check: need two distinct edges");
    for (unsigned p = 0; p < sheets_; ++p) {
      unsigned w = p;
      for (int step = 0; step < 2; ++step) {
        w = partner_[w][i];
        w = partner_[w][j];
      }
      if (w != p) return false;
    }
    return true;
  }

  // Corner holes: one per 4-sheet orbit at each meeting of cyclically adjacent
  // edges (j, j+1). For the clean gluing that is k * 2^(k-2) of them.
  int count_corner_disks() const {
    int total = 0;
    for (int j = 0; j < k_; ++j) {
      int jn = (j + 1) % k_;
      std::vector<char> seen(sheets_, 0);
      for (unsigned p = 0; p < sheets_; ++p) {
        if (seen[p]) continue;
        ++total;
        // orbit under crossing edges j and jn
        std::vector<unsigned> stack{p};
        seen[p] = 1;
        while (!stack.empty()) {
          unsigned w = stack.back();
          stack.pop_back();
          for (unsigned nxt : {partner_[w][j], partner_[w][jn]})
            if (!seen[nxt]) {
              seen[nxt] = 1;
              stack.push_back(nxt);
            }
        }
      }
    }
    return total;
  }

  bool connected() const {
    std::vector<char> seen(sheets_, 0);
    std::vector<unsigned> stack{0};
    seen[0] = 1;
    unsigned count = 1;
    while (!stack.empty()) {
      unsigned w = stack.back();
      stack.pop_back();
      for (int j = 0; j < k_; ++j) {
        unsigned n = partner_[w][j];
        if (!seen[n]) {
          seen[n] = 1;
          ++count;
          stack.push_back(n);
        }
      }
    }
    return count == sheets_;
  }

  // Close the surface: corner orbits become vertices, gluings become edges,
  // sheets become k-gon faces oriented by label parity. For k = 2 the sheets
  // degenerate to segments and the result is the 4-segment commutator loop as
  // a 1-complex.
  cell::CellComplex to_complex() const {
    if (k_ == 2) {
      // vertices = gluing junctions, edges = the four segments
      std::map<std::pair<unsigned, int>, int> junction;  // (min sheet, edge idx)
      int vid = 0;
      for (unsigned p = 0; p < sheets_; ++p)
        for (int j = 0; j < k_; ++j) {
          unsigned q = partner_[p][j];
          auto key = std::make_pair(std::min(p, q), j);
          if (!junction.count(key)) junction[key] = vid++;
        }
      std::vector<std::array<int, 2>> segs;  // one segment per sheet
      for (unsigned p = 0; p < sheets_; ++p) {
        unsigned q0 = partner_[p][0], q1 = partner_[p][1];
        segs.push_back({junction[{std::min(p, q0), 0}], junction[{std::min(p, q1), 1}]});
      }
      return cell::CellComplex::from_edges(vid, segs);
    }

    // corner orbit ids: corner c_j of a sheet sits between edges j and j+1
    std::vector<std::vector<int>> corner_id(sheets_, std::vector<int>(k_, -1));
    int vid = 0;
    for (int j = 0; j < k_; ++j) {
      int jn = (j + 1) % k_;
      for (unsigned p = 0; p < sheets_; ++p) {
        if (corner_id[p][j] != -1) continue;
        std::vector<unsigned> stack{p};
        corner_id[p][j] = vid;
        while (!stack.empty()) {
          unsigned w = stack.back();
          stack.pop_back();
          for (unsigned nxt : {partner_[w][j], partner_[w][jn]})
            if (corner_id[nxt][j] == -1) {
              corner_id[nxt][j] = vid;
              stack.push_back(nxt);
            }
        }
        ++vid;
      }
    }
    // one edge object per gluing pair; endpoints are the adjacent corner orbits
    std::map<std::pair<unsigned, int>, int> edge_ids;
    std::vector<std::array<int, 2>> edges;
    auto edge_of = [&](unsigned p, int j) {
      unsigned q = partner_[p][j];
      auto key = std::make_pair(std::min(p, q), j);
      auto it = edge_ids.find(key);
      if (it != edge_ids.end()) return it->second;
      int id = static_cast<int>(edges.size());
      // edge j runs from corner c_{j-1} to corner c_j
      int jprev = (j + k_ - 1) % k_;
      edges.push_back({corner_id[p][jprev], corner_id[p][j]});
      edge_ids.emplace(key, id);
      return id;
    };
    std::vector<std::vector<std::pair<int, bool>>> face_edges(sheets_);
    for (unsigned p = 0; p < sheets_; ++p) {
      std::vector<std::pair<int, bool>> cyc;
      for (int j = 0; j < k_; ++j) {
        int id = edge_of(p, j);
        int jprev = (j + k_ - 1) % k_;
        bool fwd = edges[id][0] == corner_id[p][jprev];
        cyc.emplace_back(id, fwd);
      }
      // parity orientation: odd sheets run the boundary backwards
      if (PhaseLabel{p}.parity() < 0) {
        std::reverse(cyc.begin(), cyc.end());
        for (auto& [id, fwd] : cyc) fwd = !fwd;
      }
      face_edges[p] = std::move(cyc);
    }
    return cell::CellComplex::from_faces_with_edges(vid, edges, face_edges);
  }

 private:
  int k_;
  unsigned sheets_;
  std::vector<std::vector<unsigned>> partner_;
};

struct PhaseSurfaceReport {
  PhaseSurface surface;
  cell::CellComplex complex;
};

inline PhaseSurfaceReport build_phase_surface(int k) {
  PhaseSurface s(k);
  return {s, s.to_complex()};
}

// ---------------------------------------------------------------------------
// The Pochhammer contour for the Euler Beta integrand

// Closed commutator path around z=0 and z=1: four copies of [r, 1-r] carrying
// the accumulated phases {1, e^{2 pi i a2}, e^{2 pi i (a1+a2)}, e^{2 pi i a1}}
// with alternating directions, closed off by four radius-r circles. Phases are
// explicit prefactors; every local power uses the principal branch, and the
// looping factor on each circle is continued in the winding angle.
struct PochhammerPath {
  double r = 1e-3;
  Alpha2 alpha{};

  cxd phase(double coeff_a1, double coeff_a2) const {
    const cxd tau(0.0, 2 * M_PI);
    return std::exp(tau * (coeff_a1 * alpha[0] + coeff_a2 * alpha[1]));
  }

  // Sum of the four phase-weighted straight segments equals
  // (1 - e^{2 pi i a1})(1 - e^{2 pi i a2}) * int_r^{1-r} beta dz.
  cxd segment_factor() const {
    return phase(0, 0) - phase(0, 1) + phase(1, 1) - phase(1, 0);
  }
};

struct PochhammerBreakdown {
  cxd segment_part{};  // the four phase-weighted straight segments
  cxd circle_part{};   // the four end loops
  cxd total() const { return segment_part + circle_part; }
};

inline PochhammerBreakdown pochhammer_b4_pieces(const Alpha2& alpha, double r = 1e-3,
                                                int max_points = 1 << 17) {
  if (!(r > 0.0 && r < 0.5)) throw DomainError("pochhammer_b4: need 0 < r < 1/2");
  PochhammerPath path{r, alpha};
  const cxd a1 = alpha[0], a2 = alpha[1];
  const double tol = 1e-12;

  // Straight part: beta on [r, 1-r], mapped onto (0,1) for tanh-sinh. The
  // integrand is finite there but has boundary layers of width r.
  quad::QuadratureSpec spec;
  spec.level = 10;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 1e-13;
  double width = 1.0 - 2.0 * r;
  auto seg = [&](const quad::TsNode& n) {
    double x = r + width * n.x;  // n.x in (0,1)
    // node weight carries x(1-x) of the unit chart; divide it back out
    cxd val = std::exp((a1 - 1.0) * std::log(x) + (a2 - 1.0) * std::log1p(-x));
    return val * (width * n.x * n.xc);
  };
  cxd seg_integral = quad::tanh_sinh_01(seg, spec);

  // Circles: z = c + r e^{i dir theta}; the factor vanishing at c is continued
  // in theta, the other stays principal. Tolerance scales with the loop
  // magnitude r^Re(alpha), which grows when the continuation reaches into
  // negative real parts.
  auto circle = [&](int center, int dir, const cxd& entering_phase) {
    const cxd& al = center == 0 ? a1 : a2;
    auto f = [&](double th) -> cxd {
      double ang = dir * th;
      cxd e(std::cos(ang), std::sin(ang));
      if (center == 0) {
        cxd z = r * e;
        cxd looping = std::exp((a1 - 1.0) * (std::log(r) + cxd(0, ang)));
        cxd fixed = std::pow(1.0 - z, a2 - 1.0);
        cxd dz = cxd(0, dir) * r * e;
        return looping * fixed * dz;
      }
      cxd z = 1.0 - r * e;
      cxd looping = std::exp((a2 - 1.0) * (std::log(r) + cxd(0, ang)));
      cxd fixed = std::pow(z, a1 - 1.0);
      cxd dz = cxd(0, -dir) * r * e;
      return looping * fixed * dz;
    };
    int doublings = 1;
    while ((16 << doublings) < max_points && doublings < 14) ++doublings;
    double scale = std::max(1.0, std::pow(r, std::min(0.0, al.real())));
    return entering_phase * quad::romberg_circle(f, tol * scale, doublings);
  };

  PochhammerBreakdown out;
  out.segment_part = path.segment_factor() * seg_integral;
  // traversal order: around 1 ccw, around 0 ccw, around 1 cw, around 0 cw
  out.circle_part = circle(1, +1, path.phase(0, 0));
  out.circle_part += circle(0, +1, path.phase(0, 1));
  out.circle_part += circle(1, -1, path.phase(1, 1));
  out.circle_part += circle(0, -1, path.phase(1, 0));
  return out;
}

inline cxd pochhammer_b4(const Alpha2& alpha, double r = 1e-3, int max_points = 1 << 17) {
  return pochhammer_b4_pieces(alpha, r, max_points).total();
}

}  // namespace pentafold::contour

#endif
