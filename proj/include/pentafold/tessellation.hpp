#ifndef PENTAFOLD_TESSELLATION_HPP
#define PENTAFOLD_TESSELLATION_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "pentafold/cellcomplex.hpp"
#include "pentafold/crossratio.hpp"
#include "pentafold/errors.hpp"
#include "pentafold/exactlin.hpp"
#include "pentafold/poly.hpp"

namespace pentafold::tess {

using exactlin::MatFloat;
using exactlin::MatRat;
using exactlin::ProjVec;
using exactlin::Vec6d;
using exactlin::Vec6q;
using exactlin::Vec6z;

// ---------------------------------------------------------------------------
// Fixed combinatorial data of the 12/24-pentagon tessellations.

// Homogeneous coordinates of the 15 vertices, kept verbatim (three of them
// lead with a negative entry; the double cover needs the signed representative,
// so canonical projective form is applied only where a projective comparison
// is wanted).
inline const std::array<Vec6z, 15>& vertex_table() {
  static const std::array<Vec6z, 15> v = {{
      {1, 1, 0, 0, 1, 1},    // v1
      {1, 1, 1, 0, 0, 1},    // v2
      {1, 1, 1, 1, 0, 0},    // v3
      {1, 0, 1, 1, 1, 0},    // v4
      {1, 0, 0, 1, 1, 1},    // v5
      {0, 0, -1, 0, 1, 0},   // v6
      {0, 0, 0, -1, 0, 1},   // v7
      {0, 1, 0, 0, -1, 0},   // v8
      {0, 0, 1, 0, 0, -1},   // v9
      {0, -1, 0, 1, 0, 0},   // v10
      {0, 0, 0, 1, 0, 0},    // v11
      {0, 0, 0, 0, 0, 1},    // v12
      {0, 0, 1, 0, 0, 0},    // v13
      {0, 0, 0, 0, 1, 0},    // v14
      {0, 1, 0, 0, 0, 0},    // v15
  }};
  return v;
}

// The 24 oriented faces of the double cover on signed vertex ids; row 2k is
// face k+1, row 2k+1 its conjugate.
inline const std::array<std::array<int, 5>, 24>& face_table() {
  static const std::array<std::array<int, 5>, 24> f = {{
      {1, 2, 3, 4, 5},       {-1, -5, -4, -3, -2},
      {1, 5, -9, -13, 6},    {-1, -6, 13, 9, -5},
      {8, 15, 11, -7, 3},    {-8, -3, 7, -11, -15},
      {-12, 9, 4, 3, -7},    {12, 7, -3, -4, -9},
      {12, -9, 5, 10, 11},   {-12, -11, -10, -5, 9},
      {-8, -15, 10, 5, 4},   {8, -4, -5, -10, 15},
      {-8, 4, 9, 13, 14},    {8, -14, -13, -9, -4},
      {8, 3, 2, -6, -14},    {-8, 14, 6, -2, -3},
      {1, 6, 14, 15, -10},   {-1, 10, -15, -14, -6},
      {1, -10, -11, 7, 2},   {-1, -2, -7, 11, 10},
      {12, 13, -6, 2, 7},    {-12, -7, -2, 6, -13},
      {12, 11, 15, 14, 13},  {-12, -13, -14, -15, -11},
  }};
  return f;
}

// The ten hexagonal branch-line cycles on the double cover, in the order
// alpha_1..alpha_5, alpha'_1..alpha'_5.
inline const std::array<std::array<int, 6>, 10>& branch_hexagons() {
  static const std::array<std::array<int, 6>, 10> h = {{
      {1, 5, 10, -1, -5, -10},   // alpha_1
      {2, 1, 6, -2, -1, -6},     // alpha_2
      {3, 2, 7, -3, -2, -7},     // alpha_3
      {4, 3, 8, -4, -3, -8},     // alpha_4
      {5, 4, 9, -5, -4, -9},     // alpha_5
      {10, 15, 11, -10, -15, -11},  // alpha'_1
      {6, 13, 14, -6, -13, -14},    // alpha'_2
      {7, 11, 12, -7, -11, -12},    // alpha'_3
      {8, 14, 15, -8, -14, -15},    // alpha'_4
      {9, 12, 13, -9, -12, -13},    // alpha'_5
  }};
  return h;
}

// The same ten hexagons re-ordered into incidence walks along double-cover
// edges. The five unprimed rows already walk the surface as listed; the primed
// rows as listed have their second and third entries transposed relative to
// the edge structure, so the walk is derived from the face table instead.
inline const std::array<std::array<int, 6>, 10>& branch_hexagon_cycles() {
  static const std::array<std::array<int, 6>, 10> cycles = [] {
    std::set<std::pair<int, int>> edges;
    for (const auto& row : face_table())
      for (int j = 0; j < 5; ++j) edges.insert(std::minmax(row[j], row[(j + 1) % 5]));
    std::array<std::array<int, 6>, 10> out{};
    for (int h = 0; h < 10; ++h) {
      const auto& listed = branch_hexagons()[h];
      auto adjacent = [&](int a, int b) { return edges.count(std::minmax(a, b)) > 0; };
      std::array<int, 6> walk{};
      walk[0] = listed[0];
      // start toward the first listed vertex that is actually adjacent
      int second = 0;
      for (int c = 1; c < 6 && second == 0; ++c)
        if (adjacent(listed[0], listed[c])) second = listed[c];
      walk[1] = second;
      std::set<int> used{walk[0], walk[1]};
      for (int pos = 2; pos < 6; ++pos) {
        int next = 0;
        for (int c = 0; c < 6 && next == 0; ++c)
          if (!used.count(listed[c]) && adjacent(walk[pos - 1], listed[c])) next = listed[c];
        if (next == 0) throw DomainError("branch hexagon does not close into a 6-cycle");
        walk[pos] = next;
        used.insert(next);
      }
      if (!adjacent(walk[5], walk[0]))
        throw DomainError("branch hexagon does not close into a 6-cycle");
      out[h] = walk;
    }
    return out;
  }();
  return cycles;
}

// The 12 integer conjugands g_i whose P g_i P^-1 (with both signs) give the 24
// orthogonal patch transforms; g_1 is the identity.
inline const std::array<MatRat, 12>& gamma_seeds() {
  static const std::array<MatRat, 12> g = {{
      MatRat::identity(6),
      MatRat::from_rows({{1, 0, 0, -1, 0, 0},
                         {2, 0, -1, -1, 0, -1},
                         {0, 0, 0, -1, 0, 0},
                         {2, -1, 0, -1, -1, 0},
                         {0, 0, 0, 0, 0, 1},
                         {0, 1, 0, 0, 0, 0}}),
      MatRat::from_rows({{-1, 0, 0, 1, 0, 1},
                         {0, 0, 0, 0, 0, 1},
                         {2, -1, -1, 0, -1, 0},
                         {0, 0, 0, 1, 0, 0},
                         {-2, 0, 1, 1, 0, 1},
                         {-2, 1, 0, 1, 0, 1}}),
      MatRat::from_rows({{1, 0, 0, 0, 0, -1},
                         {2, -1, 0, -1, 0, -1},
                         {0, 0, 1, 0, 0, 0},
                         {0, 0, 0, 1, 0, 0},
                         {2, 0, -1, 0, -1, -1},
                         {0, 0, 0, 0, 0, -1}}),
      MatRat::from_rows({{-1, 1, 0, 1, 0, 0},
                         {-2, 1, 0, 1, 0, 1},
                         {-2, 1, 0, 1, 1, 0},
                         {0, 0, 0, 1, 0, 0},
                         {2, 0, -1, 0, -1, -1},
                         {0, 1, 0, 0, 0, 0}}),
      MatRat::from_rows({{1, -1, 0, 0, 0, 0},
                         {0, -1, 0, 0, 0, 0},
                         {2, -1, -1, 0, -1, 0},
                         {0, 0, 0, 1, 0, 0},
                         {0, 0, 0, 0, 1, 0},
                         {2, -1, 0, -1, 0, -1}}),
      MatRat::from_rows({{-1, 0, 1, 0, 0, 1},
                         {-2, 0, 1, 1, 0, 1},
                         {0, 0, 1, 0, 0, 0},
                         {2, -1, 0, -1, -1, 0},
                         {0, 0, 0, 0, 0, 1},
                         {-2, 0, 1, 0, 1, 1}}),
      MatRat::from_rows({{1, 0, 0, 0, -1, 0},
                         {0, 1, 0, 0, 0, 0},
                         {0, 0, 1, 0, 0, 0},
                         {2, -1, 0, -1, -1, 0},
                         {0, 0, 0, 0, -1, 0},
                         {2, 0, -1, 0, -1, -1}}),
      MatRat::from_rows({{-1, 1, 0, 0, 1, 0},
                         {0, 0, 0, 0, 1, 0},
                         {-2, 1, 0, 1, 1, 0},
                         {-2, 1, 1, 0, 1, 0},
                         {0, 1, 0, 0, 0, 0},
                         {2, 0, -1, -1, 0, -1}}),
      MatRat::from_rows({{1, 0, -1, 0, 0, 0},
                         {0, 0, 0, 0, 0, 1},
                         {2, -1, -1, 0, -1, 0},
                         {0, 0, -1, 0, 0, 0},
                         {2, 0, -1, -1, 0, -1},
                         {0, 0, 0, 0, 1, 0}}),
      MatRat::from_rows({{-1, 0, 1, 0, 1, 0},
                         {2, -1, 0, -1, 0, -1},
                         {0, 0, 1, 0, 0, 0},
                         {-2, 1, 1, 0, 1, 0},
                         {-2, 0, 1, 0, 1, 1},
                         {0, 0, 0, 0, 1, 0}}),
      MatRat::from_rows({{3, -1, -1, -1, -1, -1},
                         {2, 0, -1, 0, -1, -1},
                         {2, -1, -1, 0, -1, 0},
                         {2, -1, 0, -1, -1, 0},
                         {2, -1, 0, -1, 0, -1},
                         {2, 0, -1, -1, 0, -1}}),
  }};
  return g;
}

// ---------------------------------------------------------------------------
// Charts

// Square-to-triangle chart: (u,v) in [0,1]^2 onto 0 <= y <= x <= 1, two
// branches meeting along u = 1/2.
inline std::pair<Rational, Rational> uv_to_xy(const Rational& u, const Rational& v) {
  Rational zero(0), one(1), half(1, 2);
  if (u < zero || u > one || v < zero || v > one)
    throw OutOfDomain("uv_to_xy: (u,v) outside the closed unit square");
  if (u <= half) return {Rational(2) * u - u * v, u * v};
  return {one - v + u * v, Rational(-1) + Rational(2) * u + v - u * v};
}

// Row n of the triangle-to-component transformations, exact on the open
// triangle 0 < y < x < 1.
inline std::pair<Rational, Rational> region_map(int n, const Rational& x, const Rational& y) {
  Rational zero(0), one(1);
  if (!(zero < y && y < x && x < one))
    throw OutOfDomain("region_map: (x,y) must satisfy 0 < y < x < 1");
  switch (n) {
    case 1: return {x, y};
    case 2: return {(x - y) / (one - y), y / (y - one)};
    case 3: return {one / (x * y), x / y};
    case 4: return {y, x};
    case 5: return {y / (y - one), (x - y) / (one - y)};
    case 6: return {x / (x - one), (x - y) / (x - one)};
    case 7: return {(x - y) / (x - one), x / (x - one)};
    case 8: return {x / y, one / (x * y)};
    case 9: return {(one - y) / (x - y), y / (y - x)};
    case 10: return {one / (one - y), (one - x) / (one - y)};
    case 11: return {(one - x) / (one - y), one / (one - y)};
    case 12: return {y / (y - x), (one - y) / (x - y)};
    default: throw OutOfDomain("region_map: region id must be 1..12");
  }
}

// Homogeneous parameterization of the surface from chart parameters,
// p(s,t) = [s(1-t), s^2(1-t), t(1-t), s(1-s), s(1-t)^2, s-t].
inline Vec6q hom_param(const Rational& s, const Rational& t) {
  Rational one(1);
  return {s * (one - t),       s * s * (one - t), t * (one - t),
          s * (one - s),       s * (one - t) * (one - t), s - t};
}

namespace detail {

// (S, T, D) polynomials with s = S/D, t = T/D as polynomials in (x,y).
struct RegionNumerators {
  Poly2 s, t, d;
};

inline RegionNumerators region_numerators(int n, const Poly2& x, const Poly2& y) {
  Poly2 one = Poly2::constant(1);
  switch (n) {
    case 1: return {x, y, one};
    case 2: return {x - y, -y, one - y};
    case 3: return {one, x * x, x * y};
    case 4: return {y, x, one};
    case 5: return {y, y - x, y - one};
    case 6: return {x, x - y, x - one};
    case 7: return {x - y, x, x - one};
    case 8: return {x * x, one, x * y};
    case 9: return {one - y, -y, x - y};
    case 10: return {one, one - x, one - y};
    case 11: return {one - x, one, one - y};
    case 12: return {y, y - one, y - x};
    default: throw OutOfDomain("region id must be 1..12");
  }
}

// One face map as a reduced polynomial 6-vector per square branch. The naive
// composition vanishes identically at blown-up corners; dividing out the
// common polynomial factor realizes the closure extension exactly.
struct FacePolys {
  std::array<Poly2, 6> left, right;  // u <= 1/2, u >= 1/2
};

inline std::array<Poly2, 6> reduced_entries(const RegionNumerators& r) {
  const Poly2 &S = r.s, &T = r.t, &D = r.d;
  std::array<Poly2, 6> e = {S * (D - T) * D, S * S * (D - T), T * (D - T) * D,
                            S * (D - S) * D, S * (D - T) * (D - T), (S - T) * D * D};
  Poly2 g = e[0];
  for (int i = 1; i < 6; ++i) g = Poly2::gcd(g, e[i]);
  for (auto& p : e) p = p.div_exact(g);
  // Joint integer normalization keeps evaluation values small.
  BigInt den_l(1), num_g(0);
  for (const auto& p : e)
    for (const auto& c : p.coeffs())
      for (const auto& q : c.coeffs()) {
        if (q.is_zero()) continue;
        den_l = lcm(den_l, q.den());
        num_g = BigInt::gcd(num_g, q.num());
      }
  Rational scale(den_l, num_g);
  for (auto& p : e) p = scale * p;
  return e;
}

inline Vec6q eval_entries(const std::array<Poly2, 6>& e, const Rational& u, const Rational& v) {
  Vec6q out;
  for (int i = 0; i < 6; ++i) out[i] = e[i].eval(u, v);
  return out;
}

struct FaceData {
  std::array<FacePolys, 12> face;            // index = region id - 1
  std::array<std::array<int, 5>, 12> corner_ids;  // signed vertex id per corner
};

// The five pentagon corner parameters, in boundary order.
inline const std::array<std::pair<Rational, Rational>, 5>& corner_params() {
  static const std::array<std::pair<Rational, Rational>, 5> c = {{
      {Rational(1, 2), Rational(0)},
      {Rational(1), Rational(0)},
      {Rational(1), Rational(1)},
      {Rational(0), Rational(1)},
      {Rational(0), Rational(0)},
  }};
  return c;
}

inline const FaceData& face_data() {
  static const FaceData data = [] {
    FaceData d;
    Poly2 U = Poly2::u(), V = Poly2::v(), one = Poly2::constant(1), two = Poly2::constant(2);
    Poly2 xl = two * U - U * V, yl = U * V;
    Poly2 xr = one - V + U * V, yr = -one + two * U + V - U * V;

    const auto& verts = vertex_table();
    for (int n = 1; n <= 12; ++n) {
      auto left = reduced_entries(region_numerators(n, xl, yl));
      auto right = reduced_entries(region_numerators(n, xr, yr));

      // Align the right branch with the left along the seam u = 1/2; the two
      // reductions agree up to one rational constant.
      Rational ratio;
      bool found = false;
      for (int probe = 2; probe <= 4 && !found; ++probe) {
        Rational u(1, 2), v(1, probe);
        Vec6q a = eval_entries(left, u, v), b = eval_entries(right, u, v);
        for (int i = 0; i < 6 && !found; ++i)
          if (!b[i].is_zero()) {
            ratio = a[i] / b[i];
            found = true;
          }
      }
      if (!found) throw DomainError("face seam alignment failed for region " + std::to_string(n));
      for (auto& p : right) p = ratio * p;
      {
        Rational u(1, 2), v(2, 5);
        Vec6q a = eval_entries(left, u, v), b = eval_entries(right, u, v);
        for (int i = 0; i < 6; ++i)
          if (a[i] != b[i])
            throw DomainError("face branches disagree on the seam for region " +
                              std::to_string(n));
      }

      // Identify each corner with a signed vertex, then flip the whole face so
      // the corner set matches the signed face table row.
      std::array<int, 5> ids{};
      const auto& corners = corner_params();
      for (int c = 0; c < 5; ++c) {
        const auto& [u, v] = corners[c];
        Vec6q val = eval_entries(u <= Rational(1, 2) ? left : right, u, v);
        // Scale to a primitive integer vector, sign preserved.
        BigInt den_l(1), num_g(0);
        for (const auto& q : val) {
          if (q.is_zero()) continue;
          den_l = lcm(den_l, q.den());
          num_g = BigInt::gcd(num_g, q.num());
        }
        if (num_g.is_zero())
          throw DomainError("face corner evaluates to the zero vector; reduction incomplete");
        Rational scale(den_l, num_g);
        std::array<BigInt, 6> w;
        for (int i = 0; i < 6; ++i) w[i] = (val[i] * scale).num();
        int match = 0;
        for (int k = 0; k < 15 && match == 0; ++k) {
          bool plus = true, minus = true;
          for (int i = 0; i < 6; ++i) {
            if (w[i] != BigInt(verts[k][i])) plus = false;
            if (w[i] != BigInt(-verts[k][i])) minus = false;
          }
          if (plus) match = k + 1;
          if (minus) match = -(k + 1);
        }
        if (match == 0)
          throw DomainError("face corner does not match any tessellation vertex");
        ids[c] = match;
      }
      const auto& row = face_table()[2 * (n - 1)];
      auto matches = [&](int sgn) {
        for (int c = 0; c < 5; ++c) {
          bool ok = false;
          for (int r = 0; r < 5; ++r)
            if (sgn * ids[c] == row[r]) ok = true;
          if (!ok) return false;
        }
        return true;
      };
      int sgn = matches(+1) ? 1 : (matches(-1) ? -1 : 0);
      if (sgn == 0)
        throw DomainError("face " + std::to_string(n) +
                          " corners do not reproduce the face table row");
      if (sgn < 0) {
        for (auto& p : left) p = Rational(-1) * p;
        for (auto& p : right) p = Rational(-1) * p;
        for (auto& id : ids) id = -id;
      }
      d.face[n - 1] = {left, right};
      d.corner_ids[n - 1] = ids;
    }
    return d;
  }();
  return data;
}

// Double-precision copies of the reduced face polynomials; coefficients are
// small integers, so Horner evaluation on the unit square is accurate to a
// few ulps. Meshing and seam searches use this path, exact queries the other.
struct FacePolysF {
  struct Entry {
    std::vector<std::vector<double>> c;  // c[i][j] * u^i v^j
    double eval(double u, double v) const {
      double acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) {
        double row = 0;
        for (std::size_t j = c[i].size(); j-- > 0;) row = row * v + c[i][j];
        acc = acc * u + row;
      }
      return acc;
    }
  };
  std::array<Entry, 6> left, right;
};

inline FacePolysF::Entry to_float_entry(const Poly2& p) {
  FacePolysF::Entry e;
  e.c.resize(p.coeffs().size());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const auto& row = p.coeffs()[i].coeffs();
    e.c[i].resize(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) e.c[i][j] = row[j].to_double();
  }
  return e;
}

inline const std::array<FacePolysF, 12>& face_data_f() {
  static const std::array<FacePolysF, 12> data = [] {
    std::array<FacePolysF, 12> d;
    const auto& exact = face_data();
    for (int i = 0; i < 12; ++i)
      for (int e = 0; e < 6; ++e) {
        d[i].left[e] = to_float_entry(exact.face[i].left[e]);
        d[i].right[e] = to_float_entry(exact.face[i].right[e]);
      }
    return d;
  }();
  return data;
}

}  // namespace detail

// Exact value of the face-i parameterization on the closed unit square, as a
// continuous (signed) representative. The sign convention is the one that
// reproduces the face table rows at the corners.
inline Vec6q face_param_raw(int i, const Rational& u, const Rational& v) {
  Rational zero(0), one(1);
  if (i < 1 || i > 12) throw OutOfDomain("face_param: region id must be 1..12");
  if (u < zero || u > one || v < zero || v > one)
    throw OutOfDomain("face_param: (u,v) outside the closed unit square");
  const auto& f = detail::face_data().face[i - 1];
  return detail::eval_entries(u <= Rational(1, 2) ? f.left : f.right, u, v);
}

// Canonical projective representative of the same point.
inline ProjVec face_param(int i, const Rational& u, const Rational& v) {
  return ProjVec(face_param_raw(i, u, v));
}

// Signed vertex id at each of the five corner parameters of face i, in the
// boundary order (1/2,0),(1,0),(1,1),(0,1),(0,0).
inline std::array<int, 5> face_corner_ids(int i) {
  if (i < 1 || i > 12) throw OutOfDomain("face_corner_ids: region id must be 1..12");
  return detail::face_data().corner_ids[i - 1];
}

inline const std::array<std::pair<Rational, Rational>, 5>& pentagon_corner_params() {
  return detail::corner_params();
}

// ---------------------------------------------------------------------------
// Complexes

enum class Cover { Single, Double };

inline cell::CellComplex build_complex(Cover cover) {
  const auto& ft = face_table();
  if (cover == Cover::Single) {
    std::vector<std::vector<int>> cycles;
    for (int k = 0; k < 24; k += 2) {
      std::vector<int> cyc(5);
      for (int j = 0; j < 5; ++j) cyc[j] = std::abs(ft[k][j]) - 1;
      cycles.push_back(std::move(cyc));
    }
    return cell::CellComplex::from_faces(15, cycles);
  }
  // signed id -> dense id: +k -> k-1, -k -> 15 + k-1
  std::vector<std::vector<int>> cycles;
  for (const auto& row : ft) {
    std::vector<int> cyc(5);
    for (int j = 0; j < 5; ++j) cyc[j] = row[j] > 0 ? row[j] - 1 : 15 + (-row[j] - 1);
    cycles.push_back(std::move(cyc));
  }
  return cell::CellComplex::from_faces(30, cycles);
}

inline int signed_id_to_dense(int id) { return id > 0 ? id - 1 : 15 + (-id - 1); }

using cell::euler_and_genus;
using cell::SurfaceInvariants;

// ---------------------------------------------------------------------------
// Lifts and the symmetric embedding

inline Vec6d to_doubles(const Vec6q& v) {
  Vec6d r;
  for (int i = 0; i < 6; ++i) r[i] = v[i].to_double();
  return r;
}

// +/- f_i / sqrt(f_i^t Q f_i): the double-cover point over face i at (u,v).
inline Vec6d lift_double(int i, int sign, const Rational& u, const Rational& v) {
  Vec6q f = face_param_raw(i, u, v);
  Rational qf = exactlin::quadratic_form(exactlin::q_reference(), f);
  if (qf.sign() <= 0)
    throw NonPositiveNorm("lift_double: f^t Q f <= 0 off the variety closure");
  double scale = (sign >= 0 ? 1.0 : -1.0) / std::sqrt(qf.to_double());
  Vec6d r = to_doubles(f);
  for (auto& x : r) x *= scale;
  return r;
}

// The 24 orthogonal transforms +/- P g_i P^-1 tiling the sphere embedding.
inline std::vector<MatFloat> gamma_transforms(const MatFloat& p) {
  MatFloat pinv = p.upper_triangular_inverse();
  std::vector<MatFloat> out;
  out.reserve(24);
  for (const auto& g : gamma_seeds()) {
    MatFloat gamma = p * exactlin::to_float(g) * pinv;
    out.push_back(gamma);
    out.push_back(-gamma);
  }
  return out;
}

// F_i^sign(u,v) = P * lift: lands on the unit sphere S^5.
inline Vec6d symmetric_embedding(int i, int sign, const Rational& u, const Rational& v,
                                 const MatFloat& p) {
  return p.apply(lift_double(i, sign, u, v));
}

inline double norm6(const Vec6d& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// Floating-point evaluation path (meshes, seam searches)

inline Vec6d face_param_f(int i, double u, double v) {
  if (i < 1 || i > 12) throw OutOfDomain("face_param_f: region id must be 1..12");
  const auto& f = detail::face_data_f()[i - 1];
  const auto& entries = u <= 0.5 ? f.left : f.right;
  Vec6d out;
  for (int e = 0; e < 6; ++e) out[e] = entries[e].eval(u, v);
  return out;
}

inline Vec6d lift_double_f(int i, int sign, double u, double v) {
  Vec6d f = face_param_f(i, u, v);
  const auto& q = exactlin::q_reference();
  double qf = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) qf += f[a] * q(a, b).to_double() * f[b];
  if (qf <= 0) throw NonPositiveNorm("lift_double_f: f^t Q f <= 0");
  double scale = (sign >= 0 ? 1.0 : -1.0) / std::sqrt(qf);
  for (auto& x : f) x *= scale;
  return f;
}

inline Vec6d symmetric_embedding_f(int i, int sign, double u, double v, const MatFloat& p) {
  return p.apply(lift_double_f(i, sign, u, v));
}

// Pentagon boundary segment c (0..4) from corner c to corner c+1, as a line
// in the (u,v) square; t runs over [0,1].
inline std::pair<double, double> boundary_segment_uv(int c, double t) {
  switch (c) {
    case 0: return {0.5 + 0.5 * t, 0.0};
    case 1: return {1.0, t};
    case 2: return {1.0 - t, 1.0};
    case 3: return {0.0, 1.0 - t};
    case 4: return {0.5 * t, 0.0};
    default: throw OutOfDomain("boundary_segment_uv: segment index must be 0..4");
  }
}

}  // namespace pentafold::tess

#endif
