#ifndef PENTAFOLD_CROSSRATIO_HPP
#define PENTAFOLD_CROSSRATIO_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pentafold/errors.hpp"
#include "pentafold/exactlin.hpp"
#include "pentafold/rational.hpp"

namespace pentafold::crossratio {

using exactlin::MatRat;
using exactlin::Vec6q;

// Point of the projective line over Q: a finite rational or the point at infinity.
class ExtReal {
 public:
  ExtReal() : v_(Rational(0)) {}
  ExtReal(Rational v) : v_(std::move(v)) {}  // NOLINT: implicit by design
  ExtReal(long long v) : v_(Rational(v)) {}  // NOLINT
  static ExtReal infinity() { return ExtReal(infinity_tag{}); }

  bool is_infinite() const { return !v_.has_value(); }
  const Rational& value() const {
    if (!v_) throw DomainError("ExtReal: value() on the point at infinity");
    return *v_;
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.v_ == *b.v_;
  }
  friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }

 private:
  struct infinity_tag {};
  explicit ExtReal(infinity_tag) {}
  std::optional<Rational> v_;
};

// u(w,x,y,z) = (w-y)(x-z) / ((w-z)(x-y)); an infinite argument cancels the two
// factors containing it (the projective limit), keeping the arithmetic exact.
inline Rational cross_ratio(const ExtReal& w, const ExtReal& x, const ExtReal& y,
                            const ExtReal& z) {
  const ExtReal* pts[4] = {&w, &x, &y, &z};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*pts[i] == *pts[j])
        throw DegenerateQuadruple("cross_ratio: arguments " + std::to_string(i) + " and " +
                                  std::to_string(j) + " coincide");
  if (w.is_infinite()) return (x.value() - z.value()) / (x.value() - y.value());
  if (x.is_infinite()) return (w.value() - y.value()) / (w.value() - z.value());
  if (y.is_infinite()) return (x.value() - z.value()) / (w.value() - z.value());
  if (z.is_infinite()) return (w.value() - y.value()) / (x.value() - y.value());
  return ((w.value() - y.value()) * (x.value() - z.value())) /
         ((w.value() - z.value()) * (x.value() - y.value()));
}

// The N(N-3)/2 cross-ratios u_ij, 1 <= i < j <= N, 2 <= j-i <= N-2, stored in
// lexicographic (i,j) order. For N=5 that is (u13,u14,u24,u25,u35).
struct CrossRatioVec {
  int n = 0;
  std::vector<std::pair<int, int>> index;  // 1-based pairs
  std::vector<Rational> values;

  static std::vector<std::pair<int, int>> index_set(int n) {
    std::vector<std::pair<int, int>> idx;
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (j - i >= 2 && j - i <= n - 2) idx.emplace_back(i, j);
    return idx;
  }

  // Lookup with the cyclic conventions u_mn = u_nm and u_{m,n+N} = u_{m,n}.
  const Rational& at(int m, int nn) const {
    m = ((m - 1) % n + n) % n + 1;
    nn = ((nn - 1) % n + n) % n + 1;
    if (m > nn) std::swap(m, nn);
    for (std::size_t k = 0; k < index.size(); ++k)
      if (index[k].first == m && index[k].second == nn) return values[k];
    throw DomainError("CrossRatioVec: index (" + std::to_string(m) + "," + std::to_string(nn) +
                      ") outside the valid range");
  }
};

// The two-parameter chart of the five-point cross-ratio surface:
// (u13,u14,u24,u25,u35) = (s, t/s, (1-s)/(1-t), 1-t, (s-t)/(s(1-t))).
inline CrossRatioVec five_from_params(const Rational& s, const Rational& t) {
  Rational zero(0), one(1);
  if (s == zero || s == one || t == zero || t == one || s == t)
    throw DegenerateParams("five_from_params: require s,t distinct and not in {0,1}");
  CrossRatioVec u;
  u.n = 5;
  u.index = CrossRatioVec::index_set(5);
  u.values = {s, t / s, (one - s) / (one - t), one - t, (s - t) / (s * (one - t))};
  return u;
}

// All u_ij = u(x_i, x_{i+1}, x_{j+1}, x_j) with cyclic indices.
inline CrossRatioVec n_point_cross_ratios(const std::vector<ExtReal>& pts) {
  int n = static_cast<int>(pts.size());
  if (n < 4) throw DomainError("n_point_cross_ratios: need at least 4 points");
  auto at = [&](int k) -> const ExtReal& { return pts[((k - 1) % n + n) % n]; };
  CrossRatioVec u;
  u.n = n;
  u.index = CrossRatioVec::index_set(n);
  u.values.reserve(u.index.size());
  for (auto [i, j] : u.index)
    u.values.push_back(cross_ratio(at(i), at(i + 1), at(j + 1), at(j)));
  return u;
}

// The canonical gauge {0, infinity, 1, t_1, ..., t_{N-3}}: every point of the
// cross-ratio set arises this way from a unique parameter tuple.
inline CrossRatioVec cross_ratios_from_params(const std::vector<Rational>& ts) {
  Rational zero(0), one(1);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] == zero || ts[i] == one)
      throw DegenerateParams("cross_ratios_from_params: parameters must avoid 0 and 1");
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      if (ts[i] == ts[j])
        throw DegenerateParams("cross_ratios_from_params: parameters must be distinct");
  }
  std::vector<ExtReal> pts{ExtReal(zero), ExtReal::infinity(), ExtReal(one)};
  for (const auto& t : ts) pts.emplace_back(t);
  return n_point_cross_ratios(pts);
}

// One residual u_ij - (1 - prod_{m=i+1}^{j-1} prod_{n=j+1}^{i-1} u_mn) per
// entry; identically zero exactly on the cross-ratio variety.
inline std::vector<Rational> constraint_residuals(const CrossRatioVec& u) {
  std::vector<Rational> res;
  res.reserve(u.index.size());
  for (std::size_t k = 0; k < u.index.size(); ++k) {
    auto [i, j] = u.index[k];
    Rational prod(1);
    for (int m = i + 1; m <= j - 1; ++m)
      for (int nn = j + 1; nn <= i - 1 + u.n; ++nn) prod *= u.at(m, nn);
    res.push_back(u.values[k] - (Rational(1) - prod));
  }
  return res;
}

// The five homogeneous quadrics cutting out the surface in RP^5.
inline std::array<Rational, 5> projective_residuals(const Vec6q& z) {
  std::array<Rational, 5> r;
  Rational z0sq = z[0] * z[0];
  for (int k = 0; k < 5; ++k) {
    // z0^2 - z0*z_{k+1} - z_{k+3}*z_{k+4} with 1-based cyclic indices in 1..5
    int a = (k + 2) % 5 + 1;  // k+3 wrapped
    int b = (k + 3) % 5 + 1;  // k+4 wrapped
    r[k] = z0sq - z[0] * z[k + 1] - z[a] * z[b];
  }
  return r;
}

inline std::array<Rational, 5> projective_residuals(const exactlin::ProjVec& z) {
  return projective_residuals(z.to_rationals());
}

// Jacobian of the five affine constraints 1 - z_k - z_{k+2} z_{k+3} (cyclic,
// 1-based) with respect to (z1..z5).
inline MatRat affine_jacobian(const std::array<Rational, 5>& z) {
  MatRat jac(5, 5);
  for (int k = 0; k < 5; ++k) {
    int a = (k + 2) % 5;  // z_{k+3}, 0-based
    int b = (k + 3) % 5;  // z_{k+4}, 0-based
    jac(k, k) += Rational(-1);
    jac(k, a) += -z[b];
    jac(k, b) += -z[a];
  }
  return jac;
}

inline std::array<Rational, 5> affine_point(const CrossRatioVec& u) {
  if (u.n != 5 || u.values.size() != 5)
    throw DomainError("affine_point: expected a five-point cross-ratio vector");
  return {u.values[0], u.values[1], u.values[2], u.values[3], u.values[4]};
}

// (dimension of the ambient projective space, number of connected components)
// for the N-point cross-ratio variety: (N(N-3)/2, (N-1)!/2).
inline std::pair<std::uint64_t, std::uint64_t> counting(int n) {
  if (n < 4) throw DomainError("counting: need N >= 4");
  if (n > 21) throw DomainError("counting: component count overflows 64 bits beyond N=21");
  std::uint64_t dim = static_cast<std::uint64_t>(n) * (n - 3) / 2;
  std::uint64_t fact = 1;
  for (int k = 2; k <= n - 1; ++k) fact *= static_cast<std::uint64_t>(k);
  return {dim, fact / 2};
}

}  // namespace pentafold::crossratio

#endif
