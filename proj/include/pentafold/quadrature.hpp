#ifndef PENTAFOLD_QUADRATURE_HPP
#define PENTAFOLD_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "pentafold/errors.hpp"

namespace pentafold::quad {

using cxd = std::complex<double>;

// Pairwise reduction keeps summation order fixed and rounding mild.
inline cxd pairwise_sum(std::vector<cxd>& terms) {
  if (terms.empty()) return {0.0, 0.0};
  std::size_t n = terms.size();
  while (n > 1) {
    std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i + half < n; ++i) terms[i] += terms[i + half];
    n = half;
  }
  return terms[0];
}

struct QuadratureSpec {
  enum class Method { TanhSinh, GaussGrid };
  Method method = Method::TanhSinh;
  int level = 8;          // max halving level (tanh-sinh) or point count (Gauss)
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
};

// One tanh-sinh abscissa on (0,1): x = 1/(1+exp(-2u)), u = (pi/2) sinh t.
// lnx and ln(1-x) stay finite long after x itself rounds to 0 or 1, which is
// what integrable endpoint singularities need.
struct TsNode {
  double x, xc;    // x and 1-x
  double lnx, lnxc;
  double w;        // (pi/2) cosh(t) * h; the x(1-x) factor is the caller's
};

inline std::vector<TsNode> make_ts_level(int level, double t_max = 6.5) {
  double h = std::ldexp(1.0, -level);
  long kmax = static_cast<long>(t_max / h);
  std::vector<TsNode> nodes;
  nodes.reserve(2 * kmax + 1);
  for (long k = -kmax; k <= kmax; ++k) {
    double t = k * h;
    double u = (M_PI / 2) * std::sinh(t);
    TsNode n;
    if (u >= 0) {
      double e = std::exp(-2 * u);
      n.lnx = -std::log1p(e);
      n.lnxc = 2 * u < 700 ? -std::log1p(std::exp(2 * u)) : -2 * u;
      n.x = 1.0 / (1.0 + e);
      n.xc = std::exp(n.lnxc);
    } else {
      double e = std::exp(2 * u);
      n.lnxc = -std::log1p(e);
      n.lnx = -2 * u < 700 ? -std::log1p(std::exp(-2 * u)) : 2 * u;
      n.xc = 1.0 / (1.0 + e);
      n.x = std::exp(n.lnx);
    }
    n.w = M_PI * std::cosh(t) * h;
    nodes.push_back(n);
  }
  return nodes;
}

inline const std::vector<TsNode>& ts_level(int level) {
  static const std::vector<std::vector<TsNode>> tables = [] {
    std::vector<std::vector<TsNode>> t;
    for (int l = 0; l <= 10; ++l) t.push_back(make_ts_level(l));
    return t;
  }();
  if (level < 0 || level >= static_cast<int>(tables.size()))
    throw QuadratureFailure("tanh-sinh level out of range");
  return tables[level];
}

// Integrate f over (0,1) where the callback returns f(x) * x * (1-x), usually
// as exp(a*lnx + b*lnxc + ...). Doubles the level until two levels agree.
template <class F>
cxd tanh_sinh_01(F&& f, const QuadratureSpec& spec, double* est_error = nullptr) {
  cxd prev{0.0, 0.0};
  bool have_prev = false;
  for (int level = 3; level <= spec.level; ++level) {
    const auto& nodes = ts_level(level);
    std::vector<cxd> terms(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) terms[i] = f(nodes[i]) * nodes[i].w;
    cxd cur = pairwise_sum(terms);
    if (have_prev) {
      double diff = std::abs(cur - prev);
      if (diff <= spec.abs_tol || diff <= spec.rel_tol * std::abs(cur)) {
        if (est_error) *est_error = diff;
        return cur;
      }
    }
    prev = cur;
    have_prev = true;
  }
  throw QuadratureFailure("tanh_sinh_01: no convergence within level budget");
}

// Gauss-Legendre nodes/weights on (0,1), by Newton iteration on P_n.
struct GaussNode {
  double x, w;
};

inline std::vector<GaussNode> gauss_legendre_01(int n) {
  std::vector<GaussNode> nodes(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));  // Chebyshev initial guess
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i].x = 0.5 * (1.0 + x);
    nodes[i].w = 1.0 / ((1.0 - x * x) * dp * dp);  // already includes the 1/2 scaling
  }
  return nodes;
}

// Romberg-accelerated trapezoid on [0, 2pi] for smooth circle integrands.
template <class F>
cxd romberg_circle(F&& f, double tol, int max_doublings = 14) {
  const double len = 2 * M_PI;
  std::vector<std::vector<cxd>> table;
  int n = 16;
  cxd fsum0 = 0.5 * (f(0.0) + f(len));
  for (int row = 0; row <= max_doublings; ++row) {
    double h = len / n;
    std::vector<cxd> terms;
    terms.reserve(n);
    terms.push_back(fsum0);
    for (int k = 1; k < n; ++k) terms.push_back(f(k * h));
    cxd t = pairwise_sum(terms) * h;
    std::vector<cxd> r;
    r.push_back(t);
    if (!table.empty()) {
      const auto& prevrow = table.back();
      double fac = 4.0;
      for (std::size_t j = 0; j < prevrow.size(); ++j) {
        r.push_back((fac * r[j] - prevrow[j]) / (fac - 1.0));
        fac *= 4.0;
      }
      if (std::abs(r.back() - prevrow.back()) < tol) return r.back();
    }
    table.push_back(std::move(r));
    n *= 2;
  }
  throw QuadratureFailure("romberg_circle: no convergence");
}

}  // namespace pentafold::quad

#endif
