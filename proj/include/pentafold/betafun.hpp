#ifndef PENTAFOLD_BETAFUN_HPP
#define PENTAFOLD_BETAFUN_HPP

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "pentafold/errors.hpp"
#include "pentafold/quadrature.hpp"

namespace pentafold::betafun {

using cxd = std::complex<double>;
using Alpha2 = std::array<cxd, 2>;
using Alpha5 = std::array<cxd, 5>;
using quad::QuadratureSpec;

inline bool is_nonpositive_integer(const cxd& z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Complex gamma by the g=7, n=9 Lanczos approximation with reflection for
// Re z < 1/2; relative error stays near 1e-13 on the working strip.
inline cxd gamma_c(cxd z) {
  static const double g = 7.0;
  static const double coef[9] = {0.99999999999980993,  676.5203681218851,
                                 -1259.1392167224028,  771.32342877765313,
                                 -176.61502916214059,  12.507343278686905,
                                 -0.13857109526572012, 9.9843695780195716e-6,
                                 1.5056327351493116e-7};
  if (is_nonpositive_integer(z))
    throw PoleAtNonPositiveInteger("gamma_c: pole at z = " + std::to_string(z.real()));
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return M_PI / (std::sin(M_PI * z) * gamma_c(1.0 - z));
  }
  z -= 1.0;
  cxd x = coef[0];
  for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
  cxd t = z + g + 0.5;
  return std::sqrt(2 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// Entire reciprocal 1/Gamma; exactly zero at the poles of Gamma.
inline cxd reciprocal_gamma(const cxd& z) {
  if (is_nonpositive_integer(z)) return {0.0, 0.0};
  return 1.0 / gamma_c(z);
}

// Gamma(a1) Gamma(a2) / Gamma(a1+a2), continued to all non-pole arguments;
// vanishes when a1+a2 is a non-positive integer but neither a_i is.
inline cxd b4_gamma(const Alpha2& a) {
  for (int i = 0; i < 2; ++i)
    if (is_nonpositive_integer(a[i]))
      throw PoleDetected("b4_gamma: pole, alpha_" + std::to_string(i + 1) +
                         " is a non-positive integer");
  return gamma_c(a[0]) * gamma_c(a[1]) * reciprocal_gamma(a[0] + a[1]);
}

// Direct integral over (0,1); valid for Re a1 > 0, Re a2 > 0.
inline cxd b4_quadrature(const Alpha2& a, const QuadratureSpec& spec = {},
                         double* est_error = nullptr) {
  if (a[0].real() <= 0.0 || a[1].real() <= 0.0)
    throw DomainError("b4_quadrature: requires Re alpha_1 > 0 and Re alpha_2 > 0");
  if (spec.method == QuadratureSpec::Method::GaussGrid) {
    auto nodes = quad::gauss_legendre_01(spec.level);
    std::vector<cxd> terms(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& n = nodes[i];
      terms[i] = std::pow(cxd(n.x, 0), a[0] - 1.0) * std::pow(cxd(1.0 - n.x, 0), a[1] - 1.0) *
                 n.w;
    }
    if (est_error) *est_error = -1.0;  // fixed rule, no internal estimate
    return quad::pairwise_sum(terms);
  }
  // integrand times x(1-x), all in log space
  auto f = [&](const quad::TsNode& n) { return std::exp(a[0] * n.lnx + a[1] * n.lnxc); };
  return quad::tanh_sinh_01(f, spec, est_error);
}

// The two-variable integrand z1^(a1-a2-a5) z2^(a2-1) (1-z1)^(a3-1)
// (z1-z2)^(a5-1) (1-z2)^(a4-a3-a5), principal branches.
inline cxd b5_integrand(const cxd& z1, const cxd& z2, const Alpha5& a) {
  auto on = [](const cxd& w) { return w == cxd(0.0, 0.0); };
  if (on(z1) || on(z2) || on(1.0 - z1) || on(1.0 - z2) || on(z1 - z2))
    throw BranchLocus("b5_integrand: point lies on a branch locus");
  return std::pow(z1, a[0] - a[1] - a[4]) * std::pow(z2, a[1] - 1.0) *
         std::pow(1.0 - z1, a[2] - 1.0) * std::pow(z1 - z2, a[4] - 1.0) *
         std::pow(1.0 - z2, a[3] - a[2] - a[4]);
}

// B5 over the triangle 0<y<x<1 via the substitution y = x v, which turns it
// into an integral over the unit square:
//   int_0^1 int_0^1 x^(a1-1) v^(a2-1) (1-x)^(a3-1) (1-v)^(a5-1) (1-xv)^(a4-a3-a5).
// The collapsed x-exponent makes Re a_i > 0 for all i sufficient.
inline cxd b5_quadrature(const Alpha5& a, const QuadratureSpec& spec = {},
                         double* est_error = nullptr) {
  for (int i = 0; i < 5; ++i)
    if (a[i].real() <= 0.0)
      throw DomainError("b5_quadrature: requires Re alpha_" + std::to_string(i + 1) + " > 0");
  if (spec.method != QuadratureSpec::Method::TanhSinh)
    throw DomainError("b5_quadrature: only the tanh-sinh method handles the edge singularities");
  const cxd q = a[3] - a[2] - a[4];
  auto level_sum = [&](int level) {
    const auto& nodes = quad::ts_level(level);
    std::size_t m = nodes.size();
    std::vector<cxd> rows(m);
    std::vector<cxd> terms(m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& nx = nodes[i];
      cxd xpart = a[0] * nx.lnx + a[2] * nx.lnxc;
      for (std::size_t j = 0; j < m; ++j) {
        const auto& nv = nodes[j];
        // 1 - xv = xc + vc - xc*vc; switch to log-sum-exp if both complements
        // underflow together
        double s = nx.xc + nv.xc;
        double ln1mxv;
        if (s > 1e-290) {
          ln1mxv = std::log(s - nx.xc * nv.xc);
        } else {
          double la = nx.lnxc, lb = nv.lnxc;
          double hi = std::max(la, lb), lo = std::min(la, lb);
          ln1mxv = hi + std::log1p(std::exp(lo - hi));
        }
        terms[j] = std::exp(xpart + a[1] * nv.lnx + a[4] * nv.lnxc + q * ln1mxv) *
                   (nx.w * nv.w);
      }
      rows[i] = quad::pairwise_sum(terms);
    }
    return quad::pairwise_sum(rows);
  };
  cxd prev{0, 0};
  bool have_prev = false;
  for (int level = 3; level <= spec.level; ++level) {
    cxd cur = level_sum(level);
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
  throw QuadratureFailure("b5_quadrature: no convergence within level budget");
}

// prod_j (1 - e^{2 pi i alpha_j})
template <std::size_t N>
cxd product_factor(const std::array<cxd, N>& a) {
  cxd p{1.0, 0.0};
  const cxd tau(0.0, 2 * M_PI);
  for (const auto& al : a) p *= 1.0 - std::exp(tau * al);
  return p;
}

// epsilon(a1..a5) inside the convergence region: the product factor times B5.
inline cxd epsilon5(const Alpha5& a, const QuadratureSpec& spec = {}) {
  cxd pf = product_factor(a);
  if (std::abs(pf) == 0.0) return {0.0, 0.0};
  return pf * b5_quadrature(a, spec);
}

// Exponents of the primed branch lines: a'_i = 1 + a_i - a_{i+1} - a_{i-1}
// with cyclic indices.
inline Alpha5 primed_exponents(const Alpha5& a) {
  Alpha5 p;
  for (int i = 0; i < 5; ++i) p[i] = 1.0 + a[i] - a[(i + 1) % 5] - a[(i + 4) % 5];
  return p;
}

}  // namespace pentafold::betafun

#endif
