#ifndef PENTAFOLD_POLY_HPP
#define PENTAFOLD_POLY_HPP

#include <cstddef>
#include <vector>

#include "pentafold/errors.hpp"
#include "pentafold/rational.hpp"

namespace pentafold {

// Univariate polynomial over Q, ascending coefficients, trailing zeros trimmed.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(Rational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit Poly1(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static Poly1 var() { return Poly1(std::vector<Rational>{Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  friend Poly1 operator+(const Poly1& a, const Poly1& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return Poly1(std::move(r));
  }
  friend Poly1 operator-(const Poly1& a, const Poly1& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return Poly1(std::move(r));
  }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly1(std::move(r));
  }
  friend Poly1 operator*(const Rational& s, const Poly1& a) {
    if (s.is_zero()) return Poly1();
    std::vector<Rational> r = a.c_;
    for (auto& x : r) x *= s;
    return Poly1(std::move(r));
  }
  friend Poly1 operator-(const Poly1& a) { return Rational(-1) * a; }

  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

  // Field division: a = q*b + r with deg r < deg b.
  static void divmod(const Poly1& a, const Poly1& b, Poly1& q, Poly1& r) {
    if (b.is_zero()) throw DomainError("Poly1: division by zero polynomial");
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo;
    int db = b.degree();
    while (static_cast<int>(rem.size()) - 1 >= db) {
      if (rem.back().is_zero()) {
        rem.pop_back();
        continue;
      }
      int shift = static_cast<int>(rem.size()) - 1 - db;
      Rational f = rem.back() / b.lead();
      if (static_cast<int>(quo.size()) < shift + 1) quo.resize(shift + 1);
      quo[shift] = f;
      for (int j = 0; j <= db; ++j) rem[shift + j] -= f * b.c_[j];
      rem.pop_back();
    }
    q = Poly1(std::move(quo));
    r = Poly1(std::move(rem));
  }

  Poly1 div_exact(const Poly1& b) const {
    Poly1 q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw DomainError("Poly1: inexact division");
    return q;
  }

  // Monic gcd by the Euclidean algorithm.
  static Poly1 gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
      Poly1 q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rational(1) / a.lead()) * a;
  }

  Rational eval(const Rational& x) const {
    Rational r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  Poly1 derivative() const {
    if (c_.size() <= 1) return Poly1();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational((long long)i) * c_[i];
    return Poly1(std::move(r));
  }

 private:
  std::vector<Rational> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

// Bivariate polynomial over Q: a polynomial in u whose coefficients live in Q[v].
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(Rational c) {
    Poly1 p(std::move(c));
    if (!p.is_zero()) c_.push_back(std::move(p));
  }
  explicit Poly2(Poly1 p) {
    if (!p.is_zero()) c_.push_back(std::move(p));
  }
  explicit Poly2(std::vector<Poly1> c) : c_(std::move(c)) { trim(); }

  static Poly2 u() { return Poly2(std::vector<Poly1>{Poly1(), Poly1(Rational(1))}); }
  static Poly2 v() { return Poly2(Poly1::var()); }
  static Poly2 constant(long long k) { return Poly2(Rational(k)); }

  bool is_zero() const { return c_.empty(); }
  int degree_u() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Poly1>& coeffs() const { return c_; }
  Poly1 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Poly1(); }
  const Poly1& lead() const { return c_.back(); }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    std::vector<Poly1> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return Poly2(std::move(r));
  }
  friend Poly2 operator-(const Poly2& a, const Poly2& b) {
    std::vector<Poly1> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return Poly2(std::move(r));
  }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return Poly2();
    std::vector<Poly1> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly2(std::move(r));
  }
  friend Poly2 operator*(const Rational& s, const Poly2& a) {
    std::vector<Poly1> r = a.c_;
    for (auto& x : r) x = s * x;
    return Poly2(std::move(r));
  }
  friend Poly2 operator-(const Poly2& a) { return Rational(-1) * a; }

  friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

  Rational eval(const Rational& uu, const Rational& vv) const {
    Rational r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * uu + c_[i].eval(vv);
    return r;
  }

  // gcd over Q[v] of all u-coefficients (monic); the content in the u-direction.
  Poly1 content_u() const {
    Poly1 g;
    for (const auto& c : c_) g = Poly1::gcd(g, c);
    return g;
  }

  Poly2 divide_coeffs(const Poly1& g) const {
    std::vector<Poly1> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].div_exact(g);
    return Poly2(std::move(r));
  }

  // Pseudo-remainder of a by b in (Q[v])[u]; result is defined up to a factor
  // of lead(b)^k, which the primitive-part step removes anyway.
  static Poly2 prem(Poly2 a, const Poly2& b) {
    int db = b.degree_u();
    while (!a.is_zero() && a.degree_u() >= db) {
      int shift = a.degree_u() - db;
      Poly1 la = a.lead(), lb = b.lead();
      std::vector<Poly1> scaled(a.c_.size());
      for (std::size_t i = 0; i < a.c_.size(); ++i) scaled[i] = lb * a.c_[i];
      Poly2 anew(std::move(scaled));
      std::vector<Poly1> sub(static_cast<std::size_t>(shift) + b.c_.size());
      for (std::size_t i = 0; i < b.c_.size(); ++i) sub[shift + i] = la * b.c_[i];
      a = anew - Poly2(std::move(sub));
    }
    return a;
  }

  // Primitive PRS gcd in Q[u,v], normalized to primitive integer coefficients
  // with a positive leading coefficient.
  static Poly2 gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    Poly1 ca = a.content_u(), cb = b.content_u();
    Poly1 cg = Poly1::gcd(ca, cb);
    Poly2 A = a.divide_coeffs(ca), B = b.divide_coeffs(cb);
    if (A.degree_u() < B.degree_u()) std::swap(A, B);
    for (;;) {
      if (B.is_zero()) break;
      if (B.degree_u() == 0) {
        // Primitive parts share no u-dependent factor; only the content remains.
        A = Poly2(Rational(1));
        break;
      }
      Poly2 R = prem(A, B);
      A = std::move(B);
      if (R.is_zero()) {
        B = Poly2();
      } else {
        B = R.divide_coeffs(R.content_u());
      }
    }
    // Multiply the u-primitive gcd by the gcd of the contents.
    std::vector<Poly1> r(A.c_.size());
    for (std::size_t i = 0; i < A.c_.size(); ++i) r[i] = cg * A.c_[i];
    return normalize(Poly2(std::move(r)));
  }

  // Long division in u with exact coefficient division; throws on mismatch.
  Poly2 div_exact(const Poly2& b) const {
    if (b.is_zero()) throw DomainError("Poly2: division by zero polynomial");
    Poly2 rem = *this;
    int db = b.degree_u();
    std::vector<Poly1> quo;
    while (!rem.is_zero() && rem.degree_u() >= db) {
      int shift = rem.degree_u() - db;
      Poly1 f = rem.lead().div_exact(b.lead());
      if (static_cast<int>(quo.size()) < shift + 1) quo.resize(shift + 1);
      quo[shift] = f;
      std::vector<Poly1> sub(static_cast<std::size_t>(shift) + b.c_.size());
      for (std::size_t i = 0; i < b.c_.size(); ++i) sub[shift + i] = f * b.c_[i];
      rem = rem - Poly2(std::move(sub));
    }
    if (!rem.is_zero()) throw DomainError("Poly2: inexact division");
    return Poly2(std::move(quo));
  }

  // Scale so every coefficient is an integer, their collective gcd is 1, and
  // the leading coefficient (u-major, then v-major) is positive.
  static Poly2 normalize(const Poly2& p) {
    if (p.is_zero()) return p;
    BigInt den_l(1), num_g(0);
    for (const auto& c : p.c_)
      for (const auto& r : c.coeffs()) {
        if (r.is_zero()) continue;
        den_l = lcm(den_l, r.den());
        num_g = BigInt::gcd(num_g, r.num());
      }
    Rational scale(den_l, num_g);
    if ((scale * p.lead().lead()).sign() < 0) scale = -scale;
    return scale * p;
  }

 private:
  std::vector<Poly1> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

}  // namespace pentafold

#endif
