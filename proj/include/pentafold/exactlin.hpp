#ifndef PENTAFOLD_EXACTLIN_HPP
#define PENTAFOLD_EXACTLIN_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <set>
#include <vector>

#include "pentafold/errors.hpp"
#include "pentafold/rational.hpp"

namespace pentafold::exactlin {

// Dense exact rational matrix. Group work is all 6x6; Jacobians use other shapes.
class MatRat {
 public:
  MatRat() : rows_(0), cols_(0) {}
  MatRat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  static MatRat identity(std::size_t n) {
    MatRat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  static MatRat from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    MatRat m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
      std::size_t j = 0;
      for (long long v : row) m(i, j++) = Rational(v);
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend MatRat operator*(const MatRat& a, const MatRat& b) {
    MatRat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend MatRat operator+(const MatRat& a, const MatRat& b) {
    MatRat r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
  }

  friend MatRat operator*(const Rational& s, const MatRat& a) {
    MatRat r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = s * a.a_[i];
    return r;
  }

  friend MatRat operator-(const MatRat& a) { return Rational(-1) * a; }

  MatRat transpose() const {
    MatRat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i == j && !(*this)(i, j).is_one()) return false;
        if (i != j && !(*this)(i, j).is_zero()) return false;
      }
    return true;
  }

  friend bool operator==(const MatRat& a, const MatRat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const MatRat& a, const MatRat& b) { return !(a == b); }
  friend bool operator<(const MatRat& a, const MatRat& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
      if (a.a_[i] != b.a_[i]) return a.a_[i] < b.a_[i];
    }
    return false;
  }

  // Exact inverse by Gauss-Jordan; throws if singular.
  MatRat inverse() const {
    if (rows_ != cols_) throw DomainError("MatRat: inverse of non-square matrix");
    std::size_t n = rows_;
    MatRat a = *this, inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col).is_zero()) ++piv;
      if (piv == n) throw DomainError("MatRat: singular matrix");
      if (piv != col)
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(piv, j), a(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      Rational p = a(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) /= p;
        inv(col, j) /= p;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a(i, col).is_zero()) continue;
        Rational f = a(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) -= f * a(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

using Vec6q = std::array<Rational, 6>;
using Vec6z = std::array<long long, 6>;
using Vec6d = std::array<double, 6>;

// Canonical homogeneous integer 6-vector: entries coprime, first nonzero positive.
class ProjVec {
 public:
  explicit ProjVec(const Vec6q& v) {
    BigInt num_gcd(0), den_lcm(1);
    bool nonzero = false;
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      nonzero = true;
      num_gcd = BigInt::gcd(num_gcd, x.num());
      den_lcm = lcm(den_lcm, x.den());
    }
    if (!nonzero) throw DomainError("ProjVec: zero vector has no projective class");
    Rational scale(den_lcm, num_gcd);
    int lead = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      Rational e = v[i] * scale;
      if (lead == 0 && !e.is_zero()) lead = e.sign();
      e_[i] = e.num();
    }
    if (lead < 0)
      for (auto& x : e_) x = -x;
  }

  static ProjVec from_ints(const Vec6z& v) {
    Vec6q q;
    for (std::size_t i = 0; i < 6; ++i) q[i] = Rational(v[i]);
    return ProjVec(q);
  }

  const std::array<BigInt, 6>& entries() const { return e_; }
  const BigInt& operator[](std::size_t i) const { return e_[i]; }

  Vec6q to_rationals() const {
    Vec6q q;
    for (std::size_t i = 0; i < 6; ++i) q[i] = Rational(e_[i]);
    return q;
  }

  friend bool operator==(const ProjVec& a, const ProjVec& b) { return a.e_ == b.e_; }
  friend bool operator!=(const ProjVec& a, const ProjVec& b) { return !(a == b); }
  friend bool operator<(const ProjVec& a, const ProjVec& b) {
    for (std::size_t i = 0; i < 6; ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
    return false;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + e_[i].to_string();
    return s + "]";
  }

 private:
  ProjVec() = default;
  std::array<BigInt, 6> e_;
};

// 6x6 double matrix; holds the float Cholesky factor and the gamma transforms.
struct MatFloat {
  std::array<std::array<double, 6>, 6> a{};

  static MatFloat identity() {
    MatFloat m;
    for (int i = 0; i < 6; ++i) m.a[i][i] = 1.0;
    return m;
  }

  friend MatFloat operator*(const MatFloat& x, const MatFloat& y) {
    MatFloat r;
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < 6; ++k) {
        double v = x.a[i][k];
        if (v == 0.0) continue;
        for (int j = 0; j < 6; ++j) r.a[i][j] += v * y.a[k][j];
      }
    return r;
  }

  friend MatFloat operator-(const MatFloat& x) {
    MatFloat r;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) r.a[i][j] = -x.a[i][j];
    return r;
  }

  Vec6d apply(const Vec6d& v) const {
    Vec6d r{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) r[i] += a[i][j] * v[j];
    return r;
  }

  MatFloat transpose() const {
    MatFloat r;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) r.a[i][j] = a[j][i];
    return r;
  }

  // Inverse of an upper-triangular factor by back substitution.
  MatFloat upper_triangular_inverse() const {
    MatFloat r;
    for (int j = 5; j >= 0; --j) {
      r.a[j][j] = 1.0 / a[j][j];
      for (int i = j - 1; i >= 0; --i) {
        double s = 0.0;
        for (int k = i + 1; k <= j; ++k) s += a[i][k] * r.a[k][j];
        r.a[i][j] = -s / a[i][i];
      }
    }
    return r;
  }

  double max_abs_diff(const MatFloat& o) const {
    double m = 0.0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m = std::max(m, std::abs(a[i][j] - o.a[i][j]));
    return m;
  }
};

inline MatFloat to_float(const MatRat& m) {
  MatFloat r;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) r.a[i][j] = m(i, j).to_double();
  return r;
}

// ---------------------------------------------------------------------------
// Fixed matrices: the two tessellation symmetry generators and the averaged
// invariant form they produce.

inline const MatRat& x5() {
  static const MatRat m = MatRat::from_rows({{1, 0, 0, 0, 0, 0},
                                             {0, 0, 1, 0, 0, 0},
                                             {0, 0, 0, 1, 0, 0},
                                             {0, 0, 0, 0, 1, 0},
                                             {0, 0, 0, 0, 0, 1},
                                             {0, 1, 0, 0, 0, 0}});
  return m;
}

inline const MatRat& x2() {
  static const MatRat m = MatRat::from_rows({{1, 0, 0, 0, 0, -1},
                                             {2, 0, -1, 0, -1, -1},
                                             {0, 0, 0, 1, 0, 0},
                                             {0, 0, 1, 0, 0, 0},
                                             {2, -1, 0, -1, 0, -1},
                                             {0, 0, 0, 0, 0, -1}});
  return m;
}

// The order-120 group's invariant quadratic form, for cross-checking the
// averaged sum.
inline const MatRat& q_reference() {
  static const MatRat m = MatRat::from_rows({{20, -6, -6, -6, -6, -6},
                                             {-6, 4, 1, 2, 2, 1},
                                             {-6, 1, 4, 1, 2, 2},
                                             {-6, 2, 1, 4, 1, 2},
                                             {-6, 2, 2, 1, 4, 1},
                                             {-6, 1, 2, 2, 1, 4}});
  return m;
}

// ---------------------------------------------------------------------------
// Operations

// Multiplicative closure by BFS from the identity, right-multiplying by the
// generators in the given order. Exact matrices make membership unambiguous.
inline std::vector<MatRat> group_closure(const std::vector<MatRat>& generators,
                                         std::size_t cap = 10000) {
  std::vector<MatRat> out;
  std::set<MatRat> seen;
  std::deque<MatRat> frontier;
  MatRat id = MatRat::identity(generators.empty() ? 6 : generators.front().rows());
  seen.insert(id);
  out.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    MatRat m = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      MatRat p = m * g;
      if (seen.insert(p).second) {
        if (seen.size() > cap)
          throw ClosureOverflow("group_closure: cap " + std::to_string(cap) +
                                " exceeded; generators do not close");
        out.push_back(p);
        frontier.push_back(p);
      }
    }
  }
  return out;
}

inline bool involution_check(const MatRat& m) {
  if (m.rows() != m.cols()) throw DomainError("involution_check: matrix not square");
  return (m * m).is_identity();
}

// scale * sum over the group of g^t * g; symmetric by construction.
inline MatRat invariant_form(const std::vector<MatRat>& group, const Rational& scale) {
  if (group.empty()) throw DomainError("invariant_form: empty group");
  std::size_t n = group.front().rows();
  MatRat sum(n, n);
  for (const auto& g : group) sum = sum + g.transpose() * g;
  return scale * sum;
}

inline Rational quadratic_form(const MatRat& q, const Vec6q& v) {
  Rational r;
  for (std::size_t i = 0; i < 6; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < 6; ++j) r += v[i] * q(i, j) * v[j];
  }
  return r;
}

inline Rational leading_principal_minor(const MatRat& m, std::size_t k) {
  // Exact determinant of the leading k x k block by fraction-free elimination.
  MatRat a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = m(i, j);
  Rational det(1);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a(piv, col).is_zero()) ++piv;
    if (piv == k) return Rational(0);
    if (piv != col) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < k; ++i) {
      if (a(i, col).is_zero()) continue;
      Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < k; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

// Upper-triangular float P with positive diagonal and P^t P = q.
// Positive definiteness is certified exactly before any floating point runs.
inline MatFloat factor_form(const MatRat& q) {
  if (q.rows() != 6 || q.cols() != 6) throw DomainError("factor_form: expected 6x6 matrix");
  if (q != q.transpose()) throw NotPositiveDefinite("factor_form: matrix not symmetric");
  for (std::size_t k = 1; k <= 6; ++k) {
    if (leading_principal_minor(q, k).sign() <= 0)
      throw NotPositiveDefinite("factor_form: leading principal minor " + std::to_string(k) +
                                " is not positive");
  }
  // Cholesky q = L L^t, returned as P = L^t.
  std::array<std::array<double, 6>, 6> l{};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = q(i, j).to_double();
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j)
        l[i][j] = std::sqrt(s);
      else
        l[i][j] = s / l[j][j];
    }
  }
  MatFloat p;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) p.a[i][j] = l[j][i];
  return p;
}

inline std::size_t rank_exact(const MatRat& m) {
  MatRat a = m;
  std::size_t rank = 0;
  std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(rank, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a(i, col).is_zero()) continue;
      Rational f = a(i, col) / a(rank, col);
      for (std::size_t j = col; j < cols; ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace pentafold::exactlin

#endif
