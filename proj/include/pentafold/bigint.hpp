#ifndef PENTAFOLD_BIGINT_HPP
#define PENTAFOLD_BIGINT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentafold {

// Arbitrary-precision signed integer, sign + little-endian base-2^32 magnitude.
// Small values (<= 2 limbs) take fast native paths; everything here stays at
// "hand calculator" scale so schoolbook algorithms are plenty.
class BigInt {
 public:
  BigInt() : sign_(0) {}

  BigInt(long long v) : sign_(0) {  // NOLINT: implicit by design
    if (v == 0) return;
    unsigned long long m;
    if (v < 0) {
      sign_ = -1;
      m = ~static_cast<unsigned long long>(v) + 1ULL;
    } else {
      sign_ = 1;
      m = static_cast<unsigned long long>(v);
    }
    mag_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
    if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
  }

  explicit BigInt(const std::string& s) {
    size_t i = 0;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sg = -1;
      ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty string");
    BigInt acc;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
      acc = acc * BigInt(10) + BigInt(s[i] - '0');
    }
    *this = acc;
    if (sign_ != 0) sign_ = sg;
  }

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  int sign() const { return sign_; }

  bool fits_int64() const {
    if (mag_.size() > 2) return false;
    unsigned long long m = mag64_();
    if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
  }

  long long to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: to_int64 overflow");
    unsigned long long m = mag64_();
    if (sign_ < 0) return -static_cast<long long>(m - 1) - 1;
    return static_cast<long long>(m);
  }

  double to_double() const {
    if (sign_ == 0) return 0.0;
    // Top three limbs carry more than double precision; scale the rest.
    double acc = 0.0;
    size_t n = mag_.size();
    size_t top = n > 3 ? n - 3 : 0;
    for (size_t i = n; i-- > top;) acc = acc * 4294967296.0 + mag_[i];
    double r = std::ldexp(acc, static_cast<int>(32 * top));
    return sign_ < 0 ? -r : r;
  }

  friend BigInt operator-(const BigInt& a) {
    BigInt r = a;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
      unsigned __int128 p = static_cast<unsigned __int128>(a.mag64_()) * b.mag64_();
      while (p) {
        r.mag_.push_back(static_cast<uint32_t>(p & 0xffffffffULL));
        p >>= 32;
      }
    } else {
      r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
      for (size_t i = 0; i < a.mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.mag_.size(); ++j) {
          uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
          r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
          carry = cur >> 32;
        }
        size_t k = i + b.mag_.size();
        while (carry) {
          uint64_t cur = r.mag_[k] + carry;
          r.mag_[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
          carry = cur >> 32;
          ++k;
        }
      }
      trim(r.mag_);
    }
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  // Truncated toward zero; remainder carries the dividend's sign.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) {
      q = BigInt();
      r = BigInt();
      return;
    }
    if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
      unsigned long long am = a.mag64_(), bm = b.mag64_();
      q = from_mag64(am / bm, a.sign_ * b.sign_);
      r = from_mag64(am % bm, a.sign_);
      return;
    }
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    std::vector<uint32_t> rem, quo;
    divmod_mag(a.mag_, b.mag_, quo, rem);
    q.mag_ = std::move(quo);
    trim(q.mag_);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.mag_ = std::move(rem);
    trim(r.mag_);
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }

  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  // Binary (Stein) gcd on magnitudes; avoids division entirely.
  static BigInt gcd(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b.abs();
    if (b.sign_ == 0) return a.abs();
    if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
      unsigned long long x = a.mag64_(), y = b.mag64_();
      while (y) {
        unsigned long long t = x % y;
        x = y;
        y = t;
      }
      return from_mag64(x, 1);
    }
    std::vector<uint32_t> u = a.mag_, v = b.mag_;
    int shift = 0;
    while (even(u) && even(v)) {
      shr1(u);
      shr1(v);
      ++shift;
    }
    while (even(u)) shr1(u);
    for (;;) {
      while (even(v)) shr1(v);
      if (cmp_mag(u, v) > 0) u.swap(v);
      v = sub_mag(v, u);
      trim(v);
      if (v.empty()) break;
    }
    BigInt r;
    r.mag_ = u;
    for (int i = 0; i < shift; ++i) shl1(r.mag_);
    r.sign_ = 1;
    return r;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::string out;
    std::vector<uint32_t> m = mag_;
    while (!m.empty()) {
      uint64_t rem = 0;
      for (size_t i = m.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      trim(m);
      std::string chunk = std::to_string(rem);
      if (!m.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
      out = chunk + out;
    }
    return sign_ < 0 ? "-" + out : out;
  }

 private:
  int sign_;
  std::vector<uint32_t> mag_;

  unsigned long long mag64_() const {
    unsigned long long m = mag_.empty() ? 0 : mag_[0];
    if (mag_.size() > 1) m |= static_cast<unsigned long long>(mag_[1]) << 32;
    return m;
  }

  static BigInt from_mag64(unsigned long long m, int sign) {
    BigInt r;
    if (m == 0) return r;
    r.sign_ = sign;
    r.mag_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
    if (m >> 32) r.mag_.push_back(static_cast<uint32_t>(m >> 32));
    return r;
  }

  static void trim(std::vector<uint32_t>& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>&hi = a.size() >= b.size() ? a : b,
                                &lo = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r = hi;
    uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      uint64_t cur = static_cast<uint64_t>(r[i]) + (i < lo.size() ? lo[i] : 0) + carry;
      r[i] = static_cast<uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
      if (carry == 0 && i >= lo.size()) break;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
  }

  // requires a >= b
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      int64_t cur = static_cast<int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
      if (cur < 0) {
        cur += 1LL << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<uint32_t>(cur);
      if (borrow == 0 && i >= b.size()) break;
    }
    trim(r);
    return r;
  }

  static bool even(const std::vector<uint32_t>& m) { return m.empty() || (m[0] & 1u) == 0; }

  static void shr1(std::vector<uint32_t>& m) {
    uint32_t carry = 0;
    for (size_t i = m.size(); i-- > 0;) {
      uint32_t cur = m[i];
      m[i] = (cur >> 1) | (carry << 31);
      carry = cur & 1u;
    }
    trim(m);
  }

  static void shl1(std::vector<uint32_t>& m) {
    uint32_t carry = 0;
    for (size_t i = 0; i < m.size(); ++i) {
      uint32_t cur = m[i];
      m[i] = (cur << 1) | carry;
      carry = cur >> 31;
    }
    if (carry) m.push_back(carry);
  }

  // Shift-and-subtract long division on magnitudes; a >= b > 0.
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& quo, std::vector<uint32_t>& rem) {
    int abits = bit_length(a), bbits = bit_length(b);
    quo.assign(a.size(), 0);
    rem.clear();
    // Walk bits of a from most significant down, building the remainder.
    for (int i = abits - 1; i >= 0; --i) {
      shl1(rem);
      if (get_bit(a, i)) {
        if (rem.empty())
          rem.push_back(1);
        else
          rem[0] |= 1u;
      }
      if (cmp_mag(rem, b) >= 0) {
        rem = sub_mag(rem, b);
        quo[static_cast<size_t>(i) / 32] |= 1u << (i % 32);
      }
    }
    (void)bbits;
  }

  static int bit_length(const std::vector<uint32_t>& m) {
    if (m.empty()) return 0;
    uint32_t top = m.back();
    int bits = 0;
    while (top) {
      ++bits;
      top >>= 1;
    }
    return static_cast<int>(32 * (m.size() - 1)) + bits;
  }

  static bool get_bit(const std::vector<uint32_t>& m, int i) {
    size_t limb = static_cast<size_t>(i) / 32;
    if (limb >= m.size()) return false;
    return (m[limb] >> (i % 32)) & 1u;
  }
};

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  return (a / BigInt::gcd(a, b) * b).abs();
}

}  // namespace pentafold

#endif
