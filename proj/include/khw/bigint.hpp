#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace khw {

struct overflow_error : std::runtime_error {
  overflow_error() : std::runtime_error("integer overflow") {}
};

/// Signed arbitrary-precision integer, base 2^32 little-endian magnitude.
/// Only the operations the exact linear algebra needs.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    mag_.push_back(static_cast<uint32_t>(m));
    if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  friend int cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.mag_.size() != b.mag_.size())
      return a.mag_.size() < b.mag_.size() ? -1 : 1;
    for (size_t i = a.mag_.size(); i-- > 0;)
      if (a.mag_[i] != b.mag_[i]) return a.mag_[i] < b.mag_[i] ? -1 : 1;
    return 0;
  }
  friend int cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a, b);
    return a.sign_ >= 0 ? c : -c;
  }
  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }
  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
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
      int c = cmp_mag(a, b);
      if (c == 0) return BigInt();
      const BigInt& big = c > 0 ? a : b;
      const BigInt& sml = c > 0 ? b : a;
      r.mag_ = sub_mag(big.mag_, sml.mag_);
      r.sign_ = big.sign_;
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.mag_.size(); ++j) {
        uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t k = i + b.mag_.size();
      while (carry) {
        uint64_t cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    return r;
  }

  /// Truncated division (C semantics): quotient rounds toward zero.
  friend void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt division by zero");
    int c = cmp_mag(a, b);
    if (c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
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

  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  bool fits_int64() const {
    if (mag_.size() > 2) return false;
    unsigned long long m = 0;
    if (!mag_.empty()) m = mag_[0];
    if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
    if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
  }
  long long to_int64() const {
    if (!fits_int64()) throw overflow_error();
    unsigned long long m = 0;
    if (!mag_.empty()) m = mag_[0];
    if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
    return sign_ >= 0 ? static_cast<long long>(m) : -static_cast<long long>(m - 1) - 1;
  }

  std::string str() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
      uint64_t rem = 0;
      for (size_t i = m.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<uint32_t>(cur / 10);
        rem = cur % 10;
      }
      digits.push_back(static_cast<char>('0' + rem));
      while (!m.empty() && m.back() == 0) m.pop_back();
    }
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out.append(digits.rbegin(), digits.rend());
    return out;
  }

private:
  int sign_ = 0;
  std::vector<uint32_t> mag_;

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& sml = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r = big;
    uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      uint64_t cur = static_cast<uint64_t>(r[i]) + (i < sml.size() ? sml[i] : 0) + carry;
      r[i] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      if (!carry && i >= sml.size()) break;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
  }
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      int64_t cur = static_cast<int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
      borrow = cur < 0;
      if (cur < 0) cur += (1LL << 32);
      r[i] = static_cast<uint32_t>(cur);
      if (!borrow && i >= b.size()) break;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  // schoolbook long division on magnitudes, |a| >= |b| > 0
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.assign(a.size(), 0);
    r.clear();
    for (size_t i = a.size(); i-- > 0;) {
      r.insert(r.begin(), a[i]);
      while (!r.empty() && r.back() == 0) r.pop_back();
      // binary search the digit: largest d with b*d <= r
      uint64_t lo = 0, hi = 0xffffffffULL;
      while (lo < hi) {
        uint64_t mid = (lo + hi + 1) >> 1;
        if (le_mag(mul_small(b, mid), r))
          lo = mid;
        else
          hi = mid - 1;
      }
      q[i] = static_cast<uint32_t>(lo);
      if (lo) r = sub_mag(r, mul_small(b, lo));
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
  }
  static std::vector<uint32_t> mul_small(const std::vector<uint32_t>& a, uint64_t d) {
    std::vector<uint32_t> r(a.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      // d < 2^32 so the product fits in 64 bits plus carry handling
      uint64_t cur = static_cast<uint64_t>(a[i]) * d + carry;
      r[i] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry) {
      r.push_back(static_cast<uint32_t>(carry));
      carry >>= 32;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  static bool le_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return true;
  }
};

inline BigInt gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// int64 wrapper whose arithmetic throws overflow_error instead of wrapping.
/// Smith reduction runs on this first and escalates to BigInt on demand.
struct CheckedInt {
  long long v = 0;
  CheckedInt() = default;
  CheckedInt(long long x) : v(x) {}
  bool is_zero() const { return v == 0; }
  CheckedInt abs() const {
    if (v == INT64_MIN) throw overflow_error();
    return CheckedInt(v < 0 ? -v : v);
  }
  CheckedInt operator-() const {
    if (v == INT64_MIN) throw overflow_error();
    return CheckedInt(-v);
  }
  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    long long r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw overflow_error();
    return CheckedInt(r);
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    long long r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw overflow_error();
    return CheckedInt(r);
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    long long r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw overflow_error();
    return CheckedInt(r);
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) { return CheckedInt(a.v / b.v); }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) { return CheckedInt(a.v % b.v); }
  CheckedInt& operator+=(CheckedInt b) { return *this = *this + b; }
  CheckedInt& operator-=(CheckedInt b) { return *this = *this - b; }
  CheckedInt& operator*=(CheckedInt b) { return *this = *this * b; }
  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v == b.v; }
  friend bool operator!=(CheckedInt a, CheckedInt b) { return a.v != b.v; }
  friend bool operator<(CheckedInt a, CheckedInt b) { return a.v < b.v; }
  friend bool operator<=(CheckedInt a, CheckedInt b) { return a.v <= b.v; }
  friend bool operator>(CheckedInt a, CheckedInt b) { return a.v > b.v; }
  friend bool operator>=(CheckedInt a, CheckedInt b) { return a.v >= b.v; }
};

inline CheckedInt gcd(CheckedInt a, CheckedInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    CheckedInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

} // namespace khw
