#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace khw {

/// One-variable Laurent polynomial with integer coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;
  static LaurentPoly term(long long coeff, int exp) {
    LaurentPoly p;
    if (coeff) p.c_[exp] = coeff;
    return p;
  }
  static LaurentPoly one() { return term(1, 0); }

  const std::map<int, long long>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long long coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
  }
  int min_exp() const { return c_.begin()->first; }
  int max_exp() const { return c_.rbegin()->first; }

  void add_term(int exp, long long coeff) {
    if (!coeff) return;
    auto it = c_.find(exp);
    if (it == c_.end()) {
      c_[exp] = coeff;
    } else if ((it->second += coeff) == 0) {
      c_.erase(it);
    }
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (auto [e, k] : b.c_) r.add_term(e, k);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (auto [e, k] : b.c_) r.add_term(e, -k);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto [e1, k1] : a.c_)
      for (auto [e2, k2] : b.c_) r.add_term(e1 + e2, k1 * k2);
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (auto [e, v] : c_) r.c_[e + k] = v;
    return r;
  }

  /// Exact division; throws if the divisor does not divide.
  friend LaurentPoly divide_exact(LaurentPoly num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly q;
    const int den_width = den.max_exp() - den.min_exp();
    while (!num.is_zero()) {
      if (num.max_exp() - num.min_exp() < den_width)
        throw std::domain_error("inexact polynomial division");
      int e = num.max_exp() - den.max_exp();
      long long lead = num.c_.rbegin()->second;
      long long dl = den.c_.rbegin()->second;
      if (lead % dl != 0) throw std::domain_error("inexact polynomial division");
      long long k = lead / dl;
      q.add_term(e, k);
      num -= den.shifted(e) * LaurentPoly::term(k, 0);
    }
    return q;
  }

  /// Value at the imaginary unit, as a Gaussian integer (re, im).
  std::pair<long long, long long> eval_at_i() const {
    long long re = 0, im = 0;
    for (auto [e, k] : c_) {
      int r = ((e % 4) + 4) % 4;
      switch (r) {
        case 0: re += k; break;
        case 1: im += k; break;
        case 2: re -= k; break;
        case 3: im -= k; break;
      }
    }
    return {re, im};
  }

  /// Text form like `q^-1 + q^3 - 2q^5`.
  std::string str(const std::string& var = "q") const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto [e, k] : c_) {
      if (out.empty()) {
        if (k < 0) out += "-";
      } else {
        out += k < 0 ? " - " : " + ";
      }
      long long a = k < 0 ? -k : k;
      if (a != 1 || e == 0) out += std::to_string(a);
      if (e != 0) {
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

private:
  std::map<int, long long> c_;
};

} // namespace khw
