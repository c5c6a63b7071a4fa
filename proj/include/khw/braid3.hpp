#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "khw/diagram.hpp"
#include "khw/homology.hpp"
#include "khw/laurent.hpp"

namespace khw {

/// Reduced Burau matrix for B_3: 2x2 over Z[t, 1/t].  Faithful on three
/// strands, so matrix equality plus exponent sum decides word equality.
struct BurauMatrix {
  LaurentPoly a, b, c, d;

  friend BurauMatrix operator*(const BurauMatrix& x, const BurauMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const BurauMatrix& x, const BurauMatrix& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  static BurauMatrix identity() {
    return {LaurentPoly::one(), {}, {}, LaurentPoly::one()};
  }
};

inline BurauMatrix burau(const BraidWord& w) {
  if (w.strands != 3) throw std::invalid_argument("burau: three-strand words only");
  auto t = [](int e) { return LaurentPoly::term(1, e); };
  BurauMatrix s1{LaurentPoly::term(-1, 1), LaurentPoly::one(), {}, LaurentPoly::one()};
  BurauMatrix s1i{LaurentPoly::term(-1, -1), t(-1), {}, LaurentPoly::one()};
  BurauMatrix s2{LaurentPoly::one(), {}, t(1), LaurentPoly::term(-1, 1)};
  BurauMatrix s2i{LaurentPoly::one(), {}, LaurentPoly::one(), LaurentPoly::term(-1, -1)};
  BurauMatrix m = BurauMatrix::identity();
  for (auto [g, e] : w.letters) m = m * (g == 1 ? (e > 0 ? s1 : s1i) : (e > 0 ? s2 : s2i));
  return m;
}

inline bool burau_equal(const BraidWord& u, const BraidWord& v) {
  return u.exponent_sum() == v.exponent_sum() && burau(u) == burau(v);
}

/// Positive normal form of (s1 s2)^q from the rewriting identities:
/// explicit words for q <= 5, the three residue patterns beyond.
inline BraidWord norm_form(int q) {
  if (q < 1) throw std::invalid_argument("norm_form needs q >= 1");
  BraidWord w{3, {}};
  auto run = [&w](int gen, int count) { if (count > 0) w.push(gen, count); };
  if (q == 1) {
    run(1, 1);
    run(2, 1);
    return w;
  }
  if (q == 2) {
    run(1, 1);
    run(2, 1);
    run(1, 1);
    run(2, 1);
    return w;
  }
  if (q == 3) {
    run(1, 2); run(2, 1); run(1, 2); run(2, 1);
    return w;
  }
  if (q == 4) {
    run(1, 2); run(2, 1); run(1, 3); run(2, 1); run(1, 1);
    return w;
  }
  if (q == 5) {
    run(1, 3); run(2, 1); run(1, 3); run(2, 1); run(1, 2);
    return w;
  }
  int n = q / 3, r = q % 3;
  if (r == 0) {
    run(1, 3); run(2, 1);
    for (int i = 0; i < n - 2; ++i) { run(1, 4); run(2, 1); }
    run(1, 3); run(2, 1); run(1, n + 1); run(2, 1);
  } else if (r == 1) {
    run(1, 3); run(2, 1);
    for (int i = 0; i < n - 2; ++i) { run(1, 4); run(2, 1); }
    run(1, 3); run(2, 1); run(1, n + 2); run(2, 1); run(1, 1);
  } else {
    run(1, 3); run(2, 1);
    for (int i = 0; i < n - 1; ++i) { run(1, 4); run(2, 1); }
    run(1, 3); run(2, 1); run(1, n + 1);
  }
  return w;
}

/// A closed 3-braid in Murasugi normal form h^n A with h = (s1 s2)^3.
struct MurasugiForm {
  enum Class { Alt, Power, Special };
  int n = 0;
  Class cls = Power;
  std::vector<std::pair<int, int>> pairs; // Alt: positive (p_i, q_i)
  int m = 0;                              // Power: any; Special: -1, -2 or -3

  void validate() const {
    switch (cls) {
      case Alt:
        if (pairs.empty()) throw std::invalid_argument("Alt form needs at least one pair");
        for (auto [p, q] : pairs)
          if (p <= 0 || q <= 0) throw std::invalid_argument("Alt exponents must be positive");
        break;
      case Power:
        break;
      case Special:
        if (m < -3 || m > -1)
          throw std::invalid_argument("Special form needs m in {-1,-2,-3}");
        break;
    }
  }

  BraidWord to_word() const {
    validate();
    BraidWord w{3, {}};
    int reps = 3 * (n < 0 ? -n : n);
    for (int i = 0; i < reps; ++i) {
      if (n > 0) {
        w.push(1, 1);
        w.push(2, 1);
      } else {
        w.push(2, -1);
        w.push(1, -1);
      }
    }
    switch (cls) {
      case Alt:
        for (auto [p, q] : pairs) {
          w.push(1, p);
          w.push(2, -q);
        }
        break;
      case Power:
        if (m) w.push(2, m);
        break;
      case Special:
        w.push(1, m);
        w.push(2, -1);
        break;
    }
    return w;
  }

  /// The word contains a letter working against the sign of n.
  bool has_cancellation() const {
    if (n == 0) return false;
    switch (cls) {
      case Alt: return true; // both letter signs always occur
      case Power: return m != 0 && ((m > 0) != (n > 0));
      case Special: return n > 0; // the tail letters are all negative
    }
    return false;
  }

  std::string str() const {
    std::string s = "h^" + std::to_string(n) + " *";
    switch (cls) {
      case Alt:
        for (auto [p, q] : pairs)
          s += " s1^" + std::to_string(p) + " s2^-" + std::to_string(q);
        break;
      case Power:
        s += " s2^" + std::to_string(m);
        break;
      case Special:
        s += " s1^" + std::to_string(m) + " s2^-1";
        break;
    }
    return s;
  }
};

/// Thickness interval of T(3,q) (mirror for negative q), from the torus table.
inline ThicknessInterval torus_thickness(int q) {
  int a = q < 0 ? -q : q;
  if (a < 2) throw std::invalid_argument("torus_thickness needs |q| >= 2");
  ThicknessInterval t;
  if (a % 3 == 0) {
    int n = a / 3;
    t = {4 * n - 3, 6 * n - 1};
  } else if (a % 3 == 1) {
    int n = (a - 1) / 3;
    t = {4 * n - 1, 6 * n + 1};
  } else {
    int n = (a - 2) / 3;
    t = {4 * n + 1, 6 * n + 3};
  }
  if (q < 0) t = {-t.delta_max, -t.delta_min};
  return t;
}

inline ThicknessInterval torus_thickness(int q, bool mirror) {
  return torus_thickness(mirror ? -q : q);
}

/// Exact thickness of the closure, per class and sign of n.  Forms with
/// n == 0 are alternating and computed directly, so no prediction is made.
inline std::optional<ThicknessInterval> predicted_thickness(const MurasugiForm& f) {
  f.validate();
  const int n = f.n;
  if (n == 0) return std::nullopt;
  switch (f.cls) {
    case MurasugiForm::Alt: {
      int a = 0, b = 0;
      for (auto [p, q] : f.pairs) {
        a += p;
        b += q;
      }
      if (n > 0) return ThicknessInterval{4 * n + a - b - 1, 6 * n + a - b - 1};
      return ThicknessInterval{6 * n + a - b + 1, 4 * n + a - b + 1};
    }
    case MurasugiForm::Power: {
      int m = f.m;
      if (n > 0 && m >= 0) return ThicknessInterval{4 * n + m - 3, 6 * n + m - 1};
      if (n < 0 && m <= 0) return ThicknessInterval{6 * n + m + 1, 4 * n + m + 3};
      if (n == 1 && m < -3) return ThicknessInterval{m + 3, m + 7};
      if (n == -1 && m > 3) return ThicknessInterval{m - 7, m - 3};
      if ((n == 1 && m < 0) || (n > 1 && m < 0))
        return ThicknessInterval{4 * n + m - 1, 6 * n + m - 1};
      return ThicknessInterval{6 * n + m + 1, 4 * n + m + 1};
    }
    case MurasugiForm::Special:
      if (n > 0) return ThicknessInterval{4 * n + f.m - 2, 6 * n + f.m - 2};
      return ThicknessInterval{6 * n + f.m, 4 * n + f.m + 2};
  }
  return std::nullopt;
}

/// Width from the cancellation dichotomy, with the exceptional power family.
inline std::optional<int> predicted_width(const MurasugiForm& f) {
  f.validate();
  if (f.n == 0) return std::nullopt;
  int an = f.n < 0 ? -f.n : f.n;
  bool exceptional = f.cls == MurasugiForm::Power &&
                     ((f.n == 1 && f.m < -3) || (f.n == -1 && f.m > 3));
  if (!f.has_cancellation() || exceptional) return an + 2;
  return an + 1;
}

/// Quasi-alternating classification of closed 3-braids.
inline bool predicted_qa(const MurasugiForm& f) {
  f.validate();
  switch (f.cls) {
    case MurasugiForm::Alt: return f.n >= -1 && f.n <= 1;
    case MurasugiForm::Power:
      return (f.n == 1 && f.m >= -3 && f.m <= -1) || (f.n == -1 && f.m >= 1 && f.m <= 3);
    case MurasugiForm::Special: return f.n == 0 || f.n == 1;
  }
  return false;
}

/// Turaev genus as (lower, upper); equal where the classification is exact.
inline std::optional<std::pair<int, int>> predicted_turaev(const MurasugiForm& f) {
  f.validate();
  const int n = f.n;
  if (n == 0) return std::nullopt;
  int an = n < 0 ? -n : n;
  switch (f.cls) {
    case MurasugiForm::Alt: return std::pair{an - 1, an};
    case MurasugiForm::Power: {
      if (!f.has_cancellation()) return std::pair{an, an};
      if ((n == 1 && f.m >= -3 && f.m < 0) || (n == -1 && f.m > 0 && f.m <= 3))
        return std::pair{0, 0};
      if ((n == 1 && f.m < -3) || (n == -1 && f.m > 3)) return std::pair{1, 1};
      return std::pair{an - 1, an};
    }
    case MurasugiForm::Special:
      if (n > 0) return std::pair{n - 1, n - 1};
      return std::pair{an, an};
  }
  return std::nullopt;
}

} // namespace khw
