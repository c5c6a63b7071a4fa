#pragma once

#include <algorithm>
#include <vector>

#include "khw/bigint.hpp"

namespace khw {

struct SmithResult {
  std::vector<long long> factors; // nonzero invariant factors, positive, d1 | d2 | ...
  int rank = 0;
  bool escalated = false; // true when int64 overflowed and BigInt redid the work
};

namespace detail {

template <class Z>
std::vector<Z> smith_diagonal(std::vector<std::vector<Z>> m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  std::vector<Z> diag;
  size_t t = 0;
  while (t < rows && t < cols) {
    // pivot choice: any +-1 wins, otherwise smallest nonzero magnitude
    size_t pr = rows, pc = cols;
    Z best = Z(0);
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (m[i][j].is_zero()) continue;
        Z a = m[i][j].abs();
        if (pr == rows || a < best) {
          pr = i;
          pc = j;
          best = a;
        }
        if (best == Z(1)) goto found;
      }
  found:
    if (pr == rows) break; // submatrix is zero
    std::swap(m[t], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

    for (;;) {
      bool dirty = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t].is_zero()) continue;
        Z q = m[i][t] / m[t][t];
        if (!q.is_zero())
          for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (!m[i][t].is_zero()) {
          std::swap(m[t], m[i]); // remainder becomes the new, smaller pivot
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j].is_zero()) continue;
        Z q = m[t][j] / m[t][t];
        if (!q.is_zero())
          for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (!m[t][j].is_zero()) {
          for (size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          dirty = true;
        }
      }
      if (!dirty) break;
    }
    diag.push_back(m[t][t].abs());
    ++t;
  }
  // unimodular fixup diag(a,b) ~ diag(gcd,lcm) until divisibility chain holds
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i + 1 < diag.size(); ++i)
      for (size_t j = i + 1; j < diag.size(); ++j) {
        if ((diag[j] % diag[i]).is_zero()) continue;
        Z g = gcd(diag[i], diag[j]);
        diag[j] = diag[i] / g * diag[j];
        diag[i] = g;
        changed = true;
      }
  }
  return diag;
}

} // namespace detail

/// Invariant factors and rank of an integer matrix.  Runs in checked int64
/// arithmetic and transparently redoes the reduction in arbitrary precision
/// if intermediate values overflow.
inline SmithResult smith_normal_form(const std::vector<std::vector<long long>>& m) {
  SmithResult out;
  try {
    std::vector<std::vector<CheckedInt>> c(m.size());
    for (size_t i = 0; i < m.size(); ++i) c[i].assign(m[i].begin(), m[i].end());
    for (const auto& d : detail::smith_diagonal(std::move(c))) out.factors.push_back(d.v);
  } catch (const overflow_error&) {
    out.escalated = true;
    std::vector<std::vector<BigInt>> b(m.size());
    for (size_t i = 0; i < m.size(); ++i) b[i].assign(m[i].begin(), m[i].end());
    for (const auto& d : detail::smith_diagonal(std::move(b)))
      out.factors.push_back(d.to_int64());
  }
  out.rank = static_cast<int>(out.factors.size());
  return out;
}

} // namespace khw
