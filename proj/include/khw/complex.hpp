#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "khw/diagram.hpp"
#include "khw/snf.hpp"

namespace khw {

struct budget_error : std::runtime_error {
  int required;
  explicit budget_error(int req)
      : std::runtime_error("crossing budget exceeded; need at least " + std::to_string(req)),
        required(req) {}
};

/// Finite complex of free Z-modules with an internal bigrading.
/// Layer k holds the generators of homological degree h_base + k; the
/// differential maps layer k to layer k+1 and preserves the internal q.
struct ChainComplex {
  int h_base = 0;
  std::vector<std::vector<int>> qdeg;                       // per layer: q of each generator
  std::vector<std::vector<std::map<int, long long>>> cols;  // cols[k][src]: target -> coeff

  int layers() const { return static_cast<int>(qdeg.size()); }
  long long total_generators() const {
    long long n = 0;
    for (const auto& l : qdeg) n += static_cast<long long>(l.size());
    return n;
  }

  void check_d_squared() const {
    for (size_t k = 0; k + 1 < cols.size(); ++k)
      for (size_t src = 0; src < cols[k].size(); ++src) {
        std::map<int, long long> acc;
        for (auto [mid, a] : cols[k][src])
          for (auto [tgt, b] : cols[k + 1][mid]) acc[tgt] += a * b;
        for (auto [tgt, v] : acc)
          if (v != 0) throw std::logic_error("d^2 != 0");
      }
    for (size_t k = 0; k < cols.size(); ++k)
      for (size_t src = 0; src < cols[k].size(); ++src)
        for (auto [tgt, v] : cols[k][src])
          if (qdeg[k][src] != qdeg[k + 1][tgt])
            throw std::logic_error("differential does not preserve q");
  }
};

// --- cube of resolutions -------------------------------------------------------

/// Circle structure of one resolution over the crossing-incident edges only
/// (crossingless unknot components are tensor factors handled downstream).
struct StateCircles {
  std::map<int, int> id_of_edge;
  int count = 0;
};

inline StateCircles state_circles(const LinkDiagram& d, const ResolutionState& s) {
  std::set<int> used;
  for (const auto& c : d.crossings) used.insert(c.e.begin(), c.e.end());
  std::vector<int> labels(used.begin(), used.end());
  std::map<int, int> idx;
  for (size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
  detail::UnionFind uf(static_cast<int>(labels.size()));
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto& c = d.crossings[x];
    if (s[x] == 0) {
      uf.join(idx[c.e[0]], idx[c.e[1]]);
      uf.join(idx[c.e[2]], idx[c.e[3]]);
    } else {
      uf.join(idx[c.e[0]], idx[c.e[3]]);
      uf.join(idx[c.e[1]], idx[c.e[2]]);
    }
  }
  StateCircles sc;
  std::map<int, int> compact;
  for (size_t i = 0; i < labels.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (!compact.count(r)) compact[r] = sc.count++;
    sc.id_of_edge[labels[i]] = compact[r];
  }
  return sc;
}

/// Full cube-of-resolutions complex over Z.  Exponential in the crossing
/// count; the scanning pipeline is the production path and this is the
/// small-diagram oracle.  Internal gradings: layer = |s|, q = |s| + #1-labels
/// - #x-labels; the diagram-level shifts by pos/neg are applied downstream.
/// With base_edge >= 0 the complex is the reduced subcomplex where the circle
/// through that edge is labeled x.
inline ChainComplex cube_complex(const LinkDiagram& d, int crossing_limit = 22,
                                 int base_edge = -1) {
  const int c = d.crossing_count();
  if (c > crossing_limit) throw budget_error(c);
  if (c > 26) throw budget_error(c); // 2^c state enumeration is hopeless past this

  std::vector<StateCircles> circ(1u << c);
  std::vector<long long> gen_offset(1u << c, 0); // offset within its layer
  std::vector<long long> layer_size_acc(c + 1, 0);
  // generator indexing: all 2^circles labelings; reduced masks are filtered by
  // a validity predicate so indexing stays uniform
  auto mask_ok = [&](uint32_t m, uint32_t mask) {
    if (base_edge < 0) return true;
    return ((mask >> circ[m].id_of_edge.at(base_edge)) & 1) != 0;
  };
  std::vector<ResolutionState> states(1u << c);
  for (uint32_t m = 0; m < (1u << c); ++m) {
    ResolutionState s(c);
    for (int k = 0; k < c; ++k) s[k] = (m >> k) & 1;
    states[m] = s;
    circ[m] = state_circles(d, s);
    int layer = __builtin_popcount(m);
    gen_offset[m] = layer_size_acc[layer];
    layer_size_acc[layer] += 1LL << circ[m].count;
    if (layer_size_acc[layer] > (1 << 26)) throw budget_error(c);
  }

  ChainComplex cc;
  cc.h_base = 0;
  cc.qdeg.resize(c + 1);
  cc.cols.resize(c);
  // dense ids for the (possibly reduced) generator set
  std::vector<std::vector<int>> dense(c + 1);
  for (int k = 0; k <= c; ++k) dense[k].assign(layer_size_acc[k], -1);
  for (uint32_t m = 0; m < (1u << c); ++m) {
    int layer = __builtin_popcount(m);
    int nc = circ[m].count;
    for (uint32_t mask = 0; mask < (1u << nc); ++mask) {
      if (!mask_ok(m, mask)) continue;
      int degsum = nc - 2 * __builtin_popcount(mask);
      dense[layer][gen_offset[m] + mask] = static_cast<int>(cc.qdeg[layer].size());
      cc.qdeg[layer].push_back(layer + degsum);
    }
  }
  for (int k = 0; k < c; ++k)
    cc.cols[k].assign(cc.qdeg[k].size(), {});

  // differential: flip each 0 to 1 with the lexicographic sign convention
  for (uint32_t m = 0; m < (1u << c); ++m) {
    int layer = __builtin_popcount(m);
    for (int x = 0; x < c; ++x) {
      if ((m >> x) & 1) continue;
      uint32_t m2 = m | (1u << x);
      int sign = __builtin_popcount(m & ((1u << x) - 1)) & 1 ? -1 : 1;
      const auto& sc = circ[m];
      const auto& sc2 = circ[m2];
      const auto& cr = d.crossings[x];
      int ca = sc.id_of_edge.at(cr.e[0]);
      int cb = sc.id_of_edge.at(cr.e[2]);
      // circle correspondence away from the merge/split
      std::map<int, int> fwd; // s-circle -> s'-circle where deterministic
      for (auto [e, i] : sc.id_of_edge) fwd[i] = sc2.id_of_edge.at(e);
      for (uint32_t mask = 0; mask < (1u << sc.count); ++mask) {
        if (!mask_ok(m, mask)) continue;
        int src = dense[layer][gen_offset[m] + mask];
        auto emit = [&](uint32_t mask2, int coeff) {
          int tgt = dense[layer + 1][gen_offset[m2] + mask2];
          if (tgt < 0) throw std::logic_error("cube differential leaves the subcomplex");
          auto& cell = cc.cols[layer][src][tgt];
          cell += sign * coeff;
          if (cell == 0) cc.cols[layer][src].erase(tgt);
        };
        // transport labels of untouched circles
        auto base_mask = [&](uint32_t lab) {
          uint32_t out = 0;
          for (int i = 0; i < sc.count; ++i)
            if ((lab >> i) & 1 && i != ca && i != cb) out |= 1u << fwd[i];
          return out;
        };
        if (ca != cb) {
          // merge: labels multiply (1 is the unit, x*x = 0)
          int t = sc2.id_of_edge.at(cr.e[0]);
          bool xa = (mask >> ca) & 1, xb = (mask >> cb) & 1;
          if (xa && xb) continue;
          uint32_t out = base_mask(mask);
          if (xa || xb) out |= 1u << t;
          emit(out, 1);
        } else {
          // split: comultiplication
          int t1 = sc2.id_of_edge.at(cr.e[0]);
          int t2 = sc2.id_of_edge.at(cr.e[1]);
          if (t1 == t2) throw std::logic_error("split target circles coincide");
          bool xa = (mask >> ca) & 1;
          uint32_t out = base_mask(mask);
          if (xa) {
            emit(out | (1u << t1) | (1u << t2), 1);
          } else {
            emit(out | (1u << t1), 1);
            emit(out | (1u << t2), 1);
          }
        }
      }
    }
  }
  return cc;
}

// --- Gaussian-elimination simplification ---------------------------------------

/// Cancel +-1 differential entries with the zipper update until none remain.
/// Preserves the homotopy type over Z; the homology is unchanged.
inline ChainComplex simplify(const ChainComplex& in) {
  const int L = in.layers();
  // mutable sparse structure with row indexes and alive flags
  std::vector<std::vector<std::map<int, long long>>> cols = in.cols;
  std::vector<std::vector<std::set<int>>> rows(L);
  std::vector<std::vector<char>> alive(L);
  for (int k = 0; k < L; ++k) alive[k].assign(in.qdeg[k].size(), 1);
  for (int k = 0; k + 1 < L; ++k) {
    rows[k + 1].assign(in.qdeg[k + 1].size(), {});
    for (size_t src = 0; src < cols[k].size(); ++src)
      for (auto [tgt, v] : cols[k][src]) rows[k + 1][tgt].insert(static_cast<int>(src));
  }
  if (L) rows[0].assign(in.qdeg[0].size(), {});

  auto checked_sub = [](long long a, long long b, long long c) {
    long long bc, r;
    if (__builtin_mul_overflow(b, c, &bc) || __builtin_sub_overflow(a, bc, &r))
      throw overflow_error();
    return r;
  };

  std::deque<std::pair<int, std::pair<int, int>>> queue; // (layer, (src, tgt))
  for (int k = 0; k + 1 < L; ++k)
    for (size_t src = 0; src < cols[k].size(); ++src)
      for (auto [tgt, v] : cols[k][src])
        if (v == 1 || v == -1) queue.push_back({k, {static_cast<int>(src), tgt}});

  while (!queue.empty()) {
    auto [k, st] = queue.front();
    queue.pop_front();
    auto [src, tgt] = st;
    if (!alive[k][src] || !alive[k + 1][tgt]) continue;
    auto it = cols[k][src].find(tgt);
    if (it == cols[k][src].end() || (it->second != 1 && it->second != -1)) continue;
    long long u = it->second; // u = u^{-1} for +-1

    std::vector<int> other_srcs(rows[k + 1][tgt].begin(), rows[k + 1][tgt].end());
    std::vector<std::pair<int, long long>> other_tgts(cols[k][src].begin(), cols[k][src].end());
    for (int s2 : other_srcs) {
      if (s2 == src) continue;
      long long a = cols[k][s2].at(tgt);
      for (auto [t2, b] : other_tgts) {
        if (t2 == tgt) continue;
        long long& cell = cols[k][s2][t2];
        long long before = cell;
        cell = checked_sub(cell, a * u, b);
        if (cell == 0) {
          cols[k][s2].erase(t2);
          rows[k + 1][t2].erase(s2);
        } else {
          rows[k + 1][t2].insert(s2);
          if ((cell == 1 || cell == -1) && before != 1 && before != -1)
            queue.push_back({k, {s2, t2}});
        }
      }
    }
    // remove the cancelled pair and their incident entries
    alive[k][src] = 0;
    alive[k + 1][tgt] = 0;
    for (int s2 : rows[k + 1][tgt])
      if (s2 != src) cols[k][s2].erase(tgt);
    rows[k + 1][tgt].clear();
    for (auto [t2, v] : cols[k][src]) rows[k + 1][t2].erase(src);
    cols[k][src].clear();
    if (k + 2 < L) {
      for (auto [t2, v] : cols[k + 1][tgt]) rows[k + 2][t2].erase(tgt);
      cols[k + 1][tgt].clear();
    }
    if (k > 0) {
      for (int s0 : rows[k][src]) cols[k - 1][s0].erase(src);
      rows[k][src].clear();
    }
  }

  // compact
  ChainComplex out;
  out.h_base = in.h_base;
  out.qdeg.resize(L);
  out.cols.resize(std::max(L - 1, 0));
  std::vector<std::vector<int>> newid(L);
  for (int k = 0; k < L; ++k) {
    newid[k].assign(in.qdeg[k].size(), -1);
    for (size_t i = 0; i < in.qdeg[k].size(); ++i)
      if (alive[k][i]) {
        newid[k][i] = static_cast<int>(out.qdeg[k].size());
        out.qdeg[k].push_back(in.qdeg[k][i]);
      }
  }
  for (int k = 0; k + 1 < L; ++k) {
    out.cols[k].assign(out.qdeg[k].size(), {});
    for (size_t src = 0; src < cols[k].size(); ++src) {
      if (!alive[k][src]) continue;
      for (auto [tgt, v] : cols[k][src])
        if (alive[k + 1][tgt]) out.cols[k][newid[k][src]][newid[k + 1][tgt]] = v;
    }
  }
  return out;
}

// --- homology of a complex ------------------------------------------------------

/// Raw per-(layer, q) homology data: Z-rank and invariant factors.
struct BlockHomology {
  // (h_internal, q_internal) -> (number of generators, factors of incoming d,
  //                              factors of outgoing d)
  struct Cell {
    int dim = 0;
    std::vector<long long> din;  // invariant factors of d into this cell
    std::vector<long long> dout; // invariant factors of d out of this cell
  };
  std::map<std::pair<int, int>, Cell> cells;
  bool escalated = false;
};

inline BlockHomology block_homology(const ChainComplex& cc) {
  BlockHomology out;
  const int L = cc.layers();
  // collect generator indices per (layer, q)
  std::vector<std::map<int, std::vector<int>>> by_q(L);
  for (int k = 0; k < L; ++k)
    for (size_t i = 0; i < cc.qdeg[k].size(); ++i) by_q[k][cc.qdeg[k][i]].push_back(static_cast<int>(i));
  for (int k = 0; k < L; ++k)
    for (auto& [q, gens] : by_q[k]) {
      auto& cell = out.cells[{cc.h_base + k, q}];
      cell.dim = static_cast<int>(gens.size());
    }
  for (int k = 0; k + 1 < L; ++k) {
    for (auto& [q, srcs] : by_q[k]) {
      auto itT = by_q[k + 1].find(q);
      if (itT == by_q[k + 1].end()) continue;
      const auto& tgts = itT->second;
      std::map<int, int> tpos;
      for (size_t i = 0; i < tgts.size(); ++i) tpos[tgts[i]] = static_cast<int>(i);
      std::vector<std::vector<long long>> m(tgts.size(), std::vector<long long>(srcs.size(), 0));
      bool nonzero = false;
      for (size_t j = 0; j < srcs.size(); ++j)
        for (auto [tgt, v] : cc.cols[k][srcs[j]]) {
          m[tpos.at(tgt)][j] = v;
          nonzero = true;
        }
      if (!nonzero) continue;
      SmithResult snf = smith_normal_form(m);
      out.escalated = out.escalated || snf.escalated;
      out.cells[{cc.h_base + k, q}].dout = snf.factors;
      out.cells[{cc.h_base + k + 1, q}].din = snf.factors;
    }
  }
  return out;
}

} // namespace khw
