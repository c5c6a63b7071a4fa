#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "khw/complex.hpp"
#include "khw/diagram.hpp"
#include "khw/laurent.hpp"
#include "khw/scan.hpp"

namespace khw {

struct Ring {
  enum Kind { Z, Q, Fp } kind = Z;
  int p = 0;

  static Ring z() { return {Z, 0}; }
  static Ring q() { return {Q, 0}; }
  static Ring fp(int p) {
    if (p < 2) throw std::invalid_argument("Fp needs a prime p >= 2");
    return {Fp, p};
  }
  static Ring f2() { return fp(2); }

  bool is_field() const { return kind != Z; }
  std::string str() const {
    switch (kind) {
      case Z: return "Z";
      case Q: return "Q";
      default: return "F" + std::to_string(p);
    }
  }
  friend bool operator==(const Ring& a, const Ring& b) { return a.kind == b.kind && a.p == b.p; }
};

/// Finitely generated abelian group: free rank plus invariant factors > 1,
/// each dividing the next.
struct AbelianGroup {
  long long rank = 0;
  std::vector<long long> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
};

/// Rebuild invariant factors from an arbitrary multiset of cyclic orders.
inline std::vector<long long> invariant_factors(std::vector<long long> cyclic) {
  std::map<long long, std::vector<int>> primary; // prime -> exponents, descending later
  for (long long n : cyclic) {
    for (long long p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      primary[p].push_back(e);
    }
    if (n > 1) primary[n].push_back(1);
  }
  size_t slots = 0;
  for (auto& [p, es] : primary) {
    std::sort(es.rbegin(), es.rend());
    slots = std::max(slots, es.size());
  }
  std::vector<long long> out(slots, 1);
  for (auto& [p, es] : primary)
    for (size_t i = 0; i < es.size(); ++i) {
      long long f = 1;
      for (int k = 0; k < es[i]; ++k) f *= p;
      out[slots - 1 - i] *= f; // largest factors at the end
    }
  std::vector<long long> trimmed;
  for (long long f : out)
    if (f > 1) trimmed.push_back(f);
  return trimmed;
}

inline AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<long long> cyc = a.torsion;
  cyc.insert(cyc.end(), b.torsion.begin(), b.torsion.end());
  return {a.rank + b.rank, invariant_factors(std::move(cyc))};
}

inline AbelianGroup tensor_groups(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<long long> cyc;
  for (long long t : a.torsion)
    for (int i = 0; i < b.rank; ++i) cyc.push_back(t);
  for (long long t : b.torsion)
    for (int i = 0; i < a.rank; ++i) cyc.push_back(t);
  for (long long s : a.torsion)
    for (long long t : b.torsion) cyc.push_back(std::gcd(s, t));
  return {a.rank * b.rank, invariant_factors(std::move(cyc))};
}

/// Tor_1(A, B) of finitely generated abelian groups.
inline AbelianGroup tor_groups(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<long long> cyc;
  for (long long s : a.torsion)
    for (long long t : b.torsion) cyc.push_back(std::gcd(s, t));
  return {0, invariant_factors(std::move(cyc))};
}

struct ThicknessInterval {
  int delta_min = 0;
  int delta_max = 0;

  int width() const { return (delta_max - delta_min) / 2 + 1; }
  friend bool operator==(const ThicknessInterval& a, const ThicknessInterval& b) {
    return a.delta_min == b.delta_min && a.delta_max == b.delta_max;
  }
};

/// Bigraded homology table: (i, j) -> group, zero entries absent.
struct BigradedGroups {
  std::map<std::pair<int, int>, AbelianGroup> entries;

  const AbelianGroup& at(int i, int j) const {
    static const AbelianGroup zero{};
    auto it = entries.find({i, j});
    return it == entries.end() ? zero : it->second;
  }
  void set(int i, int j, AbelianGroup g) {
    if (!g.is_zero()) entries[{i, j}] = std::move(g);
  }
  bool is_zero() const { return entries.empty(); }
  long long total_rank() const {
    long long r = 0;
    for (auto& [ij, g] : entries) r += g.rank;
    return r;
  }
  friend bool operator==(const BigradedGroups& a, const BigradedGroups& b) {
    return a.entries == b.entries;
  }

  BigradedGroups shifted(int di, int dj) const {
    BigradedGroups out;
    for (auto& [ij, g] : entries) out.entries[{ij.first + di, ij.second + dj}] = g;
    return out;
  }

  /// Collapse onto the delta = j - 2i grading.
  std::map<int, AbelianGroup> delta_table() const {
    std::map<int, AbelianGroup> out;
    for (auto& [ij, g] : entries) {
      auto& slot = out[ij.second - 2 * ij.first];
      slot = direct_sum(slot, g);
    }
    return out;
  }

  /// Graded Euler characteristic over the free ranks.
  LaurentPoly graded_euler() const {
    LaurentPoly p;
    for (auto& [ij, g] : entries)
      p.add_term(ij.second, (ij.first & 1) ? -g.rank : g.rank);
    return p;
  }

  /// Poincare polynomial text in the q^j t^i display style.
  std::string poincare() const {
    std::map<std::pair<int, int>, long long> by_it; // (i, j) -> rank, i major
    for (auto& [ij, g] : entries)
      if (g.rank) by_it[{ij.first, ij.second}] = g.rank;
    if (by_it.empty()) return "0";
    std::string out;
    for (auto& [ij, r] : by_it) {
      if (!out.empty()) out += " + ";
      if (r != 1) out += std::to_string(r);
      out += "q^" + std::to_string(ij.second);
      if (ij.first != 0) {
        out += "t";
        if (ij.first != 1) out += "^" + std::to_string(ij.first);
      }
    }
    return out;
  }
};

inline ThicknessInterval thickness(const BigradedGroups& h) {
  if (h.is_zero()) throw std::invalid_argument("thickness of the zero module");
  int lo = 1 << 30, hi = -(1 << 30);
  for (auto& [ij, g] : h.entries) {
    int delta = ij.second - 2 * ij.first;
    lo = std::min(lo, delta);
    hi = std::max(hi, delta);
  }
  if ((hi - lo) & 1) throw std::logic_error("delta support of mixed parity");
  return {lo, hi};
}

// --- the homology pipeline -------------------------------------------------------

struct HomologyOptions {
  int budget = 22;           // refuse diagrams with more crossings
  bool reduced = false;      // requires a basepoint on the diagram
  bool via_cube = false;     // small-diagram oracle path instead of scanning
  bool cube_simplify = true; // run Gaussian elimination on the raw cube
};

namespace detail_homology {

inline AbelianGroup cell_group(const BlockHomology::Cell& cell, const Ring& ring) {
  // rank of a matrix over the coefficient ring, from its integer invariant
  // factors: over Q every nonzero factor counts, over Fp those prime to p
  auto rank_over = [&](const std::vector<long long>& factors) -> long long {
    if (ring.kind != Ring::Fp) return static_cast<long long>(factors.size());
    long long r = 0;
    for (long long f : factors) r += (f % ring.p) != 0;
    return r;
  };
  AbelianGroup g;
  g.rank = cell.dim - rank_over(cell.dout) - rank_over(cell.din);
  if (ring.kind == Ring::Z)
    for (long long f : cell.din)
      if (f > 1) g.torsion.push_back(f);
  return g;
}

} // namespace detail_homology

/// Assemble the bigraded homology over the requested ring from raw block data,
/// applying the (i, j) shifts.
inline BigradedGroups assemble_homology(const BlockHomology& blocks, const Ring& ring,
                                        int i_shift, int j_shift) {
  BigradedGroups out;
  for (auto& [hq, cell] : blocks.cells) {
    AbelianGroup g = detail_homology::cell_group(cell, ring);
    out.set(hq.first + i_shift, hq.second + j_shift, std::move(g));
  }
  return out;
}

/// Tensor with (q + 1/q) for each extra crossingless unknot component.
inline BigradedGroups tensor_unknot_factor(const BigradedGroups& h) {
  BigradedGroups out;
  for (auto& [ij, g] : h.entries) {
    auto add = [&](int dj) {
      auto& slot = out.entries[{ij.first, ij.second + dj}];
      slot = direct_sum(slot, g);
    };
    add(1);
    add(-1);
  }
  return out;
}

/// Khovanov homology of a diagram over Z, Q or Fp (unreduced or reduced).
inline BigradedGroups homology(const LinkDiagram& d, const Ring& ring,
                               const HomologyOptions& opt = {}) {
  if (d.crossing_count() > opt.budget) throw budget_error(d.crossing_count());
  int base = -1;
  std::vector<int> frees = d.free_circles();
  bool base_on_free = false;
  if (opt.reduced) {
    if (d.basepoint < 0) throw std::invalid_argument("reduced homology needs a basepoint");
    base = d.basepoint;
    auto labels = d.edge_labels();
    if (std::find(labels.begin(), labels.end(), base) == labels.end())
      throw std::invalid_argument("basepoint is not an edge of the diagram");
    for (int e : frees)
      if (e == base) base_on_free = true;
  }

  ChainComplex cc;
  if (opt.via_cube) {
    cc = cube_complex(d, opt.budget, base_on_free ? -1 : base);
    if (opt.cube_simplify) cc = simplify(cc);
  } else {
    cc = Scanner::run(d, base_on_free ? -1 : base);
  }

  BlockHomology blocks = block_homology(cc);
  int i_shift = -d.neg();
  int j_shift = d.pos() - 2 * d.neg();
  BigradedGroups h = assemble_homology(blocks, ring, i_shift, j_shift);

  // crossingless unknot components tensor on (q + 1/q) factors; a based one
  // contributes its x label only
  for (int e : frees) {
    if (opt.reduced && e == base)
      h = h.shifted(0, -1);
    else
      h = tensor_unknot_factor(h);
  }
  if (opt.reduced) h = h.shifted(0, 1); // normalize: reduced unknot sits at (0,0)
  return h;
}

inline BigradedGroups reduced_homology(const LinkDiagram& d, const Ring& ring,
                                       HomologyOptions opt = {}) {
  opt.reduced = true;
  return homology(d, ring, opt);
}

/// Disjoint-union prediction: tensor plus Tor terms.
inline BigradedGroups kunneth_table(const BigradedGroups& a, const BigradedGroups& b) {
  BigradedGroups out;
  auto accumulate = [&](int i, int j, const AbelianGroup& g) {
    if (g.is_zero()) return;
    auto& slot = out.entries[{i, j}];
    slot = direct_sum(slot, g);
  };
  for (auto& [km, ga] : a.entries)
    for (auto& [lm, gb] : b.entries) {
      accumulate(km.first + lm.first, km.second + lm.second, tensor_groups(ga, gb));
      accumulate(km.first + lm.first - 1, km.second + lm.second, tor_groups(ga, gb));
    }
  return out;
}

/// Mirror prediction from the Khovanov symmetry: free part at (-i,-j),
/// torsion of the mirror at (i,j) equals the torsion at (1-i,-j).
inline BigradedGroups kholink_mirror_table(const BigradedGroups& h) {
  BigradedGroups out;
  for (auto& [ij, g] : h.entries) {
    if (g.rank) {
      auto& slot = out.entries[{-ij.first, -ij.second}];
      slot.rank += g.rank;
    }
    if (!g.torsion.empty()) {
      auto& slot = out.entries[{1 - ij.first, -ij.second}];
      std::vector<long long> cyc = slot.torsion;
      cyc.insert(cyc.end(), g.torsion.begin(), g.torsion.end());
      slot.torsion = invariant_factors(std::move(cyc));
    }
  }
  // drop incidental zero slots
  for (auto it = out.entries.begin(); it != out.entries.end();)
    it = it->second.is_zero() ? out.entries.erase(it) : std::next(it);
  return out;
}

// --- skein thickness checker (the glue corollary) ---------------------------------

/// For an oriented skein triple at crossing x: the vertical (oriented) and
/// horizontal resolutions, with e = neg(D_h) - neg(D_+).
struct SkeinTriple {
  LinkDiagram dv, dh;
  int e = 0;
  int sign = 0; // sign of x in D
};

inline SkeinTriple skein_triple(const LinkDiagram& d, int x) {
  SkeinTriple t;
  t.sign = d.crossings[x].sign;
  t.dv = smooth(d, x, t.sign > 0 ? 0 : 1);
  t.dh = smooth(d, x, t.sign > 0 ? 1 : 0);
  int neg_dplus = d.neg() - (t.sign < 0 ? 1 : 0);
  t.e = t.dh.neg() - neg_dplus;
  return t;
}

struct SkeinBoundsReport {
  bool pass = false;
  ThicknessInterval computed{};
  ThicknessInterval v{}, h{};
  int e = 0;
  int sign = 0;
  std::string fired_min, fired_max;
};

/// Check a computed thickness against the glue case analysis.  In the
/// degenerate cases both outcomes allowed by the long exact sequence pass.
inline SkeinBoundsReport check_skein_bounds(const ThicknessInterval& d_thick,
                                            const ThicknessInterval& v,
                                            const ThicknessInterval& h, int e, int sign) {
  if (((v.delta_min ^ v.delta_max) & 1) || ((h.delta_min ^ h.delta_max) & 1))
    throw std::invalid_argument("inconsistent thickness parities");
  SkeinBoundsReport r;
  r.computed = d_thick;
  r.v = v;
  r.h = h;
  r.e = e;
  r.sign = sign;
  std::vector<int> lo_options, hi_options;
  if (sign > 0) {
    if (v.delta_min != h.delta_min + e + 1) {
      lo_options = {std::min(v.delta_min + 1, h.delta_min + e)};
      r.fired_min = "generic";
    } else {
      lo_options = {v.delta_min + 1, v.delta_min - 1};
      r.fired_min = "degenerate";
    }
    if (v.delta_max != h.delta_max + e + 1) {
      hi_options = {std::max(v.delta_max + 1, h.delta_max + e)};
      r.fired_max = "generic";
    } else {
      hi_options = {v.delta_max - 1, v.delta_max + 1};
      r.fired_max = "degenerate";
    }
  } else {
    if (v.delta_min != h.delta_min + e - 1) {
      lo_options = {std::min(v.delta_min - 1, h.delta_min + e)};
      r.fired_min = "generic";
    } else {
      lo_options = {v.delta_min + 1, v.delta_min - 1};
      r.fired_min = "degenerate";
    }
    if (v.delta_max != h.delta_max + e - 1) {
      hi_options = {std::max(v.delta_max - 1, h.delta_max + e)};
      r.fired_max = "generic";
    } else {
      hi_options = {v.delta_max - 1, v.delta_max + 1};
      r.fired_max = "degenerate";
    }
  }
  bool lo_ok = std::find(lo_options.begin(), lo_options.end(), d_thick.delta_min) !=
               lo_options.end();
  bool hi_ok = std::find(hi_options.begin(), hi_options.end(), d_thick.delta_max) !=
               hi_options.end();
  r.pass = lo_ok && hi_ok;
  return r;
}

inline SkeinBoundsReport check_skein_bounds(const LinkDiagram& d, int x, const Ring& ring,
                                            const HomologyOptions& opt = {}) {
  SkeinTriple t = skein_triple(d, x);
  ThicknessInterval dt = thickness(homology(d, ring, opt));
  ThicknessInterval v = thickness(homology(t.dv, ring, opt));
  ThicknessInterval h = thickness(homology(t.dh, ring, opt));
  return check_skein_bounds(dt, v, h, t.e, t.sign);
}

} // namespace khw
