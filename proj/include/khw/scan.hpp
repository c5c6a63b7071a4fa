#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "khw/complex.hpp"
#include "khw/diagram.hpp"

namespace khw {

// Scanning construction of the Khovanov complex: crossings are tensored on one
// at a time, closed circles are delooped immediately, and +-1 entries are
// cancelled, so the live complex stays near homology size.  Objects are
// abstract perfect matchings of the currently open edges; morphisms are
// integer combinations of dotted genus-zero cobordisms (two dots vanish, a
// dotted sphere evaluates to one, a handle trades for 2*dot).

namespace scan_detail {

using Arcs = std::vector<std::pair<int, int>>; // (a<b) pairs, sorted

/// Alternating cycles of two perfect matchings on one point set.
struct CycleData {
  std::vector<int> of_bot, of_top; // arc index -> cycle id
  int count = 0;
};

inline CycleData cycles(const Arcs& bot, const Arcs& top) {
  CycleData cd;
  cd.of_bot.assign(bot.size(), -1);
  cd.of_top.assign(top.size(), -1);
  std::map<int, int> bot_at, top_at;
  for (size_t i = 0; i < bot.size(); ++i) {
    bot_at[bot[i].first] = static_cast<int>(i);
    bot_at[bot[i].second] = static_cast<int>(i);
  }
  for (size_t i = 0; i < top.size(); ++i) {
    top_at[top[i].first] = static_cast<int>(i);
    top_at[top[i].second] = static_cast<int>(i);
  }
  for (size_t i = 0; i < bot.size(); ++i) {
    if (cd.of_bot[i] >= 0) continue;
    int id = cd.count++;
    int arc = static_cast<int>(i);
    int pt = bot[i].first;
    for (;;) {
      if (cd.of_bot[arc] >= 0) break;
      cd.of_bot[arc] = id;
      int far = bot[arc].first == pt ? bot[arc].second : bot[arc].first;
      int tarc = top_at.at(far);
      if (cd.of_top[tarc] < 0) cd.of_top[tarc] = id;
      pt = top[tarc].first == far ? top[tarc].second : top[tarc].first;
      arc = bot_at.at(pt);
    }
  }
  return cd;
}

struct CobTerm {
  long long coeff = 0;
  std::vector<int> comp_of_cycle; // canonical: numbered by first appearance
  std::vector<int> dots;          // per component, 0 or 1

  std::pair<std::vector<int>, std::vector<int>> key() const { return {comp_of_cycle, dots}; }
  bool is_identity() const {
    for (size_t i = 0; i < comp_of_cycle.size(); ++i)
      if (comp_of_cycle[i] != static_cast<int>(i)) return false;
    for (int d : dots)
      if (d) return false;
    return true;
  }
};

using Morphism = std::vector<CobTerm>;

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error();
  return r;
}

inline void combine(Morphism& m) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, long long> acc;
  for (auto& t : m) {
    long long& cell = acc[t.key()];
    if (__builtin_add_overflow(cell, t.coeff, &cell)) throw overflow_error();
  }
  Morphism out;
  for (auto& [k, c] : acc)
    if (c) out.push_back(CobTerm{c, k.first, k.second});
  m = std::move(out);
}

/// Union-find over surface pieces accumulating Euler characteristic and dots.
struct PieceGlue {
  std::vector<int> parent, chi, dots;
  long long scale = 1;

  int add(int chi0, int dots0) {
    parent.push_back(static_cast<int>(parent.size()));
    chi.push_back(chi0);
    dots.push_back(dots0);
    return static_cast<int>(parent.size()) - 1;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // glue along an interval; a self-gluing still costs chi one
  void join_interval(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      chi[a] -= 1;
      return;
    }
    parent[b] = a;
    chi[a] += chi[b] - 1;
    dots[a] += dots[b];
  }
  // glue a disk along a full boundary circle of group `onto`
  void add_disk(int onto, int dots0) {
    int d = add(1, dots0);
    int a = find(onto);
    parent[d] = a;
    chi[a] += 1;
    dots[a] += dots0;
  }
  /// Trade genus for dots; false when the group kills the term.
  bool normalize(int root, int boundary_cycles) {
    int g2 = 2 - boundary_cycles - chi[root];
    if (g2 < 0 || (g2 & 1)) throw std::logic_error("inconsistent cobordism genus");
    int genus = g2 / 2;
    for (int i = 0; i < genus; ++i) scale *= 2;
    dots[root] += genus;
    chi[root] = 2 - boundary_cycles;
    if (dots[root] >= 2) return false;
    if (boundary_cycles == 0 && dots[root] != 1) return false;
    return true;
  }
};

/// g after f across a shared middle matching.
inline Morphism compose(const Morphism& f, const Arcs& A, const Arcs& B, const Morphism& g,
                        const Arcs& C) {
  CycleData ab = cycles(A, B), bc = cycles(B, C), ac = cycles(A, C);
  Morphism out;
  for (const auto& ft : f)
    for (const auto& gt : g) {
      PieceGlue pg;
      int fn = static_cast<int>(ft.dots.size());
      int gn = static_cast<int>(gt.dots.size());
      std::vector<int> fcyc(fn, 0), gcyc(gn, 0);
      for (int c : ft.comp_of_cycle) ++fcyc[c];
      for (int c : gt.comp_of_cycle) ++gcyc[c];
      std::vector<int> fid(fn), gid(gn);
      for (int i = 0; i < fn; ++i) fid[i] = pg.add(2 - fcyc[i], ft.dots[i]);
      for (int i = 0; i < gn; ++i) gid[i] = pg.add(2 - gcyc[i], gt.dots[i]);
      for (size_t i = 0; i < B.size(); ++i)
        pg.join_interval(fid[ft.comp_of_cycle[ab.of_top[i]]],
                         gid[gt.comp_of_cycle[bc.of_bot[i]]]);
      std::map<int, int> bcount;
      std::vector<int> cyc_group(ac.count, -1);
      for (size_t i = 0; i < A.size(); ++i) {
        int cy = ac.of_bot[i];
        if (cyc_group[cy] >= 0) continue;
        int grp = pg.find(fid[ft.comp_of_cycle[ab.of_bot[i]]]);
        cyc_group[cy] = grp;
        ++bcount[grp];
      }
      std::set<int> roots;
      for (size_t i = 0; i < pg.parent.size(); ++i) roots.insert(pg.find(static_cast<int>(i)));
      bool ok = true;
      for (int r : roots)
        if (!pg.normalize(r, bcount.count(r) ? bcount[r] : 0)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      CobTerm t;
      t.coeff = checked_mul(checked_mul(ft.coeff, gt.coeff), pg.scale);
      t.comp_of_cycle.resize(ac.count);
      std::map<int, int> comp_id;
      for (int cy = 0; cy < ac.count; ++cy) {
        int r = pg.find(cyc_group[cy]);
        auto it = comp_id.find(r);
        if (it == comp_id.end()) {
          int id = static_cast<int>(comp_id.size());
          comp_id[r] = id;
          t.dots.push_back(pg.dots[r]);
          t.comp_of_cycle[cy] = id;
        } else {
          t.comp_of_cycle[cy] = it->second;
        }
      }
      out.push_back(std::move(t));
    }
  combine(out);
  return out;
}

} // namespace scan_detail

/// Incremental Khovanov complex builder.
class Scanner {
public:
  /// Complex of the diagram's crossing part with internal gradings
  /// (layer = #1-smoothings, q = layer + label degrees).  Reduced when
  /// base_edge >= 0: the based circle is constrained to the x label.
  /// Crossingless unknot components are the caller's to tensor on.
  static ChainComplex run(const LinkDiagram& d, int base_edge = -1) {
    Scanner s(d, base_edge);
    for (int step = 0; step < d.crossing_count(); ++step) s.append(s.next_crossing());
    return s.finish();
  }

private:
  using Arcs = scan_detail::Arcs;
  using Morphism = scan_detail::Morphism;
  using CobTerm = scan_detail::CobTerm;
  using PieceGlue = scan_detail::PieceGlue;
  using CycleData = scan_detail::CycleData;

  struct Object {
    int h = 0, q = 0;
    Arcs arcs;
    int based_arc = -1;
    bool alive = true;
  };

  // source of an arc piece inside one append step
  struct ArcSrc {
    bool from_old;
    int idx; // old-object arc index, or smoothing-arc index (0/1)
  };

  struct Glued {
    Arcs arcs;
    std::vector<ArcSrc> arc_src; // representative constituent per new arc
    struct Circle {
      ArcSrc rep;
      bool based = false;
    };
    std::vector<Circle> circles;
    int based_arc = -1;
    std::vector<std::pair<ArcSrc, ArcSrc>> contractions; // one per consumed point
  };

  struct Expansion {
    Glued g;
    std::vector<int> new_ids;     // object per free-circle labeling mask
    std::vector<int> circle_kind; // 0 = free (two summands), 1 = based (x only)
    int n_free = 0;
  };

  const LinkDiagram& d_;
  int base_edge_;
  std::vector<Object> obj_;
  std::map<std::pair<int, int>, Morphism> edge_;
  std::vector<std::set<int>> out_, in_;
  std::vector<char> processed_;
  std::set<int> open_;

  explicit Scanner(const LinkDiagram& d, int base_edge) : d_(d), base_edge_(base_edge) {
    processed_.assign(d.crossing_count(), 0);
    obj_.push_back(Object{});
    out_.resize(1);
    in_.resize(1);
  }

  int next_crossing() const {
    int best = -1, best_score = -100;
    for (int c = 0; c < d_.crossing_count(); ++c) {
      if (processed_[c]) continue;
      std::map<int, int> local;
      for (int e : d_.crossings[c].e) ++local[e];
      int closes = 0, opens = 0;
      for (auto [e, k] : local) {
        if (k == 2)
          closes += 2;
        else if (open_.count(e))
          ++closes;
        else
          ++opens;
      }
      int score = closes - opens;
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    return best;
  }

  static std::array<std::pair<int, int>, 2> smoothing_arcs(const Crossing& c, int choice) {
    if (choice == 0) return {{{c.e[0], c.e[1]}, {c.e[2], c.e[3]}}};
    return {{{c.e[0], c.e[3]}, {c.e[1], c.e[2]}}};
  }

  /// Merge an object's matching with two smoothing arcs: new open arcs,
  /// closed circles, contraction pairs, basepoint tracking.
  Glued glue(const Object& o, const std::array<std::pair<int, int>, 2>& cross) const {
    Glued g;
    // arc-end table: each arc contributes two linked ends
    struct End {
      ArcSrc src;
      int point;
      int mate; // index of the arc's other end
      int partner = -1; // the other end at the same point (degree-2 points)
      bool used = false;
    };
    std::vector<End> ends;
    std::map<int, std::vector<int>> at;
    auto add_arc = [&](ArcSrc src, std::pair<int, int> pts) {
      int i = static_cast<int>(ends.size());
      ends.push_back({src, pts.first, i + 1});
      ends.push_back({src, pts.second, i});
      at[pts.first].push_back(i);
      at[pts.second].push_back(i + 1);
    };
    for (size_t i = 0; i < o.arcs.size(); ++i) add_arc({true, static_cast<int>(i)}, o.arcs[i]);
    for (int i = 0; i < 2; ++i) add_arc({false, i}, cross[i]);
    for (auto& [p, v] : at) {
      if (v.size() == 2) {
        ends[v[0]].partner = v[1];
        ends[v[1]].partner = v[0];
        g.contractions.push_back({ends[v[0]].src, ends[v[1]].src});
      } else if (v.size() > 2) {
        throw std::logic_error("point of degree > 2 while gluing");
      }
    }
    auto marks_based = [&](const End& e, const End& far) {
      if (e.src.from_old && e.src.idx == o.based_arc) return true;
      if (base_edge_ < 0) return false;
      // the basepoint edge marks its path once it is being consumed here
      if (e.point == base_edge_ && e.partner >= 0) return true;
      if (far.point == base_edge_ && far.partner >= 0) return true;
      return false;
    };
    // open paths
    std::vector<std::pair<int, ArcSrc>> raw; // (other endpoint found later)
    for (auto& [p, v] : at) {
      if (v.size() != 1) continue;
      int cur = v[0];
      if (ends[cur].used) continue;
      ArcSrc first = ends[cur].src;
      bool based = false;
      int endpoint;
      for (;;) {
        End& e = ends[cur];
        End& far = ends[e.mate];
        e.used = true;
        far.used = true;
        if (marks_based(e, far)) based = true;
        if (far.partner < 0) {
          endpoint = far.point;
          break;
        }
        cur = far.partner;
      }
      int a = p, b = endpoint;
      if (a > b) std::swap(a, b);
      g.arcs.push_back({a, b});
      g.arc_src.push_back(first);
      if (based) g.based_arc = static_cast<int>(g.arcs.size()) - 1;
    }
    // canonical arc order
    {
      std::vector<size_t> order(g.arcs.size());
      for (size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](size_t x, size_t y) { return g.arcs[x] < g.arcs[y]; });
      Arcs na;
      std::vector<ArcSrc> ns;
      int nb = -1;
      for (size_t k = 0; k < order.size(); ++k) {
        na.push_back(g.arcs[order[k]]);
        ns.push_back(g.arc_src[order[k]]);
        if (g.based_arc == static_cast<int>(order[k])) nb = static_cast<int>(k);
      }
      g.arcs = std::move(na);
      g.arc_src = std::move(ns);
      g.based_arc = nb;
    }
    // leftover circles
    for (size_t start = 0; start < ends.size(); ++start) {
      if (ends[start].used) continue;
      Glued::Circle circ;
      circ.rep = ends[start].src;
      int cur = static_cast<int>(start);
      for (;;) {
        End& e = ends[cur];
        End& far = ends[e.mate];
        e.used = true;
        far.used = true;
        if (marks_based(e, far)) circ.based = true;
        cur = far.partner;
        if (cur == static_cast<int>(start)) break;
        if (ends[cur].used && cur != static_cast<int>(start))
          throw std::logic_error("circle walk revisited an end");
      }
      g.circles.push_back(std::move(circ));
    }
    return g;
  }

  void append(int x) {
    processed_[x] = 1;
    const Crossing& cr = d_.crossings[x];
    std::map<int, int> local;
    for (int e : cr.e) ++local[e];
    for (auto [e, k] : local) {
      if (k == 2) continue;
      if (open_.count(e))
        open_.erase(e);
      else
        open_.insert(e);
    }
    std::array<std::array<std::pair<int, int>, 2>, 2> sm = {smoothing_arcs(cr, 0),
                                                            smoothing_arcs(cr, 1)};

    std::vector<std::array<Expansion, 2>> exp(obj_.size());
    std::vector<Object> nobj;
    for (size_t i = 0; i < obj_.size(); ++i) {
      if (!obj_[i].alive) continue;
      for (int m = 0; m < 2; ++m) {
        Expansion& ex = exp[i][m];
        ex.g = glue(obj_[i], sm[m]);
        for (auto& c : ex.g.circles) ex.circle_kind.push_back(c.based ? 1 : 0);
        for (int k : ex.circle_kind) ex.n_free += (k == 0);
        for (int mask = 0; mask < (1 << ex.n_free); ++mask) {
          Object o;
          o.h = obj_[i].h + m;
          o.q = obj_[i].q + m;
          o.arcs = ex.g.arcs;
          o.based_arc = ex.g.based_arc;
          int bit = 0;
          for (size_t ci = 0; ci < ex.g.circles.size(); ++ci) {
            if (ex.circle_kind[ci] == 1) {
              o.q -= 1;
            } else {
              o.q += ((mask >> bit) & 1) ? -1 : +1;
              ++bit;
            }
          }
          ex.new_ids.push_back(static_cast<int>(nobj.size()));
          nobj.push_back(o);
        }
      }
    }

    std::map<std::pair<int, int>, Morphism> nedge;
    for (auto& [key, f] : edge_) {
      auto [oi, pi] = key;
      for (int m = 0; m < 2; ++m)
        emit_transport(nedge, nobj, obj_[oi], obj_[pi], f, exp[oi][m], exp[pi][m]);
    }
    for (size_t i = 0; i < obj_.size(); ++i) {
      if (!obj_[i].alive) continue;
      emit_saddle(nedge, nobj, obj_[i], exp[i][0], exp[i][1]);
    }

    obj_ = std::move(nobj);
    edge_.clear();
    out_.assign(obj_.size(), {});
    in_.assign(obj_.size(), {});
    for (auto& [key, m] : nedge) {
      scan_detail::combine(m);
      if (m.empty()) continue;
      const Object& X = obj_[key.first];
      const Object& Y = obj_[key.second];
      if (X.h + 1 != Y.h) throw std::logic_error("homological grading violation in scan");
      for (const auto& t : m) {
        // each term must be homogeneous: q(Y) - q(X) = -(chi - |P|/2 - 2 dots)
        int cycles = static_cast<int>(t.comp_of_cycle.size());
        int comps = static_cast<int>(t.dots.size());
        int dots = 0;
        for (int dd : t.dots) dots += dd;
        int deg = 2 * comps - cycles - static_cast<int>(X.arcs.size()) - 2 * dots;
        if (Y.q - X.q != -deg) throw std::logic_error("quantum grading violation in scan");
      }
      out_[key.first].insert(key.second);
      in_[key.second].insert(key.first);
      edge_[key] = std::move(m);
    }
    cancel_all();
  }

  /// Bottom/top disks for the deloop maps.  Bottom circle labeled x includes
  /// via a dotted cup; top circle projects to the 1 summand via a dotted cap.
  template <class FB, class FT>
  void emit_disks(PieceGlue& pg, const Expansion& eb, const Expansion& et, int mb, int mt,
                  FB bot_piece, FT top_piece) const {
    int bit = 0;
    for (size_t ci = 0; ci < eb.g.circles.size(); ++ci) {
      int dot;
      if (eb.circle_kind[ci] == 1) {
        dot = 1;
      } else {
        dot = ((mb >> bit) & 1) ? 1 : 0;
        ++bit;
      }
      pg.add_disk(bot_piece(eb.g.circles[ci].rep), dot);
    }
    bit = 0;
    for (size_t ci = 0; ci < et.g.circles.size(); ++ci) {
      int dot;
      if (et.circle_kind[ci] == 1) {
        dot = 0;
      } else {
        dot = ((mt >> bit) & 1) ? 0 : 1;
        ++bit;
      }
      pg.add_disk(top_piece(et.g.circles[ci].rep), dot);
    }
  }

  /// Shared tail: boundary cycles, genus normalization, canonical term.
  template <class FB>
  void finalize_term(Morphism& add, const Object& X, const Object& Y, long long coeff,
                     PieceGlue& pg, const Expansion& eb, FB bot_piece) const {
    CycleData xy = scan_detail::cycles(X.arcs, Y.arcs);
    std::map<int, int> bcount;
    std::vector<int> cyc_group(xy.count, -1);
    for (size_t i = 0; i < X.arcs.size(); ++i) {
      int cy = xy.of_bot[i];
      if (cyc_group[cy] >= 0) continue;
      int grp = pg.find(bot_piece(eb.g.arc_src[i]));
      cyc_group[cy] = grp;
      ++bcount[grp];
    }
    std::set<int> roots;
    for (size_t i = 0; i < pg.parent.size(); ++i) roots.insert(pg.find(static_cast<int>(i)));
    for (int r : roots)
      if (!pg.normalize(r, bcount.count(r) ? bcount[r] : 0)) return;
    CobTerm t;
    t.coeff = scan_detail::checked_mul(coeff, pg.scale);
    t.comp_of_cycle.resize(xy.count);
    std::map<int, int> comp_id;
    for (int cy = 0; cy < xy.count; ++cy) {
      int r = pg.find(cyc_group[cy]);
      auto it = comp_id.find(r);
      if (it == comp_id.end()) {
        int id = static_cast<int>(comp_id.size());
        comp_id[r] = id;
        t.dots.push_back(pg.dots[r]);
        t.comp_of_cycle[cy] = id;
      } else {
        t.comp_of_cycle[cy] = it->second;
      }
    }
    add.push_back(std::move(t));
  }

  void emit_transport(std::map<std::pair<int, int>, Morphism>& nedge,
                      const std::vector<Object>& nobj, const Object& O, const Object& P,
                      const Morphism& f, const Expansion& eb, const Expansion& et) const {
    CycleData op = scan_detail::cycles(O.arcs, P.arcs);
    for (int mb = 0; mb < (1 << eb.n_free); ++mb)
      for (int mt = 0; mt < (1 << et.n_free); ++mt) {
        int X = eb.new_ids[mb], Y = et.new_ids[mt];
        Morphism add;
        for (const auto& ft : f) {
          PieceGlue pg;
          int fn = static_cast<int>(ft.dots.size());
          std::vector<int> fcyc(fn, 0);
          for (int c : ft.comp_of_cycle) ++fcyc[c];
          std::vector<int> fid(fn);
          for (int i = 0; i < fn; ++i) fid[i] = pg.add(2 - fcyc[i], ft.dots[i]);
          int sq[2] = {pg.add(1, 0), pg.add(1, 0)};
          auto bot_piece = [&](ArcSrc s) {
            return s.from_old ? fid[ft.comp_of_cycle[op.of_bot[s.idx]]] : sq[s.idx];
          };
          auto top_piece = [&](ArcSrc s) {
            return s.from_old ? fid[ft.comp_of_cycle[op.of_top[s.idx]]] : sq[s.idx];
          };
          // one vertical gluing per consumed point, read off the bottom merge
          for (auto& [a, b] : eb.g.contractions) pg.join_interval(bot_piece(a), bot_piece(b));
          emit_disks(pg, eb, et, mb, mt, bot_piece, top_piece);
          finalize_term(add, nobj[X], nobj[Y], ft.coeff, pg, eb, bot_piece);
        }
        if (!add.empty()) {
          auto& slot = nedge[{X, Y}];
          slot.insert(slot.end(), add.begin(), add.end());
        }
      }
  }

  void emit_saddle(std::map<std::pair<int, int>, Morphism>& nedge,
                   const std::vector<Object>& nobj, const Object& O, const Expansion& eb,
                   const Expansion& et) const {
    long long sgn = (O.h & 1) ? -1 : 1;
    for (int mb = 0; mb < (1 << eb.n_free); ++mb)
      for (int mt = 0; mt < (1 << et.n_free); ++mt) {
        int X = eb.new_ids[mb], Y = et.new_ids[mt];
        PieceGlue pg;
        std::vector<int> oid(O.arcs.size());
        for (size_t i = 0; i < O.arcs.size(); ++i) oid[i] = pg.add(1, 0);
        int saddle = pg.add(1, 0);
        auto piece = [&](ArcSrc s) { return s.from_old ? oid[s.idx] : saddle; };
        for (auto& [a, b] : eb.g.contractions) pg.join_interval(piece(a), piece(b));
        emit_disks(pg, eb, et, mb, mt, piece, piece);
        Morphism add;
        finalize_term(add, nobj[X], nobj[Y], sgn, pg, eb, piece);
        if (!add.empty()) {
          auto& slot = nedge[{X, Y}];
          slot.insert(slot.end(), add.begin(), add.end());
        }
      }
  }

  void cancel_all() {
    std::deque<std::pair<int, int>> queue;
    for (auto& [k, m] : edge_) queue.push_back(k);
    while (!queue.empty()) {
      auto key = queue.front();
      queue.pop_front();
      auto it = edge_.find(key);
      if (it == edge_.end()) continue;
      auto [X, Y] = key;
      if (!obj_[X].alive || !obj_[Y].alive) continue;
      const Morphism& f = it->second;
      if (f.size() != 1 || (f[0].coeff != 1 && f[0].coeff != -1) || !f[0].is_identity())
        continue;
      if (obj_[X].arcs != obj_[Y].arcs) continue;
      // a pointed object only cancels against one in the same based state:
      // the basepoint constraint is applied when the based circle closes, and
      // the identity cobordism is an isomorphism of the selected parts only
      // when the based arcs agree
      if (obj_[X].based_arc != obj_[Y].based_arc) continue;
      long long u = f[0].coeff;

      std::vector<int> srcs(in_[Y].begin(), in_[Y].end());
      std::vector<int> tgts(out_[X].begin(), out_[X].end());
      for (int s : srcs) {
        if (s == X) continue;
        const Morphism g = edge_.at({s, Y});
        for (int t : tgts) {
          if (t == Y) continue;
          const Morphism& h = edge_.at({X, t});
          Morphism corr =
              scan_detail::compose(g, obj_[s].arcs, obj_[X].arcs, h, obj_[t].arcs);
          for (auto& tm : corr) tm.coeff *= -u;
          auto& slot = edge_[{s, t}];
          slot.insert(slot.end(), corr.begin(), corr.end());
          scan_detail::combine(slot);
          if (slot.empty()) {
            edge_.erase({s, t});
            out_[s].erase(t);
            in_[t].erase(s);
          } else {
            out_[s].insert(t);
            in_[t].insert(s);
            queue.push_back({s, t});
          }
        }
      }
      obj_[X].alive = obj_[Y].alive = false;
      auto drop = [&](int v) {
        for (int s : in_[v]) {
          edge_.erase({s, v});
          out_[s].erase(v);
        }
        for (int t : out_[v]) {
          edge_.erase({v, t});
          in_[t].erase(v);
        }
        in_[v].clear();
        out_[v].clear();
      };
      drop(X);
      drop(Y);
    }
  }

  ChainComplex finish() {
    if (!open_.empty()) throw std::logic_error("scan finished with open edges");
    int hmin = 1 << 30, hmax = -(1 << 30);
    for (auto& o : obj_)
      if (o.alive) {
        hmin = std::min(hmin, o.h);
        hmax = std::max(hmax, o.h);
      }
    ChainComplex cc;
    if (hmin > hmax) return cc;
    cc.h_base = hmin;
    cc.qdeg.resize(hmax - hmin + 1);
    cc.cols.resize(hmax - hmin);
    std::vector<int> id(obj_.size(), -1);
    for (size_t i = 0; i < obj_.size(); ++i) {
      if (!obj_[i].alive) continue;
      if (!obj_[i].arcs.empty()) throw std::logic_error("live object with open arcs");
      int layer = obj_[i].h - hmin;
      id[i] = static_cast<int>(cc.qdeg[layer].size());
      cc.qdeg[layer].push_back(obj_[i].q);
    }
    for (int k = 0; k + 1 <= hmax - hmin; ++k) cc.cols[k].assign(cc.qdeg[k].size(), {});
    for (auto& [key, m] : edge_) {
      auto [X, Y] = key;
      if (!obj_[X].alive || !obj_[Y].alive || m.empty()) continue;
      if (m.size() != 1 || !m[0].comp_of_cycle.empty())
        throw std::logic_error("non-scalar morphism between closed objects");
      cc.cols[obj_[X].h - hmin][id[X]][id[Y]] = m[0].coeff;
    }
    return cc;
  }
};

} // namespace khw
