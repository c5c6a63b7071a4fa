#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace khw {

/// One crossing of a planar diagram.  Edge labels are listed counterclockwise
/// starting from the incoming under-strand, so slots 0,2 always carry the
/// under-strand and slots 1,3 the over-strand.  For a positive crossing the
/// over-strand enters at slot 3, for a negative one at slot 1.
struct Crossing {
  std::array<int, 4> e;
  int sign; // +1 or -1

  int over_in_slot() const { return sign > 0 ? 3 : 1; }
  int over_out_slot() const { return sign > 0 ? 1 : 3; }
  friend bool operator==(const Crossing& a, const Crossing& b) {
    return a.e == b.e && a.sign == b.sign;
  }
};

struct BraidWord {
  int strands = 2;
  std::vector<std::pair<int, int>> letters; // (generator 1..strands-1, exponent +-1)

  void push(int gen, int exp) {
    if (gen < 1 || gen >= strands) throw std::invalid_argument("braid generator out of range");
    int step = exp > 0 ? 1 : -1;
    for (int k = 0; k != exp; k += step) letters.emplace_back(gen, step);
  }
  int exponent_sum() const {
    int s = 0;
    for (auto [g, e] : letters) s += e;
    return s;
  }
  BraidWord mirrored() const {
    BraidWord w{strands, {}};
    for (auto [g, e] : letters) w.letters.emplace_back(g, -e);
    return w;
  }
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    BraidWord w{std::max(a.strands, b.strands), a.letters};
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
  }
};

using ResolutionState = std::vector<uint8_t>;

namespace detail {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // returns false when x and y were already joined (the arc closes a circle)
  bool join(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }
};
} // namespace detail

/// Crossing with undetermined orientation: tuple counterclockwise from an
/// arbitrary slot; over13 tells which diagonal carries the over-strand.
struct GeomCrossing {
  std::array<int, 4> e;
  bool over13; // true: slots 1,3 over (slot 0 on the under-strand)
};

/// Oriented link diagram as a PD code plus an oriented component partition.
/// Components listed as edge cycles in traversal order; a single-edge
/// component whose edge occurs in no crossing is a crossingless unknot.
class LinkDiagram {
public:
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> components;
  int basepoint = -1; // edge label, or -1

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int component_count() const { return static_cast<int>(components.size()); }

  std::vector<int> edge_labels() const {
    std::set<int> s;
    for (const auto& c : crossings) s.insert(c.e.begin(), c.e.end());
    for (const auto& comp : components) s.insert(comp.begin(), comp.end());
    return {s.begin(), s.end()};
  }

  int neg() const {
    int n = 0;
    for (const auto& c : crossings) n += c.sign < 0;
    return n;
  }
  int pos() const { return crossing_count() - neg(); }
  int writhe() const { return pos() - neg(); }

  /// Edges of crossingless unknot components.
  std::vector<int> free_circles() const {
    std::set<int> used;
    for (const auto& c : crossings) used.insert(c.e.begin(), c.e.end());
    std::vector<int> out;
    for (const auto& comp : components)
      if (comp.size() == 1 && !used.count(comp[0])) out.push_back(comp[0]);
    return out;
  }

  int component_of_edge(int edge) const {
    for (int i = 0; i < component_count(); ++i)
      for (int e : components[i])
        if (e == edge) return i;
    throw std::invalid_argument("unknown edge label");
  }

  /// Structural validation: every crossing edge occurs exactly twice, the
  /// component partition matches a fresh strand trace, signs consistent.
  void check() const;

  LinkDiagram mirror() const {
    LinkDiagram d = *this;
    for (auto& c : d.crossings) {
      if (c.sign > 0)
        c = Crossing{{c.e[3], c.e[0], c.e[1], c.e[2]}, -1};
      else
        c = Crossing{{c.e[1], c.e[2], c.e[3], c.e[0]}, +1};
    }
    return d;
  }

  LinkDiagram reverse_component(int ci) const {
    if (ci < 0 || ci >= component_count()) throw std::invalid_argument("unknown component id");
    LinkDiagram d = *this;
    std::set<int> in_comp(components[ci].begin(), components[ci].end());
    for (auto& c : d.crossings) {
      bool under_in = in_comp.count(c.e[0]) > 0;
      bool over_in = in_comp.count(c.e[1]) > 0;
      if (under_in) c.e = {c.e[2], c.e[3], c.e[0], c.e[1]};
      if (under_in != over_in) c.sign = -c.sign;
    }
    std::reverse(d.components[ci].begin(), d.components[ci].end());
    return d;
  }

  /// Linking number of component ci with its complement: half the signed
  /// count of crossings between ci and the rest.
  int linking_number(int ci) const {
    if (ci < 0 || ci >= component_count()) throw std::invalid_argument("unknown component id");
    std::set<int> in_comp(components[ci].begin(), components[ci].end());
    int s = 0;
    for (const auto& c : crossings) {
      bool under_in = in_comp.count(c.e[0]) > 0;
      bool over_in = in_comp.count(c.e[1]) > 0;
      if (under_in != over_in) s += c.sign;
    }
    if (s % 2) throw std::logic_error("odd inter-component crossing sum");
    return s / 2;
  }

  LinkDiagram permuted_crossings(const std::vector<int>& perm) const {
    LinkDiagram d = *this;
    d.crossings.clear();
    for (int i : perm) d.crossings.push_back(crossings[i]);
    return d;
  }

  LinkDiagram relabeled(const std::map<int, int>& m) const {
    auto f = [&](int e) {
      auto it = m.find(e);
      return it == m.end() ? e : it->second;
    };
    LinkDiagram d = *this;
    for (auto& c : d.crossings)
      for (auto& e : c.e) e = f(e);
    for (auto& comp : d.components)
      for (auto& e : comp) e = f(e);
    if (d.basepoint >= 0) d.basepoint = f(d.basepoint);
    return d;
  }

  std::string canonical_key() const;
};

// --- construction -----------------------------------------------------------

/// k-component crossingless unlink.
inline LinkDiagram unlink(int k) {
  if (k < 0) throw std::invalid_argument("unlink: negative component count");
  LinkDiagram d;
  for (int i = 0; i < k; ++i) d.components.push_back({i});
  return d;
}

/// Braid closure.  Strands run downward; the crossing sign equals the letter
/// exponent.  Strands untouched by any letter close into crossingless unknots.
inline LinkDiagram closure(const BraidWord& w) {
  if (w.letters.empty()) throw std::invalid_argument("closure of the empty word (use unlink)");
  if (w.strands < 2) throw std::invalid_argument("braid needs at least two strands");
  const int n = w.strands;
  int next = 0;
  std::vector<int> init(n), cur(n), strand_at(n);
  std::vector<std::vector<int>> seq(n); // edge run of the strand that started at position p
  for (int p = 0; p < n; ++p) {
    init[p] = cur[p] = next++;
    strand_at[p] = p;
    seq[p] = {init[p]};
  }
  LinkDiagram d;
  for (auto [g, eps] : w.letters) {
    int i = g - 1, j = g;
    int L = cur[i], R = cur[j], Lp = next++, Rp = next++;
    if (eps > 0)
      d.crossings.push_back({{L, Lp, Rp, R}, +1});
    else
      d.crossings.push_back({{R, L, Lp, Rp}, -1});
    int a = strand_at[i], b = strand_at[j];
    seq[a].push_back(Rp); // the strand from position i emerges at position j
    seq[b].push_back(Lp);
    cur[i] = Lp;
    cur[j] = Rp;
    strand_at[i] = b;
    strand_at[j] = a;
  }
  // close up: bottom of position p glues to its top
  detail::UnionFind uf(next);
  std::vector<int> end_pos(n);
  for (int p = 0; p < n; ++p) end_pos[strand_at[p]] = p;
  for (int s = 0; s < n; ++s) uf.join(init[end_pos[s]], seq[s].back());
  std::vector<bool> seen(n, false);
  for (int s0 = 0; s0 < n; ++s0) {
    if (seen[s0]) continue;
    std::vector<int> comp;
    int s = s0;
    do {
      seen[s] = true;
      for (size_t k = 0; k + 1 < seq[s].size(); ++k) comp.push_back(seq[s][k]);
      if (seq[s].size() == 1) comp.push_back(seq[s][0]); // letterless strand
      s = end_pos[s];
    } while (s != s0);
    d.components.push_back(std::move(comp));
  }
  // compact labels through the closure identifications
  std::map<int, int> remap;
  for (int e = 0; e < next; ++e) {
    int r = uf.find(e);
    if (!remap.count(r)) remap[r] = static_cast<int>(remap.size());
  }
  std::map<int, int> m;
  for (int e = 0; e < next; ++e) m[e] = remap[uf.find(e)];
  d = d.relabeled(m);
  for (auto& comp : d.components) { // letterless strands may have collapsed to one label
    std::vector<int> c2;
    for (int e : comp)
      if (c2.empty() || c2.back() != e) c2.push_back(e);
    if (c2.size() > 1 && c2.front() == c2.back()) c2.pop_back();
    comp = std::move(c2);
  }
  return d;
}

inline LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  int shift = 0;
  for (int e : a.edge_labels()) shift = std::max(shift, e + 1);
  std::map<int, int> m;
  for (int e : b.edge_labels()) m[e] = e + shift;
  LinkDiagram bb = b.relabeled(m);
  LinkDiagram d = a;
  d.crossings.insert(d.crossings.end(), bb.crossings.begin(), bb.crossings.end());
  d.components.insert(d.components.end(), bb.components.begin(), bb.components.end());
  return d;
}

// --- orientation resolution --------------------------------------------------

/// Rebuild an oriented diagram from unoriented crossing geometry.  Components
/// are traced through the 4-valent graph; where a traced strand contains an
/// edge with a tail hint (edge -> occurrence it used to leave from, encoded as
/// 4*crossing+slot in the *new* geometry), the old direction is kept.
inline LinkDiagram from_geometry(const std::vector<GeomCrossing>& geo,
                                 const std::vector<int>& free_circle_edges,
                                 const std::map<int, int>& tail_hints, int basepoint = -1) {
  const int nc = static_cast<int>(geo.size());
  std::map<int, std::vector<int>> occ; // edge -> dart list (4*c+k)
  for (int c = 0; c < nc; ++c)
    for (int k = 0; k < 4; ++k) occ[geo[c].e[k]].push_back(4 * c + k);
  for (auto& [e, v] : occ)
    if (v.size() != 2) throw std::invalid_argument("edge label must occur exactly twice");

  // trace strands; record traversal direction: tail dart of each edge
  std::map<int, int> tail;
  std::vector<std::vector<int>> comps;
  std::set<int> done;
  for (auto& [e0, v0] : occ) {
    if (done.count(e0)) continue;
    std::vector<int> comp;
    std::vector<std::pair<int, int>> dirs; // (edge, tail dart)
    int e = e0;
    int into = v0[0]; // walk e towards this occurrence
    do {
      comp.push_back(e);
      dirs.emplace_back(e, occ[e][0] == into ? occ[e][1] : occ[e][0]);
      done.insert(e);
      int c = into / 4, k = into % 4;
      int out = 4 * c + ((k + 2) & 3);
      e = geo[c].e[(k + 2) & 3];
      into = occ[e][0] == out ? occ[e][1] : occ[e][0];
    } while (e != e0 || into != v0[0]);
    // honor the first tail hint on this strand
    bool flip = false;
    for (auto& [edge, t] : dirs) {
      auto it = tail_hints.find(edge);
      if (it != tail_hints.end()) {
        flip = (it->second != t);
        break;
      }
    }
    if (flip) {
      std::reverse(comp.begin(), comp.end());
      for (auto& [edge, t] : dirs) t = (occ[edge][0] == t) ? occ[edge][1] : occ[edge][0];
    }
    for (auto& [edge, t] : dirs) tail[edge] = t;
    comps.push_back(std::move(comp));
  }

  LinkDiagram d;
  d.basepoint = basepoint;
  d.components = std::move(comps);
  for (int e : free_circle_edges) d.components.push_back({e});
  for (int c = 0; c < nc; ++c) {
    const auto& g = geo[c];
    int under_first = g.over13 ? 0 : 1; // one slot of the under-strand
    // under-in: the under slot whose edge's head is here
    int s1 = under_first, s2 = (under_first + 2) & 3;
    auto is_head = [&](int slot) {
      int e = g.e[slot];
      return tail.at(e) != 4 * c + slot; // head occurrence = the non-tail one
    };
    int uin;
    if (is_head(s1) && !is_head(s2))
      uin = s1;
    else if (is_head(s2) && !is_head(s1))
      uin = s2;
    else {
      // the under-strand passes through this crossing twice with one label
      // (tight kink); orient by the tail record directly
      uin = (tail.at(g.e[s1]) == 4 * c + s1) ? s2 : s1;
    }
    Crossing cr;
    for (int k = 0; k < 4; ++k) cr.e[k] = g.e[(uin + k) & 3];
    // over-in at rotated slot 3 => positive
    int over_slot_a = (uin + 1) & 3, over_slot_b = (uin + 3) & 3;
    bool b_is_in;
    int ea = g.e[over_slot_a], eb = g.e[over_slot_b];
    if (ea != eb)
      b_is_in = (tail.at(eb) != 4 * c + over_slot_b);
    else
      b_is_in = (tail.at(eb) == 4 * c + over_slot_a);
    cr.sign = b_is_in ? +1 : -1;
    d.crossings.push_back(cr);
  }
  return d;
}

namespace detail {
/// Shared surgery helper: remove crossings, glue edge pairs, keep the rest.
/// Returns the rebuilt oriented diagram.
inline LinkDiagram rebuild_after_surgery(const LinkDiagram& d, const std::set<int>& removed,
                                         const std::vector<std::pair<int, int>>& joins,
                                         std::vector<GeomCrossing> added = {}) {
  // dense relabeling domain
  std::vector<int> labels = d.edge_labels();
  for (const auto& g : added)
    for (int e : g.e) labels.push_back(e);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::map<int, int> idx;
  for (size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);

  UnionFind uf(static_cast<int>(labels.size()));
  int closed_circles = 0;
  for (auto [a, b] : joins)
    if (!uf.join(idx.at(a), idx.at(b))) ++closed_circles;

  auto rep = [&](int e) { return labels[uf.find(idx.at(e))]; };

  std::vector<GeomCrossing> geo;
  std::map<int, int> hints;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (removed.count(c)) continue;
    const auto& cr = d.crossings[c];
    GeomCrossing g;
    g.over13 = true;
    for (int k = 0; k < 4; ++k) g.e[k] = rep(cr.e[k]);
    geo.push_back(g);
    int nc = static_cast<int>(geo.size()) - 1;
    int out_slots[2] = {2, cr.over_out_slot()};
    for (int s : out_slots) hints.emplace(rep(cr.e[s]), 4 * nc + s);
  }
  for (const auto& g : added) {
    GeomCrossing gg = g;
    for (int k = 0; k < 4; ++k) gg.e[k] = rep(g.e[k]);
    geo.push_back(gg);
  }

  // surviving free circles + circles closed by the joins
  std::set<int> live;
  for (const auto& g : geo) live.insert(g.e.begin(), g.e.end());
  std::vector<int> frees;
  for (int e : d.free_circles())
    if (!live.count(rep(e))) frees.push_back(rep(e));
  int fresh = labels.empty() ? 0 : labels.back() + 1;
  for (int i = 0; i < closed_circles; ++i) frees.push_back(fresh++);

  int bp = d.basepoint >= 0 ? rep(d.basepoint) : -1;
  if (bp >= 0 && !live.count(bp) &&
      std::find(frees.begin(), frees.end(), bp) == frees.end())
    bp = -1; // basepoint edge vanished into a removed circle
  return from_geometry(geo, frees, hints, bp);
}
} // namespace detail

/// Smooth one crossing.  Choice 0 joins slots (0,1) and (2,3); choice 1 joins
/// (0,3) and (1,2).  For a positive crossing choice 0 is the oriented
/// resolution, for a negative crossing choice 1 is.
inline LinkDiagram smooth(const LinkDiagram& d, int x, int choice) {
  if (x < 0 || x >= d.crossing_count()) throw std::invalid_argument("crossing index out of range");
  if (choice != 0 && choice != 1) throw std::invalid_argument("smoothing choice must be 0 or 1");
  const auto& c = d.crossings[x];
  std::vector<std::pair<int, int>> joins;
  if (choice == 0)
    joins = {{c.e[0], c.e[1]}, {c.e[2], c.e[3]}};
  else
    joins = {{c.e[0], c.e[3]}, {c.e[1], c.e[2]}};
  return detail::rebuild_after_surgery(d, {x}, joins);
}

/// Circle count of a full resolution, by union-find over edge labels.
inline int count_state_circles(const LinkDiagram& d, const ResolutionState& s) {
  if (static_cast<int>(s.size()) != d.crossing_count())
    throw std::invalid_argument("state length must match crossing count");
  std::vector<int> labels = d.edge_labels();
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
  int circles = 0;
  for (size_t i = 0; i < labels.size(); ++i)
    if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) ++circles;
  return circles;
}

inline int s0_circles(const LinkDiagram& d) {
  return count_state_circles(d, ResolutionState(d.crossing_count(), 0));
}
inline int s1_circles(const LinkDiagram& d) {
  return count_state_circles(d, ResolutionState(d.crossing_count(), 1));
}

// --- faces and checkerboard structure ----------------------------------------

struct FaceData {
  int n_faces = 0;
  std::vector<int> face_of_dart;     // dart 4*c+k -> face id
  std::vector<int> quadrant_face;    // quadrant between slots k,k+1 -> face id
  std::vector<int> color;            // face id -> 0/1
  std::vector<int> graph_component;  // crossing -> component id of the 4-valent graph
  int n_graph_components = 0;

  int face_sides(int f) const {
    int n = 0;
    for (int x : face_of_dart) n += (x == f);
    return n;
  }
};

inline FaceData face_data(const LinkDiagram& d) {
  const int nc = d.crossing_count();
  FaceData fd;
  fd.face_of_dart.assign(4 * nc, -1);
  fd.quadrant_face.assign(4 * nc, -1);
  std::map<int, std::vector<int>> occ;
  for (int c = 0; c < nc; ++c)
    for (int k = 0; k < 4; ++k) occ[d.crossings[c].e[k]].push_back(4 * c + k);
  auto mate = [&](int dart) {
    const auto& v = occ[d.crossings[dart / 4].e[dart % 4]];
    return v[0] == dart ? v[1] : v[0];
  };
  for (int s = 0; s < 4 * nc; ++s) {
    if (fd.face_of_dart[s] >= 0) continue;
    int f = fd.n_faces++;
    int cur = s;
    do {
      fd.face_of_dart[cur] = f;
      int m = mate(cur);
      cur = (m & ~3) | ((m + 1) & 3);
    } while (cur != s);
  }
  for (int c = 0; c < nc; ++c)
    for (int k = 0; k < 4; ++k) fd.quadrant_face[4 * c + k] = fd.face_of_dart[4 * c + ((k + 1) & 3)];

  // 2-color faces: quadrants alternate around every crossing
  fd.color.assign(fd.n_faces, -1);
  for (int c0 = 0; c0 < nc; ++c0) {
    if (fd.color[fd.quadrant_face[4 * c0]] >= 0) continue;
    std::vector<int> stack = {c0};
    fd.color[fd.quadrant_face[4 * c0]] = 0;
    std::set<int> visited;
    // propagate through crossings touching already-colored faces
    bool progress = true;
    while (progress) {
      progress = false;
      for (int c = 0; c < nc; ++c) {
        int q[4];
        for (int k = 0; k < 4; ++k) q[k] = fd.quadrant_face[4 * c + k];
        int known = -1;
        for (int k = 0; k < 4; ++k)
          if (fd.color[q[k]] >= 0) known = k;
        if (known < 0) continue;
        for (int k = 0; k < 4; ++k) {
          int want = (fd.color[q[known]] + ((k + known) & 1)) & 1;
          if (fd.color[q[k]] < 0) {
            fd.color[q[k]] = want;
            progress = true;
          } else if (fd.color[q[k]] != want) {
            throw std::logic_error("checkerboard coloring failed");
          }
        }
      }
    }
  }

  // components of the 4-valent graph
  fd.graph_component.assign(nc, -1);
  std::map<int, std::vector<int>> by_edge;
  for (int c = 0; c < nc; ++c)
    for (int k = 0; k < 4; ++k) by_edge[d.crossings[c].e[k]].push_back(c);
  for (int c0 = 0; c0 < nc; ++c0) {
    if (fd.graph_component[c0] >= 0) continue;
    int id = fd.n_graph_components++;
    std::vector<int> stack = {c0};
    fd.graph_component[c0] = id;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int k = 0; k < 4; ++k)
        for (int c2 : by_edge[d.crossings[c].e[k]])
          if (fd.graph_component[c2] < 0) {
            fd.graph_component[c2] = id;
            stack.push_back(c2);
          }
    }
  }
  return fd;
}

/// Connected as a link diagram: one 4-valent graph component, no extra
/// crossingless unknots (the bare unknot counts as connected).
inline bool is_connected(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return d.component_count() == 1;
  if (!d.free_circles().empty()) return false;
  return face_data(d).n_graph_components == 1;
}

inline bool is_alternating(const LinkDiagram& d) {
  std::map<int, std::vector<int>> slot_parity;
  for (const auto& c : d.crossings)
    for (int k = 0; k < 4; ++k) slot_parity[c.e[k]].push_back(k & 1);
  for (auto& [e, v] : slot_parity)
    if (v.size() == 2 && v[0] == v[1]) return false;
  return true;
}

/// Tait graph on the regions of one color class (0 or 1); one edge per
/// crossing.  Computed per planar component of the diagram.
struct TaitGraph {
  int vertices = 0;
  std::vector<std::array<int, 3>> edges; // (region u, region v, crossing)
};

inline std::vector<TaitGraph> checkerboard_graphs(const LinkDiagram& d, int color) {
  if (color != 0 && color != 1) throw std::invalid_argument("color must be 0 or 1");
  FaceData fd = face_data(d);
  std::vector<TaitGraph> out(std::max(fd.n_graph_components, 0));
  // faces of the chosen color, re-indexed per graph component
  std::vector<std::map<int, int>> vid(out.size());
  for (int c = 0; c < d.crossing_count(); ++c) {
    int gc = fd.graph_component[c];
    for (int k = 0; k < 4; ++k) {
      int f = fd.quadrant_face[4 * c + k];
      if (fd.color[f] == color && !vid[gc].count(f)) {
        int id = static_cast<int>(vid[gc].size());
        vid[gc][f] = id;
      }
    }
  }
  for (size_t gc = 0; gc < out.size(); ++gc) out[gc].vertices = static_cast<int>(vid[gc].size());
  for (int c = 0; c < d.crossing_count(); ++c) {
    int gc = fd.graph_component[c];
    int q0 = fd.quadrant_face[4 * c + 0];
    int q1 = fd.quadrant_face[4 * c + 1];
    int q2 = fd.quadrant_face[4 * c + 2];
    int q3 = fd.quadrant_face[4 * c + 3];
    if (fd.color[q0] == color)
      out[gc].edges.push_back({vid[gc][q0], vid[gc][q2], c});
    else
      out[gc].edges.push_back({vid[gc][q1], vid[gc][q3], c});
  }
  return out;
}

// --- Reidemeister reductions --------------------------------------------------

/// One greedy pass of R1 (monogon) and R2 (bigon with over/under alternation)
/// removals, repeated to exhaustion.
inline LinkDiagram simplify_r_moves(const LinkDiagram& d0) {
  LinkDiagram d = d0;
  for (;;) {
    if (d.crossing_count() == 0) return d;
    FaceData fd = face_data(d);
    std::vector<int> size_of(fd.n_faces, 0);
    std::vector<int> first_dart(fd.n_faces, -1);
    std::vector<int> second_dart(fd.n_faces, -1);
    for (int s = 0; s < 4 * d.crossing_count(); ++s) {
      int f = fd.face_of_dart[s];
      if (size_of[f] == 0)
        first_dart[f] = s;
      else if (size_of[f] == 1)
        second_dart[f] = s;
      ++size_of[f];
    }
    bool acted = false;
    for (int f = 0; f < fd.n_faces && !acted; ++f) {
      if (size_of[f] == 1) {
        // kink: the monogon's crossing, loop edge at two adjacent slots
        int c = first_dart[f] / 4;
        const auto& cr = d.crossings[c];
        int loop = -1;
        for (int k = 0; k < 4; ++k)
          if (cr.e[k] == cr.e[(k + 1) & 3]) loop = k;
        if (loop < 0) continue;
        int g = cr.e[(loop + 2) & 3], h = cr.e[(loop + 3) & 3];
        d = detail::rebuild_after_surgery(d, {c}, {{g, h}});
        acted = true;
      } else if (size_of[f] == 2) {
        int d1 = first_dart[f], d2 = second_dart[f];
        int c1 = d1 / 4, c2 = d2 / 4;
        if (c1 == c2) continue;
        const auto& a = d.crossings[c1];
        const auto& b = d.crossings[c2];
        // the bigon edges connect c1 and c2
        int e1 = a.e[d1 % 4], e2 = b.e[d2 % 4];
        auto slot_in = [&](const Crossing& cr, int e, int avoid) {
          for (int k = 0; k < 4; ++k)
            if (cr.e[k] == e && k != avoid) return k;
          for (int k = 0; k < 4; ++k)
            if (cr.e[k] == e) return k;
          return -1;
        };
        int s1a = d1 % 4, s1b = slot_in(b, e1, -1);
        int s2b = d2 % 4, s2a = slot_in(a, e2, -1);
        if (s1b < 0 || s2a < 0) continue;
        // a removable poke has each bigon edge on the same level at both ends;
        // the alternating bigon is a clasp and stays
        bool alt1 = ((s1a & 1) != (s1b & 1));
        bool alt2 = ((s2a & 1) != (s2b & 1));
        if (alt1 || alt2) continue;
        int g1 = a.e[(s1a + 2) & 3], h1 = b.e[(s1b + 2) & 3];
        int g2 = a.e[(s2a + 2) & 3], h2 = b.e[(s2b + 2) & 3];
        d = detail::rebuild_after_surgery(d, {c1, c2}, {{g1, h1}, {g2, h2}});
        acted = true;
      }
    }
    if (!acted) return d;
  }
}

// --- validation and canonical form --------------------------------------------

inline void LinkDiagram::check() const {
  std::map<int, int> count;
  for (const auto& c : crossings)
    for (int e : c.e) ++count[e];
  for (auto [e, n] : count)
    if (n != 2) throw std::logic_error("edge " + std::to_string(e) + " occurs " +
                                       std::to_string(n) + " times");
  std::set<int> comp_edges;
  for (const auto& comp : components)
    for (int e : comp)
      if (!comp_edges.insert(e).second)
        throw std::logic_error("edge repeated across components");
  for (auto [e, n] : count)
    if (!comp_edges.count(e)) throw std::logic_error("crossing edge missing from components");
  // orientation coherence: every edge leaves exactly one crossing and enters one
  std::map<int, int> heads, tails;
  for (const auto& c : crossings) {
    ++heads[c.e[0]];
    ++heads[c.e[c.over_in_slot()]];
    ++tails[c.e[2]];
    ++tails[c.e[c.over_out_slot()]];
  }
  for (auto [e, n] : count) {
    if (heads[e] != 1 || tails[e] != 1)
      throw std::logic_error("inconsistent orientation at edge " + std::to_string(e));
  }
}

inline std::string LinkDiagram::canonical_key() const {
  const int nc = crossing_count();
  std::string best;
  std::map<int, std::vector<std::pair<int, int>>> occ;
  for (int c = 0; c < nc; ++c)
    for (int k = 0; k < 4; ++k) occ[crossings[c].e[k]].push_back({c, k});
  for (int seed = 0; seed < std::max(nc, 1); ++seed) {
    if (nc == 0) break;
    std::vector<int> order;
    std::vector<int> pos(nc, -1);
    std::map<int, int> elabel;
    order.push_back(seed);
    pos[seed] = 0;
    std::string enc;
    for (size_t q = 0; q < order.size(); ++q) {
      int c = order[q];
      for (int k = 0; k < 4; ++k) {
        int e = crossings[c].e[k];
        if (!elabel.count(e)) elabel[e] = static_cast<int>(elabel.size());
        enc += std::to_string(elabel[e]) + ",";
        for (auto [c2, k2] : occ[e])
          if (pos[c2] < 0) {
            pos[c2] = static_cast<int>(order.size());
            order.push_back(c2);
          }
      }
      enc += crossings[c].sign > 0 ? "+;" : "-;";
    }
    enc += "|" + std::to_string(free_circles().size());
    if (best.empty() || enc < best) best = enc;
  }
  if (nc == 0) best = "unknots:" + std::to_string(component_count());
  return best;
}

} // namespace khw
