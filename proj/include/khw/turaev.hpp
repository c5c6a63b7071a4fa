#pragma once

#include <stdexcept>

#include "khw/braid3.hpp"
#include "khw/diagram.hpp"

namespace khw {

struct TuraevReport {
  int c = 0, s0 = 0, s1 = 0;
  int genus = 0;
};

/// Genus of the Turaev surface of a connected diagram:
/// g = (2 - s0 - s1 + c) / 2.
inline TuraevReport turaev_genus_of_diagram(const LinkDiagram& d) {
  if (!is_connected(d)) throw std::invalid_argument("Turaev surface needs a connected diagram");
  TuraevReport r;
  r.c = d.crossing_count();
  r.s0 = s0_circles(d);
  r.s1 = s1_circles(d);
  int num = 2 - r.s0 - r.s1 + r.c;
  if (num < 0 || (num & 1)) throw std::logic_error("Turaev genus formula parity violated");
  r.genus = num / 2;
  return r;
}

/// Replace every maximal same-generator same-sign run by a single letter;
/// the closure's Turaev genus is unchanged.
inline BraidWord collapse_syllables(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  for (auto [g, e] : w.letters) {
    if (!out.letters.empty() && out.letters.back().first == g &&
        out.letters.back().second == e)
      continue;
    out.letters.emplace_back(g, e);
  }
  return out;
}

/// Turaev genus of T(3,q): the collapsed normal-form closure realizes
/// floor(|q|/3) and the width bound certifies it from below.
inline int torus_turaev_genus(int q) {
  int a = q < 0 ? -q : q;
  if (a < 2) throw std::invalid_argument("torus_turaev_genus needs |q| >= 2");
  int expected = a / 3;
  int upper;
  if (a == 2) {
    BraidWord w{2, {}};
    w.push(1, 3); // alternating trefoil diagram
    upper = turaev_genus_of_diagram(closure(w)).genus;
  } else {
    upper = turaev_genus_of_diagram(closure(collapse_syllables(norm_form(a)))).genus;
  }
  int lower = torus_thickness(a).width() - 2;
  if (lower != expected || upper != expected)
    throw std::logic_error("torus Turaev genus certification failed");
  return expected;
}

} // namespace khw
