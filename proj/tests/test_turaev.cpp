#include "doctest.h"

#include <random>

#include "khw/homology.hpp"
#include "khw/turaev.hpp"

using namespace khw;

namespace {

BraidWord torus3(int q) {
  BraidWord w{3, {}};
  for (int i = 0; i < (q > 0 ? q : -q); ++i) {
    w.push(1, q > 0 ? 1 : -1);
    w.push(2, q > 0 ? 1 : -1);
  }
  return w;
}

BraidWord random_word(std::mt19937& rng, int strands, int len) {
  BraidWord w{strands, {}};
  std::uniform_int_distribution<int> gen(1, strands - 1), sgn(0, 1);
  for (int i = 0; i < len; ++i) w.push(gen(rng), sgn(rng) ? 1 : -1);
  return w;
}

} // namespace

TEST_SUITE_BEGIN("turaev");

TEST_CASE("trefoil closure has an alternating Turaev surface") {
  BraidWord w{2, {}};
  w.push(1, 3);
  TuraevReport r = turaev_genus_of_diagram(closure(w));
  CHECK(r.c == 3);
  CHECK(r.s0 == 2);
  CHECK(r.s1 == 3);
  CHECK(r.genus == 0);
}

TEST_CASE("torus braid closures have genus s-1") {
  for (int s = 1; s <= 5; ++s) {
    TuraevReport r = turaev_genus_of_diagram(closure(torus3(s)));
    CHECK(r.c == 2 * s);
    CHECK(r.s0 == 3);
    CHECK(r.s1 == 1);
    CHECK(r.genus == s - 1);
  }
}

TEST_CASE("the 4-crossing almost-alternating closure has genus one") {
  BraidWord w{3, {}};
  w.push(1, 1);
  w.push(2, 1);
  w.push(1, 1);
  w.push(2, -1);
  CHECK(turaev_genus_of_diagram(closure(w)).genus == 1);
}

TEST_CASE("syllable collapse") {
  BraidWord w{3, {}};
  w.push(1, 3);
  w.push(2, 1);
  w.push(1, 4);
  w.push(2, 1);
  BraidWord c = collapse_syllables(w);
  BraidWord expect{3, {}};
  expect.push(1, 1);
  expect.push(2, 1);
  expect.push(1, 1);
  expect.push(2, 1);
  CHECK(c.letters == expect.letters);
  // mixed signs within a generator do not collapse
  BraidWord m{3, {}};
  m.push(1, 1);
  m.push(1, -1);
  CHECK(collapse_syllables(m).letters.size() == 2);
}

TEST_CASE("collapse preserves the closure's Turaev genus") {
  std::mt19937 rng(404);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 100; ++trial) {
    BraidWord w = random_word(rng, 3, 4 + static_cast<int>(rng() % 11));
    LinkDiagram d = closure(w);
    if (!is_connected(d)) continue;
    LinkDiagram dc = closure(collapse_syllables(w));
    if (!is_connected(dc)) continue;
    CHECK(turaev_genus_of_diagram(d).genus == turaev_genus_of_diagram(dc).genus);
    ++done;
  }
  CHECK(done == 100);
}

TEST_CASE("collapsed normal forms hit the floor(q/3) pattern") {
  for (int q = 3; q <= 12; ++q) {
    BraidWord c = collapse_syllables(norm_form(q));
    // the collapsed word alternates s1 s2 with floor(q/3)+1 full periods
    int pairs = 0;
    for (size_t i = 0; i + 1 < c.letters.size(); i += 2) {
      CHECK(c.letters[i] == std::pair{1, 1});
      CHECK(c.letters[i + 1] == std::pair{2, 1});
      ++pairs;
    }
    CHECK(pairs >= q / 3 + 1);
    CHECK(turaev_genus_of_diagram(closure(c)).genus == q / 3);
  }
}

TEST_CASE("torus Turaev genus with the width certificate") {
  CHECK(torus_turaev_genus(5) == 1);
  CHECK(torus_turaev_genus(6) == 2);
  CHECK(torus_turaev_genus(-7) == 2);
  CHECK(torus_turaev_genus(2) == 0);
  CHECK(torus_turaev_genus(3) == 1);
  CHECK_THROWS_AS(torus_turaev_genus(1), std::invalid_argument);
}

TEST_CASE("mirror invariance and the width bound") {
  std::mt19937 rng(77);
  int done = 0;
  for (int trial = 0; trial < 60 && done < 20; ++trial) {
    LinkDiagram d = closure(random_word(rng, 3, 7));
    if (!is_connected(d)) continue;
    CHECK(turaev_genus_of_diagram(d).genus == turaev_genus_of_diagram(d.mirror()).genus);
    // w_Kh - 2 <= g(Sigma_D) for every diagram of the link
    int w = thickness(homology(d, Ring::z())).width();
    CHECK(w - 2 <= turaev_genus_of_diagram(d).genus);
    ++done;
  }
  CHECK(done == 20);
}

TEST_CASE("alternating connected diagrams have Turaev genus zero") {
  std::mt19937 rng(88);
  int done = 0;
  for (int trial = 0; trial < 100 && done < 25; ++trial) {
    // words s1^{a1} s2^{-b1} ... close to alternating diagrams
    BraidWord w{3, {}};
    int pairs = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < pairs; ++k) {
      w.push(1, 1 + static_cast<int>(rng() % 3));
      w.push(2, -1 - static_cast<int>(rng() % 3));
    }
    LinkDiagram d = closure(w);
    if (!is_connected(d) || !is_alternating(d)) continue;
    CHECK(turaev_genus_of_diagram(d).genus == 0);
    ++done;
  }
  for (int k = 2; k <= 7; ++k) {
    BraidWord w{2, {}};
    w.push(1, k);
    CHECK(turaev_genus_of_diagram(closure(w)).genus == 0);
    ++done;
  }
  CHECK(done >= 25);
  CHECK_THROWS_AS(turaev_genus_of_diagram(unlink(2)), std::invalid_argument);
}

TEST_SUITE_END();
