#include "doctest.h"

#include <random>

#include "khw/classical.hpp"
#include "khw/twist.hpp"

using namespace khw;

namespace {

BraidWord word(int strands, std::initializer_list<std::pair<int, int>> powers) {
  BraidWord w{strands, {}};
  for (auto [g, e] : powers) w.push(g, e);
  return w;
}

const LinkDiagram& trefoil() {
  static LinkDiagram d = closure(word(2, {{1, 3}}));
  return d;
}

BraidWord random_word(std::mt19937& rng, int strands, int len) {
  BraidWord w{strands, {}};
  std::uniform_int_distribution<int> gen(1, strands - 1), sgn(0, 1);
  for (int i = 0; i < len; ++i) w.push(gen(rng), sgn(rng) ? 1 : -1);
  return w;
}

RationalTangle random_alternating_tangle(std::mt19937& rng, int max_total) {
  int total = 2 + static_cast<int>(rng() % (max_total - 1));
  int sign = (rng() & 1) ? 1 : -1;
  std::vector<int> terms;
  while (total > 0) {
    int a = 1 + static_cast<int>(rng() % total);
    terms.push_back(sign * a);
    total -= a;
  }
  return RationalTangle{terms};
}

} // namespace

TEST_SUITE_BEGIN("twist");

TEST_CASE("tangle validation and crossing-count arithmetic") {
  RationalTangle bad{{2, 0, 1}}, empty{{}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
  CHECK(RationalTangle{{2, 3, 4}}.alternating());
  CHECK(RationalTangle{{-1, -4}}.alternating());
  CHECK_FALSE(RationalTangle{{2, -3}}.alternating());

  for (auto terms : std::vector<std::vector<int>>{
           {1}, {2}, {-4}, {2, 3, 4}, {1, 2}, {-2, -2}, {3, 1, 2}}) {
    RationalTangle tau{terms};
    LinkDiagram t = twist(trefoil(), 0, tau);
    t.check();
    CHECK(t.crossing_count() == trefoil().crossing_count() - 1 + tau.crossing_total());
  }
}

TEST_CASE("twisting by C(1) is the identity") {
  for (int x = 0; x < 3; ++x)
    CHECK(twist(trefoil(), x, RationalTangle{{1}}).canonical_key() ==
          trefoil().canonical_key());
}

TEST_CASE("parallel extension equals braid substitution") {
  // sigma1 -> sigma1^k inside a 3-braid word
  BraidWord base = word(3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 1}});
  LinkDiagram d = closure(base);
  LinkDiagram t = twist(d, 4, RationalTangle{{3}});
  BraidWord subst = word(3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 3}});
  CHECK(homology(t, Ring::z()) == homology(closure(subst), Ring::z()));

  // negative crossing: sigma2^-1 -> sigma2^-2
  BraidWord nb = word(3, {{1, 1}, {2, -1}, {1, 1}, {2, -1}});
  LinkDiagram nd = closure(nb);
  LinkDiagram nt = twist(nd, 3, RationalTangle{{2}});
  BraidWord nsub = word(3, {{1, 1}, {2, -1}, {1, 1}, {2, -2}});
  CHECK(homology(nt, Ring::z()) == homology(closure(nsub), Ring::z()));
}

TEST_CASE("transverse twisting of the trefoil gives the figure eight") {
  LinkDiagram t = twist(trefoil(), 0, RationalTangle{{-2}});
  CHECK(determinant(t) == 5);
  LinkDiagram fig8 = closure(word(3, {{1, 1}, {2, -1}, {1, 1}, {2, -1}}));
  CHECK(homology(t, Ring::q()).delta_table().size() ==
        homology(fig8, Ring::q()).delta_table().size());
  CHECK(jones_ordinary(t) == jones_ordinary(fig8));
}

TEST_CASE("width-preserving verdicts at quasi-alternating crossings") {
  for (int x = 0; x < 3; ++x) {
    WidthPreservingReport r = width_preserving(trefoil(), x, Ring::z());
    CHECK(r.sign == 1);
    CHECK(r.v == ThicknessInterval{0, 2});
    CHECK(r.h == ThicknessInterval{-1, 1});
    CHECK(r.verdict);
  }
  LinkDiagram fig8 = closure(word(3, {{1, 1}, {2, -1}, {1, 1}, {2, -1}}));
  for (int x = 0; x < 4; ++x) CHECK(width_preserving(fig8, x, Ring::z()).verdict);
}

TEST_CASE("alt-tangle twisting preserves width on the trefoil") {
  for (auto terms :
       std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {-3}, {-2, -2}, {2, 1, 1}}) {
    RationalTangle tau{terms};
    CAPTURE(tau.str());
    AltTangleReport rep = verify_alt_tangle(trefoil(), 0, tau, Ring::z());
    CHECK(rep.precondition);
    CHECK(rep.pass);
    CHECK(rep.width_before == 2);
    CHECK(rep.width_after == 2);
    REQUIRE(rep.genus_before);
    CHECK(*rep.genus_before == *rep.genus_after);
  }
  CHECK_THROWS_AS(verify_alt_tangle(trefoil(), 0, RationalTangle{{2, -2}}, Ring::z()),
                  std::invalid_argument);
}

TEST_CASE("randomized width-preserving twisting trials") {
  std::mt19937 rng(4242);
  int verified = 0;
  for (int trial = 0; trial < 120 && verified < 12; ++trial) {
    LinkDiagram d = closure(random_word(rng, 3, 4 + static_cast<int>(rng() % 4)));
    if (!is_connected(d)) continue;
    int x = static_cast<int>(rng() % d.crossing_count());
    RationalTangle tau = random_alternating_tangle(rng, 4);
    AltTangleReport rep = verify_alt_tangle(d, x, tau, Ring::z());
    if (!rep.precondition) continue;
    CAPTURE(trial);
    CAPTURE(tau.str());
    CHECK(rep.pass);
    ++verified;
  }
  CHECK(verified == 12);
}

TEST_CASE("band twisting reproduces the positive torus chain") {
  // D = closure((s1 s2)^2 s1), twisting the final s1 runs the k-chain
  LinkDiagram d = closure(word(3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 1}}));
  for (int n = 1; n <= 4; ++n) {
    BandReport rep = verify_band(d, 4, n, Ring::z());
    CHECK(rep.status == BandReport::Pass);
    CHECK(rep.predicted == ThicknessInterval{n + 2, n + 4});
  }
  // and the mirror chain with negative n
  LinkDiagram m = closure(word(3, {{1, -1}, {2, -1}, {1, -1}, {2, -1}, {1, -1}}));
  for (int n = -1; n >= -3; --n) {
    BandReport rep = verify_band(m, 4, n, Ring::z());
    CHECK(rep.status == BandReport::Pass);
    CHECK(rep.predicted == ThicknessInterval{n - 4, n - 2});
  }
}

TEST_CASE("band twisting consistency with the glue bounds at n = 1") {
  LinkDiagram d = closure(word(3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 1}}));
  BandReport rep = verify_band(d, 4, 1, Ring::z());
  REQUIRE(rep.status == BandReport::Pass);
  // the twisted diagram is closure((s1 s2)^2 s1^2); check_skein_bounds at the
  // new crossing must accept the same interval
  LinkDiagram dt = closure(word(3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}, {1, 2}}));
  SkeinBoundsReport sk = check_skein_bounds(dt, 5, Ring::z());
  CHECK(sk.pass);
  CHECK(thickness(homology(dt, Ring::z())) == rep.predicted);
}

TEST_CASE("band hypotheses fail on the kinked unknot") {
  LinkDiagram d = closure(word(2, {{1, 1}}));
  BandReport rep = verify_band(d, 0, 2, Ring::z());
  CHECK(rep.status == BandReport::HypothesesNotSatisfied);
  // the T(2,k) family is still computable directly
  LinkDiagram cur = d;
  int active = 0;
  for (int k = 1; k <= 4; ++k) {
    cur = extend_twist(cur, active, true, false);
    active = cur.crossing_count() - 1;
    ThicknessInterval t = thickness(homology(cur, Ring::z()));
    CHECK(t.width() == 2); // T(2,k+1) stays quasi-alternating thin
  }
}

TEST_CASE("band twist rejects a sign mismatch") {
  CHECK_THROWS_AS(verify_band(trefoil(), 0, -2, Ring::z()), std::invalid_argument);
  CHECK_THROWS_AS(verify_band(trefoil(), 0, 0, Ring::z()), std::invalid_argument);
}

TEST_SUITE_END();
