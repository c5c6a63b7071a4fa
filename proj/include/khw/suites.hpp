#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "khw/braid3.hpp"
#include "khw/classical.hpp"
#include "khw/homology.hpp"
#include "khw/parse.hpp"
#include "khw/qa.hpp"
#include "khw/turaev.hpp"
#include "khw/twist.hpp"

namespace khw {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  bool pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
  int passed() const {
    int n = 0;
    for (const auto& c : cases) n += c.pass;
    return n;
  }
  void add(std::string name, bool ok, std::string detail = "") {
    cases.push_back({std::move(name), ok, std::move(detail)});
  }
};

namespace detail_suites {

inline BraidWord torus3_word(int q) {
  BraidWord w{3, {}};
  for (int i = 0; i < (q > 0 ? q : -q); ++i) {
    w.push(1, q > 0 ? 1 : -1);
    w.push(2, q > 0 ? 1 : -1);
  }
  return w;
}

inline std::string fmt(const ThicknessInterval& t) {
  return "[" + std::to_string(t.delta_min) + "," + std::to_string(t.delta_max) + "]";
}

/// The normal-form sampling grid of the three-braid theorem.
inline std::vector<MurasugiForm> grid_forms(int n_lo, int n_hi, int max_ab = 3,
                                            int max_power = 5) {
  std::vector<MurasugiForm> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    if (n == 0) continue;
    for (int p = 1; p <= max_ab; ++p)
      for (int q = 1; q <= max_ab; ++q)
        out.push_back({n, MurasugiForm::Alt, {{p, q}}, 0});
    for (int p1 = 1; p1 <= max_ab; ++p1)
      for (int p2 = 1; p1 + p2 <= max_ab; ++p2)
        for (int q1 = 1; q1 <= max_ab; ++q1)
          for (int q2 = 1; q1 + q2 <= max_ab; ++q2)
            out.push_back({n, MurasugiForm::Alt, {{p1, q1}, {p2, q2}}, 0});
    for (int m = -max_power; m <= max_power; ++m)
      out.push_back({n, MurasugiForm::Power, {}, m});
    for (int m = -3; m <= -1; ++m) out.push_back({n, MurasugiForm::Special, {}, m});
  }
  return out;
}

/// Fixed corpus of small diagrams for the structural axiom checks.
inline std::vector<std::pair<std::string, std::string>> corpus_words() {
  return {
      {"unknot", "s1"},
      {"unknot-2c", "s1 s2"},
      {"hopf+", "s1^2"},
      {"hopf-", "s1^-2"},
      {"trefoil", "s1^3"},
      {"trefoil-m", "s1^-3"},
      {"t24", "s1^4"},
      {"t25", "s1^5"},
      {"figure8", "s1 s2^-1 s1 s2^-1"},
      {"t33", "(s1 s2)^3"},
      {"t34", "(s1 s2)^4"},
      {"5_2-ish", "s1^2 s2^2 s1 s2^-1"},
      {"6-mixed", "s1 s2 s1^-1 s2 s1 s2"},
      {"62-ish", "s1 s1 s2^-1 s1 s2^-1 s2^-1"},
      {"wh-ish", "s1 s2^-1 s1 s2^-1 s1"},
  };
}

} // namespace detail_suites

/// Criterion 1: exact rational homology of the three pinned links.  The
/// displayed polynomial for T(3,6) has a typeset slip (its q^21 t^7 term sits
/// at t^5; Lee theory pins the corrected spot), noted in the case detail.
inline SuiteReport suite_polynomials(const HomologyOptions& opt = {}) {
  using namespace detail_suites;
  SuiteReport rep{"polynomials", {}};
  auto check = [&](const std::string& name, const BraidWord& w,
                   std::vector<std::tuple<int, int, long long>> expect, std::string note = "") {
    BigradedGroups got = homology(closure(w), Ring::q(), opt);
    BigradedGroups want;
    for (auto& [i, j, r] : expect) want.set(i, j, AbelianGroup{r, {}});
    bool ok = got == want;
    rep.add(name, ok, ok ? note : "computed " + got.poincare());
  };
  check("P(T(3,5))", torus3_word(5),
        {{0, 7, 1},
         {0, 9, 1},
         {2, 11, 1},
         {3, 15, 1},
         {4, 13, 1},
         {4, 15, 1},
         {5, 17, 1},
         {5, 19, 1},
         {6, 17, 1},
         {7, 21, 1}});
  check("P(T(3,6))", torus3_word(6),
        {{0, 9, 1},
         {0, 11, 1},
         {2, 13, 1},
         {3, 17, 1},
         {4, 15, 1},
         {4, 17, 1},
         {5, 19, 1},
         {5, 21, 1},
         {6, 19, 1},
         {7, 23, 1},
         {8, 21, 1},
         {8, 23, 3},
         {8, 25, 2}},
        "reference table corrected: the published q^21 t^7 term sits at t^5");
  BraidWord l6n1 = torus3_word(3);
  for (int i = 0; i < 4; ++i) l6n1.push(2, -1);
  check("P(L6n1)", l6n1,
        {{0, -1, 2}, {0, 1, 3}, {0, 3, 1}, {1, 1, 1}, {2, 5, 1}, {4, 7, 1}, {4, 9, 1}});
  return rep;
}

/// Criterion 2: integral thickness of T(3,q), q in {+-3..+-max_q}.
inline SuiteReport suite_torus(int max_q = 8, const HomologyOptions& opt = {}) {
  using namespace detail_suites;
  SuiteReport rep{"torus", {}};
  for (int a = 3; a <= max_q; ++a)
    for (int q : {a, -a}) {
      ThicknessInterval want = torus_thickness(q);
      ThicknessInterval got = thickness(homology(closure(torus3_word(q)), Ring::z(), opt));
      rep.add("T(3," + std::to_string(q) + ")", got == want,
              "computed " + fmt(got) + " table " + fmt(want));
    }
  return rep;
}

/// Criterion 3: the three-braid grid, thickness and width both exact.
inline SuiteReport suite_threebraid(int n_lo = -2, int n_hi = 2,
                                    const HomologyOptions& opt = {}) {
  using namespace detail_suites;
  SuiteReport rep{"threebraid", {}};
  for (const auto& f : grid_forms(n_lo, n_hi)) {
    ThicknessInterval want = *predicted_thickness(f);
    int want_width = *predicted_width(f);
    ThicknessInterval got = thickness(homology(closure(f.to_word()), Ring::z(), opt));
    bool ok = got == want && got.width() == want_width;
    rep.add(f.str(), ok, "computed " + fmt(got) + " predicted " + fmt(want));
  }
  return rep;
}

/// Criterion 4: randomized width-preserving twisting.  Each verified trial
/// must keep the Khovanov width and the Turaev surface genus.
inline SuiteReport suite_twist(uint64_t seed = 20090115, int want_trials = 50,
                               const HomologyOptions& opt = {}) {
  SuiteReport rep{"twist", {}};
  std::mt19937_64 rng(seed);
  int verified = 0, attempts = 0;
  while (verified < want_trials && attempts < 40 * want_trials) {
    ++attempts;
    int len = 4 + static_cast<int>(rng() % 4); // up to 7 crossings
    BraidWord w{3, {}};
    for (int i = 0; i < len; ++i)
      w.push(1 + static_cast<int>(rng() % 2), (rng() & 1) ? 1 : -1);
    LinkDiagram d = closure(w);
    if (!is_connected(d)) continue;
    int x = static_cast<int>(rng() % d.crossing_count());
    int total = 2 + static_cast<int>(rng() % 3); // sum |a_i| <= 4
    int sign = (rng() & 1) ? 1 : -1;
    std::vector<int> terms;
    int left = total;
    while (left > 0) {
      int a = 1 + static_cast<int>(rng() % left);
      terms.push_back(sign * a);
      left -= a;
    }
    RationalTangle tau{terms};
    AltTangleReport r = verify_alt_tangle(d, x, tau, Ring::z(), opt);
    if (!r.precondition) continue;
    ++verified;
    bool genus_ok = !r.genus_before || *r.genus_before == *r.genus_after;
    rep.add("trial " + std::to_string(verified) + " " + tau.str(), r.pass && genus_ok,
            "width " + std::to_string(r.width_before) + "->" +
                std::to_string(r.width_after));
  }
  rep.add("verified trial count", verified >= want_trials,
          std::to_string(verified) + "/" + std::to_string(want_trials));
  return rep;
}

/// Criterion 5: Turaev genus values and the width-gap bound.
inline SuiteReport suite_turaev(int n_lo = -2, int n_hi = 2, const HomologyOptions& opt = {}) {
  using namespace detail_suites;
  SuiteReport rep{"turaev", {}};
  for (int s = 1; s <= 5; ++s) {
    TuraevReport r = turaev_genus_of_diagram(closure(torus3_word(s)));
    rep.add("g(closure((s1 s2)^" + std::to_string(s) + "))", r.genus == s - 1,
            "genus " + std::to_string(r.genus));
  }
  for (int q = 2; q <= 8; ++q)
    for (int sq : {q, -q})
      rep.add("g_T(T(3," + std::to_string(sq) + "))",
              torus_turaev_genus(sq) == q / 3, "");
  for (const auto& f : grid_forms(n_lo, n_hi)) {
    auto tur = predicted_turaev(f);
    int w = thickness(homology(closure(f.to_word()), Ring::z(), opt)).width();
    int gap = tur->second - (w - 2);
    rep.add("gap " + f.str(), gap >= 0 && gap <= 1,
            "upper " + std::to_string(tur->second) + " width " + std::to_string(w));
  }
  return rep;
}

/// Criterion 6: structural axioms over the fixed corpus.
inline SuiteReport suite_axioms(uint64_t seed = 7, const HomologyOptions& opt = {}) {
  using namespace detail_suites;
  SuiteReport rep{"axioms", {}};
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, LinkDiagram>> corpus;
  for (auto& [name, text] : corpus_words()) corpus.emplace_back(name, closure(parse_braid(text)));
  corpus.emplace_back("split", disjoint_union(closure(parse_braid("s1^3")), unlink(1)));

  for (auto& [name, d] : corpus) {
    BigradedGroups hz = homology(d, Ring::z(), opt);
    BigradedGroups hq = homology(d, Ring::q(), opt);

    rep.add("euler " + name, hq.graded_euler() == jones_unnormalized(d),
            "graded Euler characteristic vs state sum");

    BigradedGroups m = homology(d.mirror(), Ring::z(), opt);
    rep.add("mirror " + name, m == kholink_mirror_table(hz), "rank and torsion symmetry");

    // reduced/unreduced width relation, every component as basepoint
    ThicknessInterval t = thickness(hz);
    bool red_ok = true;
    for (const auto& comp : d.components) {
      LinkDiagram based = d;
      based.basepoint = comp.front();
      ThicknessInterval rt = thickness(reduced_homology(based, Ring::z(), opt));
      red_ok = red_ok && rt.delta_min == t.delta_min + 1 && rt.delta_max == t.delta_max - 1 &&
               rt.width() == t.width() - 1;
    }
    rep.add("reduced width " + name, red_ok, "w - 1 = reduced w, every basepoint");

    bool order_ok = true;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> perm(d.crossing_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      order_ok = order_ok && homology(d.permuted_crossings(perm), Ring::z(), opt) == hz;
    }
    rep.add("order independence " + name, order_ok, "5 random crossing orders");
  }

  // Kunneth with Tor on pairs of small links
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> pairs = {
      {"trefoil x trefoil-m", {"s1^3", "s1^-3"}},
      {"trefoil x hopf", {"s1^3", "s1^2"}},
      {"figure8 x unknot", {"s1 s2^-1 s1 s2^-1", "s1"}},
      {"t24 x trefoil", {"s1^4", "s1^3"}},
  };
  for (auto& [name, ws] : pairs) {
    LinkDiagram a = closure(parse_braid(ws.first));
    LinkDiagram b = closure(parse_braid(ws.second));
    BigradedGroups got = homology(disjoint_union(a, b), Ring::z(), opt);
    BigradedGroups want = kunneth_table(homology(a, Ring::z(), opt), homology(b, Ring::z(), opt));
    rep.add("kunneth " + name, got == want, "tensor plus Tor");
  }

  // Reidemeister moves realized on braid words
  std::vector<std::pair<std::string, std::string>> base_words = {
      {"trefoil", "s1^3"}, {"figure8", "s1 s2^-1 s1 s2^-1"}, {"t34", "(s1 s2)^4"}};
  for (auto& [name, text] : base_words) {
    BraidWord w = parse_braid(text);
    BigradedGroups h = homology(closure(w), Ring::z(), opt);
    BraidWord r1{w.strands + 1, w.letters};
    r1.push(w.strands, 1);
    BraidWord r1n{w.strands + 1, w.letters};
    r1n.push(w.strands, -1);
    BraidWord r2 = w;
    r2.push(1, 1);
    r2.push(1, -1);
    BraidWord r3l{std::max(w.strands, 3), {}};
    r3l.push(1, 1);
    r3l.push(2, 1);
    r3l.push(1, 1);
    BraidWord r3r{std::max(w.strands, 3), {}};
    r3r.push(2, 1);
    r3r.push(1, 1);
    r3r.push(2, 1);
    BraidWord wl = r3l * BraidWord{std::max(w.strands, 3), w.letters};
    BraidWord wr = r3r * BraidWord{std::max(w.strands, 3), w.letters};
    bool ok = homology(closure(r1), Ring::z(), opt) == h &&
              homology(closure(r1n), Ring::z(), opt) == h &&
              homology(closure(r2), Ring::z(), opt) == h &&
              homology(closure(wl), Ring::z(), opt) == homology(closure(wr), Ring::z(), opt);
    rep.add("reidemeister " + name, ok, "R1+, R1-, R2, R3 move pairs");
  }
  return rep;
}

/// Criterion 7: quasi-alternating certification against the classification.
inline SuiteReport suite_qa(const HomologyOptions& opt = {}) {
  using namespace detail_suites;
  SuiteReport rep{"qa", {}};
  auto certify = [&](const std::string& name, const LinkDiagram& d) {
    QAResult r = qa_search(d);
    bool ok = r.certified && validate_certificate(*r.certificate);
    bool thin = false;
    if (ok) {
      LinkDiagram based = d;
      based.basepoint = d.edge_labels().at(0);
      auto dt = reduced_homology(based, Ring::z(), opt).delta_table();
      thin = dt.size() == 1 && dt.begin()->first == -signature(d);
    }
    rep.add("certify " + name, ok && thin,
            ok ? "certificate validated, reduced support at -sigma" : "not certified");
  };
  certify("unknot", closure(parse_braid("s1")));
  certify("trefoil", closure(parse_braid("s1^3")));
  certify("figure8", closure(parse_braid("s1 s2^-1 s1 s2^-1")));
  for (const auto& f : grid_forms(-1, 1)) {
    if (!predicted_qa(f)) {
      QAResult r = qa_search(closure(f.to_word()), 5);
      rep.add("reject " + f.str(), !r.certified, "never certified");
      continue;
    }
    certify(f.str(), closure(f.to_word()));
  }
  for (const auto& f : grid_forms(-2, 2)) {
    int an = f.n < 0 ? -f.n : f.n;
    if (an < 2) continue;
    LinkDiagram d = closure(f.to_word());
    rep.add("obstruct " + f.str(), qa_obstruction(d, opt) == QAObstruction::NotQA,
            "reduced width obstruction");
  }
  return rep;
}

/// Criterion 8: the mod-2 coincidence surrogate on the grid.
inline SuiteReport suite_mod2(int n_lo = -2, int n_hi = 2, const HomologyOptions& opt = {}) {
  using namespace detail_suites;
  SuiteReport rep{"mod2", {}};
  for (const auto& f : grid_forms(n_lo, n_hi)) {
    LinkDiagram d = closure(f.to_word());
    ThicknessInterval tz = thickness(homology(d, Ring::z(), opt));
    ThicknessInterval tq = thickness(homology(d, Ring::q(), opt));
    ThicknessInterval t2 = thickness(homology(d, Ring::f2(), opt));
    bool ok = t2.delta_min <= tz.delta_min && t2.delta_max >= tz.delta_max &&
              tz.delta_min <= tq.delta_min && tz.delta_max >= tq.delta_max &&
              t2.width() >= tq.width();
    rep.add(f.str(), ok,
            "F2 " + fmt(t2) + " Z " + fmt(tz) + " Q " + fmt(tq));
  }
  return rep;
}

inline SuiteReport run_suite(const std::string& name, uint64_t seed,
                             const HomologyOptions& opt = {}) {
  if (name == "polynomials") return suite_polynomials(opt);
  if (name == "torus") return suite_torus(8, opt);
  if (name == "threebraid") return suite_threebraid(-2, 2, opt);
  if (name == "twist") return suite_twist(seed ? seed : 20090115, 50, opt);
  if (name == "turaev") return suite_turaev(-2, 2, opt);
  if (name == "axioms") return suite_axioms(seed ? seed : 7, opt);
  if (name == "qa") return suite_qa(opt);
  if (name == "mod2") return suite_mod2(-2, 2, opt);
  throw std::invalid_argument("unknown suite `" + name + "`");
}

} // namespace khw
