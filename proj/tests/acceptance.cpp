// Acceptance suite: one line per criterion, exact tolerances, nonzero exit on
// any failure.  Criteria:
//   1  exact rational homology of T(3,5), T(3,6), L6n1
//   2  integral thickness of T(3,q) for q in {+-3..+-8}
//   3  the three-braid normal-form grid, thickness and width
//   4  randomized width-preserving tangle twisting (>= 50 verified trials)
//   5  Turaev genus values and the width-gap corollary
//   6  structural axioms (Euler characteristic, mirrors, Kunneth, reduced
//      width, crossing order, Reidemeister moves)
//   7  quasi-alternating certification and obstruction
//   8  mod-2 thickness coincidence surrogate

#include <chrono>
#include <cstdio>
#include <string>

#include "khw/suites.hpp"

using namespace khw;

namespace {

int failures = 0;

void run(int number, const std::string& label, SuiteReport rep) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = rep.pass();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  (void)secs;
  std::printf("criterion %d (%s): %s  [%d/%zu cases]\n", number, label.c_str(),
              ok ? "PASS" : "FAIL", rep.passed(), rep.cases.size());
  if (!ok) {
    ++failures;
    for (const auto& c : rep.cases)
      if (!c.pass) std::printf("    FAIL %s -- %s\n", c.name.c_str(), c.detail.c_str());
  }
  for (const auto& c : rep.cases)
    if (c.pass && !c.detail.empty() && c.detail.find("corrected") != std::string::npos)
      std::printf("    note %s: %s\n", c.name.c_str(), c.detail.c_str());
}

} // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  run(1, "exact polynomials", suite_polynomials());
  run(2, "torus thickness table", suite_torus(8));
  run(3, "three-braid grid", suite_threebraid(-2, 2));
  run(4, "twisting property suite", suite_twist(20090115, 50));
  run(5, "turaev genus", suite_turaev(-2, 2));
  run(6, "axiom suite", suite_axioms(7));
  run(7, "qa suite", suite_qa());
  run(8, "mod-2 coincidence", suite_mod2(-2, 2));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("acceptance: %s in %.1f s\n", failures ? "FAIL" : "PASS", secs);
  return failures ? 1 : 0;
}
