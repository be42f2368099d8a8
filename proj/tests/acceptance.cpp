// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion aggregates the relevant suites at full bounds and
// enforces its wall-clock budget.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ordcal/suites.hpp"

using namespace ordcal;

namespace {

int failures = 0;

struct Run {
  std::string suite;
  SuiteParams p;
};

void criterion(const std::string& label, const std::vector<Run>& runs,
               double budget_millis_each) {
  bool ok = true;
  std::string detail;
  std::size_t pairs = 0;
  for (const Run& r : runs) {
    SuiteReport rep = run_suite(r.suite, r.p);
    pairs += rep.pairs;
    if (!rep.pass()) {
      ok = false;
      detail += " " + r.suite + ": " +
                std::to_string(rep.violations.size()) + " violation(s), e.g. " +
                rep.violations.front().lhs + " / " + rep.violations.front().rhs +
                " (" + rep.violations.front().clause + ")";
    }
    if (rep.millis > budget_millis_each) {
      ok = false;
      detail += " " + r.suite + ": over time budget (" +
                std::to_string(rep.millis) + " ms)";
    }
  }
  if (!ok) ++failures;
  std::printf("%s %s (%zu checks)%s\n", ok ? "PASS" : "FAIL", label.c_str(),
              pairs, detail.c_str());
  std::fflush(stdout);
}

SuiteParams prm(int n, int h, int x = 1, std::size_t count = 1000,
                int len = 4, std::uint64_t seed = 20240817) {
  SuiteParams p;
  p.n = n;
  p.h = h;
  p.x = x;
  p.count = count;
  p.len = len;
  p.seed = seed;
  return p;
}

}  // namespace

int main() {
  criterion("1 linearity of the three comparators",
            {{"linear-total", prm(3, 4, 3)},
             {"ot-total", prm(2, 4)},
             {"bh-total", prm(2, 3)}},
            60000);
  criterion("2 gap order: partial order with monotone collapses",
            {{"gap-po", prm(3, 5, 2)}}, 60000);
  criterion("3 gap comparator agrees with the embedding oracle",
            {{"gap-oracle", prm(3, 0, 1, 1000, 6)}}, 300000);
  criterion("4 index shifts are order isomorphisms",
            {{"sigma-iso", prm(2, 3)}}, 60000);
  criterion("5 fixed-point laws and exhaustion",
            {{"fixpoint-linear", prm(2, 3)},
             {"fixpoint-ot", prm(2, 3)},
             {"kruskal-pair", prm(2, 3)},
             {"kruskal-gap", prm(2, 3)}},
            60000);
  criterion("6 initial embeddings are order isomorphisms onto the systems",
            {{"initial-linear", prm(2, 3)}, {"initial-ot", prm(2, 3)}},
            60000);
  criterion("7 linearization: generic agreement, surjectivity, identity",
            {{"linearize-agree", prm(3, 4)},
             {"linearize-onto", prm(3, 5)},
             {"linearize-identity", prm(3, 5)}},
            60000);
  criterion("8 tree witness separates the closure from the collapsed carrier",
            {{"tree-witness", prm(2, 3)}}, 1000);
  criterion("9 flatness of the unary and pair functors",
            {{"flatness", prm(3, 4, 1, 2000)}}, 60000);
  criterion("10 order types: height isomorphisms, collapse axioms, ranks",
            {{"rank-monotone", prm(2, 4, 1, 10000)},
             {"collapse-axioms", prm(2, 3, 1, 10000)}},
            120000);
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
