// Acceptance gate: one line per criterion, exit 0 iff all pass.
#include <cstdio>
#include <string>

#include "symx/suites.hpp"

using namespace symx;

namespace {

int failures = 0;

void line(int n, const std::string& what, bool ok, const SuiteReport& r) {
  std::printf("criterion %2d %-64s %s  (%llu checks, %lld ms)\n", n,
              (what + ":").c_str(), ok ? "pass" : "FAIL",
              static_cast<unsigned long long>(r.checked),
              static_cast<long long>(r.millis));
  if (!ok) {
    ++failures;
    for (const auto& c : r.counterexamples) std::printf("    %s\n", c.c_str());
  }
}

SuiteReport run(const std::string& suite, std::uint64_t cases,
                std::uint64_t seed = 2026) {
  RunConfig cfg;
  cfg.suite = suite;
  cfg.cases = cases;
  cfg.seed = seed;
  return run_suite(cfg);
}

}  // namespace

int main() {
  {
    RunConfig cfg;
    cfg.suite = "symmetry-lemma";
    cfg.index_size = 2;
    cfg.slots = 2;
    cfg.depth = 2;
    cfg.budget = 2000000;
    auto r = run_suite(cfg);
    line(1, "symmetry lemma, exhaustive on 2x2, depth (2,1), under 60 s",
         r.pass && r.millis < 60000, r);
  }
  {
    RunConfig cfg;
    cfg.suite = "oracle-equiv";
    cfg.index_size = 3;
    cfg.slots = 3;
    cfg.cases = 10000;
    cfg.seed = 2026;
    auto r = run_suite(cfg);
    line(2, "recursive forcing equals the total-extension oracle, 10^4 cases",
         r.pass && r.checked >= 10000, r);
  }
  {
    auto r = run("restriction", 1000);
    line(3, "restriction laws on 10^3 (name, condition) triples",
         r.pass && r.checked >= 1000, r);
  }
  {
    auto r = run("mixing", 1000);
    line(4, "mixing along antichains of up to 4 branches, 10^3 cases",
         r.pass && r.checked >= 1000, r);
  }
  {
    auto r = run("normality", 1000);
    line(5, "conjugation normality fix(piE) = pi fix(E) pi^-1, 10^3 cases",
         r.pass && r.checked >= 1000, r);
  }
  {
    auto r = run("tenacity", 1);
    line(6, "tenacity witnesses, exhaustive over all conditions", r.pass, r);
  }
  {
    auto r = run("model1-product", 1000);
    line(7, "based-function product bijection, n,m <= 5, 10^3 pairs",
         r.pass && r.checked >= 1000, r);
  }
  {
    auto r = run("model2-codes", 1000);
    line(8, "sequence codecs, product codes, and the intersection law",
         r.pass && r.checked >= 1000, r);
  }
  {
    auto r = run("choice-build", 20);
    line(9, "choice-name construction with ill-posed inputs rejected",
         r.pass && r.checked >= 20, r);
  }
  {
    auto r = run("measurability", 1);
    line(10, "measurability battery with a non-measurable fixture", r.pass, r);
  }
  {
    auto r = run("find-auto", 1000);
    line(11, "automorphism solver, 10^3 re-verified specs, unsat fixtures",
         r.pass && r.checked >= 1000, r);
  }
  return failures == 0 ? 0 : 1;
}
