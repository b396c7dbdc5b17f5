// Acceptance suite: one line per criterion, grouped from the verification manifest.
// Exits 0 only if every criterion passes.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "simulgame/verify.hpp"

using namespace simulgame;

namespace {

const std::map<int, std::string> kTitles = {
    {1, "SQ({1},{2}) 3 evaluates to 1/2"},
    {2, "2+2 is 1/2 and not compositional"},
    {3, "SQ'({1},{2}) 5, 6, 5^6, 3^3, 3^4"},
    {4, "SQ'({1,4},{2}) 4 matrix and response values"},
    {5, "adversarial matrix with a Left-loses terminal"},
    {6, "continued conjunctive scoring additivity"},
    {7, "K_n clobber expectations and K7 time"},
    {8, "small clobber strips and substitution"},
    {9, "clobber truncation convergence"},
    {10, "hackenbush scores, built-in matrices and stalk formulas"},
    {11, "mixed-ruleset sums under both conventions"},
    {12, "solver cross-checks on random matrices"},
    {13, "brute-force oracle and index bounds"},
    {14, "SQ({1},{2}) closed form and 2/5 limit"},
};

}  // namespace

int main() {
  const auto results = verify::run_suite(verify::Suite::All, Execution::Serial);

  std::map<int, std::vector<const verify::CheckResult*>> by_criterion;
  for (const auto& r : results)
    if (r.criterion > 0) by_criterion[r.criterion].push_back(&r);

  int failed = 0;
  for (const auto& [n, title] : kTitles) {
    const auto it = by_criterion.find(n);
    bool ok = it != by_criterion.end() && !it->second.empty();
    std::string bad;
    double secs = 0;
    if (it != by_criterion.end())
      for (const auto* r : it->second) {
        secs += r->seconds;
        if (!r->passed) {
          ok = false;
          bad += " [" + r->id + ": expected " + r->expected + ", got " + r->actual + "]";
        }
      }
    if (!ok) ++failed;
    std::printf("criterion %2d: %s  %s (%zu checks, %.2fs)%s\n", n, ok ? "PASS" : "FAIL", title.c_str(),
                it == by_criterion.end() ? std::size_t{0} : it->second.size(), secs, bad.c_str());
  }

  for (const auto& r : results)
    if (r.criterion == 0)
      std::printf("supplementary %s: %s (expected %s, got %s)\n", r.id.c_str(), r.passed ? "PASS" : "FAIL",
                  r.expected.c_str(), r.actual.c_str());

  std::printf("%d of %zu criteria passed\n", static_cast<int>(kTitles.size()) - failed, kTitles.size());
  return failed == 0 ? 0 : 1;
}
