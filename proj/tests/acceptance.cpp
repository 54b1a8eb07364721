// Acceptance gate: runs the full verification checklist and prints one
// PASS/FAIL line per criterion. Exits 0 only if every claim passes.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "scc/scc.hpp"

namespace {

const std::map<int, const char*> kCriteria = {
    {1, "Copeland at n=3 attains exactly the parity-allowed sizes"},
    {2, "Copeland witnesses cover every size when n is even"},
    {3, "odd-m all-tied Copeland base profiles are reproduced exactly"},
    {4, "Borda witnesses cover every target set for even n; enumerated sizes match"},
    {5, "plurality feasibility predicate agrees with exhaustive enumeration"},
    {6, "top cycle witnesses cover every feasible target set"},
    {7, "maximin witnesses hit every size up to min(m, n)"},
    {8, "Pareto witnesses cover every non-empty target set"},
    {9, "approval witnesses meet their gauge bounds; minimal gauge verified"},
    {10, "randomized rule invariants hold (anonymity, neutrality, score budgets)"},
};

}  // namespace

int main(int argc, char** argv) {
  int m_max = 5, n_max = 6;
  if (argc == 3) {
    m_max = std::atoi(argv[1]);
    n_max = std::atoi(argv[2]);
  } else if (argc != 1) {
    std::fprintf(stderr, "usage: %s [m_max n_max]\n", argv[0]);
    return 2;
  }

  std::printf("acceptance checklist at m_max=%d n_max=%d\n\n", m_max, n_max);
  const scc::oracle::ClaimReport report = scc::oracle::verify_claims(m_max, n_max);

  std::map<int, std::pair<int, int>> tally;  // criterion -> (passed, total)
  for (const scc::oracle::Claim& c : report.claims) {
    auto& [passed, total] = tally[c.criterion];
    passed += c.pass ? 1 : 0;
    ++total;
  }

  bool all_pass = true;
  for (const auto& [criterion, description] : kCriteria) {
    const auto it = tally.find(criterion);
    const int passed = it == tally.end() ? 0 : it->second.first;
    const int total = it == tally.end() ? 0 : it->second.second;
    const bool ok = total > 0 && passed == total;
    all_pass = all_pass && ok;
    std::printf("criterion %2d [%s]  %d/%d  %s\n", criterion, ok ? "PASS" : "FAIL",
                passed, total, description);
    if (!ok)
      for (const scc::oracle::Claim& c : report.claims)
        if (c.criterion == criterion && !c.pass)
          std::printf("    failing claim %s (%s): expected %s, observed %s\n",
                      c.name.c_str(), c.params.c_str(), c.expected.c_str(),
                      c.observed.c_str());
  }

  std::printf("\n%s: %d/%zu claims pass across %zu criteria\n",
              all_pass ? "PASS" : "FAIL", report.passed(), report.claims.size(),
              kCriteria.size());
  return all_pass ? 0 : 1;
}
