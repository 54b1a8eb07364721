#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "scc/oracle.hpp"

using namespace scc;
using namespace scc::oracle;

TEST_CASE("profile space counts match the closed forms") {
  CHECK(static_cast<unsigned long long>(count_profiles(3, 2, Mode::Full)) == 36);
  CHECK(static_cast<unsigned long long>(count_profiles(3, 2, Mode::Anonymous)) == 21);
  CHECK(static_cast<unsigned long long>(count_profiles(4, 3, Mode::Anonymous)) == 2600);
  CHECK(count_profiles(6, 10, Mode::Full) > kProfileGuardLimit);

  int full = 0, anon = 0;
  enumerate_profiles(3, 2, Mode::Full, [&](const Profile&) { ++full; return true; });
  enumerate_profiles(3, 2, Mode::Anonymous, [&](const Profile&) { ++anon; return true; });
  CHECK(full == 36);
  CHECK(anon == 21);
}

TEST_CASE("all_orderings is lexicographic and complete") {
  const auto table = all_orderings(3);
  REQUIRE(table.size() == 6);
  CHECK(table.front() == Ordering({0, 1, 2}));
  CHECK(table.back() == Ordering({2, 1, 0}));
  for (std::size_t i = 1; i < table.size(); ++i) CHECK(table[i - 1] < table[i]);
}

TEST_CASE("anonymous mode yields one representative per anonymity class") {
  std::set<std::vector<int>> keys;
  int count = 0;
  enumerate_profiles(3, 3, Mode::Anonymous, [&](const Profile& u) {
    ++count;
    CHECK(keys.insert(canonical_key(u)).second);
    return true;
  });
  CHECK(count == 56);

  // full mode hits exactly the same classes
  std::set<std::vector<int>> full_keys;
  enumerate_profiles(3, 3, Mode::Full, [&](const Profile& u) {
    full_keys.insert(canonical_key(u));
    return true;
  });
  CHECK(full_keys == keys);
}

TEST_CASE("enumeration guard triggers and can be overridden") {
  CHECK_THROWS_AS(enumerate_profiles(7, 1, Mode::Full, [](const Profile&) { return true; }),
                  GuardError);
  int count = 0;
  enumerate_profiles(7, 1, Mode::Full, [&](const Profile&) { ++count; return true; },
                     /*override_guards=*/true);
  CHECK(count == 5040);
  CHECK_THROWS_AS(range_report(Rule::Borda, 5, 8, Mode::Full), GuardError);
}

TEST_CASE("range reports agree between full and anonymous modes") {
  for (Rule rule : kAllRules) {
    if (rule == Rule::Approval) continue;
    for (int n = 1; n <= 3; ++n) {
      const RangeReport full = range_report(rule, 3, n, Mode::Full);
      const RangeReport anon = range_report(rule, 3, n, Mode::Anonymous);
      std::set<std::uint32_t> full_sets, anon_sets;
      for (const auto& [mask, w] : full.witnesses) full_sets.insert(mask);
      for (const auto& [mask, w] : anon.witnesses) anon_sets.insert(mask);
      CHECK(full_sets == anon_sets);
      CHECK(full.sizes == anon.sizes);
    }
  }
}

TEST_CASE("range report witnesses evaluate to their key sets") {
  const RangeReport r = range_report(Rule::Copeland, 4, 2, Mode::Anonymous);
  CHECK(r.sizes == std::set<int>{1, 2, 3, 4});
  for (const auto& [mask, witness] : r.witnesses)
    CHECK(evaluate(Rule::Copeland, witness).mask() == mask);
}

TEST_CASE("range report is identical for any worker count") {
  for (Rule rule : {Rule::Copeland, Rule::TopCycle}) {
    const std::string one =
        range_report_to_json(range_report(rule, 4, 3, Mode::Anonymous, false, 1)).dump();
    const std::string four =
        range_report_to_json(range_report(rule, 4, 3, Mode::Anonymous, false, 4)).dump();
    CHECK(one == four);
  }
}

TEST_CASE("approval is excluded from range reports") {
  CHECK_THROWS_AS(range_report(Rule::Approval, 3, 2, Mode::Full), std::invalid_argument);
}

TEST_CASE("achievable sizes reproduce the known small ranges") {
  CHECK(achievable_sizes(Rule::Copeland, 3, 2) == std::set<int>{1, 2, 3});
  CHECK(achievable_sizes(Rule::TopCycle, 3, 3) == std::set<int>{1, 3});
  CHECK(achievable_sizes(Rule::Borda, 3, 3) == std::set<int>{1, 2, 3});
  CHECK(achievable_sizes(Rule::Tops, 3, 2) == std::set<int>{1, 2});
}

TEST_CASE("count-vector plurality oracle matches profile enumeration") {
  for (int m = 3; m <= 4; ++m)
    for (int n = 2; n <= 3; ++n) {
      const RangeReport r = range_report(Rule::Plurality, m, n, Mode::Anonymous);
      std::set<std::uint32_t> from_profiles;
      for (const auto& [mask, w] : r.witnesses) from_profiles.insert(mask);
      CHECK(plurality_achievable_sets(m, n) == from_profiles);
      CHECK(plurality_achievable_sizes(m, n) == r.sizes);
    }
}

TEST_CASE("minimal gauges match brute force expectations") {
  CHECK(min_gauge(4, 2, AltSet::of({0, 1, 2})) == 2);
  CHECK(min_gauge(3, 3, AltSet::of({0})) == 1);
  CHECK(min_gauge(3, 2, AltSet::full(3)) == 2);
  CHECK(min_gauge(4, 2, AltSet::full(4)) == 2);

  for (std::uint32_t mask = 1; mask < 8; ++mask) {
    const AltSet s{mask};
    CHECK(min_gauge(3, 2, s) >= (s.size() + 1) / 2);
  }
  CHECK_THROWS_AS(min_gauge(5, 2, AltSet::of({0})), GuardError);
  CHECK_THROWS_AS(min_gauge(3, 2, AltSet()), std::invalid_argument);
}

TEST_CASE("claim checklist passes at reduced scale and clamps enumeration") {
  const ClaimReport r = verify_claims(3, 3);
  CHECK(r.all_pass());
  bool has_3_3 = false;
  for (const Claim& c : r.claims) {
    CHECK(c.pass == (c.expected == c.observed));
    if (c.name == "copeland.sizes.3.3") has_3_3 = true;
    CHECK(c.name != "copeland.sizes.4.3");
    CHECK(c.name != "copeland.sizes.5.3");
  }
  CHECK(has_3_3);
  CHECK_THROWS_AS(verify_claims(2, 2), std::invalid_argument);
}

TEST_CASE("reports serialize deterministically") {
  const RangeReport r = range_report(Rule::TopCycle, 3, 2, Mode::Anonymous);
  const auto j = range_report_to_json(r);
  CHECK(j["rule"] == "top_cycle");
  CHECK(j["m"] == 3);
  CHECK(j["n"] == 2);
  CHECK(j["mode"] == "anonymous");
  CHECK(j["sizes"] == std::vector<int>{1, 2, 3});
  REQUIRE(j["witnesses"].size() == 7);
  for (const auto& [key, text] : j["witnesses"].items()) {
    const Profile witness = codec_parse(text.get<std::string>());
    CHECK(top_cycle_choice(witness).mask() == static_cast<std::uint32_t>(std::stoul(key)));
  }
  CHECK(range_report_to_json(range_report(Rule::TopCycle, 3, 2, Mode::Anonymous)).dump() ==
        j.dump());

  const ClaimReport claims = verify_claims(3, 3);
  const auto cj = claim_report_to_json(claims);
  CHECK(cj["m_max"] == 3);
  CHECK(cj["all_pass"] == true);
  CHECK(cj["claims"].is_array());
  REQUIRE(cj["claims"].size() == claims.claims.size());
  CHECK(cj["claims"][0].contains("criterion"));
}
