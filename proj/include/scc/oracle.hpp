#pragma once

// Brute-force ground truth. Enumerates profile spaces (full or reduced by
// anonymity), computes the achievable choice sets of every rule with one
// stored witness per set, searches minimal approval gauges, and runs the
// whole verification checklist. Everything here is deterministic: fixed
// enumeration order, first-found witnesses, fixed RNG seeds, and a parallel
// merge whose result does not depend on the worker count.

#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"
#include "scc/constructions.hpp"
#include "scc/core.hpp"
#include "scc/rules.hpp"

namespace scc::oracle {

enum class Mode { Full, Anonymous };

inline std::string to_string(Mode mode) {
  return mode == Mode::Full ? "full" : "anonymous";
}

inline Mode parse_mode(std::string_view name) {
  if (name == "full") return Mode::Full;
  if (name == "anonymous") return Mode::Anonymous;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

// --- profile-space sizes ---

using u128 = unsigned __int128;
inline constexpr u128 kU128Max = ~u128{0};

namespace detail {

inline u128 sat_mul(u128 a, u128 b) {
  if (a == 0 || b == 0) return 0;
  if (a > kU128Max / b) return kU128Max;
  return a * b;
}

inline u128 factorial(int m) {
  u128 f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<unsigned>(i);
  return f;
}

/// C(top, k), saturating.
inline u128 binomial(u128 top, int k) {
  u128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = sat_mul(r, top - static_cast<unsigned>(k - i));
    r /= static_cast<unsigned>(i);
  }
  return r;
}

}  // namespace detail

/// Number of profiles the enumerator will visit: (m!)^n in full mode,
/// C(m!+n-1, n) multisets in anonymous mode. Saturates instead of wrapping.
inline u128 count_profiles(int m, int n, Mode mode) {
  if (m < 1 || n < 1) throw std::invalid_argument("count_profiles: bad m or n");
  const u128 f = detail::factorial(m);
  if (mode == Mode::Anonymous) return detail::binomial(f + static_cast<unsigned>(n) - 1, n);
  u128 total = 1;
  for (int i = 0; i < n; ++i) total = detail::sat_mul(total, f);
  return total;
}

// --- enumeration ---

/// All m! orderings in lexicographic order of their ranks sequences.
inline std::vector<Ordering> all_orderings(int m) {
  if (m < 1 || m > 8)
    throw std::invalid_argument("all_orderings: m must be in [1, 8]");
  std::vector<Alt> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Ordering> out;
  do out.emplace_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline constexpr u128 kProfileGuardLimit = 500'000'000;

/// Practical ceiling on brute force; pass override_guards to exceed it.
inline void check_enumeration_guard(int m, int n, Mode mode, bool override_guards) {
  if (m < 1 || n < 1) throw std::invalid_argument("enumeration: bad m or n");
  if (override_guards) return;
  if (m > 6)
    throw GuardError("enumeration guard: m > 6 means more than 720 orderings "
                     "per individual (pass the override flag to force)");
  if (count_profiles(m, n, mode) > kProfileGuardLimit)
    throw GuardError("enumeration guard: profile space exceeds " +
                     std::to_string(static_cast<unsigned long long>(kProfileGuardLimit)) +
                     " (pass the override flag to force)");
}

namespace detail {

/// Advance a tuple of ordering indices over [0, f)^n; positions at or after
/// `fixed` move, earlier ones stay. Full mode counts like an odometer;
/// anonymous mode walks non-decreasing tuples. Returns false when exhausted.
inline bool advance_tuple(std::vector<int>& idx, int f, Mode mode, int fixed) {
  const int n = static_cast<int>(idx.size());
  if (mode == Mode::Full) {
    for (int p = n - 1; p >= fixed; --p) {
      if (++idx[static_cast<std::size_t>(p)] < f) return true;
      idx[static_cast<std::size_t>(p)] = 0;
    }
    return false;
  }
  int p = n - 1;
  while (p >= fixed && idx[static_cast<std::size_t>(p)] == f - 1) --p;
  if (p < fixed) return false;
  const int v = ++idx[static_cast<std::size_t>(p)];
  for (int q = p + 1; q < n; ++q) idx[static_cast<std::size_t>(q)] = v;
  return true;
}

inline Profile profile_from_indices(int m, const std::vector<Ordering>& table,
                                    const std::vector<int>& idx) {
  std::vector<Ordering> orderings;
  orderings.reserve(idx.size());
  for (int i : idx) orderings.push_back(table[static_cast<std::size_t>(i)]);
  return Profile(m, std::move(orderings));
}

}  // namespace detail

/// Visit every profile of the requested space in lexicographic order of
/// ordering-index tuples. The callback returns false to stop early.
template <typename Fn>
void enumerate_profiles(int m, int n, Mode mode, Fn&& fn, bool override_guards = false) {
  check_enumeration_guard(m, n, mode, override_guards);
  const std::vector<Ordering> table = all_orderings(m);
  const int f = static_cast<int>(table.size());
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  do {
    if (!fn(detail::profile_from_indices(m, table, idx))) return;
  } while (detail::advance_tuple(idx, f, mode, 0));
}

// --- range reports ---

struct RangeReport {
  Rule rule;
  int m;
  int n;
  Mode mode;
  std::map<std::uint32_t, Profile> witnesses;  // choice-set mask -> first witness
  std::set<int> sizes;
};

namespace detail {

inline Profile random_profile(int m, int n, std::mt19937& rng) {
  std::vector<Alt> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Ordering> orderings;
  orderings.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    orderings.emplace_back(perm);
  }
  return Profile(m, std::move(orderings));
}

inline std::vector<int> random_permutation(int size, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(size));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Anonymous-mode enumeration is only sound for anonymous rules; spot-check
/// the rule on random individual permutations before relying on it.
inline void anonymity_precheck(Rule rule, int m, int n) {
  std::mt19937 rng(0xA5071u);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile u = random_profile(m, n, rng);
    const Profile v = permute_individuals(u, random_permutation(n, rng));
    if (evaluate(rule, u) != evaluate(rule, v))
      throw std::logic_error("anonymity pre-check failed for rule " + to_string(rule));
  }
}

inline std::vector<int> adjacent_transposition(int m, int t) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[static_cast<std::size_t>(t)], perm[static_cast<std::size_t>(t + 1)]);
  return perm;
}

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace detail

/// Exhaustive range of a rule at (m, n): every achievable choice set with
/// the first witness in enumeration order. The profile space is chunked by
/// the first individual's ordering index; chunks run on worker threads and
/// merge in chunk order with first-wins witnesses, so the report is
/// byte-identical for any worker count. Approval has no single range here
/// (its ballots are a second input); use min_gauge for it.
inline RangeReport range_report(Rule rule, int m, int n, Mode mode,
                                bool override_guards = false, int threads = 0) {
  if (rule == Rule::Approval)
    throw std::invalid_argument(
        "range_report: approval's range is all non-empty subsets by taking "
        "suitable ballots; use min_gauge instead");
  check_enumeration_guard(m, n, mode, override_guards);
  if (mode == Mode::Anonymous) detail::anonymity_precheck(rule, m, n);

  const std::vector<Ordering> table = all_orderings(m);
  const int f = static_cast<int>(table.size());

  // chunk c = all tuples whose first index is c
  std::vector<std::map<std::uint32_t, std::vector<int>>> chunk_hits(
      static_cast<std::size_t>(f));
  std::atomic<int> next_chunk{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    try {
      for (;;) {
        const int c = next_chunk.fetch_add(1);
        if (c >= f) return;
        auto& hits = chunk_hits[static_cast<std::size_t>(c)];
        std::vector<int> idx(static_cast<std::size_t>(n),
                             mode == Mode::Anonymous ? c : 0);
        idx[0] = c;
        do {
          const Profile u = detail::profile_from_indices(m, table, idx);
          hits.try_emplace(evaluate(rule, u).mask(), idx);
        } while (detail::advance_tuple(idx, f, mode, 1));
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  const int worker_count = std::min(detail::resolve_threads(threads), f);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(worker_count));
  for (int t = 0; t < worker_count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  RangeReport report{rule, m, n, mode, {}, {}};
  for (const auto& hits : chunk_hits)
    for (const auto& [mask, idx] : hits)
      report.witnesses.try_emplace(mask, detail::profile_from_indices(m, table, idx));
  for (const auto& [mask, witness] : report.witnesses) {
    if (evaluate(rule, witness).mask() != mask)
      throw std::logic_error("range_report: stored witness does not re-evaluate to its set");
    report.sizes.insert(std::popcount(mask));
  }
  // The achievable family must be closed under relabeling alternatives;
  // adjacent transpositions generate the whole symmetric group.
  for (const auto& [mask, witness] : report.witnesses)
    for (int t = 0; t + 1 < m; ++t)
      if (!report.witnesses.count(
              relabel_set(AltSet(mask), detail::adjacent_transposition(m, t)).mask()))
        throw std::logic_error("range_report: achievable family is not neutral-closed");
  return report;
}

/// Cardinalities attainable by the rule at (m, n), via anonymous-mode
/// enumeration.
inline std::set<int> achievable_sizes(Rule rule, int m, int n,
                                      bool override_guards = false, int threads = 0) {
  return range_report(rule, m, n, Mode::Anonymous, override_guards, threads).sizes;
}

/// Plurality only depends on the vector of first-place counts, and every
/// count vector summing to n is realized by some profile, so its range can
/// be read off the C(n+m-1, m-1) count vectors directly. This reaches (m, n)
/// far beyond profile enumeration.
inline std::set<std::uint32_t> plurality_achievable_sets(int m, int n) {
  if (m < 1 || m > kMaxAlternatives || n < 1)
    throw std::invalid_argument("plurality_achievable_sets: bad m or n");
  std::set<std::uint32_t> sets;
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  auto visit = [&](auto&& self, int pos, int left) -> void {
    if (pos == m - 1) {
      counts[static_cast<std::size_t>(pos)] = left;
      const int best = *std::max_element(counts.begin(), counts.end());
      AltSet s;
      for (int x = 0; x < m; ++x)
        if (counts[static_cast<std::size_t>(x)] == best) s.insert(x);
      sets.insert(s.mask());
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[static_cast<std::size_t>(pos)] = c;
      self(self, pos + 1, left - c);
    }
  };
  visit(visit, 0, n);
  return sets;
}

inline std::set<int> plurality_achievable_sizes(int m, int n) {
  std::set<int> sizes;
  for (std::uint32_t mask : plurality_achievable_sets(m, n))
    sizes.insert(std::popcount(mask));
  return sizes;
}

// --- minimal approval gauge ---

/// Least gauge g such that some profile and some ballot vector with entries
/// in [1, g] make S the exact approval choice set. Searches anonymous
/// profile representatives (approval is anonymous when ballots permute with
/// individuals) times all ballot vectors.
inline int min_gauge(int m, int n, AltSet s, bool override_guards = false) {
  if (m < 1 || m > kMaxAlternatives || n < 1)
    throw std::invalid_argument("min_gauge: bad m or n");
  if (s.empty()) throw std::invalid_argument("min_gauge: target set is empty");
  for (Alt x : s.ids())
    if (x >= m) throw std::invalid_argument("min_gauge: set member >= m");
  if (!override_guards && (m > 4 || n > 4))
    throw GuardError("min_gauge guard: m <= 4 and n <= 4 (pass the override flag "
                     "to force)");
  const std::uint32_t target = s.mask();
  const int lower = (s.size() + n - 1) / n;  // n·g approvals must cover |S| winners
  for (int g = lower; g <= m; ++g) {
    bool found = false;
    enumerate_profiles(
        m, n, Mode::Anonymous,
        [&](const Profile& u) {
          IndexVector b(static_cast<std::size_t>(n), 1);
          for (;;) {
            if (approval_choice(u, b).mask() == target) {
              found = true;
              return false;
            }
            int p = n - 1;
            while (p >= 0 && b[static_cast<std::size_t>(p)] == g) --p;
            if (p < 0) return true;
            ++b[static_cast<std::size_t>(p)];
            for (int q = p + 1; q < n; ++q) b[static_cast<std::size_t>(q)] = 1;
          }
        },
        override_guards);
    if (found) return g;
  }
  throw std::logic_error("min_gauge: no gauge up to m realizes the set");
}

// --- verification checklist ---

struct Claim {
  int criterion;         // 1..10
  std::string name;
  std::string params;
  std::string expected;
  std::string observed;
  bool pass;
};

struct ClaimReport {
  int m_max;
  int n_max;
  std::vector<Claim> claims;

  bool all_pass() const {
    for (const Claim& c : claims)
      if (!c.pass) return false;
    return true;
  }
  int passed() const {
    int k = 0;
    for (const Claim& c : claims) k += c.pass ? 1 : 0;
    return k;
  }
};

namespace detail {

inline std::string to_string(const std::set<int>& xs) {
  std::string out = "{";
  bool first = true;
  for (int x : xs) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

inline void add_claim(std::vector<Claim>& claims, int criterion, std::string name,
                      std::string params, std::string expected, std::string observed) {
  const bool pass = expected == observed;
  claims.push_back(Claim{criterion, std::move(name), std::move(params),
                         std::move(expected), std::move(observed), pass});
}

/// "ok" or a description of the first counterexample, for claims that sweep
/// a parameter family.
class SweepResult {
 public:
  void fail(std::string what) {
    if (ok_) {
      ok_ = false;
      first_ = std::move(what);
    }
  }
  std::string str() const { return ok_ ? "ok" : first_; }

 private:
  bool ok_ = true;
  std::string first_;
};

inline std::vector<AltSet> nonempty_subsets(int m) {
  std::vector<AltSet> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask)
    out.emplace_back(mask);
  return out;
}

}  // namespace detail

/// Run the full verification checklist. Enumeration-backed claims whose
/// (m, n) exceed m_max / n_max are skipped; constructive claims always run
/// at their native parameters (they cost nothing).
inline ClaimReport verify_claims(int m_max = 5, int n_max = 6,
                                 bool override_guards = false, int threads = 0) {
  if (m_max < 3 || n_max < 2)
    throw std::invalid_argument("verify_claims: need m_max >= 3 and n_max >= 2");
  ClaimReport report{m_max, n_max, {}};
  auto& claims = report.claims;
  auto fits = [&](int m, int n) { return m <= m_max && n <= n_max; };
  auto sizes_of = [&](Rule rule, int m, int n) {
    return detail::to_string(achievable_sizes(rule, m, n, override_guards, threads));
  };

  // 1. Copeland parity exclusions at n = 3.
  {
    const std::map<int, std::set<int>> expected = {
        {3, {1, 3}}, {4, {1, 2, 3}}, {5, {1, 2, 3, 5}}};
    for (const auto& [m, sizes] : expected)
      if (fits(m, 3))
        detail::add_claim(claims, 1, "copeland.sizes." + std::to_string(m) + ".3",
                          "m=" + std::to_string(m) + " n=3 mode=anonymous",
                          detail::to_string(sizes), sizes_of(Rule::Copeland, m, 3));
  }

  // 2. Copeland even-n completeness.
  {
    detail::SweepResult sweep;
    for (int m = 3; m <= 5; ++m)
      for (int k = 1; k <= m; ++k) {
        const Profile u = construct_copeland(m, 2, k);
        const int got = copeland_choice(u).size();
        if (got != k)
          sweep.fail("construct_copeland(" + std::to_string(m) + ",2," +
                     std::to_string(k) + ") has choice size " + std::to_string(got));
      }
    detail::add_claim(claims, 2, "copeland.even_n.witnesses", "m=3..5 n=2 k=1..m",
                      "ok", sweep.str());
    for (int m : {3, 4})
      if (fits(m, 2)) {
        std::set<int> want;
        for (int k = 1; k <= m; ++k) want.insert(k);
        detail::add_claim(claims, 2, "copeland.sizes." + std::to_string(m) + ".2",
                          "m=" + std::to_string(m) + " n=2 mode=anonymous",
                          detail::to_string(want), sizes_of(Rule::Copeland, m, 2));
      }
  }

  // 3. Copeland all-tied odd base.
  {
    detail::SweepResult scores_ok;
    for (int m : {3, 5, 7, 9}) {
      const Profile u = copeland_part1_profile(m);
      for (int score : copeland_scores(u))
        if (score != (m - 1) / 2)
          scores_ok.fail("base m=" + std::to_string(m) + " has score " +
                         std::to_string(score));
    }
    detail::add_claim(claims, 3, "copeland.odd_base.scores", "m in {3,5,7,9}",
                      "ok", scores_ok.str());

    const std::map<int, std::vector<std::vector<Alt>>> tables = {
        {5, {{3, 0, 1, 2, 4}, {4, 1, 3, 2, 0}, {2, 0, 4, 1, 3}}},
        {7, {{5, 3, 0, 1, 2, 4, 6}, {4, 1, 3, 6, 2, 0, 5}, {6, 2, 0, 5, 4, 1, 3}}},
        {9,
         {{7, 5, 3, 0, 1, 2, 4, 6, 8},
          {8, 4, 1, 3, 7, 6, 2, 0, 5},
          {6, 2, 0, 5, 8, 4, 1, 3, 7}}}};
    detail::SweepResult tables_ok;
    for (const auto& [m, rows] : tables) {
      const Profile u = copeland_part1_profile(m);
      for (int i = 0; i < 3; ++i)
        if (u[i].ranks() != rows[static_cast<std::size_t>(i)])
          tables_ok.fail("base m=" + std::to_string(m) + " individual " +
                         std::to_string(i + 1) + " differs");
    }
    detail::add_claim(claims, 3, "copeland.odd_base.tables", "m in {5,7,9}",
                      "ok", tables_ok.str());
  }

  // 4. Borda range.
  {
    if (fits(4, 3)) {
      detail::add_claim(claims, 4, "borda.sizes.4.3", "m=4 n=3 mode=anonymous",
                        "{1,2,3}", sizes_of(Rule::Borda, 4, 3));
      const RangeReport r =
          range_report(Rule::Borda, 4, 3, Mode::Anonymous, override_guards, threads);
      detail::add_claim(claims, 4, "borda.full_set.4.3", "m=4 n=3 mode=anonymous",
                        "absent",
                        r.witnesses.count(AltSet::full(4).mask()) ? "present" : "absent");
    }
    if (fits(3, 3))
      detail::add_claim(claims, 4, "borda.sizes.3.3", "m=3 n=3 mode=anonymous",
                        "{1,2,3}", sizes_of(Rule::Borda, 3, 3));
    detail::SweepResult sweep;
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 4}, {5, 2}})
      for (AltSet s : detail::nonempty_subsets(m))
        if (borda_choice(construct_borda(m, n, s)) != s)
          sweep.fail("construct_borda(" + std::to_string(m) + "," + std::to_string(n) +
                     "," + scc::to_string(s) + ") misses its set");
    detail::add_claim(claims, 4, "borda.even_n.witnesses",
                      "(m,n) in {(3,2),(4,2),(4,4),(5,2)} all S", "ok", sweep.str());
  }

  // 5. Plurality feasibility and witnesses.
  {
    detail::SweepResult agree;
    for (int m = 3; m <= 5; ++m)
      for (int n = 2; n <= 6; ++n) {
        const std::set<int> oracle_sizes = plurality_achievable_sizes(m, n);
        for (int k = 1; k <= m; ++k)
          if (plurality_feasible(m, n, k) != (oracle_sizes.count(k) > 0))
            agree.fail("plurality_feasible(" + std::to_string(m) + "," +
                       std::to_string(n) + "," + std::to_string(k) +
                       ") disagrees with the count-vector oracle");
      }
    detail::add_claim(claims, 5, "plurality.feasible_vs_oracle", "m=3..5 n=2..6 k=1..m",
                      "ok", agree.str());
    detail::SweepResult sweep;
    for (int m = 3; m <= 5; ++m)
      for (int n = 2; n <= 6; ++n)
        for (AltSet s : detail::nonempty_subsets(m)) {
          if (!plurality_feasible(m, n, s.size())) continue;
          if (plurality_choice(construct_plurality(m, n, s)) != s)
            sweep.fail("construct_plurality(" + std::to_string(m) + "," +
                       std::to_string(n) + "," + scc::to_string(s) + ") misses its set");
        }
    detail::add_claim(claims, 5, "plurality.witnesses", "m=3..5 n=2..6 feasible S",
                      "ok", sweep.str());
  }

  // 6. Top cycle.
  {
    if (fits(3, 3))
      detail::add_claim(claims, 6, "top_cycle.sizes.3.3", "m=3 n=3 mode=anonymous",
                        "{1,3}", sizes_of(Rule::TopCycle, 3, 3));
    if (fits(4, 3))
      detail::add_claim(claims, 6, "top_cycle.sizes.4.3", "m=4 n=3 mode=anonymous",
                        "{1,3,4}", sizes_of(Rule::TopCycle, 4, 3));
    if (fits(3, 2)) {
      const RangeReport r =
          range_report(Rule::TopCycle, 3, 2, Mode::Anonymous, override_guards, threads);
      detail::add_claim(claims, 6, "top_cycle.sets.3.2", "m=3 n=2 mode=anonymous",
                        "all 7 non-empty subsets",
                        r.witnesses.size() == 7 ? "all 7 non-empty subsets"
                                                : std::to_string(r.witnesses.size()) +
                                                      " subsets");
    }
    detail::SweepResult sweep;
    for (int m = 1; m <= 5; ++m)
      for (int n = 2; n <= 5; ++n)
        for (AltSet s : detail::nonempty_subsets(m)) {
          if (n % 2 == 1 && s.size() == 2) continue;
          if (top_cycle_choice(construct_top_cycle(m, n, s)) != s)
            sweep.fail("construct_top_cycle(" + std::to_string(m) + "," +
                       std::to_string(n) + "," + scc::to_string(s) + ") misses its set");
        }
    detail::add_claim(claims, 6, "top_cycle.witnesses", "m<=5 n=2..5 admissible S",
                      "ok", sweep.str());
  }

  // 7. Maximin.
  {
    detail::SweepResult sweep;
    for (int m = 1; m <= 5; ++m)
      for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= std::min(m, n); ++k) {
          AltSet want;
          for (Alt x = 0; x < k; ++x) want.insert(x);
          if (maximin_choice(construct_maximin(m, n, k)) != want)
            sweep.fail("construct_maximin(" + std::to_string(m) + "," +
                       std::to_string(n) + "," + std::to_string(k) + ") misses {0.." +
                       std::to_string(k - 1) + "}");
        }
    detail::add_claim(claims, 7, "maximin.witnesses", "m<=5 n<=5 k<=min(m,n)", "ok",
                      sweep.str());

    detail::SweepResult tables;
    const std::vector<std::vector<std::vector<Alt>>> want = {
        {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}},
        {{1, 0, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}},
        {{1, 2, 0, 3}, {0, 2, 1, 3}, {0, 1, 2, 3}}};
    for (int k = 1; k <= 3; ++k) {
      const Profile u = construct_maximin(4, 3, k);
      for (int i = 0; i < 3; ++i)
        if (u[i].ranks() != want[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)])
          tables.fail("iterative profile for k=" + std::to_string(k) + " differs at "
                      "individual " + std::to_string(i + 1));
      AltSet expect;
      for (Alt x = 0; x < k; ++x) expect.insert(x);
      if (maximin_choice(u) != expect)
        tables.fail("iterative profile for k=" + std::to_string(k) + " chooses " +
                    scc::to_string(maximin_choice(u)));
    }
    detail::add_claim(claims, 7, "maximin.iterative_tables", "m=4 n=3 k=1..3", "ok",
                      tables.str());
  }

  // 8. Pareto.
  {
    detail::SweepResult sweep;
    for (int m = 1; m <= 5; ++m)
      for (int n = 2; n <= 3; ++n)
        for (AltSet s : detail::nonempty_subsets(m))
          if (pareto_choice(construct_pareto(m, n, s)) != s)
            sweep.fail("construct_pareto(" + std::to_string(m) + "," +
                       std::to_string(n) + "," + scc::to_string(s) + ") misses its set");
    detail::add_claim(claims, 8, "pareto.witnesses", "m<=5 n in {2,3} all S", "ok",
                      sweep.str());
    if (fits(3, 2)) {
      const RangeReport r =
          range_report(Rule::Pareto, 3, 2, Mode::Anonymous, override_guards, threads);
      detail::add_claim(claims, 8, "pareto.sets.3.2", "m=3 n=2 mode=anonymous",
                        "all 7 non-empty subsets",
                        r.witnesses.size() == 7 ? "all 7 non-empty subsets"
                                                : std::to_string(r.witnesses.size()) +
                                                      " subsets");
    }
  }

  // 9. Approval.
  {
    detail::SweepResult sweep;
    for (int m = 3; m <= 6; ++m)
      for (int n = 2; n <= 10; ++n)
        for (AltSet s : detail::nonempty_subsets(m)) {
          const ApprovalWitness w = construct_approval(m, n, s);
          const int k = s.size();
          const int g = gauge(w.ballots);
          if (approval_choice(w.profile, w.ballots) != s)
            sweep.fail("construct_approval(" + std::to_string(m) + "," +
                       std::to_string(n) + "," + scc::to_string(s) + ") misses its set");
          else if (k >= n && g != (k + n - 1) / n)
            sweep.fail("construct_approval(" + std::to_string(m) + "," +
                       std::to_string(n) + "," + scc::to_string(s) + ") gauge " +
                       std::to_string(g) + " != ceil(k/n)");
          else if (k < n && g > 2)
            sweep.fail("construct_approval(" + std::to_string(m) + "," +
                       std::to_string(n) + "," + scc::to_string(s) + ") gauge " +
                       std::to_string(g) + " > 2");
        }
    detail::add_claim(claims, 9, "approval.witnesses", "m=3..6 n=2..10 all S", "ok",
                      sweep.str());

    detail::SweepResult example;
    const ApprovalWitness w = construct_approval(6, 10, AltSet::of({0, 1, 2, 3}));
    const IndexVector want_b = {2, 2, 1, 1, 1, 1, 1, 1, 1, 1};
    if (w.ballots != want_b) example.fail("ballots differ from (2,2,1,...,1)");
    const std::vector<int> scores = approval_scores(w.profile, w.ballots);
    for (Alt x = 0; x < 4; ++x)
      if (scores[static_cast<std::size_t>(x)] != 3)
        example.fail("winner " + std::to_string(x) + " scores " +
                     std::to_string(scores[static_cast<std::size_t>(x)]) + " != 3");
    if (approval_choice(w.profile, w.ballots) != AltSet::of({0, 1, 2, 3}))
      example.fail("choice set is not the four targets");
    detail::add_claim(claims, 9, "approval.ten_individual_example", "m=6 n=10 |S|=4",
                      "ok", example.str());

    if (fits(4, 2))
      detail::add_claim(claims, 9, "approval.min_gauge.4.2", "m=4 n=2 |S|=3", "2",
                        std::to_string(min_gauge(4, 2, AltSet::of({0, 1, 2}),
                                                 override_guards)));
  }

  // 10. Random property suites at (5, 5).
  {
    const int m = 5, n = 5, trials = 1000;
    std::mt19937 rng(0xC3D2E1u);
    detail::SweepResult nonempty, anonymity, neutrality, borda_sum, copeland_sum,
        pad_keeps, append_keeps;
    std::uniform_int_distribution<int> ballot(1, m);
    for (int trial = 0; trial < trials; ++trial) {
      const Profile u = detail::random_profile(m, n, rng);
      const std::vector<int> pi = detail::random_permutation(m, rng);
      const std::vector<int> sigma = detail::random_permutation(n, rng);
      IndexVector b(static_cast<std::size_t>(n));
      for (int& v : b) v = ballot(rng);
      const Profile pu = relabel_alternatives(u, pi);
      const Profile su = permute_individuals(u, sigma);
      IndexVector sb(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        sb[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];

      for (Rule rule : kAllRules) {
        const bool approval = rule == Rule::Approval;
        const AltSet choice = approval ? approval_choice(u, b) : evaluate(rule, u);
        if (choice.empty())
          nonempty.fail(to_string(rule) + " empty at trial " + std::to_string(trial));
        const AltSet anon = approval ? approval_choice(su, sb) : evaluate(rule, su);
        if (anon != choice)
          anonymity.fail(to_string(rule) + " not anonymous at trial " +
                         std::to_string(trial));
        const AltSet neut = approval ? approval_choice(pu, b) : evaluate(rule, pu);
        if (neut != relabel_set(choice, pi))
          neutrality.fail(to_string(rule) + " not neutral at trial " +
                          std::to_string(trial));
      }

      int bsum = 0;
      for (int v : borda_scores(u)) bsum += v;
      if (bsum != n * m * (m + 1) / 2)
        borda_sum.fail("Borda sum " + std::to_string(bsum) + " at trial " +
                       std::to_string(trial));
      int csum = 0;
      for (int v : copeland_scores(u)) csum += v;
      if (csum != m * (m - 1) / 2)
        copeland_sum.fail("Copeland sum " + std::to_string(csum) + " at trial " +
                          std::to_string(trial));

      const Profile padded = pad_with_inverse_pair(u);
      const MajorityMatrix mm(u), mp(padded);
      for (Alt x = 0; x < m; ++x)
        for (Alt y = 0; y < m; ++y)
          if (x != y && mm.margin(x, y) != mp.margin(x, y))
            pad_keeps.fail("margin changed at trial " + std::to_string(trial));
      if (borda_choice(padded) != borda_choice(u) ||
          copeland_choice(padded) != copeland_choice(u) ||
          top_cycle_choice(padded) != top_cycle_choice(u))
        pad_keeps.fail("choice changed under padding at trial " + std::to_string(trial));
      if (copeland_choice(append_bottom_alternative(u)) != copeland_choice(u))
        append_keeps.fail("Copeland choice changed under bottom append at trial " +
                          std::to_string(trial));
    }
    detail::add_claim(claims, 10, "properties.non_empty", "m=5 n=5 trials=1000", "ok",
                      nonempty.str());
    detail::add_claim(claims, 10, "properties.anonymity", "m=5 n=5 trials=1000", "ok",
                      anonymity.str());
    detail::add_claim(claims, 10, "properties.neutrality", "m=5 n=5 trials=1000", "ok",
                      neutrality.str());
    detail::add_claim(claims, 10, "properties.borda_score_sum", "m=5 n=5 trials=1000",
                      "ok", borda_sum.str());
    detail::add_claim(claims, 10, "properties.copeland_score_sum",
                      "m=5 n=5 trials=1000", "ok", copeland_sum.str());
    detail::add_claim(claims, 10, "properties.inverse_pair_padding",
                      "m=5 n=5 trials=1000", "ok", pad_keeps.str());
    detail::add_claim(claims, 10, "properties.bottom_append", "m=5 n=5 trials=1000",
                      "ok", append_keeps.str());
  }

  return report;
}

// --- serialization ---

inline nlohmann::ordered_json range_report_to_json(const RangeReport& r) {
  nlohmann::ordered_json j;
  j["rule"] = scc::to_string(r.rule);
  j["m"] = r.m;
  j["n"] = r.n;
  j["mode"] = to_string(r.mode);
  j["sizes"] = std::vector<int>(r.sizes.begin(), r.sizes.end());
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  for (const auto& [mask, witness] : r.witnesses)
    w[std::to_string(mask)] = codec_emit(witness);
  j["witnesses"] = std::move(w);
  return j;
}

inline nlohmann::ordered_json claim_report_to_json(const ClaimReport& r) {
  nlohmann::ordered_json j;
  j["m_max"] = r.m_max;
  j["n_max"] = r.n_max;
  j["all_pass"] = r.all_pass();
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const Claim& c : r.claims) {
    nlohmann::ordered_json e;
    e["criterion"] = c.criterion;
    e["name"] = c.name;
    e["params"] = c.params;
    e["expected"] = c.expected;
    e["observed"] = c.observed;
    e["pass"] = c.pass;
    claims.push_back(std::move(e));
  }
  j["claims"] = std::move(claims);
  return j;
}

}  // namespace scc::oracle
