#pragma once

// Witness-profile builders, one per rule. Each builder emits a profile
// (plus ballot indices for approval) that is guaranteed to evaluate to the
// requested choice set or size, or throws InfeasibleError when no profile
// can; callers re-verify by evaluation rather than trusting the
// construction.
//
// Wherever the underlying argument leaves an ordering arbitrary, builders
// fix it to ascending id order, so every output is deterministic.

#include <vector>

#include "scc/core.hpp"
#include "scc/rules.hpp"

namespace scc {

namespace detail {

/// Members of S ascending, then non-members ascending.
inline std::vector<Alt> set_first_ascending(int m, AltSet s) {
  std::vector<Alt> out;
  out.reserve(static_cast<std::size_t>(m));
  for (Alt x = 0; x < m; ++x)
    if (s.contains(x)) out.push_back(x);
  for (Alt x = 0; x < m; ++x)
    if (!s.contains(x)) out.push_back(x);
  return out;
}

/// Same but with the S block reversed.
inline std::vector<Alt> set_first_descending(int m, AltSet s) {
  std::vector<Alt> out = set_first_ascending(m, s);
  std::reverse(out.begin(), out.begin() + s.size());
  return out;
}

inline Ordering identity_ordering(int m) {
  std::vector<Alt> ranks(static_cast<std::size_t>(m));
  std::iota(ranks.begin(), ranks.end(), 0);
  return Ordering(std::move(ranks));
}

inline void check_set(int m, AltSet s, const char* who) {
  if (m < 1 || m > kMaxAlternatives)
    throw std::invalid_argument(std::string(who) + ": m out of range");
  if (s.empty()) throw std::invalid_argument(std::string(who) + ": target set is empty");
  for (Alt x : s.ids())
    if (x >= m) throw std::invalid_argument(std::string(who) + ": set member >= m");
}

}  // namespace detail

/// Append two individuals with mutually inverse orderings (ascending and
/// descending ids). Their pairwise contributions cancel, so all majority
/// margins are preserved; Borda scores shift by the constant m+1.
inline Profile pad_with_inverse_pair(const Profile& u) {
  std::vector<Ordering> orderings = u.orderings();
  Ordering q = detail::identity_ordering(u.m());
  orderings.push_back(q);
  orderings.push_back(q.inverse());
  return Profile(u.m(), std::move(orderings));
}

/// Add one fresh alternative (id m) at the bottom of every ordering. It is
/// unanimously defeated, existing margins are untouched, and every existing
/// Copeland score rises by exactly one.
inline Profile append_bottom_alternative(const Profile& u) {
  const int m = u.m();
  if (m >= kMaxAlternatives)
    throw std::invalid_argument("append_bottom_alternative: m already at limit");
  std::vector<Ordering> orderings;
  orderings.reserve(static_cast<std::size_t>(u.n()));
  for (const Ordering& o : u.orderings()) {
    std::vector<Alt> ranks = o.ranks();
    ranks.push_back(m);
    orderings.emplace_back(std::move(ranks));
  }
  return Profile(m + 1, std::move(orderings));
}

// --- Pareto ---

/// Witness with pareto choice exactly S: individuals 1 and 2 rank S above
/// the rest in opposite orders (so nothing inside S is unanimously beaten),
/// everyone else copies individual 1.
inline Profile construct_pareto(int m, int n, AltSet s) {
  detail::check_set(m, s, "construct_pareto");
  if (n < 2)
    throw InfeasibleError("construct_pareto: needs n >= 2 to oppose orders inside the set");
  std::vector<Ordering> orderings;
  orderings.reserve(static_cast<std::size_t>(n));
  Ordering first(detail::set_first_ascending(m, s));
  orderings.push_back(first);
  orderings.emplace_back(detail::set_first_descending(m, s));
  for (int i = 2; i < n; ++i) orderings.push_back(first);
  return Profile(m, std::move(orderings));
}

// --- maximin ---

/// Witness with maximin choice {0,...,k-1}: start from the unanimous
/// ascending profile; for j = 2..k swap ranks j-1 and j for individuals
/// 1..j-1, which drags the worst rank of each of the first k alternatives
/// down to a common value.
inline Profile construct_maximin(int m, int n, int k) {
  if (m < 1 || m > kMaxAlternatives || n < 1)
    throw std::invalid_argument("construct_maximin: bad m or n");
  if (k < 1 || k > std::min(m, n))
    throw InfeasibleError("construct_maximin: k must be in [1, min(m, n)]");
  std::vector<std::vector<Alt>> rows(
      static_cast<std::size_t>(n), detail::identity_ordering(m).ranks());
  for (int j = 2; j <= k; ++j)
    for (int i = 0; i < j - 1; ++i)
      std::swap(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 2)],
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
  std::vector<Ordering> orderings;
  orderings.reserve(static_cast<std::size_t>(n));
  for (auto& row : rows) orderings.emplace_back(std::move(row));
  return Profile(m, std::move(orderings));
}

// --- Borda ---

/// Witness with Borda choice exactly S, for even n: individuals 1 and 2 put
/// S on top in opposite orders (each member sums to |S|+1 over the pair,
/// each outsider to at least 2|S|+2), and the remaining individuals cancel
/// out as inverse pairs.
inline Profile construct_borda(int m, int n, AltSet s) {
  detail::check_set(m, s, "construct_borda");
  if (n < 2 || n % 2 != 0)
    throw InfeasibleError("construct_borda: only the even-n layout is supported");
  std::vector<Ordering> orderings;
  orderings.reserve(static_cast<std::size_t>(n));
  orderings.emplace_back(detail::set_first_ascending(m, s));
  orderings.emplace_back(detail::set_first_descending(m, s));
  Profile u(m, std::move(orderings));
  for (int i = 2; i < n; i += 2) u = pad_with_inverse_pair(u);
  return u;
}

// --- plurality ---

/// Exact feasibility of a size-k plurality choice set: k winners need a
/// common top count q no smaller than every loser's, which works out to
/// k <= n and (k | n, or k < m with floor(n/k) tops beating the ceiling
/// share of the leftover tops spread over the m-k losers).
inline bool plurality_feasible(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1 || k > m)
    throw std::invalid_argument("plurality_feasible: need 1 <= k <= m, n >= 1");
  if (k > n) return false;
  const int q = n / k;
  const int r = n - q * k;
  if (r == 0) return true;
  if (k == m) return false;
  const int loser_share = (r + (m - k) - 1) / (m - k);
  return q > loser_share;
}

/// Witness with plurality choice exactly S: floor(n/|S|) individuals top
/// each member (members ascending), the leftover individuals top the
/// non-members round-robin, and every ordering below the top is ascending.
inline Profile construct_plurality(int m, int n, AltSet s) {
  detail::check_set(m, s, "construct_plurality");
  const int k = s.size();
  if (k > n)
    throw InfeasibleError("construct_plurality: k > n, not enough individuals for " +
                          std::to_string(k) + " winners");
  if (!plurality_feasible(m, n, k)) {
    if (k == m)
      throw InfeasibleError(
          "construct_plurality: k = m with n not divisible by k leaves a loser "
          "with too many tops");
    throw InfeasibleError(
        "construct_plurality: floor(n/k) = " + std::to_string(n / k) +
        " does not exceed the leftover share of the " + std::to_string(m - k) +
        " non-members");
  }
  const int q = n / k;
  const std::vector<Alt> members = s.ids();
  std::vector<Alt> tops;
  tops.reserve(static_cast<std::size_t>(n));
  for (Alt x : members)
    for (int c = 0; c < q; ++c) tops.push_back(x);
  std::vector<Alt> losers;
  for (Alt x = 0; x < m; ++x)
    if (!s.contains(x)) losers.push_back(x);
  for (std::size_t i = 0; tops.size() < static_cast<std::size_t>(n); ++i)
    tops.push_back(losers[i % losers.size()]);
  std::vector<Ordering> orderings;
  orderings.reserve(static_cast<std::size_t>(n));
  for (Alt t : tops) {
    std::vector<Alt> ranks;
    ranks.reserve(static_cast<std::size_t>(m));
    ranks.push_back(t);
    for (Alt x = 0; x < m; ++x)
      if (x != t) ranks.push_back(x);
    orderings.emplace_back(std::move(ranks));
  }
  return Profile(m, std::move(orderings));
}

// --- top cycle ---

/// Three-individual profile on k >= 3 alternatives whose weak-majority
/// transitive closure relates every pair. roles lists the alternatives in
/// the order they enter the construction: roles[0..2] form the base voting
/// paradox, roles[3] is inserted immediately below roles[1] in all three
/// orderings, and each later role immediately below the previous insertion.
inline Profile cycle_profile(const std::vector<Alt>& roles) {
  const int k = static_cast<int>(roles.size());
  if (k < 3) throw std::invalid_argument("cycle_profile: needs at least 3 alternatives");
  detail::check_permutation(std::vector<int>(roles.begin(), roles.end()), k,
                            "cycle_profile roles");
  std::array<std::vector<Alt>, 3> rows = {{
      {roles[0], roles[1], roles[2]},
      {roles[1], roles[2], roles[0]},
      {roles[2], roles[0], roles[1]},
  }};
  Alt pivot = roles[1];
  for (int j = 3; j < k; ++j) {
    for (auto& row : rows) {
      auto it = std::find(row.begin(), row.end(), pivot);
      row.insert(it + 1, roles[static_cast<std::size_t>(j)]);
    }
    pivot = roles[static_cast<std::size_t>(j)];
  }
  std::vector<Ordering> orderings;
  for (auto& row : rows) orderings.emplace_back(std::move(row));
  return Profile(k, std::move(orderings));
}

/// Witness with top cycle exactly S. Even n: two individuals oppose inside
/// S (ties there, unanimous wins over the rest). Odd n: three individuals
/// carry a majority cycle spanning S above the rest; |S| = 2 is impossible
/// for odd n. Extra individuals join as margin-neutral inverse pairs.
inline Profile construct_top_cycle(int m, int n, AltSet s) {
  detail::check_set(m, s, "construct_top_cycle");
  if (n < 1) throw std::invalid_argument("construct_top_cycle: n must be >= 1");
  const int k = s.size();
  std::vector<Alt> rest;
  for (Alt x = 0; x < m; ++x)
    if (!s.contains(x)) rest.push_back(x);

  if (n % 2 == 0) {
    std::vector<Ordering> orderings;
    orderings.emplace_back(detail::set_first_ascending(m, s));
    orderings.emplace_back(detail::set_first_descending(m, s));
    Profile u(m, std::move(orderings));
    for (int i = 2; i < n; i += 2) u = pad_with_inverse_pair(u);
    return u;
  }

  if (k == 2)
    throw InfeasibleError(
        "construct_top_cycle: with an odd number of individuals no two-element "
        "set is attainable");
  if (k == 1) {
    Ordering shared(detail::set_first_ascending(m, s));
    std::vector<Ordering> orderings(static_cast<std::size_t>(std::min(n, 3)), shared);
    Profile u(m, std::move(orderings));
    for (int i = u.n(); i < n; i += 2) u = pad_with_inverse_pair(u);
    return u;
  }
  if (n < 3)
    throw InfeasibleError(
        "construct_top_cycle: a single individual only ever yields their top");

  const std::vector<Alt> members = s.ids();
  std::vector<Alt> identity_roles(static_cast<std::size_t>(k));
  std::iota(identity_roles.begin(), identity_roles.end(), 0);
  Profile cycle = cycle_profile(identity_roles);
  std::vector<Ordering> orderings;
  for (const Ordering& o : cycle.orderings()) {
    std::vector<Alt> ranks;
    ranks.reserve(static_cast<std::size_t>(m));
    for (Alt role : o.ranks()) ranks.push_back(members[static_cast<std::size_t>(role)]);
    ranks.insert(ranks.end(), rest.begin(), rest.end());
    orderings.emplace_back(std::move(ranks));
  }
  Profile u(m, std::move(orderings));
  for (int i = 3; i < n; i += 2) u = pad_with_inverse_pair(u);
  return u;
}

// --- Copeland ---

/// Three-individual profile on an odd number of alternatives where every
/// Copeland score equals (m-1)/2. Grows from the voting paradox two
/// alternatives at a time: at step t the fresh pair (p, q) = (2t+1, 2t+2)
/// goes top/bottom of individual 1, while individuals 2 and 3 alternate
/// between taking one fresh alternative on an end and the other in the
/// middle rank.
inline Profile copeland_part1_profile(int m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("copeland_part1_profile: m must be odd and >= 3");
  std::array<std::vector<Alt>, 3> rows = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  for (int t = 1; static_cast<int>(rows[0].size()) < m; ++t) {
    const Alt p = 2 * t + 1;
    const Alt q = p + 1;
    const auto mid = static_cast<std::ptrdiff_t>(t + 1);
    rows[0].insert(rows[0].begin(), p);
    rows[0].push_back(q);
    if (t % 2 == 1) {
      rows[1].insert(rows[1].begin(), q);
      rows[1].insert(rows[1].begin() + mid, p);
      rows[2].push_back(p);
      rows[2].insert(rows[2].begin() + mid, q);
    } else {
      rows[1].push_back(p);
      rows[1].insert(rows[1].begin() + mid, q);
      rows[2].insert(rows[2].begin(), q);
      rows[2].insert(rows[2].begin() + mid, p);
    }
  }
  std::vector<Ordering> orderings;
  for (auto& row : rows) orderings.emplace_back(std::move(row));
  return Profile(m, std::move(orderings));
}

namespace detail {

/// Even-size Copeland base for odd n: take the all-tied profile on k+1
/// alternatives and insert the extra alternative t = k+1 at the top of
/// individual 1, the bottom of individual 2, and next-to-bottom of
/// individual 3; exactly one old alternative drops out of the choice set.
inline Profile copeland_even_size_base(int k) {
  Profile base = copeland_part1_profile(k + 1);
  const Alt t = k + 1;
  std::array<std::vector<Alt>, 3> rows;
  for (int i = 0; i < 3; ++i) rows[static_cast<std::size_t>(i)] = base[i].ranks();
  rows[0].insert(rows[0].begin(), t);
  rows[1].push_back(t);
  rows[2].insert(rows[2].end() - 1, t);
  std::vector<Ordering> orderings;
  for (auto& row : rows) orderings.emplace_back(std::move(row));
  return Profile(k + 2, std::move(orderings));
}

}  // namespace detail

/// Witness whose Copeland choice set has exactly k elements. Even n reduces
/// to an n = 2 base (opposed inside the first k, agreed on the rest); odd n
/// composes the all-tied odd base, the even-size insertion, bottom padding
/// up to m, and margin-neutral pairs up to n. For odd n, parity makes
/// k = m (m even) and k = m-1 (m odd) unreachable, so those throw.
inline Profile construct_copeland(int m, int n, int k) {
  if (m < 1 || m > kMaxAlternatives || n < 1)
    throw std::invalid_argument("construct_copeland: bad m or n");
  if (k < 1 || k > m)
    throw std::invalid_argument("construct_copeland: k must be in [1, m]");

  if (n % 2 == 0) {
    AltSet s;
    for (Alt x = 0; x < k; ++x) s.insert(x);
    std::vector<Ordering> orderings;
    orderings.emplace_back(detail::set_first_ascending(m, s));
    orderings.emplace_back(detail::set_first_descending(m, s));
    Profile u(m, std::move(orderings));
    for (int i = 2; i < n; i += 2) u = pad_with_inverse_pair(u);
    return u;
  }

  if (m % 2 == 0 && k == m)
    throw InfeasibleError("construct_copeland: m even: size m infeasible");
  if (m % 2 == 1 && k == m - 1)
    throw InfeasibleError("construct_copeland: m odd: size m-1 infeasible");
  if (k == 1) {
    std::vector<Ordering> orderings(static_cast<std::size_t>(n),
                                    detail::identity_ordering(m));
    return Profile(m, std::move(orderings));
  }
  if (n == 1)
    throw InfeasibleError(
        "construct_copeland: one individual always yields a single winner");

  Profile u = (k % 2 == 1) ? copeland_part1_profile(k)
                           : detail::copeland_even_size_base(k);
  while (u.m() < m) u = append_bottom_alternative(u);
  for (int i = 3; i < n; i += 2) u = pad_with_inverse_pair(u);
  return u;
}

// --- approval ---

struct ApprovalWitness {
  Profile profile;
  IndexVector ballots;
};

/// Witness with approval choice exactly S. Members of S are written as a
/// token stream across the top ranks of the n individuals: one occurrence
/// each when |S| >= n (gauge ceil(k/n)), floor(n/k)+1 occurrences each when
/// 2 <= |S| < n (rank 1 fills all individuals, the overflow wraps into rank
/// 2, gauge <= 2), and a shared single top when |S| = 1. Each individual
/// approves exactly their token cells; everything below is filled with the
/// remaining alternatives ascending.
inline ApprovalWitness construct_approval(int m, int n, AltSet s) {
  detail::check_set(m, s, "construct_approval");
  if (n < 1) throw std::invalid_argument("construct_approval: n must be >= 1");
  const int k = s.size();
  const std::vector<Alt> members = s.ids();

  std::vector<std::vector<Alt>> columns(static_cast<std::size_t>(n));
  if (k == 1) {
    for (auto& col : columns) col.push_back(members[0]);
  } else if (k >= n) {
    for (int j = 0; j < k; ++j)
      columns[static_cast<std::size_t>(j % n)].push_back(members[static_cast<std::size_t>(j)]);
  } else {
    const int copies = n / k + 1;
    std::vector<Alt> stream;
    stream.reserve(static_cast<std::size_t>(k * copies));
    for (Alt x : members)
      for (int c = 0; c < copies; ++c) stream.push_back(x);
    for (std::size_t pos = 0; pos < stream.size(); ++pos)
      columns[pos % static_cast<std::size_t>(n)].push_back(stream[pos]);
  }

  std::vector<Ordering> orderings;
  orderings.reserve(static_cast<std::size_t>(n));
  IndexVector ballots;
  ballots.reserve(static_cast<std::size_t>(n));
  for (const auto& col : columns) {
    std::vector<Alt> ranks = col;
    AltSet used = AltSet::from_ids(col);
    for (Alt x = 0; x < m; ++x)
      if (!used.contains(x)) ranks.push_back(x);
    orderings.emplace_back(std::move(ranks));
    ballots.push_back(static_cast<int>(col.size()));
  }
  return ApprovalWitness{Profile(m, std::move(orderings)), std::move(ballots)};
}

}  // namespace scc
