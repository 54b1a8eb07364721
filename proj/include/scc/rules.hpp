#pragma once

// The eight social choice correspondences. Each rule maps a profile (plus,
// for approval, a ballot-index vector) to a non-empty choice set. Score
// vectors are exposed separately so tests and the CLI can show work.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "scc/core.hpp"

namespace scc {

enum class Rule {
  Tops,
  Pareto,
  Maximin,
  Borda,
  Plurality,
  TopCycle,
  Copeland,
  Approval,
};

inline constexpr std::array<Rule, 8> kAllRules = {
    Rule::Tops,     Rule::Pareto,   Rule::Maximin,  Rule::Borda,
    Rule::Plurality, Rule::TopCycle, Rule::Copeland, Rule::Approval,
};

inline std::string to_string(Rule r) {
  switch (r) {
    case Rule::Tops: return "tops";
    case Rule::Pareto: return "pareto";
    case Rule::Maximin: return "maximin";
    case Rule::Borda: return "borda";
    case Rule::Plurality: return "plurality";
    case Rule::TopCycle: return "top_cycle";
    case Rule::Copeland: return "copeland";
    case Rule::Approval: return "approval";
  }
  throw std::invalid_argument("unknown rule");
}

inline Rule parse_rule(std::string_view name) {
  for (Rule r : kAllRules)
    if (name == to_string(r)) return r;
  throw std::invalid_argument("unknown rule '" + std::string(name) + "'");
}

/// Approval ballot indices, one per individual, each in [1, m]: individual i
/// approves exactly their b[i] top-ranked alternatives.
using IndexVector = std::vector<int>;

inline int gauge(const IndexVector& ballots) {
  if (ballots.empty()) throw std::invalid_argument("gauge: empty ballot vector");
  int g = 1;
  for (int b : ballots) g = std::max(g, b);
  return g;
}

namespace detail {

/// Alternatives attaining the extreme score. `want_min` selects argmin.
template <typename Score>
AltSet arg_extreme(const std::vector<Score>& scores, bool want_min) {
  Score best = scores.front();
  for (Score s : scores) best = want_min ? std::min(best, s) : std::max(best, s);
  AltSet out;
  for (int x = 0; x < static_cast<int>(scores.size()); ++x)
    if (scores[static_cast<std::size_t>(x)] == best) out.insert(x);
  return out;
}

}  // namespace detail

// --- tops ---

/// Alternatives ranked first by at least one individual.
inline AltSet tops_choice(const Profile& u) {
  AltSet s;
  for (const Ordering& o : u.orderings()) s.insert(o.top());
  return s;
}

// --- Pareto ---

/// x is dominated when some y is unanimously preferred to it; the choice set
/// collects the undominated alternatives.
inline AltSet pareto_choice(const Profile& u) {
  const MajorityMatrix mm(u);
  AltSet out;
  for (Alt x = 0; x < u.m(); ++x) {
    bool dominated = false;
    for (Alt y = 0; y < u.m() && !dominated; ++y)
      if (y != x && mm.support(y, x) == u.n()) dominated = true;
    if (!dominated) out.insert(x);
  }
  return out;
}

// --- maximin ---

/// Worst (largest) rank each alternative receives from any individual.
inline std::vector<int> maximin_worst_ranks(const Profile& u) {
  std::vector<int> worst(static_cast<std::size_t>(u.m()), 0);
  for (const Ordering& o : u.orderings())
    for (Alt x = 0; x < u.m(); ++x)
      worst[static_cast<std::size_t>(x)] =
          std::max(worst[static_cast<std::size_t>(x)], o.rank_of(x));
  return worst;
}

inline AltSet maximin_choice(const Profile& u) {
  return detail::arg_extreme(maximin_worst_ranks(u), /*want_min=*/true);
}

// --- Borda ---

/// Sum of ranks across individuals (1 = best), so low is good.
inline std::vector<int> borda_scores(const Profile& u) {
  std::vector<int> sum(static_cast<std::size_t>(u.m()), 0);
  for (const Ordering& o : u.orderings())
    for (Alt x = 0; x < u.m(); ++x) sum[static_cast<std::size_t>(x)] += o.rank_of(x);
  return sum;
}

inline AltSet borda_choice(const Profile& u) {
  return detail::arg_extreme(borda_scores(u), /*want_min=*/true);
}

// --- plurality ---

/// First-place counts per alternative.
inline std::vector<int> plurality_counts(const Profile& u) {
  std::vector<int> counts(static_cast<std::size_t>(u.m()), 0);
  for (const Ordering& o : u.orderings()) ++counts[static_cast<std::size_t>(o.top())];
  return counts;
}

/// The winning first-place count.
inline int plurality_number(const Profile& u) {
  const auto counts = plurality_counts(u);
  return *std::max_element(counts.begin(), counts.end());
}

inline AltSet plurality_choice(const Profile& u) {
  return detail::arg_extreme(plurality_counts(u), /*want_min=*/false);
}

// --- top cycle ---

namespace detail {

/// Tarjan strongly connected components over the weak simple-majority
/// digraph (edge x -> y iff margin(x, y) >= 0). Returns component ids in
/// reverse topological order of the condensation: higher id = closer to the
/// source. m <= 16 keeps the recursion trivially shallow.
struct TarjanScc {
  const MajorityMatrix& mm;
  int m;
  std::vector<int> index, low, comp;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  explicit TarjanScc(const MajorityMatrix& matrix)
      : mm(matrix),
        m(matrix.m()),
        index(static_cast<std::size_t>(m), -1),
        low(static_cast<std::size_t>(m), 0),
        comp(static_cast<std::size_t>(m), -1),
        on_stack(static_cast<std::size_t>(m), false) {
    for (int v = 0; v < m; ++v)
      if (index[static_cast<std::size_t>(v)] == -1) visit(v);
  }

  void visit(int v) {
    index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = next_index++;
    stack.push_back(v);
    on_stack[static_cast<std::size_t>(v)] = true;
    for (int w = 0; w < m; ++w) {
      if (w == v || !mm.weakly_beats(v, w)) continue;
      if (index[static_cast<std::size_t>(w)] == -1) {
        visit(w);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
      } else if (on_stack[static_cast<std::size_t>(w)]) {
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
      }
    }
    if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = false;
        comp[static_cast<std::size_t>(w)] = next_comp;
        if (w == v) break;
      }
      ++next_comp;
    }
  }
};

}  // namespace detail

/// Maximal elements of the transitive closure of the weak simple-majority
/// relation: the source component of the condensation. The weak relation is
/// complete, so the condensation is linearly ordered and the source is
/// unique.
inline AltSet top_cycle_choice(const Profile& u) {
  const MajorityMatrix mm(u);
  detail::TarjanScc scc(mm);
  // The source component is the one no other component points into.
  std::vector<bool> has_incoming(static_cast<std::size_t>(scc.next_comp), false);
  for (int x = 0; x < u.m(); ++x)
    for (int y = 0; y < u.m(); ++y)
      if (x != y && mm.weakly_beats(x, y) &&
          scc.comp[static_cast<std::size_t>(x)] != scc.comp[static_cast<std::size_t>(y)])
        has_incoming[static_cast<std::size_t>(scc.comp[static_cast<std::size_t>(y)])] = true;
  int source = -1;
  for (int c = 0; c < scc.next_comp; ++c)
    if (!has_incoming[static_cast<std::size_t>(c)]) source = c;
  AltSet out;
  for (int x = 0; x < u.m(); ++x)
    if (scc.comp[static_cast<std::size_t>(x)] == source) out.insert(x);
  return out;
}

/// Independent route to the same set: Warshall transitive closure of the
/// weak relation, then keep the alternatives that reach every other.
inline AltSet top_cycle_choice_via_closure(const Profile& u) {
  const MajorityMatrix mm(u);
  const int m = u.m();
  std::array<std::uint32_t, kMaxAlternatives> reach{};
  for (int x = 0; x < m; ++x) {
    reach[static_cast<std::size_t>(x)] = std::uint32_t{1} << x;
    for (int y = 0; y < m; ++y)
      if (x != y && mm.weakly_beats(x, y))
        reach[static_cast<std::size_t>(x)] |= std::uint32_t{1} << y;
  }
  for (int k = 0; k < m; ++k)
    for (int x = 0; x < m; ++x)
      if (reach[static_cast<std::size_t>(x)] >> k & 1u)
        reach[static_cast<std::size_t>(x)] |= reach[static_cast<std::size_t>(k)];
  const std::uint32_t all = (std::uint32_t{1} << m) - 1u;
  AltSet out;
  for (int x = 0; x < m; ++x)
    if (reach[static_cast<std::size_t>(x)] == all) out.insert(x);
  return out;
}

// --- Copeland ---

enum class CopelandVariant {
  Wins,            // score = strict majority wins
  WinsMinusLosses, // score = wins - losses; same choice set when n is odd
};

inline std::vector<int> copeland_scores(const Profile& u,
                                        CopelandVariant variant = CopelandVariant::Wins) {
  const MajorityMatrix mm(u);
  std::vector<int> scores(static_cast<std::size_t>(u.m()), 0);
  for (Alt x = 0; x < u.m(); ++x)
    for (Alt y = 0; y < u.m(); ++y) {
      if (x == y) continue;
      if (mm.beats(x, y)) ++scores[static_cast<std::size_t>(x)];
      else if (variant == CopelandVariant::WinsMinusLosses && mm.beats(y, x))
        --scores[static_cast<std::size_t>(x)];
    }
  return scores;
}

inline AltSet copeland_choice(const Profile& u,
                              CopelandVariant variant = CopelandVariant::Wins) {
  return detail::arg_extreme(copeland_scores(u, variant), /*want_min=*/false);
}

// --- approval ---

/// Approval tallies given ballot indices: individual i contributes one point
/// to each of their top ballots[i] alternatives.
inline std::vector<int> approval_scores(const Profile& u, const IndexVector& ballots) {
  if (static_cast<int>(ballots.size()) != u.n())
    throw std::invalid_argument("approval: need one ballot index per individual");
  std::vector<int> scores(static_cast<std::size_t>(u.m()), 0);
  for (int i = 0; i < u.n(); ++i) {
    const int b = ballots[static_cast<std::size_t>(i)];
    if (b < 1 || b > u.m())
      throw std::invalid_argument("approval: ballot index must be in [1, m]");
    for (int p = 0; p < b; ++p) ++scores[static_cast<std::size_t>(u[i].at(p))];
  }
  return scores;
}

inline AltSet approval_choice(const Profile& u, const IndexVector& ballots) {
  return detail::arg_extreme(approval_scores(u, ballots), /*want_min=*/false);
}

// --- dispatch ---

/// Evaluate any ballot-free rule. Approval requires ballot indices; use the
/// two-argument overload below.
inline AltSet evaluate(Rule rule, const Profile& u) {
  switch (rule) {
    case Rule::Tops: return tops_choice(u);
    case Rule::Pareto: return pareto_choice(u);
    case Rule::Maximin: return maximin_choice(u);
    case Rule::Borda: return borda_choice(u);
    case Rule::Plurality: return plurality_choice(u);
    case Rule::TopCycle: return top_cycle_choice(u);
    case Rule::Copeland: return copeland_choice(u);
    case Rule::Approval:
      throw std::invalid_argument("approval requires ballot indices");
  }
  throw std::invalid_argument("unknown rule");
}

inline AltSet evaluate(Rule rule, const Profile& u, const IndexVector& ballots) {
  if (rule == Rule::Approval) return approval_choice(u, ballots);
  if (!ballots.empty())
    throw std::invalid_argument("ballot indices only apply to approval");
  return evaluate(rule, u);
}

}  // namespace scc
