#pragma once

// Core value types for ranked-ballot computation: alternatives, strict
// orderings, profiles, pairwise majority tallies, relabeling utilities and
// the profile text codec. Every type here is immutable after construction
// and safe to share across threads.

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scc {

/// Alternative id, dense in [0, m).
using Alt = int;

// Alternative sets are bit-packed; this caps the supported m.
inline constexpr int kMaxAlternatives = 16;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested witness is provably not realizable for the given (m, n).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration exceeds its practical guard and no override was given.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subset of {0,...,m-1} packed into a bitmask. Rule outputs (choice sets)
/// are non-empty by contract; the type itself permits the empty set so it
/// can double as a plain id-set utility.
class AltSet {
 public:
  AltSet() = default;
  explicit AltSet(std::uint32_t mask) : mask_(mask) {}

  static AltSet full(int m) {
    check_range(m - 1);
    return AltSet((std::uint32_t{1} << m) - 1u);
  }
  static AltSet of(std::initializer_list<Alt> ids) {
    AltSet s;
    for (Alt x : ids) s.insert(x);
    return s;
  }
  static AltSet from_ids(const std::vector<Alt>& ids) {
    AltSet s;
    for (Alt x : ids) s.insert(x);
    return s;
  }

  void insert(Alt x) {
    check_range(x);
    mask_ |= std::uint32_t{1} << x;
  }
  bool contains(Alt x) const {
    return x >= 0 && x < kMaxAlternatives && (mask_ >> x & 1u) != 0;
  }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  std::uint32_t mask() const { return mask_; }

  /// Member ids in ascending order.
  std::vector<Alt> ids() const {
    std::vector<Alt> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Alt x = 0; x < kMaxAlternatives; ++x)
      if (contains(x)) out.push_back(x);
    return out;
  }

  friend bool operator==(AltSet a, AltSet b) { return a.mask_ == b.mask_; }
  friend bool operator!=(AltSet a, AltSet b) { return a.mask_ != b.mask_; }
  friend bool operator<(AltSet a, AltSet b) { return a.mask_ < b.mask_; }

 private:
  static void check_range(Alt x) {
    if (x < 0 || x >= kMaxAlternatives)
      throw std::out_of_range("alternative id out of range [0, 16)");
  }
  std::uint32_t mask_ = 0;
};

/// Rule outputs are choice sets; the alias marks that use.
using ChoiceSet = AltSet;

/// "{0,2,4}"
inline std::string to_string(AltSet s) {
  std::string out = "{";
  bool first = true;
  for (Alt x : s.ids()) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  out += '}';
  return out;
}

/// A strict ranking of all m alternatives, best first. Position 0 holds the
/// top-ranked alternative (rank 1).
class Ordering {
 public:
  explicit Ordering(std::vector<Alt> ranks) : ranks_(std::move(ranks)) {
    const int m = static_cast<int>(ranks_.size());
    if (m < 1 || m > kMaxAlternatives)
      throw std::invalid_argument("ordering size must be in [1, 16]");
    pos_.assign(static_cast<std::size_t>(m), -1);
    for (int p = 0; p < m; ++p) {
      const Alt x = ranks_[static_cast<std::size_t>(p)];
      if (x < 0 || x >= m || pos_[static_cast<std::size_t>(x)] != -1)
        throw std::invalid_argument("ordering is not a permutation of 0..m-1");
      pos_[static_cast<std::size_t>(x)] = p;
    }
  }

  int size() const { return static_cast<int>(ranks_.size()); }
  Alt at(int position) const { return ranks_[static_cast<std::size_t>(position)]; }
  Alt top() const { return ranks_.front(); }

  /// 1-based rank of x; 1 = best.
  int rank_of(Alt x) const {
    if (x < 0 || x >= size()) throw std::out_of_range("unknown alternative");
    return pos_[static_cast<std::size_t>(x)] + 1;
  }

  /// True iff x is ranked above (better than) y.
  bool prefers(Alt x, Alt y) const { return rank_of(x) < rank_of(y); }

  /// The k best alternatives; 1 <= k <= m.
  AltSet top_k(int k) const {
    if (k < 1 || k > size()) throw std::out_of_range("top_k: k out of range [1, m]");
    AltSet s;
    for (int p = 0; p < k; ++p) s.insert(ranks_[static_cast<std::size_t>(p)]);
    return s;
  }

  /// Reversal; flips every pairwise comparison. Involution.
  Ordering inverse() const {
    return Ordering(std::vector<Alt>(ranks_.rbegin(), ranks_.rend()));
  }

  const std::vector<Alt>& ranks() const { return ranks_; }

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.ranks_ == b.ranks_; }
  friend bool operator!=(const Ordering& a, const Ordering& b) { return a.ranks_ != b.ranks_; }
  /// Lexicographic on the ranks sequence; the fixed total order used for
  /// canonical keys.
  friend bool operator<(const Ordering& a, const Ordering& b) { return a.ranks_ < b.ranks_; }

 private:
  std::vector<Alt> ranks_;
  std::vector<int> pos_;  // pos_[x] = 0-based position of x
};

inline Ordering inverse_ordering(const Ordering& o) { return o.inverse(); }
inline int rank_of(const Ordering& o, Alt x) { return o.rank_of(x); }
inline AltSet top_k(const Ordering& o, int k) { return o.top_k(k); }

/// One ordering per individual.
class Profile {
 public:
  Profile(int m, std::vector<Ordering> orderings)
      : m_(m), orderings_(std::move(orderings)) {
    if (m_ < 1 || m_ > kMaxAlternatives)
      throw std::invalid_argument("profile: m must be in [1, 16]");
    if (orderings_.empty()) throw std::invalid_argument("profile: n must be >= 1");
    for (const Ordering& o : orderings_)
      if (o.size() != m_)
        throw std::invalid_argument("profile: every ordering must rank all m alternatives");
  }

  int m() const { return m_; }
  int n() const { return static_cast<int>(orderings_.size()); }
  const Ordering& operator[](int i) const { return orderings_[static_cast<std::size_t>(i)]; }
  const std::vector<Ordering>& orderings() const { return orderings_; }

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.m_ == b.m_ && a.orderings_ == b.orderings_;
  }
  friend bool operator!=(const Profile& a, const Profile& b) { return !(a == b); }

 private:
  int m_;
  std::vector<Ordering> orderings_;
};

/// Pairwise support counts. support(x,y) = number of individuals ranking x
/// above y; margin(x,y) = support(x,y) - support(y,x). The simple-majority
/// relation is margin(x,y) >= 0.
class MajorityMatrix {
 public:
  explicit MajorityMatrix(const Profile& u) : m_(u.m()), n_(u.n()) {
    support_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0);
    for (const Ordering& o : u.orderings()) {
      const std::vector<Alt>& r = o.ranks();
      for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j)
          ++support_[idx(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(j)])];
    }
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int support(Alt x, Alt y) const { return support_[idx(x, y)]; }
  int margin(Alt x, Alt y) const { return support(x, y) - support(y, x); }
  /// x defeats y under strict simple majority.
  bool beats(Alt x, Alt y) const { return margin(x, y) > 0; }
  /// x >= y under the SMV relation (ties included).
  bool weakly_beats(Alt x, Alt y) const { return margin(x, y) >= 0; }

  friend bool operator==(const MajorityMatrix& a, const MajorityMatrix& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.support_ == b.support_;
  }

 private:
  std::size_t idx(Alt x, Alt y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(y);
  }
  int m_;
  int n_;
  std::vector<int> support_;
};

inline MajorityMatrix majority_matrix(const Profile& u) { return MajorityMatrix(u); }

namespace detail {
inline void check_permutation(const std::vector<int>& perm, int size, const char* what) {
  if (static_cast<int>(perm.size()) != size)
    throw std::invalid_argument(std::string(what) + ": wrong size");
  std::uint32_t seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= size || (seen >> v & 1u))
      throw std::invalid_argument(std::string(what) + ": not a permutation");
    seen |= std::uint32_t{1} << v;
  }
}
}  // namespace detail

/// Replace every occurrence of alternative x by perm[x].
inline Profile relabel_alternatives(const Profile& u, const std::vector<int>& perm) {
  detail::check_permutation(perm, u.m(), "relabel_alternatives");
  std::vector<Ordering> out;
  out.reserve(static_cast<std::size_t>(u.n()));
  for (const Ordering& o : u.orderings()) {
    std::vector<Alt> ranks;
    ranks.reserve(static_cast<std::size_t>(u.m()));
    for (Alt x : o.ranks()) ranks.push_back(perm[static_cast<std::size_t>(x)]);
    out.emplace_back(std::move(ranks));
  }
  return Profile(u.m(), std::move(out));
}

/// Image of a set under an alternative relabeling.
inline AltSet relabel_set(AltSet s, const std::vector<int>& perm) {
  AltSet out;
  for (Alt x : s.ids()) out.insert(perm[static_cast<std::size_t>(x)]);
  return out;
}

/// Reorder individuals: individual i of the result is individual sigma[i] of u.
inline Profile permute_individuals(const Profile& u, const std::vector<int>& sigma) {
  detail::check_permutation(sigma, u.n(), "permute_individuals");
  std::vector<Ordering> out;
  out.reserve(static_cast<std::size_t>(u.n()));
  for (int i = 0; i < u.n(); ++i) out.push_back(u[sigma[static_cast<std::size_t>(i)]]);
  return Profile(u.m(), std::move(out));
}

/// Anonymity-class key: equal exactly for profiles that differ only by a
/// permutation of individuals. Encodes [m, n, sorted orderings flattened].
inline std::vector<int> canonical_key(const Profile& u) {
  std::vector<const Ordering*> sorted;
  sorted.reserve(static_cast<std::size_t>(u.n()));
  for (const Ordering& o : u.orderings()) sorted.push_back(&o);
  std::sort(sorted.begin(), sorted.end(),
            [](const Ordering* a, const Ordering* b) { return *a < *b; });
  std::vector<int> key;
  key.reserve(2 + static_cast<std::size_t>(u.m()) * static_cast<std::size_t>(u.n()));
  key.push_back(u.m());
  key.push_back(u.n());
  for (const Ordering* o : sorted)
    key.insert(key.end(), o->ranks().begin(), o->ranks().end());
  return key;
}

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_ws(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_ws(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

inline bool parse_int(std::string_view tok, int& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace detail

/// Parse the profile text format: header "<m> <n>", then n rows of m ids,
/// best first. Runs of spaces/tabs are accepted between fields.
inline Profile codec_parse(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError("malformed header: empty input");

  const auto header = detail::split_fields(lines[0]);
  int m = 0, n = 0;
  if (header.size() != 2 || !detail::parse_int(header[0], m) ||
      !detail::parse_int(header[1], n))
    throw ParseError("malformed header: expected '<m> <n>'");
  if (m < 1 || m > kMaxAlternatives)
    throw ParseError("malformed header: m must be in [1, 16]");
  if (n < 1) throw ParseError("malformed header: n must be >= 1");

  std::vector<Ordering> orderings;
  orderings.reserve(static_cast<std::size_t>(n));
  std::size_t line_no = 1;
  for (int row = 0; row < n; ++row, ++line_no) {
    if (line_no >= lines.size())
      throw ParseError("wrong row count: expected " + std::to_string(n) +
                       " rows, found " + std::to_string(row));
    const auto fields = detail::split_fields(lines[line_no]);
    if (static_cast<int>(fields.size()) != m)
      throw ParseError("row " + std::to_string(row + 1) + ": expected " +
                       std::to_string(m) + " ids, found " +
                       std::to_string(fields.size()));
    std::vector<Alt> ranks;
    ranks.reserve(static_cast<std::size_t>(m));
    std::uint32_t seen = 0;
    for (const auto& tok : fields) {
      int v = 0;
      if (!detail::parse_int(tok, v))
        throw ParseError("row " + std::to_string(row + 1) + ": invalid id '" +
                         std::string(tok) + "'");
      if (v < 0 || v >= m || (seen >> v & 1u))
        throw ParseError("row " + std::to_string(row + 1) +
                         " is not a permutation of 0.." + std::to_string(m - 1));
      seen |= std::uint32_t{1} << v;
      ranks.push_back(v);
    }
    orderings.emplace_back(std::move(ranks));
  }
  for (; line_no < lines.size(); ++line_no)
    if (!detail::split_fields(lines[line_no]).empty())
      throw ParseError("wrong row count: content after row " + std::to_string(n));
  return Profile(m, std::move(orderings));
}

/// Emit the canonical text form: single spaces, trailing newline.
inline std::string codec_emit(const Profile& u) {
  std::string out = std::to_string(u.m()) + ' ' + std::to_string(u.n()) + '\n';
  for (const Ordering& o : u.orderings()) {
    bool first = true;
    for (Alt x : o.ranks()) {
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace scc
