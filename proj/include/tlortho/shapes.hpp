/**
 * @file shapes.hpp
 * @brief Index sets for the maximal vectors: two-row shapes, 1-factors,
 *        Bratteli walks, link (half) diagrams and two-row standard tableaux,
 *        with the bijections between them and the orders and relations on
 *        1-factors used by the transition formulas.
 *
 * Positions are 1-based throughout: entry(1) is the first entry.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tlortho {

/// Two-row partition (lambda1, lambda2), lambda1 >= lambda2 >= 0.
struct Shape {
  int lambda1 = 0;
  int lambda2 = 0;

  Shape() = default;
  Shape(int l1, int l2) : lambda1(l1), lambda2(l2) {
    if (l2 < 0 || l1 < l2)
      throw std::invalid_argument("Shape: need lambda1 >= lambda2 >= 0, got (" + std::to_string(l1) + "," +
                                  std::to_string(l2) + ")");
  }

  int n() const { return lambda1 + lambda2; }
  /// Highest weight lambda1 - lambda2, the image in X(n)_+.
  int weight() const { return lambda1 - lambda2; }

  static Shape from_weight(int n, int weight) {
    if (weight < 0 || weight > n || (n - weight) % 2 != 0)
      throw std::invalid_argument("Shape::from_weight: weight not in X(n)_+");
    return Shape((n + weight) / 2, (n - weight) / 2);
  }

  friend bool operator==(const Shape &, const Shape &) = default;
  friend auto operator<=>(const Shape &, const Shape &) = default;

  std::string to_string() const { return "(" + std::to_string(lambda1) + "," + std::to_string(lambda2) + ")"; }
};

/// All two-row shapes of n, ordered by decreasing lambda1 (dominance order).
inline std::vector<Shape> shapes_of(int n) {
  std::vector<Shape> out;
  for (int l2 = 0; 2 * l2 <= n; ++l2)
    out.emplace_back(n - l2, l2);
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  if (n > 62)
    throw std::overflow_error("binomial: n too large");
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int j = 1; j <= k; ++j)
    r = r * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
  return r;
}

inline std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

/// c_lambda = C(n, lambda2) - C(n, lambda2 - 1): the number of walks to lambda.
inline std::uint64_t count_paths(const Shape &s) { return binomial(s.n(), s.lambda2) - binomial(s.n(), s.lambda2 - 1); }

// ---------------------------------------------------------------------------
// 1-factors
// ---------------------------------------------------------------------------

/**
 * A sequence of +-1 with nonnegative partial sums.
 *
 * Position i with entry +1 is paired with the least j > i such that the
 * entries i..j sum to zero; unpaired +1 entries are defects. The pairing
 * map, defect list and weight sequence are computed at construction.
 */
class OneFactor {
public:
  OneFactor() { build(); }

  explicit OneFactor(std::vector<int> entries) : entries_(std::move(entries)) {
    int sum = 0;
    for (int e : entries_) {
      if (e != 1 && e != -1)
        throw std::invalid_argument("OneFactor: entries must be +1 or -1");
      sum += e;
      if (sum < 0)
        throw std::invalid_argument("OneFactor: negative partial sum");
    }
    build();
  }

  OneFactor(std::initializer_list<int> entries) : OneFactor(std::vector<int>(entries)) {}

  static bool is_valid(const std::vector<int> &entries) {
    int sum = 0;
    for (int e : entries) {
      if (e != 1 && e != -1)
        return false;
      sum += e;
      if (sum < 0)
        return false;
    }
    return true;
  }

  int length() const { return static_cast<int>(entries_.size()); }
  const std::vector<int> &entries() const { return entries_; }
  int entry(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }

  /// Sum of all entries; equals the number of defects.
  int weight() const { return weight_seq_.empty() ? 0 : weight_seq_.back(); }
  int num_pairings() const { return (length() - weight()) / 2; }
  Shape shape() const { return Shape(length() - num_pairings(), num_pairings()); }

  /// Partner position of i, or 0 if i is a defect.
  int partner(int i) const { return partner_.at(static_cast<std::size_t>(i)); }
  bool is_defect(int i) const { return partner(i) == 0; }
  const std::vector<int> &defects() const { return defects_; }

  /// Pairings (i, j), i < j, ordered by the closing position j.
  std::vector<std::pair<int, int>> pairings() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= length(); ++j)
      if (entry(j) == -1)
        out.emplace_back(partner(j), j);
    return out;
  }

  /// Positions of the -1 entries, increasing.
  std::vector<int> minus_positions() const {
    std::vector<int> out;
    for (int j = 1; j <= length(); ++j)
      if (entry(j) == -1)
        out.push_back(j);
    return out;
  }

  /// Partial sums alpha_1 + ... + alpha_j for j = 1..length.
  const std::vector<int> &weight_sequence() const { return weight_seq_; }

  /// Sum of entries strictly before position i.
  int prefix_weight(int i) const { return i <= 1 ? 0 : weight_seq_.at(static_cast<std::size_t>(i - 2)); }

  /// Largest element of the weight sequence.
  int max_weight() const {
    int m = 0;
    for (int w : weight_seq_)
      m = std::max(m, w);
    return m;
  }

  /// alpha || (1)
  OneFactor plus() const {
    auto e = entries_;
    e.push_back(1);
    return OneFactor(std::move(e));
  }

  /// alpha || (-1); requires weight() > 0.
  OneFactor minus() const {
    if (weight() == 0)
      throw std::invalid_argument("OneFactor::minus: weight is zero");
    auto e = entries_;
    e.push_back(-1);
    return OneFactor(std::move(e));
  }

  /// Link the j-th defect with the next one (1 <= j < weight()).
  OneFactor link_defects(int j) const {
    if (j < 1 || j >= weight())
      throw std::out_of_range("OneFactor::link_defects: defect index out of range");
    auto e = entries_;
    e[static_cast<std::size_t>(defects_[static_cast<std::size_t>(j)] - 1)] = -1;
    return OneFactor(std::move(e));
  }

  /// (alpha || (1)) with its j-th defect linked to the next (1 <= j <= weight()).
  OneFactor plus_link(int j) const { return plus().link_defects(j); }

  /// Concatenation alpha || beta.
  OneFactor concat(const OneFactor &o) const {
    auto e = entries_;
    e.insert(e.end(), o.entries_.begin(), o.entries_.end());
    return OneFactor(std::move(e));
  }

  /// Lexicographic with +1 < -1. This is a linear extension of the reverse
  /// dominance order: dominance-larger factors sort first.
  friend std::strong_ordering operator<=>(const OneFactor &a, const OneFactor &b) {
    std::size_t n = std::min(a.entries_.size(), b.entries_.size());
    for (std::size_t k = 0; k < n; ++k)
      if (a.entries_[k] != b.entries_[k])
        return a.entries_[k] == 1 ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.entries_.size() <=> b.entries_.size();
  }
  friend bool operator==(const OneFactor &a, const OneFactor &b) { return a.entries_ == b.entries_; }

  /// Compact text such as "1,1,-1".
  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (k)
        s += ",";
      s += entries_[k] == 1 ? "1" : "-1";
    }
    return s;
  }

  static OneFactor parse(const std::string &text) {
    std::vector<int> e;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t next = text.find(',', pos);
      std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }),
                tok.end());
      if (tok == "1" || tok == "+1")
        e.push_back(1);
      else if (tok == "-1")
        e.push_back(-1);
      else if (!tok.empty())
        throw std::invalid_argument("OneFactor::parse: bad token '" + tok + "'");
      if (next == std::string::npos)
        break;
      pos = next + 1;
    }
    return OneFactor(std::move(e));
  }

private:
  std::vector<int> entries_;
  std::vector<int> partner_;   // index 0 unused
  std::vector<int> defects_;   // 1-based positions, increasing
  std::vector<int> weight_seq_;

  void build() {
    const int n = length();
    partner_.assign(static_cast<std::size_t>(n + 1), 0);
    weight_seq_.clear();
    defects_.clear();
    std::vector<int> open;
    int sum = 0;
    for (int j = 1; j <= n; ++j) {
      int e = entries_[static_cast<std::size_t>(j - 1)];
      sum += e;
      weight_seq_.push_back(sum);
      if (e == 1) {
        open.push_back(j);
      } else {
        int i = open.back();
        open.pop_back();
        partner_[static_cast<std::size_t>(i)] = j;
        partner_[static_cast<std::size_t>(j)] = i;
      }
    }
    defects_ = open;
  }
};

/// Build (1^a) etc. conveniently: repeat(1, 3) || repeat(-1, 2).
inline std::vector<int> repeat(int sign, int count) { return std::vector<int>(static_cast<std::size_t>(count), sign); }

inline OneFactor make_factor(std::initializer_list<std::vector<int>> blocks) {
  std::vector<int> e;
  for (const auto &b : blocks)
    e.insert(e.end(), b.begin(), b.end());
  return OneFactor(std::move(e));
}

/// All 1-factors of the given shape, in canonical order (see operator<=>).
inline std::vector<OneFactor> enumerate_one_factors(const Shape &shape) {
  std::vector<OneFactor> out;
  const int n = shape.n();
  std::vector<int> cur;
  cur.reserve(static_cast<std::size_t>(n));
  auto rec = [&](auto &self, int sum, int minus_left) -> void {
    int pos = static_cast<int>(cur.size());
    if (pos == n) {
      out.emplace_back(cur);
      return;
    }
    int remaining = n - pos;
    if (remaining > minus_left) {
      cur.push_back(1);
      self(self, sum + 1, minus_left);
      cur.pop_back();
    }
    if (minus_left > 0 && sum > 0) {
      cur.push_back(-1);
      self(self, sum - 1, minus_left - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, shape.lambda2);
  return out;
}

/// All 1-factors of length n, grouped by shape in dominance order.
inline std::vector<OneFactor> enumerate_one_factors(int n) {
  std::vector<OneFactor> out;
  for (const auto &s : shapes_of(n)) {
    auto part = enumerate_one_factors(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

enum class Dominance { Equal, Less, Greater, Incomparable };

inline std::string to_string(Dominance d) {
  switch (d) {
  case Dominance::Equal:
    return "equal";
  case Dominance::Less:
    return "less";
  case Dominance::Greater:
    return "greater";
  default:
    return "incomparable";
  }
}

/// Relation of a to b under componentwise comparison of weight sequences.
inline Dominance compare_dominance(const OneFactor &a, const OneFactor &b) {
  if (a.length() != b.length())
    throw std::invalid_argument("compare_dominance: length mismatch");
  bool le = true, ge = true;
  const auto &wa = a.weight_sequence();
  const auto &wb = b.weight_sequence();
  for (std::size_t k = 0; k < wa.size(); ++k) {
    if (wa[k] > wb[k])
      le = false;
    if (wa[k] < wb[k])
      ge = false;
  }
  if (le && ge)
    return Dominance::Equal;
  if (le)
    return Dominance::Less;
  if (ge)
    return Dominance::Greater;
  return Dominance::Incomparable;
}

/// beta <= alpha in the dominance order.
inline bool dominated_by(const OneFactor &beta, const OneFactor &alpha) {
  auto d = compare_dominance(beta, alpha);
  return d == Dominance::Less || d == Dominance::Equal;
}

/// True iff beta has opposite signs at the two ends of every pairing of alpha.
inline bool is_compatible(const OneFactor &alpha, const OneFactor &beta) {
  if (alpha.length() != beta.length())
    throw std::invalid_argument("is_compatible: length mismatch");
  for (auto [i, j] : alpha.pairings())
    if (beta.entry(i) == beta.entry(j))
      return false;
  return true;
}

/// gamma ⊆ beta: every pairing of gamma is also a pairing of beta.
inline bool is_subordinate(const OneFactor &gamma, const OneFactor &beta) {
  for (auto [i, j] : gamma.pairings())
    if (j > beta.length() || beta.partner(i) != j)
      return false;
  return true;
}

/// One alpha-diamond-beta sequence: gamma(0) = empty, ..., gamma(l) = beta,
/// plus the index j of the pairing variable t_j chosen at each -1 step.
struct DiamondSequence {
  std::vector<OneFactor> chain;
  std::vector<int> pairing_vars;
};

/**
 * All alpha-diamond-beta sequences. gamma(k) = gamma(k-1)^+ when
 * alpha_k = 1, and gamma(k-1)^{+(j)} for some j when alpha_k = -1, with every
 * gamma(k) subordinate to beta.
 */
inline std::vector<DiamondSequence> diamond_sequences(const OneFactor &alpha, const OneFactor &beta) {
  if (alpha.length() != beta.length() || alpha.weight() != beta.weight())
    throw std::invalid_argument("diamond_sequences: alpha and beta must have the same shape");
  std::vector<DiamondSequence> out;
  DiamondSequence cur;
  cur.chain.emplace_back();
  auto rec = [&](auto &self, int k) -> void {
    if (k > alpha.length()) {
      out.push_back(cur);
      return;
    }
    const OneFactor prev = cur.chain.back();
    if (alpha.entry(k) == 1) {
      OneFactor next = prev.plus();
      if (!is_subordinate(next, beta))
        return;
      cur.chain.push_back(std::move(next));
      self(self, k + 1);
      cur.chain.pop_back();
      return;
    }
    for (int j = 1; j <= prev.weight(); ++j) {
      OneFactor next = prev.plus_link(j);
      if (!is_subordinate(next, beta))
        continue;
      cur.chain.push_back(std::move(next));
      cur.pairing_vars.push_back(j);
      self(self, k + 1);
      cur.pairing_vars.pop_back();
      cur.chain.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Other index kinds
// ---------------------------------------------------------------------------

/// A walk on the Bratteli diagram; 'V' adds a box to row 1, 'D' to row 2.
class BratteliWalk {
public:
  enum class Edge { Vertical, Diagonal };

  BratteliWalk() = default;
  explicit BratteliWalk(std::vector<Edge> edges) : edges_(std::move(edges)) {
    int r1 = 0, r2 = 0;
    for (Edge e : edges_) {
      (e == Edge::Vertical ? r1 : r2)++;
      if (r2 > r1)
        throw std::invalid_argument("BratteliWalk: prefix leaves the Bratteli diagram");
    }
  }

  static BratteliWalk parse(const std::string &s) {
    std::vector<Edge> e;
    for (char c : s) {
      if (c == 'V' || c == 'v')
        e.push_back(Edge::Vertical);
      else if (c == 'D' || c == 'd')
        e.push_back(Edge::Diagonal);
      else
        throw std::invalid_argument(std::string("BratteliWalk::parse: bad edge '") + c + "'");
    }
    return BratteliWalk(std::move(e));
  }

  const std::vector<Edge> &edges() const { return edges_; }
  int length() const { return static_cast<int>(edges_.size()); }

  Shape end_shape() const {
    int r2 = static_cast<int>(std::count(edges_.begin(), edges_.end(), Edge::Diagonal));
    return Shape(length() - r2, r2);
  }

  std::string to_string() const {
    std::string s;
    for (Edge e : edges_)
      s += e == Edge::Vertical ? 'V' : 'D';
    return s;
  }

  friend bool operator==(const BratteliWalk &, const BratteliWalk &) = default;

private:
  std::vector<Edge> edges_;
};

/// Number of walks to `s`, counted by dynamic programming over the diagram.
inline std::uint64_t count_walks_brute_force(const Shape &s) {
  // ways[r2] at level l: number of walks ending at (l - r2, r2).
  std::vector<std::uint64_t> ways{1};
  for (int level = 1; level <= s.n(); ++level) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(level / 2 + 1), 0);
    for (int r2 = 0; r2 < static_cast<int>(ways.size()); ++r2) {
      int r1 = level - 1 - r2;
      next[static_cast<std::size_t>(r2)] += ways[static_cast<std::size_t>(r2)];
      if (r2 + 1 <= r1)
        next[static_cast<std::size_t>(r2 + 1)] += ways[static_cast<std::size_t>(r2)];
    }
    ways = std::move(next);
  }
  return ways.at(static_cast<std::size_t>(s.lambda2));
}

/**
 * A link diagram (half diagram) on n vertices: a non-crossing partial
 * matching whose unmatched vertices (defects) are never enclosed by a link.
 * Stored as an involution array, 1-based, with 0 marking a defect.
 */
class LinkDiagram {
public:
  LinkDiagram() = default;
  explicit LinkDiagram(std::vector<int> partner) : partner_(std::move(partner)) { validate(); }

  int size() const { return static_cast<int>(partner_.size()); }
  int partner(int i) const { return partner_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int> &partners() const { return partner_; }

  int num_links() const {
    return static_cast<int>(std::count_if(partner_.begin(), partner_.end(), [](int p) { return p != 0; })) / 2;
  }
  int num_defects() const { return size() - 2 * num_links(); }

  friend bool operator==(const LinkDiagram &, const LinkDiagram &) = default;
  friend auto operator<=>(const LinkDiagram &, const LinkDiagram &) = default;

private:
  std::vector<int> partner_;

  void validate() const {
    const int n = size();
    std::vector<int> open;
    for (int i = 1; i <= n; ++i) {
      int p = partner(i);
      if (p < 0 || p > n || p == i)
        throw std::invalid_argument("LinkDiagram: bad partner entry");
      if (p != 0 && partner(p) != i)
        throw std::invalid_argument("LinkDiagram: partner map is not an involution");
      if (p == 0) {
        if (!open.empty())
          throw std::invalid_argument("LinkDiagram: defect enclosed by a link");
      } else if (p > i) {
        open.push_back(i);
      } else {
        if (open.empty() || open.back() != p)
          throw std::invalid_argument("LinkDiagram: crossing links");
        open.pop_back();
      }
    }
  }
};

/// Two-row standard tableau; rows hold 1..n, increasing along rows and columns.
class StandardTableau {
public:
  StandardTableau() = default;
  StandardTableau(std::vector<int> top, std::vector<int> bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
    const std::size_t n = top_.size() + bottom_.size();
    if (bottom_.size() > top_.size())
      throw std::invalid_argument("StandardTableau: second row longer than first");
    std::vector<bool> seen(n + 1, false);
    for (const auto *row : {&top_, &bottom_})
      for (std::size_t k = 0; k < row->size(); ++k) {
        int x = (*row)[k];
        if (x < 1 || static_cast<std::size_t>(x) > n || seen[static_cast<std::size_t>(x)])
          throw std::invalid_argument("StandardTableau: entries must be 1..n without repeats");
        seen[static_cast<std::size_t>(x)] = true;
        if (k > 0 && (*row)[k - 1] >= x)
          throw std::invalid_argument("StandardTableau: rows must increase");
      }
    for (std::size_t k = 0; k < bottom_.size(); ++k)
      if (bottom_[k] <= top_[k])
        throw std::invalid_argument("StandardTableau: columns must increase");
  }

  const std::vector<int> &top() const { return top_; }
  const std::vector<int> &bottom() const { return bottom_; }
  Shape shape() const { return Shape(static_cast<int>(top_.size()), static_cast<int>(bottom_.size())); }

  friend bool operator==(const StandardTableau &, const StandardTableau &) = default;

private:
  std::vector<int> top_;
  std::vector<int> bottom_;
};

// ---- bijections, all routed through 1-factors ----

inline OneFactor to_one_factor(const BratteliWalk &w) {
  std::vector<int> e;
  for (auto edge : w.edges())
    e.push_back(edge == BratteliWalk::Edge::Vertical ? 1 : -1);
  return OneFactor(std::move(e));
}

inline BratteliWalk to_walk(const OneFactor &a) {
  std::vector<BratteliWalk::Edge> e;
  for (int x : a.entries())
    e.push_back(x == 1 ? BratteliWalk::Edge::Vertical : BratteliWalk::Edge::Diagonal);
  return BratteliWalk(std::move(e));
}

/// Left end of a link -> 1, right end -> -1, defect -> 1.
inline OneFactor to_one_factor(const LinkDiagram &d) {
  std::vector<int> e;
  for (int i = 1; i <= d.size(); ++i)
    e.push_back(d.partner(i) != 0 && d.partner(i) < i ? -1 : 1);
  return OneFactor(std::move(e));
}

inline LinkDiagram to_link_diagram(const OneFactor &a) {
  std::vector<int> p;
  for (int i = 1; i <= a.length(); ++i)
    p.push_back(a.partner(i));
  return LinkDiagram(std::move(p));
}

inline OneFactor to_one_factor(const StandardTableau &t) {
  const std::size_t n = t.top().size() + t.bottom().size();
  std::vector<int> e(n, 1);
  for (int x : t.bottom())
    e[static_cast<std::size_t>(x - 1)] = -1;
  return OneFactor(std::move(e));
}

inline StandardTableau to_tableau(const OneFactor &a) {
  std::vector<int> top, bottom;
  for (int i = 1; i <= a.length(); ++i)
    (a.entry(i) == 1 ? top : bottom).push_back(i);
  return StandardTableau(std::move(top), std::move(bottom));
}

enum class IndexKind { Factor, Walk, Link, Tableau };

using IndexObject = std::variant<OneFactor, BratteliWalk, LinkDiagram, StandardTableau>;

inline OneFactor as_one_factor(const IndexObject &x) {
  return std::visit(
      [](const auto &v) -> OneFactor {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, OneFactor>)
          return v;
        else
          return to_one_factor(v);
      },
      x);
}

/// Image of x under the bijection to the requested index kind.
inline IndexObject convert(const IndexObject &x, IndexKind target) {
  OneFactor a = as_one_factor(x);
  switch (target) {
  case IndexKind::Factor:
    return a;
  case IndexKind::Walk:
    return to_walk(a);
  case IndexKind::Link:
    return to_link_diagram(a);
  case IndexKind::Tableau:
    return to_tableau(a);
  }
  throw std::invalid_argument("convert: unknown target kind");
}

} // namespace tlortho
