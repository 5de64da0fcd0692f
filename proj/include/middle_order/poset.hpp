#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace middle_order {

/// A finite poset with labeled elements, stored as a dense reachability matrix.
///
/// This is the brute-force reference engine: it knows nothing about permutations, and
/// everything it answers is derived from the cover graph or relation it was built from.
/// Instances are immutable after construction.
class FinitePoset {
public:
  using Index = std::size_t;
  using Cover = std::pair<Index, Index>;  // (lower, upper)

  /// Closes `covers` reflexively and transitively. Input pairs need not be a transitive
  /// reduction; covers() always returns the reduction. Throws std::invalid_argument on a
  /// dangling index, a duplicate label, or a cycle.
  static FinitePoset from_covers(std::vector<std::string> labels, std::span<const Cover> covers);

  /// Builds from an explicit order relation; `leq(i, j)` must be a partial order.
  /// Throws std::invalid_argument if it is not reflexive, antisymmetric and transitive.
  template <typename Leq>
  static FinitePoset from_relation(std::vector<std::string> labels, Leq&& leq) {
    std::vector<boost::dynamic_bitset<>> up(labels.size(), boost::dynamic_bitset<>(labels.size()));
    for (Index i = 0; i < labels.size(); ++i) {
      for (Index j = 0; j < labels.size(); ++j) {
        if (leq(i, j)) up[i].set(j);
      }
    }
    return FinitePoset(std::move(labels), std::move(up));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Index i) const { return labels_.at(i); }
  std::optional<Index> index_of(std::string_view label) const;

  bool leq(Index a, Index b) const { return up_[a].test(b); }
  bool less(Index a, Index b) const { return a != b && up_[a].test(b); }
  bool comparable(Index a, Index b) const { return leq(a, b) || leq(b, a); }

  /// Elements >= i (bit j set iff i <= j).
  const boost::dynamic_bitset<>& up_set(Index i) const { return up_[i]; }
  /// Elements <= i.
  const boost::dynamic_bitset<>& down_set(Index i) const { return down_[i]; }

  /// Transitive reduction, sorted lexicographically.
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  const std::vector<Index>& upper_covers(Index i) const { return upper_covers_[i]; }
  const std::vector<Index>& lower_covers(Index i) const { return lower_covers_[i]; }

  /// A linear extension: every element appears after all elements below it.
  const std::vector<Index>& linear_extension() const noexcept { return linear_extension_; }

  std::vector<Index> minimal_elements() const;
  std::vector<Index> maximal_elements() const;

  /// Same element set and same order relation (labels compared position by position).
  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

private:
  FinitePoset() = default;
  FinitePoset(std::vector<std::string> labels, std::vector<boost::dynamic_bitset<>> up);

  void finish();

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
  std::vector<boost::dynamic_bitset<>> up_;
  std::vector<boost::dynamic_bitset<>> down_;
  std::vector<Cover> covers_;
  std::vector<std::vector<Index>> upper_covers_;
  std::vector<std::vector<Index>> lower_covers_;
  std::vector<Index> linear_extension_;
};

using Index = FinitePoset::Index;

/// mu(s, u) by the defining recursion over the interval [s, u].
int mobius(const FinitePoset& p, Index s, Index u);

/// mu(s, t) for every t in one pass; zero where s is not below t.
std::vector<int> mobius_from(const FinitePoset& p, Index s);

/// All (lower, upper) pairs with lower <= upper.
std::vector<std::pair<Index, Index>> enumerate_intervals(const FinitePoset& p);

/// Elements of [s, u] in increasing index order.
std::vector<Index> interval_elements(const FinitePoset& p, Index s, Index u);

struct GradedResult {
  bool graded = false;
  /// Length of the longest cover chain from a minimal element; a rank function when graded.
  std::vector<int> rank;
  /// Two maximal chains (bottom to top) of different lengths when not graded.
  std::optional<std::pair<std::vector<Index>, std::vector<Index>>> witness;
};

/// Graded means every maximal chain has the same length.
GradedResult is_graded(const FinitePoset& p);

/// Join and meet tables (row-major size() x size()); nullopt entries where no least upper /
/// greatest lower bound exists.
struct LatticeTables {
  std::size_t n = 0;
  std::vector<std::optional<Index>> join;
  std::vector<std::optional<Index>> meet;

  std::optional<Index> join_of(Index a, Index b) const { return join[a * n + b]; }
  std::optional<Index> meet_of(Index a, Index b) const { return meet[a * n + b]; }
};

LatticeTables lattice_tables(const FinitePoset& p);

struct LatticeResult {
  bool lattice = false;
  /// A pair with no join or no meet when not a lattice.
  std::optional<std::pair<Index, Index>> witness;
};

LatticeResult is_lattice(const FinitePoset& p);

/// Checks both distributive identities over all triples. False for non-lattices.
bool is_distributive_by_triples(const FinitePoset& p);

/// Elements {bottom, a, c, b, top} of a pentagon sublattice with a < c and b incomparable to both.
std::optional<std::array<Index, 5>> find_pentagon(const FinitePoset& p);

/// Elements {bottom, a, b, c, top} of a diamond sublattice with a, b, c pairwise incomparable.
std::optional<std::array<Index, 5>> find_diamond(const FinitePoset& p);

/// A lattice is distributive iff it has neither a pentagon nor a diamond sublattice.
bool is_distributive_by_sublattices(const FinitePoset& p);

/// Runs both distributivity checkers and throws std::logic_error if they disagree.
bool is_distributive(const FinitePoset& p);

/// Restriction of the order to `subset` (kept in the given order); covers are recomputed.
FinitePoset induced_subposet(const FinitePoset& p, std::span<const Index> subset);

inline constexpr std::size_t kDefaultIsomorphismLimit = 64;

/// Exact unlabeled isomorphism test by backtracking. Throws std::length_error above `limit` elements.
bool are_isomorphic(const FinitePoset& p, const FinitePoset& q, std::size_t limit = kDefaultIsomorphismLimit);

FinitePoset chain(std::size_t length);
FinitePoset antichain(std::size_t size);
FinitePoset boolean_lattice(int rank);
/// Product of chains with the given numbers of elements, ordered coordinate-wise.
FinitePoset chain_product(std::span<const int> sizes);
/// N5: bottom < a < c < top, bottom < b < top.
FinitePoset pentagon();
/// M3: bottom < a, b, c < top.
FinitePoset diamond();

/// One "a < b" line per cover; elements without any cover get a bare label line.
std::string to_edge_list(const FinitePoset& p);
/// Inverse of to_edge_list. Elements are numbered in order of first appearance.
FinitePoset from_edge_list(std::string_view text);

/// DOT digraph with one node per element (in index order) and one edge per cover, lower -> upper.
std::string to_dot(const FinitePoset& p, std::string_view graph_name = "poset");
/// Reads the subset of DOT emitted by to_dot: quoted node statements and "a" -> "b" edges.
FinitePoset from_dot(std::string_view text);

}  // namespace middle_order
