#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace middle_order {

/// Default ceiling on n for operations that walk all of S_n.
inline constexpr int kDefaultExhaustiveLimit = 8;

/// A permutation of {1..n} in one-line notation. Positions and values are 1-based.
class Permutation {
public:
  /// Throws std::invalid_argument unless `word` holds each of 1..n exactly once (n >= 1).
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// n, n-1, ..., 1
  static Permutation long_element(int n);

  int size() const noexcept { return static_cast<int>(word_.size()); }

  /// Value at 1-based `position`, i.e. w(position).
  int operator()(int position) const { return word_[position - 1]; }

  /// 1-based position holding `value`, i.e. w^{-1}(value).
  int position_of(int value) const;

  std::span<const int> word() const noexcept { return word_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> word_;
};

/// Lehmer-style code indexed by value: coordinate i counts the smaller values to the right of i.
class InversionSequence {
public:
  /// Throws std::invalid_argument unless 0 <= x_i <= i-1 for every 1-based i (and size >= 1).
  explicit InversionSequence(std::vector<int> coords);

  static InversionSequence zero(int n);
  /// (0, 1, ..., n-1), the code of the long element.
  static InversionSequence maximum(int n);

  int size() const noexcept { return static_cast<int>(coords_.size()); }

  /// 1-based coordinate x_i.
  int coord(int i) const { return coords_[i - 1]; }

  std::span<const int> coords() const noexcept { return coords_; }

  /// Sum of coordinates (number of inversions).
  int total() const noexcept;

  /// Number of nonzero coordinates.
  int nonzero_count() const noexcept;

  friend bool operator==(const InversionSequence&, const InversionSequence&) = default;
  friend auto operator<=>(const InversionSequence&, const InversionSequence&) = default;

private:
  std::vector<int> coords_;
};

/// A classical pattern plus shaded cells. Cell (a, b) is the unit square [a,a+1] x [b,b+1]
/// of the (k+1) x (k+1) grid drawn around the pattern's points (i, p(i)).
class MeshPattern {
public:
  using Cell = std::pair<int, int>;

  MeshPattern(Permutation pattern, std::set<Cell> mesh);

  const Permutation& pattern() const noexcept { return pattern_; }
  const std::set<Cell>& mesh() const noexcept { return mesh_; }

private:
  Permutation pattern_;
  std::set<Cell> mesh_;
};

InversionSequence inversion_sequence(const Permutation& w);
Permutation from_inversion_sequence(const InversionSequence& x);

/// Exhaustive check that the encoding is a bijection from S_n onto the box [0,0] x ... x [0,n-1].
bool round_trip_all(int n, int limit = kDefaultExhaustiveLimit);

/// All of S_n in lexicographic order of one-line words.
std::vector<Permutation> all_permutations(int n, int limit = kDefaultExhaustiveLimit);

/// All sequences of the box [0,0] x ... x [0,n-1] in lexicographic order.
std::vector<InversionSequence> all_inversion_sequences(int n, int limit = kDefaultExhaustiveLimit);

/// Positions (1-based, increasing) of every occurrence of the classical pattern `p` in `w`.
std::vector<std::vector<int>> classical_occurrences(const Permutation& w, const Permutation& p);
bool avoids_classical(const Permutation& w, const Permutation& p);

/// Occurrences of `m` in `w`: classical occurrences whose stretched shaded regions hold no point of w.
std::vector<std::vector<int>> mesh_occurrences(const Permutation& w, const MeshPattern& m);
int mesh_contains(const Permutation& w, const MeshPattern& m);

/// Writes each cycle with its minimum last, orders cycles by increasing minimum, and drops the parentheses.
Permutation foata_image(const Permutation& w);

/// Values with no smaller value to their right, in increasing order.
std::vector<int> right_to_left_minima(const Permutation& w);

bool is_involution(const Permutation& w);

/// Number of cycles, fixed points included.
int cycle_count(const Permutation& w);

/// Number of inversions.
int inversion_count(const Permutation& w);

/// Digit string for n <= 9 ("415623"), comma-separated otherwise ("10,3,1,...").
std::string to_string(const Permutation& w);

/// Comma-separated coordinates, e.g. "0,0,0,3,2,2".
std::string to_string(const InversionSequence& x);

/// Accepts either serialization of `to_string`. Throws ParseError.
Permutation parse_permutation(std::string_view text);

/// Accepts comma-separated coordinates, or a digit string when every coordinate is a single digit.
InversionSequence parse_inversion_sequence(std::string_view text);

}  // namespace middle_order
