#pragma once

#include <compare>
#include <vector>

#include "middle_order/enumeration.hpp"
#include "middle_order/permutation.hpp"
#include "middle_order/poset.hpp"

namespace middle_order {

/// A slow-climbing involutive sequence cut into runs (0, 1, ..., h).
struct SlowClimbDecomposition {
  std::vector<std::vector<int>> blocks;

  int block_count() const noexcept { return static_cast<int>(blocks.size()); }
};

/// A maximal index interval [first, last] (1-based, inclusive) with y_{first+j} >= j throughout.
struct Cluster {
  int first = 1;
  int last = 1;

  friend bool operator==(const Cluster&, const Cluster&) = default;
  friend auto operator<=>(const Cluster&, const Cluster&) = default;
};

/// Decides whether x encodes an involution by peeling off the largest value:
/// either x_n = 0 and the prefix is involutive, or x_n = k > 0, x_{n-k} = 0 and the
/// sequence left after deleting positions n-k and n (and lowering the entries between
/// them by one) is involutive.
bool involution_seq_check(const InversionSequence& x);

/// i(n) = i(n-1) + (n-1) i(n-2), i(0) = i(1) = 1.
BigInt involution_count(int n, int limit = kDefaultCountingLimit);

/// Every ascent x_i < x_{i+1} is small, i.e. x_{i+1} = x_i + 1.
bool is_slow_climbing(const InversionSequence& x);

/// Cuts x before each zero and checks each piece is (0, 1, ..., h). Throws std::invalid_argument
/// if x is not involutive or does not have that block form.
SlowClimbDecomposition slow_climb_decompose(const InversionSequence& x);

/// All clusters, ordered by first index.
std::vector<Cluster> clusters(const InversionSequence& x);

/// Involutions of size n, listed in lexicographic order of inversion sequences.
std::vector<Permutation> all_involutions(int n, int limit = kDefaultExhaustiveLimit);

/// Maximal elements among slow-climbing involutions v <= w. Throws std::invalid_argument if w
/// is not an involution.
std::vector<Permutation> maximal_slow_climbing_below(const Permutation& w, int limit = kDefaultExhaustiveLimit);

/// mu(e_n, w) in the subposet of involutions: (-1)^(nonzero entries of I(w)) if w is
/// slow-climbing, else 0. Throws std::invalid_argument if w is not an involution.
int mobius_involution_ideal(const Permutation& w);

/// Involutions of size n with the order induced from the middle order.
FinitePoset involution_poset(int n, int limit = kDefaultExhaustiveLimit);

}  // namespace middle_order
