#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "middle_order/permutation.hpp"
#include "middle_order/poset.hpp"

namespace middle_order {

// Middle order: coordinate-wise comparison of inversion sequences. All binary operations
// throw SizeMismatch when the operands have different sizes.

bool middle_leq(const Permutation& v, const Permutation& w);
/// The inversion sequences differ by +1 in exactly one coordinate.
bool middle_covers(const Permutation& v, const Permutation& w);

Permutation meet(const Permutation& v, const Permutation& w);
Permutation join(const Permutation& v, const Permutation& w);

/// Number of inversions, the rank of w in every one of the three orders.
int rank(const Permutation& w);

/// Permutations 1 2 ... i j (i+1) ... (j-1) (j+1) ... n for 0 <= i <= n-2, i+2 <= j <= n.
std::vector<Permutation> join_irreducibles(int n);

/// Closed form: (-1)^rank on boolean intervals, 0 on other intervals and on non-relations.
int mobius_middle(const Permutation& v, const Permutation& w);

std::vector<Permutation> middle_upper_covers(const Permutation& v);
std::vector<Permutation> middle_lower_covers(const Permutation& w);

/// w is v with an ascent at two adjacent positions turned into a descent.
bool weak_covers(const Permutation& v, const Permutation& w);
std::vector<Permutation> weak_upper_covers(const Permutation& v);
/// Reachability over weak covers.
bool weak_leq(const Permutation& v, const Permutation& w);

/// w is v times a transposition and has exactly one more inversion.
bool bruhat_covers(const Permutation& v, const Permutation& w);
std::vector<Permutation> bruhat_upper_covers(const Permutation& v);
/// Reachability over Bruhat covers.
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// Cover-defining mesh patterns on the rise 12: the shaded column between the two points,
/// restricted to rows below the larger point (middle), every row (weak) or the rows between
/// the two points (Bruhat).
MeshPattern middle_cover_mesh();
MeshPattern weak_cover_mesh();
MeshPattern bruhat_cover_mesh();

/// When v and w differ exactly by swapping the values j < i of an occurrence (j, i) of the
/// middle cover mesh in v, returns (j, i); otherwise nothing.
std::optional<std::pair<int, int>> cover_mesh_witness(const Permutation& v, const Permutation& w);

enum class Order { middle, weak, bruhat };

Order parse_order(std::string_view name);
std::string_view order_name(Order order);

/// S_n under the given order, built from its cover relation. Elements are labeled in one-line
/// notation and listed in lexicographic order of inversion sequences.
FinitePoset order_poset(Order order, int n, int limit = kDefaultExhaustiveLimit);

}  // namespace middle_order
