#pragma once

#include "middle_order/permutation.hpp"
#include "middle_order/poset.hpp"

namespace middle_order {

// Heyting structure of the middle order. The top element is the long element n n-1 ... 1.

/// v ~> w: coordinate i is i-1 where x_i <= y_i and y_i elsewhere. Throws SizeMismatch.
Permutation relative_pseudocomplement(const Permutation& v, const Permutation& w);

/// v ~> e_n: right-to-left minima of v in decreasing order, then the other values increasing.
Permutation pseudocomplement(const Permutation& v);

/// v == ~~v.
bool is_regular(const Permutation& v);

/// Every coordinate of I(v) is 0 or i-1.
bool is_regular_by_coordinates(const Permutation& v);

/// v avoids both 132 and 231.
bool is_regular_by_patterns(const Permutation& v);

/// Regular elements of S_n with the induced middle order, in lexicographic order of inversion sequences.
FinitePoset regular_subposet(int n, int limit = kDefaultExhaustiveLimit);

}  // namespace middle_order
