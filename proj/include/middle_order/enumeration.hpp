#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "middle_order/permutation.hpp"

namespace middle_order {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using CountRow = std::vector<BigInt>;

/// Ceiling on n for closed forms and recursions (no enumeration involved).
inline constexpr int kDefaultCountingLimit = 64;

/// Rows indexed by n (starting at first_n), columns by k starting at 0.
struct CountTable {
  std::string kind;
  int first_n = 1;
  std::vector<CountRow> rows;

  int last_n() const { return first_n + static_cast<int>(rows.size()) - 1; }
  const CountRow& row(int n) const { return rows.at(static_cast<std::size_t>(n - first_n)); }
};

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Number of intervals of the middle order: n!(n+1)!/2^n.
BigInt interval_count_total(int n, int limit = kDefaultCountingLimit);

/// The same count as a product over chains: prod_{i=0}^{n-1} C(i+2, 2).
BigInt interval_count_by_chains(int n, int limit = kDefaultCountingLimit);

/// f(n, 0..C(n,2)): intervals by rank, by the recursion f(n,k) = sum_h (n-h) f(n-1,k-h).
CountRow intervals_by_rank(int n, int limit = kDefaultCountingLimit);

/// Number of cover relations computed two ways.
struct CoverCount {
  BigInt from_recursion;  // f(n, 1)
  BigInt from_harmonic;   // n! (n - H_n), exact
};

CoverCount covering_relation_count(int n, int limit = kDefaultCountingLimit);

/// Sum over S_n of the reflection length n - cycle_count(w), by enumeration.
BigInt reflection_length_sum(int n, int limit = kDefaultExhaustiveLimit);

/// Coefficients p(n, 0..C(n,2)) of prod_{i=1}^n (1 + 2x + ... + i x^{i-1}).
CountRow polynomial_row(int n, int limit = kDefaultCountingLimit);

struct BooleanInterval {
  bool boolean = false;
  /// rank(w) - rank(v); for a boolean interval, the number of coordinates that differ.
  int rank = 0;
};

/// Throws std::invalid_argument unless v <= w in the middle order.
BooleanInterval is_boolean_interval(const Permutation& v, const Permutation& w);

/// (2n-1)!! = 1 * 3 * ... * (2n-1).
BigInt boolean_interval_total(int n, int limit = kDefaultCountingLimit);

/// c(n, j): permutations of size n with j cycles. Zero outside 0 <= j <= n.
BigInt stirling_first_unsigned(int n, int j);

/// Rows 0..n of c(n, j) for n = 0..max_n.
std::vector<CountRow> stirling_first_rows(int max_n);

/// b(n, 0..n-1) by b(n,k) = sum_i C(i,k) c(n, n-i).
CountRow boolean_by_rank(int n, int limit = kDefaultCountingLimit);

/// b(n, 0..n-1) by b(n,k) = n b(n-1,k) + (n-1) b(n-1,k-1).
CountRow boolean_by_rank_recursive(int n, int limit = kDefaultCountingLimit);

/// Number of right-to-left non-minima.
int euler_characteristic(const Permutation& w);

/// Histogram of euler_characteristic over S_n, for k = 0..n-1.
CountRow euler_distribution(int n, int limit = kDefaultExhaustiveLimit);

}  // namespace middle_order
