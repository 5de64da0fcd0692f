#include "middle_order/enumeration.hpp"

#include <stdexcept>

#include "middle_order/errors.hpp"
#include "middle_order/orders.hpp"

namespace middle_order {

namespace {

void require_counting(const char* what, int n, int limit) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": size must be at least 1");
  if (n > limit) throw LimitExceeded(what, n, limit);
}

int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace

BigInt factorial(int n) {
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt interval_count_total(int n, int limit) {
  require_counting("interval_count_total", n, limit);
  BigInt numerator = factorial(n) * factorial(n + 1);
  return numerator >> n;
}

BigInt interval_count_by_chains(int n, int limit) {
  require_counting("interval_count_by_chains", n, limit);
  BigInt result = 1;
  for (int i = 0; i < n; ++i) result *= binomial(i + 2, 2);
  return result;
}

CountRow intervals_by_rank(int n, int limit) {
  require_counting("intervals_by_rank", n, limit);
  CountRow prev{1};
  for (int m = 2; m <= n; ++m) {
    CountRow next(static_cast<std::size_t>(choose2(m) + 1), 0);
    for (int k = 0; k < static_cast<int>(next.size()); ++k) {
      for (int h = 0; h <= m - 1 && h <= k; ++h) {
        if (k - h < static_cast<int>(prev.size())) next[k] += (m - h) * prev[k - h];
      }
    }
    prev = std::move(next);
  }
  return prev;
}

CoverCount covering_relation_count(int n, int limit) {
  require_counting("covering_relation_count", n, limit);
  CoverCount result;
  const auto row = intervals_by_rank(n, limit);
  result.from_recursion = row.size() > 1 ? row[1] : BigInt(0);

  Rational harmonic = 0;
  for (int i = 1; i <= n; ++i) harmonic += Rational(1, i);
  const Rational exact = Rational(factorial(n)) * (Rational(n) - harmonic);
  if (denominator(exact) != 1) throw std::logic_error("n!(n - H_n) is not an integer");
  result.from_harmonic = numerator(exact);
  return result;
}

BigInt reflection_length_sum(int n, int limit) {
  BigInt total = 0;
  for (const auto& w : all_permutations(n, limit)) total += n - cycle_count(w);
  return total;
}

CountRow polynomial_row(int n, int limit) {
  require_counting("polynomial_row", n, limit);
  CountRow prev{1};
  for (int m = 2; m <= n; ++m) {
    CountRow next(static_cast<std::size_t>(choose2(m) + 1), 0);
    for (int k = 0; k < static_cast<int>(next.size()); ++k) {
      // The factor for m is 1 + 2x + ... + m x^{m-1}.
      for (int h = 0; h <= k && h <= m - 1; ++h) {
        if (k - h < static_cast<int>(prev.size())) next[k] += (h + 1) * prev[k - h];
      }
    }
    prev = std::move(next);
  }
  return prev;
}

BooleanInterval is_boolean_interval(const Permutation& v, const Permutation& w) {
  if (!middle_leq(v, w)) throw std::invalid_argument("not an interval: lower end is not below upper end");
  const auto x = inversion_sequence(v);
  const auto y = inversion_sequence(w);
  BooleanInterval result{true, y.total() - x.total()};
  for (int i = 1; i <= x.size(); ++i) {
    if (y.coord(i) - x.coord(i) > 1) result.boolean = false;
  }
  return result;
}

BigInt boolean_interval_total(int n, int limit) {
  require_counting("boolean_interval_total", n, limit);
  BigInt result = 1;
  for (int odd = 3; odd <= 2 * n - 1; odd += 2) result *= odd;
  return result;
}

std::vector<CountRow> stirling_first_rows(int max_n) {
  if (max_n < 0) throw std::invalid_argument("stirling_first_rows: negative size");
  std::vector<CountRow> rows{CountRow{1}};
  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = rows.back();
    CountRow next(static_cast<std::size_t>(n + 1), 0);
    for (int j = 1; j <= n; ++j) {
      next[j] = prev[j - 1];
      if (j < n) next[j] += (n - 1) * prev[j];
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

BigInt stirling_first_unsigned(int n, int j) {
  if (n < 0 || j < 0 || j > n) return 0;
  return stirling_first_rows(n)[n][j];
}

CountRow boolean_by_rank(int n, int limit) {
  require_counting("boolean_by_rank", n, limit);
  const auto stirling = stirling_first_rows(n)[n];
  CountRow row(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    for (int i = k; i <= n; ++i) row[k] += binomial(i, k) * stirling[n - i];
  }
  return row;
}

CountRow boolean_by_rank_recursive(int n, int limit) {
  require_counting("boolean_by_rank_recursive", n, limit);
  CountRow prev{1};
  for (int m = 2; m <= n; ++m) {
    CountRow next(static_cast<std::size_t>(m), 0);
    for (int k = 0; k < m; ++k) {
      if (k < m - 1) next[k] += m * prev[k];
      if (k >= 1) next[k] += (m - 1) * prev[k - 1];
    }
    prev = std::move(next);
  }
  return prev;
}

int euler_characteristic(const Permutation& w) {
  return w.size() - static_cast<int>(right_to_left_minima(w).size());
}

CountRow euler_distribution(int n, int limit) {
  CountRow histogram(static_cast<std::size_t>(n), 0);
  for (const auto& w : all_permutations(n, limit)) ++histogram[euler_characteristic(w)];
  return histogram;
}

}  // namespace middle_order
