#include "middle_order/involutions.hpp"

#include <stdexcept>

#include "middle_order/errors.hpp"
#include "middle_order/orders.hpp"

namespace middle_order {

namespace {

bool involutive(const std::vector<int>& x) {
  if (x.empty()) return true;
  const int n = static_cast<int>(x.size());
  const int k = x.back();
  if (k == 0) return involutive(std::vector<int>(x.begin(), x.end() - 1));
  // n pairs with n - k, which needs no smaller value after it and every larger value before it.
  if (x[n - k - 1] != 0) return false;
  std::vector<int> reduced(x.begin(), x.begin() + (n - k - 1));
  for (int j = n - k + 1; j <= n - 1; ++j) {
    if (x[j - 1] == 0) return false;
    reduced.push_back(x[j - 1] - 1);
  }
  return involutive(reduced);
}

void require_involution(const Permutation& w) {
  if (!is_involution(w)) throw std::invalid_argument(to_string(w) + " is not an involution");
}

bool coordinatewise_leq(const InversionSequence& x, const InversionSequence& y) {
  for (int i = 1; i <= x.size(); ++i) {
    if (x.coord(i) > y.coord(i)) return false;
  }
  return true;
}

}  // namespace

bool involution_seq_check(const InversionSequence& x) {
  return involutive(std::vector<int>(x.coords().begin(), x.coords().end()));
}

BigInt involution_count(int n, int limit) {
  if (n < 0) throw std::invalid_argument("involution_count: negative size");
  if (n > limit) throw LimitExceeded("involution_count", n, limit);
  BigInt before = 1;  // i(m-2)
  BigInt current = 1; // i(m-1)
  for (int m = 2; m <= n; ++m) {
    BigInt next = current + (m - 1) * before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

bool is_slow_climbing(const InversionSequence& x) {
  for (int i = 1; i < x.size(); ++i) {
    if (x.coord(i + 1) > x.coord(i) + 1) return false;
  }
  return true;
}

SlowClimbDecomposition slow_climb_decompose(const InversionSequence& x) {
  if (!involution_seq_check(x)) throw std::invalid_argument(to_string(x) + " is not an involution's sequence");
  SlowClimbDecomposition result;
  for (int i = 1; i <= x.size(); ++i) {
    if (x.coord(i) == 0) result.blocks.emplace_back();
    auto& block = result.blocks.back();
    if (x.coord(i) != static_cast<int>(block.size())) {
      throw std::invalid_argument(to_string(x) + " is not a concatenation of runs 0,1,...,h");
    }
    block.push_back(x.coord(i));
  }
  return result;
}

std::vector<Cluster> clusters(const InversionSequence& x) {
  const int n = x.size();
  // reach[a]: largest b such that [a, b] satisfies the cluster inequality.
  std::vector<int> reach(n + 1, 0);
  for (int a = 1; a <= n; ++a) {
    int b = a;
    while (b + 1 <= n && x.coord(b + 1) >= b + 1 - a) ++b;
    reach[a] = b;
  }
  std::vector<Cluster> result;
  for (int a = 1; a <= n; ++a) {
    if (a == 1 || reach[a - 1] < reach[a]) result.push_back({a, reach[a]});
  }
  return result;
}

std::vector<Permutation> all_involutions(int n, int limit) {
  std::vector<Permutation> result;
  for (const auto& x : all_inversion_sequences(n, limit)) {
    if (involution_seq_check(x)) result.push_back(from_inversion_sequence(x));
  }
  return result;
}

std::vector<Permutation> maximal_slow_climbing_below(const Permutation& w, int limit) {
  require_involution(w);
  if (w.size() > limit) throw LimitExceeded("maximal_slow_climbing_below", w.size(), limit);
  const auto top = inversion_sequence(w);

  std::vector<InversionSequence> candidates;
  std::vector<int> y(static_cast<std::size_t>(top.size()), 0);
  while (true) {
    InversionSequence seq(y);
    if (is_slow_climbing(seq) && involution_seq_check(seq)) candidates.push_back(std::move(seq));
    int i = top.size() - 1;
    while (i >= 0 && y[i] == top.coords()[i]) {
      y[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++y[i];
  }

  std::vector<Permutation> result;
  for (const auto& c : candidates) {
    bool maximal = true;
    for (const auto& d : candidates) {
      if (d != c && coordinatewise_leq(c, d)) {
        maximal = false;
        break;
      }
    }
    if (maximal) result.push_back(from_inversion_sequence(c));
  }
  return result;
}

int mobius_involution_ideal(const Permutation& w) {
  require_involution(w);
  const auto x = inversion_sequence(w);
  if (!is_slow_climbing(x)) return 0;
  return x.nonzero_count() % 2 == 0 ? 1 : -1;
}

FinitePoset involution_poset(int n, int limit) {
  const auto elements = all_involutions(n, limit);
  std::vector<InversionSequence> codes;
  std::vector<std::string> labels;
  for (const auto& w : elements) {
    codes.push_back(inversion_sequence(w));
    labels.push_back(to_string(w));
  }
  return FinitePoset::from_relation(std::move(labels),
                                    [&](Index a, Index b) { return coordinatewise_leq(codes[a], codes[b]); });
}

}  // namespace middle_order
