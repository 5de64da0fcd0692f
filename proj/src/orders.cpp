#include "middle_order/orders.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "middle_order/errors.hpp"

namespace middle_order {

namespace {

void require_same_size(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) {
    throw SizeMismatch(static_cast<std::size_t>(v.size()), static_cast<std::size_t>(w.size()));
  }
}

Permutation swap_positions(const Permutation& v, int a, int b) {
  std::vector<int> word(v.word().begin(), v.word().end());
  std::swap(word[a - 1], word[b - 1]);
  return Permutation(std::move(word));
}

// Positions where v and w differ.
std::vector<int> differing_positions(const Permutation& v, const Permutation& w) {
  std::vector<int> diff;
  for (int pos = 1; pos <= v.size(); ++pos) {
    if (v(pos) != w(pos)) diff.push_back(pos);
  }
  return diff;
}

template <typename UpperCovers>
bool reachable(const Permutation& v, const Permutation& w, UpperCovers&& upper_covers) {
  require_same_size(v, w);
  const int target_rank = rank(w);
  std::set<Permutation> seen{v};
  std::deque<Permutation> queue{v};
  while (!queue.empty()) {
    const Permutation u = queue.front();
    queue.pop_front();
    if (u == w) return true;
    if (rank(u) >= target_rank) continue;
    for (auto& next : upper_covers(u)) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

}  // namespace

bool middle_leq(const Permutation& v, const Permutation& w) {
  require_same_size(v, w);
  const auto x = inversion_sequence(v);
  const auto y = inversion_sequence(w);
  for (int i = 1; i <= x.size(); ++i) {
    if (x.coord(i) > y.coord(i)) return false;
  }
  return true;
}

bool middle_covers(const Permutation& v, const Permutation& w) {
  require_same_size(v, w);
  const auto x = inversion_sequence(v);
  const auto y = inversion_sequence(w);
  int bumped = 0;
  for (int i = 1; i <= x.size(); ++i) {
    const int d = y.coord(i) - x.coord(i);
    if (d == 1) {
      ++bumped;
    } else if (d != 0) {
      return false;
    }
  }
  return bumped == 1;
}

Permutation meet(const Permutation& v, const Permutation& w) {
  require_same_size(v, w);
  const auto x = inversion_sequence(v);
  const auto y = inversion_sequence(w);
  std::vector<int> z(x.size());
  for (int i = 1; i <= x.size(); ++i) z[i - 1] = std::min(x.coord(i), y.coord(i));
  return from_inversion_sequence(InversionSequence(std::move(z)));
}

Permutation join(const Permutation& v, const Permutation& w) {
  require_same_size(v, w);
  const auto x = inversion_sequence(v);
  const auto y = inversion_sequence(w);
  std::vector<int> z(x.size());
  for (int i = 1; i <= x.size(); ++i) z[i - 1] = std::max(x.coord(i), y.coord(i));
  return from_inversion_sequence(InversionSequence(std::move(z)));
}

int rank(const Permutation& w) { return inversion_sequence(w).total(); }

std::vector<Permutation> join_irreducibles(int n) {
  if (n < 1) throw std::invalid_argument("size must be at least 1");
  std::vector<Permutation> result;
  for (int i = 0; i <= n - 2; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      std::vector<int> word;
      for (int v = 1; v <= i; ++v) word.push_back(v);
      word.push_back(j);
      for (int v = i + 1; v <= n; ++v) {
        if (v != j) word.push_back(v);
      }
      result.emplace_back(std::move(word));
    }
  }
  return result;
}

int mobius_middle(const Permutation& v, const Permutation& w) {
  require_same_size(v, w);
  const auto x = inversion_sequence(v);
  const auto y = inversion_sequence(w);
  int ones = 0;
  for (int i = 1; i <= x.size(); ++i) {
    const int d = y.coord(i) - x.coord(i);
    if (d < 0 || d > 1) return 0;
    ones += d;
  }
  return ones % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> middle_upper_covers(const Permutation& v) {
  const auto x = inversion_sequence(v);
  std::vector<Permutation> result;
  for (int i = 1; i <= x.size(); ++i) {
    if (x.coord(i) < i - 1) {
      std::vector<int> bumped(x.coords().begin(), x.coords().end());
      ++bumped[i - 1];
      result.push_back(from_inversion_sequence(InversionSequence(std::move(bumped))));
    }
  }
  return result;
}

std::vector<Permutation> middle_lower_covers(const Permutation& w) {
  const auto y = inversion_sequence(w);
  std::vector<Permutation> result;
  for (int i = 1; i <= y.size(); ++i) {
    if (y.coord(i) > 0) {
      std::vector<int> lowered(y.coords().begin(), y.coords().end());
      --lowered[i - 1];
      result.push_back(from_inversion_sequence(InversionSequence(std::move(lowered))));
    }
  }
  return result;
}

bool weak_covers(const Permutation& v, const Permutation& w) {
  require_same_size(v, w);
  const auto diff = differing_positions(v, w);
  if (diff.size() != 2 || diff[1] != diff[0] + 1) return false;
  const int a = diff[0];
  const int b = diff[1];
  return v(a) < v(b) && w(a) == v(b) && w(b) == v(a);
}

std::vector<Permutation> weak_upper_covers(const Permutation& v) {
  std::vector<Permutation> result;
  for (int a = 1; a < v.size(); ++a) {
    if (v(a) < v(a + 1)) result.push_back(swap_positions(v, a, a + 1));
  }
  return result;
}

bool weak_leq(const Permutation& v, const Permutation& w) { return reachable(v, w, weak_upper_covers); }

bool bruhat_covers(const Permutation& v, const Permutation& w) {
  require_same_size(v, w);
  const auto diff = differing_positions(v, w);
  if (diff.size() != 2) return false;
  const int a = diff[0];
  const int b = diff[1];
  if (w(a) != v(b) || w(b) != v(a)) return false;
  return inversion_count(w) == inversion_count(v) + 1;
}

std::vector<Permutation> bruhat_upper_covers(const Permutation& v) {
  std::vector<Permutation> result;
  const int base = inversion_count(v);
  for (int a = 1; a <= v.size(); ++a) {
    for (int b = a + 1; b <= v.size(); ++b) {
      if (v(a) > v(b)) continue;
      auto w = swap_positions(v, a, b);
      if (inversion_count(w) == base + 1) result.push_back(std::move(w));
    }
  }
  return result;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) { return reachable(v, w, bruhat_upper_covers); }

MeshPattern middle_cover_mesh() { return MeshPattern(Permutation({1, 2}), {{1, 0}, {1, 1}}); }

MeshPattern weak_cover_mesh() { return MeshPattern(Permutation({1, 2}), {{1, 0}, {1, 1}, {1, 2}}); }

MeshPattern bruhat_cover_mesh() { return MeshPattern(Permutation({1, 2}), {{1, 1}}); }

std::optional<std::pair<int, int>> cover_mesh_witness(const Permutation& v, const Permutation& w) {
  require_same_size(v, w);
  const auto diff = differing_positions(v, w);
  if (diff.size() != 2) return std::nullopt;
  const int a = diff[0];
  const int b = diff[1];
  if (w(a) != v(b) || w(b) != v(a) || v(a) > v(b)) return std::nullopt;
  for (const auto& occurrence : mesh_occurrences(v, middle_cover_mesh())) {
    if (occurrence[0] == a && occurrence[1] == b) return std::make_pair(v(a), v(b));
  }
  return std::nullopt;
}

Order parse_order(std::string_view name) {
  if (name == "middle") return Order::middle;
  if (name == "weak") return Order::weak;
  if (name == "bruhat") return Order::bruhat;
  throw std::invalid_argument("unknown order '" + std::string(name) + "'");
}

std::string_view order_name(Order order) {
  switch (order) {
    case Order::middle: return "middle";
    case Order::weak: return "weak";
    case Order::bruhat: return "bruhat";
  }
  return "?";
}

FinitePoset order_poset(Order order, int n, int limit) {
  std::vector<Permutation> elements;
  for (const auto& x : all_inversion_sequences(n, limit)) elements.push_back(from_inversion_sequence(x));
  std::map<Permutation, Index> index;
  std::vector<std::string> labels;
  for (const auto& w : elements) {
    index.emplace(w, labels.size());
    labels.push_back(to_string(w));
  }

  std::vector<FinitePoset::Cover> covers;
  for (const auto& v : elements) {
    std::vector<Permutation> above;
    switch (order) {
      case Order::middle: above = middle_upper_covers(v); break;
      case Order::weak: above = weak_upper_covers(v); break;
      case Order::bruhat: above = bruhat_upper_covers(v); break;
    }
    for (const auto& w : above) covers.emplace_back(index.at(v), index.at(w));
  }
  return FinitePoset::from_covers(std::move(labels), covers);
}

}  // namespace middle_order
