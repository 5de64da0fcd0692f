#include "middle_order/heyting.hpp"

#include <algorithm>

#include "middle_order/errors.hpp"
#include "middle_order/orders.hpp"

namespace middle_order {

Permutation relative_pseudocomplement(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) {
    throw SizeMismatch(static_cast<std::size_t>(v.size()), static_cast<std::size_t>(w.size()));
  }
  const auto x = inversion_sequence(v);
  const auto y = inversion_sequence(w);
  std::vector<int> z(static_cast<std::size_t>(x.size()));
  for (int i = 1; i <= x.size(); ++i) z[i - 1] = x.coord(i) <= y.coord(i) ? i - 1 : y.coord(i);
  return from_inversion_sequence(InversionSequence(std::move(z)));
}

Permutation pseudocomplement(const Permutation& v) {
  const auto minima = right_to_left_minima(v);
  std::vector<int> word(minima.rbegin(), minima.rend());
  for (int value = 1; value <= v.size(); ++value) {
    if (!std::binary_search(minima.begin(), minima.end(), value)) word.push_back(value);
  }
  return Permutation(std::move(word));
}

bool is_regular(const Permutation& v) { return pseudocomplement(pseudocomplement(v)) == v; }

bool is_regular_by_coordinates(const Permutation& v) {
  const auto x = inversion_sequence(v);
  for (int i = 1; i <= x.size(); ++i) {
    if (x.coord(i) != 0 && x.coord(i) != i - 1) return false;
  }
  return true;
}

bool is_regular_by_patterns(const Permutation& v) {
  if (v.size() < 3) return true;
  return avoids_classical(v, Permutation({1, 3, 2})) && avoids_classical(v, Permutation({2, 3, 1}));
}

FinitePoset regular_subposet(int n, int limit) {
  std::vector<InversionSequence> codes;
  std::vector<std::string> labels;
  for (const auto& x : all_inversion_sequences(n, limit)) {
    const auto w = from_inversion_sequence(x);
    if (!is_regular(w)) continue;
    codes.push_back(x);
    labels.push_back(to_string(w));
  }
  return FinitePoset::from_relation(std::move(labels), [&](Index a, Index b) {
    for (int i = 1; i <= n; ++i) {
      if (codes[a].coord(i) > codes[b].coord(i)) return false;
    }
    return true;
  });
}

}  // namespace middle_order
