#include "middle_order/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "middle_order/errors.hpp"

namespace middle_order {

namespace {

void require_size(int n) {
  if (n < 1) {
    throw std::invalid_argument("size must be at least 1, got " + std::to_string(n));
  }
}

void require_limit(const char* what, int n, int limit) {
  require_size(n);
  if (n > limit) {
    throw LimitExceeded(what, n, limit);
  }
}

// Calls `visit` with every increasing k-subset of {1..n}.
template <typename Visit>
void for_each_subset(int n, int k, Visit&& visit) {
  if (k > n) return;
  std::vector<int> chosen(k);
  std::iota(chosen.begin(), chosen.end(), 1);
  while (true) {
    visit(chosen);
    int i = k - 1;
    while (i >= 0 && chosen[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++chosen[i];
    for (int j = i + 1; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

bool order_isomorphic(const Permutation& w, const std::vector<int>& positions, const Permutation& p) {
  const int k = p.size();
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const bool in_w = w(positions[a]) < w(positions[b]);
      const bool in_p = p(a + 1) < p(b + 1);
      if (in_w != in_p) return false;
    }
  }
  return true;
}

bool mesh_regions_empty(const Permutation& w, const std::vector<int>& positions, const MeshPattern& m) {
  const int n = w.size();
  const int k = static_cast<int>(positions.size());
  std::vector<int> cols(k + 2);
  std::vector<int> rows(k + 2);
  cols[0] = 0;
  rows[0] = 0;
  for (int i = 0; i < k; ++i) {
    cols[i + 1] = positions[i];
    rows[i + 1] = w(positions[i]);
  }
  cols[k + 1] = n + 1;
  rows[k + 1] = n + 1;
  std::sort(rows.begin() + 1, rows.begin() + k + 1);

  for (const auto& [a, b] : m.mesh()) {
    for (int c = cols[a] + 1; c < cols[a + 1]; ++c) {
      if (w(c) > rows[b] && w(c) < rows[b + 1]) return false;
    }
  }
  return true;
}

std::vector<int> split_integers(std::string_view text, bool allow_bare_digits) {
  if (text.empty()) throw ParseError("empty input", 0);
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    if (!allow_bare_digits && text.size() > 1) {
      throw ParseError("expected a comma-separated list", 0);
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '0' || c > '9') {
        throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
      values.push_back(c - '0');
    }
    return values;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    if (end == start) throw ParseError("empty field", start);
    int value = 0;
    const auto* first = text.data() + start;
    const auto* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError("invalid integer", start + static_cast<std::size_t>(ptr - first));
    }
    values.push_back(value);
    if (end == text.size()) break;
    start = end + 1;
  }
  return values;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  require_size(n);
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  require_size(n);
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::long_element(int n) {
  require_size(n);
  std::vector<int> word(n);
  std::iota(word.rbegin(), word.rend(), 1);
  return Permutation(std::move(word));
}

int Permutation::position_of(int value) const {
  const auto it = std::find(word_.begin(), word_.end(), value);
  if (it == word_.end()) throw std::out_of_range("value not in permutation");
  return static_cast<int>(it - word_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int pos = 1; pos <= size(); ++pos) inv[(*this)(pos) - 1] = pos;
  return Permutation(std::move(inv));
}

InversionSequence::InversionSequence(std::vector<int> coords) : coords_(std::move(coords)) {
  require_size(size());
  for (int i = 1; i <= size(); ++i) {
    const int x = coords_[i - 1];
    if (x < 0 || x > i - 1) {
      throw std::invalid_argument("coordinate " + std::to_string(i) + " = " + std::to_string(x) +
                                  " outside [0, " + std::to_string(i - 1) + "]");
    }
  }
}

InversionSequence InversionSequence::zero(int n) {
  require_size(n);
  return InversionSequence(std::vector<int>(n, 0));
}

InversionSequence InversionSequence::maximum(int n) {
  require_size(n);
  std::vector<int> coords(n);
  std::iota(coords.begin(), coords.end(), 0);
  return InversionSequence(std::move(coords));
}

int InversionSequence::total() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), 0);
}

int InversionSequence::nonzero_count() const noexcept {
  return static_cast<int>(std::count_if(coords_.begin(), coords_.end(), [](int x) { return x != 0; }));
}

MeshPattern::MeshPattern(Permutation pattern, std::set<Cell> mesh)
    : pattern_(std::move(pattern)), mesh_(std::move(mesh)) {
  const int k = pattern_.size();
  for (const auto& [a, b] : mesh_) {
    if (a < 0 || a > k || b < 0 || b > k) {
      throw std::invalid_argument("mesh cell (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") outside the grid");
    }
  }
}

InversionSequence inversion_sequence(const Permutation& w) {
  const int n = w.size();
  std::vector<int> coords(n, 0);
  // Scan right to left; a value is the top of one inversion per smaller value already seen.
  std::vector<bool> seen(n + 1, false);
  for (int pos = n; pos >= 1; --pos) {
    const int v = w(pos);
    int smaller = 0;
    for (int j = 1; j < v; ++j) smaller += seen[j] ? 1 : 0;
    coords[v - 1] = smaller;
    seen[v] = true;
  }
  return InversionSequence(std::move(coords));
}

Permutation from_inversion_sequence(const InversionSequence& x) {
  // Insert 1, 2, ..., n in turn; value i lands with exactly x_i smaller values to its right.
  std::vector<int> word;
  word.reserve(x.size());
  for (int i = 1; i <= x.size(); ++i) {
    const int from_left = (i - 1) - x.coord(i);
    word.insert(word.begin() + from_left, i);
  }
  return Permutation(std::move(word));
}

bool round_trip_all(int n, int limit) {
  require_limit("round_trip_all", n, limit);
  std::set<InversionSequence> image;
  for (const auto& w : all_permutations(n, limit)) {
    const auto x = inversion_sequence(w);
    if (from_inversion_sequence(x) != w) return false;
    image.insert(x);
  }
  const auto box = all_inversion_sequences(n, limit);
  return image.size() == box.size() && std::equal(image.begin(), image.end(), box.begin());
}

std::vector<Permutation> all_permutations(int n, int limit) {
  require_limit("all_permutations", n, limit);
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> result;
  do {
    result.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return result;
}

std::vector<InversionSequence> all_inversion_sequences(int n, int limit) {
  require_limit("all_inversion_sequences", n, limit);
  std::vector<int> coords(n, 0);
  std::vector<InversionSequence> result;
  while (true) {
    result.emplace_back(coords);
    int i = n - 1;
    while (i >= 0 && coords[i] == i) {
      coords[i] = 0;
      --i;
    }
    if (i < 0) return result;
    ++coords[i];
  }
}

std::vector<std::vector<int>> classical_occurrences(const Permutation& w, const Permutation& p) {
  std::vector<std::vector<int>> found;
  for_each_subset(w.size(), p.size(), [&](const std::vector<int>& positions) {
    if (order_isomorphic(w, positions, p)) found.push_back(positions);
  });
  return found;
}

bool avoids_classical(const Permutation& w, const Permutation& p) {
  bool found = false;
  for_each_subset(w.size(), p.size(), [&](const std::vector<int>& positions) {
    if (!found && order_isomorphic(w, positions, p)) found = true;
  });
  return !found;
}

std::vector<std::vector<int>> mesh_occurrences(const Permutation& w, const MeshPattern& m) {
  std::vector<std::vector<int>> found;
  for_each_subset(w.size(), m.pattern().size(), [&](const std::vector<int>& positions) {
    if (order_isomorphic(w, positions, m.pattern()) && mesh_regions_empty(w, positions, m)) {
      found.push_back(positions);
    }
  });
  return found;
}

int mesh_contains(const Permutation& w, const MeshPattern& m) {
  return static_cast<int>(mesh_occurrences(w, m).size());
}

Permutation foata_image(const Permutation& w) {
  const int n = w.size();
  std::vector<bool> visited(n + 1, false);
  std::vector<int> word;
  word.reserve(n);
  // Scanning 1..n, each unvisited value is the minimum of its cycle.
  for (int m = 1; m <= n; ++m) {
    if (visited[m]) continue;
    int v = w(m);
    visited[m] = true;
    while (v != m) {
      word.push_back(v);
      visited[v] = true;
      v = w(v);
    }
    word.push_back(m);
  }
  return Permutation(std::move(word));
}

std::vector<int> right_to_left_minima(const Permutation& w) {
  std::vector<int> minima;
  int smallest = w.size() + 1;
  for (int pos = w.size(); pos >= 1; --pos) {
    if (w(pos) < smallest) {
      smallest = w(pos);
      minima.push_back(smallest);
    }
  }
  std::sort(minima.begin(), minima.end());
  return minima;
}

bool is_involution(const Permutation& w) {
  for (int i = 1; i <= w.size(); ++i) {
    if (w(w(i)) != i) return false;
  }
  return true;
}

int cycle_count(const Permutation& w) {
  const int n = w.size();
  std::vector<bool> visited(n + 1, false);
  int cycles = 0;
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    ++cycles;
    for (int v = start; !visited[v]; v = w(v)) visited[v] = true;
  }
  return cycles;
}

int inversion_count(const Permutation& w) {
  int count = 0;
  for (int a = 1; a <= w.size(); ++a) {
    for (int b = a + 1; b <= w.size(); ++b) count += w(a) > w(b) ? 1 : 0;
  }
  return count;
}

std::string to_string(const Permutation& w) {
  std::string out;
  const bool digits = w.size() <= 9;
  for (int pos = 1; pos <= w.size(); ++pos) {
    if (!digits && pos > 1) out += ',';
    out += std::to_string(w(pos));
  }
  return out;
}

std::string to_string(const InversionSequence& x) {
  std::string out;
  for (int i = 1; i <= x.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(x.coord(i));
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  auto values = split_integers(text, true);
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] == 0) throw ParseError("unexpected character '0'", i);
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

InversionSequence parse_inversion_sequence(std::string_view text) {
  auto values = split_integers(text, true);
  try {
    return InversionSequence(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace middle_order
