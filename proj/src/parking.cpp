#include "middle_order/parking.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "middle_order/errors.hpp"

namespace middle_order {

namespace {

void require_range(std::span<const int> prefs) {
  const int n = static_cast<int>(prefs.size());
  if (n < 1) throw std::invalid_argument("parking function must have at least one entry");
  for (int p : prefs) {
    if (p < 1 || p > n) throw std::invalid_argument("preference " + std::to_string(p) + " outside [1, n]");
  }
}

void require_same_size(const ParkingFunction& p, const ParkingFunction& q) {
  if (p.prefs().size() != q.prefs().size()) throw SizeMismatch(p.prefs().size(), q.prefs().size());
}

template <typename Combine>
std::vector<int> combine(const ParkingFunction& p, const ParkingFunction& q, Combine&& f) {
  std::vector<int> out(p.prefs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(p.prefs()[i], q.prefs()[i]);
  return out;
}

}  // namespace

ParkingFunction::ParkingFunction(std::vector<int> prefs) : prefs_(std::move(prefs)) {
  if (!is_parking_function(prefs_)) throw std::invalid_argument("not a parking function");
}

bool is_parking_function(std::span<const int> prefs) {
  require_range(prefs);
  std::vector<int> sorted(prefs.begin(), prefs.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] > static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool parks_all(std::span<const int> prefs) {
  require_range(prefs);
  const int n = static_cast<int>(prefs.size());
  std::vector<bool> taken(n + 1, false);
  for (int p : prefs) {
    int spot = p;
    while (spot <= n && taken[spot]) ++spot;
    if (spot > n) return false;
    taken[spot] = true;
  }
  return true;
}

bool pf_leq(const ParkingFunction& p, const ParkingFunction& q) {
  if (q.is_top()) return true;
  if (p.is_top()) return false;
  require_same_size(p, q);
  for (std::size_t i = 0; i < p.prefs().size(); ++i) {
    if (p.prefs()[i] > q.prefs()[i]) return false;
  }
  return true;
}

ParkingFunction pf_meet(const ParkingFunction& p, const ParkingFunction& q) {
  if (p.is_top()) return q;
  if (q.is_top()) return p;
  require_same_size(p, q);
  return ParkingFunction(combine(p, q, [](int a, int b) { return std::min(a, b); }));
}

ParkingFunction pf_join(const ParkingFunction& p, const ParkingFunction& q) {
  if (p.is_top() || q.is_top()) return ParkingFunction::top();
  require_same_size(p, q);
  auto prefs = combine(p, q, [](int a, int b) { return std::max(a, b); });
  if (!is_parking_function(prefs)) return ParkingFunction::top();
  return ParkingFunction(std::move(prefs));
}

std::array<ParkingFunction, 5> pentagon_witness(int n) {
  if (n < 3) throw std::invalid_argument("pentagon_witness needs n >= 3");
  const auto padded = [n](std::vector<int> head) {
    for (int i = 4; i <= n; ++i) head.push_back(i);
    return ParkingFunction(std::move(head));
  };
  std::array<ParkingFunction, 5> witness{padded({1, 1, 1}), padded({3, 1, 1}), padded({1, 1, 3}),
                                         padded({1, 2, 3}), ParkingFunction::top()};

  for (const auto& x : witness) {
    for (const auto& y : witness) {
      const bool closed =
          std::find(witness.begin(), witness.end(), pf_meet(x, y)) != witness.end() &&
          std::find(witness.begin(), witness.end(), pf_join(x, y)) != witness.end();
      if (!closed) throw std::logic_error("pentagon witness is not closed under meet and join");
    }
  }
  std::vector<std::string> labels;
  for (const auto& x : witness) labels.push_back(to_string(x));
  const auto sub = FinitePoset::from_relation(std::move(labels),
                                              [&](Index a, Index b) { return pf_leq(witness[a], witness[b]); });
  if (!are_isomorphic(sub, pentagon())) throw std::logic_error("pentagon witness is not a pentagon");
  return witness;
}

std::vector<ParkingFunction> all_parking_functions(int n, int limit) {
  if (n < 1) throw std::invalid_argument("size must be at least 1");
  if (n > limit) throw LimitExceeded("all_parking_functions", n, limit);
  std::vector<ParkingFunction> result;
  std::vector<int> prefs(static_cast<std::size_t>(n), 1);
  while (true) {
    if (is_parking_function(prefs)) result.emplace_back(prefs);
    int i = n - 1;
    while (i >= 0 && prefs[i] == n) {
      prefs[i] = 1;
      --i;
    }
    if (i < 0) return result;
    ++prefs[i];
  }
}

FinitePoset parking_poset(int n, int limit) {
  auto elements = all_parking_functions(n, limit);
  elements.push_back(ParkingFunction::top());
  std::vector<std::string> labels;
  for (const auto& p : elements) labels.push_back(to_string(p));
  return FinitePoset::from_relation(std::move(labels),
                                    [&](Index a, Index b) { return pf_leq(elements[a], elements[b]); });
}

std::string to_string(const ParkingFunction& p) {
  if (p.is_top()) return "T";
  std::string out;
  for (std::size_t i = 0; i < p.prefs().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.prefs()[i]);
  }
  return out;
}

ParkingFunction parse_parking_function(std::string_view text) {
  if (text == "T") return ParkingFunction::top();
  std::vector<int> prefs;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    int value = 0;
    const auto* first = text.data() + start;
    const auto* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (start == end || ec != std::errc{} || ptr != last) {
      throw ParseError("invalid preference", start + static_cast<std::size_t>(ptr - first));
    }
    prefs.push_back(value);
    if (end == text.size()) break;
    start = end + 1;
  }
  try {
    return ParkingFunction(std::move(prefs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace middle_order
