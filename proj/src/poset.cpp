#include "middle_order/poset.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace middle_order {

namespace {

using Bits = boost::dynamic_bitset<>;

constexpr Index kNone = std::numeric_limits<Index>::max();

template <typename Visit>
void for_each_bit(const Bits& bits, Visit&& visit) {
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) visit(static_cast<Index>(i));
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Accumulates labels in order of first appearance and the covers between them.
struct GraphBuilder {
  std::vector<std::string> labels;
  std::map<std::string, Index, std::less<>> index;
  std::vector<FinitePoset::Cover> covers;

  Index node(std::string_view label) {
    const auto it = index.find(label);
    if (it != index.end()) return it->second;
    const Index i = labels.size();
    labels.emplace_back(label);
    index.emplace(std::string(label), i);
    return i;
  }

  FinitePoset build() { return FinitePoset::from_covers(std::move(labels), covers); }
};

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<Bits> up)
    : labels_(std::move(labels)), up_(std::move(up)) {
  const Index n = labels_.size();
  if (up_.size() != n) throw std::invalid_argument("relation size does not match labels");
  for (Index i = 0; i < n; ++i) {
    if (!up_[i].test(i)) throw std::invalid_argument("relation is not reflexive at " + labels_[i]);
    bool ok = true;
    for_each_bit(up_[i], [&](Index j) {
      if (j != i && up_[j].test(i)) ok = false;
      if (!up_[j].is_subset_of(up_[i])) ok = false;
    });
    if (!ok) throw std::invalid_argument("relation is not antisymmetric and transitive at " + labels_[i]);
  }
  finish();
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> labels, std::span<const Cover> covers) {
  const Index n = labels.size();
  std::vector<std::vector<Index>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw std::invalid_argument("cover references a missing element");
    if (lo == hi) throw std::invalid_argument("cycle through " + labels[lo]);
    succ[lo].push_back(hi);
    ++indegree[hi];
  }

  std::vector<Index> order;
  order.reserve(n);
  for (Index i = 0; i < n; ++i) {
    if (indegree[i] == 0) order.push_back(i);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Index next : succ[order[head]]) {
      if (--indegree[next] == 0) order.push_back(next);
    }
  }
  if (order.size() != n) throw std::invalid_argument("cover relation contains a cycle");

  std::vector<Bits> up(n, Bits(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    up[*it].set(*it);
    for (Index next : succ[*it]) up[*it] |= up[next];
  }

  FinitePoset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up);
  p.finish();
  return p;
}

void FinitePoset::finish() {
  const Index n = labels_.size();
  index_.clear();
  for (Index i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) throw std::invalid_argument("duplicate label " + labels_[i]);
  }

  down_.assign(n, Bits(n));
  for (Index i = 0; i < n; ++i) for_each_bit(up_[i], [&](Index j) { down_[j].set(i); });

  linear_extension_.resize(n);
  std::iota(linear_extension_.begin(), linear_extension_.end(), Index{0});
  std::stable_sort(linear_extension_.begin(), linear_extension_.end(),
                   [&](Index a, Index b) { return down_[a].count() < down_[b].count(); });
  std::vector<Index> position(n);
  for (Index k = 0; k < n; ++k) position[linear_extension_[k]] = k;

  // Upper covers of u are the minimal elements of the strict up-set; scanning it in
  // linear-extension order, a candidate is minimal iff no earlier minimal element is below it.
  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  covers_.clear();
  for (Index u = 0; u < n; ++u) {
    std::vector<Index> above;
    for_each_bit(up_[u], [&](Index v) {
      if (v != u) above.push_back(v);
    });
    std::sort(above.begin(), above.end(), [&](Index a, Index b) { return position[a] < position[b]; });
    std::vector<Index> minimal;
    for (Index v : above) {
      const bool blocked = std::any_of(minimal.begin(), minimal.end(), [&](Index m) { return up_[m].test(v); });
      if (!blocked) minimal.push_back(v);
    }
    std::sort(minimal.begin(), minimal.end());
    for (Index v : minimal) {
      upper_covers_[u].push_back(v);
      lower_covers_[v].push_back(u);
      covers_.emplace_back(u, v);
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

std::optional<Index> FinitePoset::index_of(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Index> FinitePoset::minimal_elements() const {
  std::vector<Index> result;
  for (Index i = 0; i < size(); ++i) {
    if (lower_covers_[i].empty()) result.push_back(i);
  }
  return result;
}

std::vector<Index> FinitePoset::maximal_elements() const {
  std::vector<Index> result;
  for (Index i = 0; i < size(); ++i) {
    if (upper_covers_[i].empty()) result.push_back(i);
  }
  return result;
}

namespace {

// mu(s, t) for t running over `elements`, which must be listed in linear-extension order
// and start with s.
std::vector<int> mobius_along(const FinitePoset& p, const std::vector<Index>& elements) {
  std::vector<int> mu(elements.size(), 0);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k == 0) {
      mu[k] = 1;
      continue;
    }
    int sum = 0;
    for (std::size_t r = 0; r < k; ++r) {
      if (p.leq(elements[r], elements[k])) sum += mu[r];
    }
    mu[k] = -sum;
  }
  return mu;
}

std::vector<Index> in_linear_order(const FinitePoset& p, const Bits& members) {
  std::vector<Index> result;
  for (Index v : p.linear_extension()) {
    if (members.test(v)) result.push_back(v);
  }
  return result;
}

}  // namespace

int mobius(const FinitePoset& p, Index s, Index u) {
  if (!p.leq(s, u)) return 0;
  const auto elements = in_linear_order(p, p.up_set(s) & p.down_set(u));
  return mobius_along(p, elements).back();
}

std::vector<int> mobius_from(const FinitePoset& p, Index s) {
  const auto elements = in_linear_order(p, p.up_set(s));
  const auto mu = mobius_along(p, elements);
  std::vector<int> result(p.size(), 0);
  for (std::size_t k = 0; k < elements.size(); ++k) result[elements[k]] = mu[k];
  return result;
}

std::vector<std::pair<Index, Index>> enumerate_intervals(const FinitePoset& p) {
  std::vector<std::pair<Index, Index>> result;
  for (Index s = 0; s < p.size(); ++s) {
    for_each_bit(p.up_set(s), [&](Index u) { result.emplace_back(s, u); });
  }
  return result;
}

std::vector<Index> interval_elements(const FinitePoset& p, Index s, Index u) {
  std::vector<Index> result;
  if (!p.leq(s, u)) return result;
  for_each_bit(p.up_set(s) & p.down_set(u), [&](Index t) { result.push_back(t); });
  return result;
}

GradedResult is_graded(const FinitePoset& p) {
  const Index n = p.size();
  std::vector<int> longest(n, 0);
  std::vector<int> shortest(n, 0);
  std::vector<Index> via_longest(n, kNone);
  std::vector<Index> via_shortest(n, kNone);
  for (Index v : p.linear_extension()) {
    const auto& below = p.lower_covers(v);
    if (below.empty()) continue;
    longest[v] = -1;
    shortest[v] = std::numeric_limits<int>::max();
    for (Index b : below) {
      if (longest[b] + 1 > longest[v]) {
        longest[v] = longest[b] + 1;
        via_longest[v] = b;
      }
      if (shortest[b] + 1 < shortest[v]) {
        shortest[v] = shortest[b] + 1;
        via_shortest[v] = b;
      }
    }
  }

  const auto trace = [&](Index top, const std::vector<Index>& via) {
    std::vector<Index> chain_up;
    for (Index v = top; v != kNone; v = via[v]) chain_up.push_back(v);
    std::reverse(chain_up.begin(), chain_up.end());
    return chain_up;
  };

  GradedResult result;
  result.rank = longest;
  std::optional<Index> first_top;
  for (Index m : p.maximal_elements()) {
    if (shortest[m] != longest[m]) {
      result.witness = std::make_pair(trace(m, via_shortest), trace(m, via_longest));
      return result;
    }
    if (!first_top) {
      first_top = m;
    } else if (longest[m] != longest[*first_top]) {
      result.witness = std::make_pair(trace(*first_top, via_longest), trace(m, via_longest));
      return result;
    }
  }
  result.graded = true;
  return result;
}

LatticeTables lattice_tables(const FinitePoset& p) {
  const Index n = p.size();
  std::vector<Index> position(n);
  for (Index k = 0; k < n; ++k) position[p.linear_extension()[k]] = k;

  LatticeTables tables;
  tables.n = n;
  tables.join.assign(n * n, std::nullopt);
  tables.meet.assign(n * n, std::nullopt);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a; b < n; ++b) {
      const Bits upper = p.up_set(a) & p.up_set(b);
      Index least = kNone;
      for_each_bit(upper, [&](Index u) {
        if (least == kNone || position[u] < position[least]) least = u;
      });
      if (least != kNone && upper.is_subset_of(p.up_set(least))) {
        tables.join[a * n + b] = tables.join[b * n + a] = least;
      }

      const Bits lower = p.down_set(a) & p.down_set(b);
      Index greatest = kNone;
      for_each_bit(lower, [&](Index d) {
        if (greatest == kNone || position[d] > position[greatest]) greatest = d;
      });
      if (greatest != kNone && lower.is_subset_of(p.down_set(greatest))) {
        tables.meet[a * n + b] = tables.meet[b * n + a] = greatest;
      }
    }
  }
  return tables;
}

LatticeResult is_lattice(const FinitePoset& p) {
  LatticeResult result;
  if (p.size() == 0) return result;
  const auto tables = lattice_tables(p);
  for (Index a = 0; a < p.size(); ++a) {
    for (Index b = a; b < p.size(); ++b) {
      if (!tables.join_of(a, b) || !tables.meet_of(a, b)) {
        result.witness = std::make_pair(a, b);
        return result;
      }
    }
  }
  result.lattice = true;
  return result;
}

namespace {

struct DenseTables {
  Index n;
  std::vector<Index> join;
  std::vector<Index> meet;

  Index j(Index a, Index b) const { return join[a * n + b]; }
  Index m(Index a, Index b) const { return meet[a * n + b]; }
};

std::optional<DenseTables> dense_tables(const FinitePoset& p) {
  if (!is_lattice(p).lattice) return std::nullopt;
  const auto tables = lattice_tables(p);
  DenseTables dense{p.size(), {}, {}};
  dense.join.reserve(tables.join.size());
  dense.meet.reserve(tables.meet.size());
  for (const auto& x : tables.join) dense.join.push_back(*x);
  for (const auto& x : tables.meet) dense.meet.push_back(*x);
  return dense;
}

}  // namespace

bool is_distributive_by_triples(const FinitePoset& p) {
  const auto t = dense_tables(p);
  if (!t) return false;
  const Index n = p.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (t->j(a, t->m(b, c)) != t->m(t->j(a, b), t->j(a, c))) return false;
        if (t->m(a, t->j(b, c)) != t->j(t->m(a, b), t->m(a, c))) return false;
      }
    }
  }
  return true;
}

std::optional<std::array<Index, 5>> find_pentagon(const FinitePoset& p) {
  const auto t = dense_tables(p);
  if (!t) return std::nullopt;
  const Index n = p.size();
  for (Index a = 0; a < n; ++a) {
    for (Index c = 0; c < n; ++c) {
      if (!p.less(a, c)) continue;
      for (Index b = 0; b < n; ++b) {
        if (p.comparable(a, b) || p.comparable(c, b)) continue;
        if (t->j(a, b) == t->j(c, b) && t->m(a, b) == t->m(c, b)) {
          return std::array<Index, 5>{t->m(a, b), a, c, b, t->j(a, b)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<Index, 5>> find_diamond(const FinitePoset& p) {
  const auto t = dense_tables(p);
  if (!t) return std::nullopt;
  const Index n = p.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (p.comparable(a, b)) continue;
      const Index top = t->j(a, b);
      const Index bottom = t->m(a, b);
      for (Index c = b + 1; c < n; ++c) {
        if (p.comparable(a, c) || p.comparable(b, c)) continue;
        if (t->j(a, c) == top && t->j(b, c) == top && t->m(a, c) == bottom && t->m(b, c) == bottom) {
          return std::array<Index, 5>{bottom, a, b, c, top};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_distributive_by_sublattices(const FinitePoset& p) {
  if (!is_lattice(p).lattice) return false;
  return !find_pentagon(p) && !find_diamond(p);
}

bool is_distributive(const FinitePoset& p) {
  const bool by_triples = is_distributive_by_triples(p);
  if (by_triples != is_distributive_by_sublattices(p)) {
    throw std::logic_error("distributivity checkers disagree");
  }
  return by_triples;
}

FinitePoset induced_subposet(const FinitePoset& p, std::span<const Index> subset) {
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (Index i : subset) labels.push_back(p.label(i));
  return FinitePoset::from_relation(std::move(labels),
                                    [&](Index a, Index b) { return p.leq(subset[a], subset[b]); });
}

namespace {

struct ElementSignature {
  std::size_t below;
  std::size_t above;
  std::size_t lower_covers;
  std::size_t upper_covers;
  int height;

  friend bool operator==(const ElementSignature&, const ElementSignature&) = default;
  friend auto operator<=>(const ElementSignature&, const ElementSignature&) = default;
};

std::vector<ElementSignature> signatures(const FinitePoset& p) {
  const auto heights = is_graded(p).rank;
  std::vector<ElementSignature> result;
  for (Index i = 0; i < p.size(); ++i) {
    result.push_back({p.down_set(i).count(), p.up_set(i).count(), p.lower_covers(i).size(),
                      p.upper_covers(i).size(), heights[i]});
  }
  return result;
}

}  // namespace

bool are_isomorphic(const FinitePoset& p, const FinitePoset& q, std::size_t limit) {
  if (p.size() > limit || q.size() > limit) {
    throw std::length_error("isomorphism test limited to " + std::to_string(limit) + " elements");
  }
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return false;

  const auto sig_p = signatures(p);
  const auto sig_q = signatures(q);
  {
    auto sorted_p = sig_p;
    auto sorted_q = sig_q;
    std::sort(sorted_p.begin(), sorted_p.end());
    std::sort(sorted_q.begin(), sorted_q.end());
    if (sorted_p != sorted_q) return false;
  }

  const auto& order = p.linear_extension();
  const Index n = p.size();
  std::vector<Index> image(n, kNone);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    const Index x = order[depth];
    for (Index y = 0; y < n; ++y) {
      if (used[y] || sig_q[y] != sig_p[x]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const Index a = order[k];
        consistent = p.leq(a, x) == q.leq(image[a], y) && p.leq(x, a) == q.leq(y, image[a]);
      }
      if (!consistent) continue;
      image[x] = y;
      used[y] = true;
      if (extend(depth + 1)) return true;
      used[y] = false;
      image[x] = kNone;
    }
    return false;
  };
  return extend(0);
}

FinitePoset chain(std::size_t length) {
  std::vector<std::string> labels;
  std::vector<FinitePoset::Cover> covers;
  for (std::size_t i = 0; i < length; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return FinitePoset::from_covers(std::move(labels), covers);
}

FinitePoset antichain(std::size_t size) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return FinitePoset::from_covers(std::move(labels), {});
}

FinitePoset boolean_lattice(int rank) {
  std::vector<int> sizes(static_cast<std::size_t>(rank), 2);
  return chain_product(sizes);
}

FinitePoset chain_product(std::span<const int> sizes) {
  std::vector<std::vector<int>> points{{}};
  for (int size : sizes) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : points) {
      for (int v = 0; v < size; ++v) {
        auto extended = prefix;
        extended.push_back(v);
        next.push_back(std::move(extended));
      }
    }
    points = std::move(next);
  }
  std::vector<std::string> labels;
  std::map<std::vector<int>, Index> index;
  for (const auto& point : points) {
    std::string label = "(";
    for (std::size_t i = 0; i < point.size(); ++i) label += (i ? "," : "") + std::to_string(point[i]);
    label += ")";
    index.emplace(point, labels.size());
    labels.push_back(std::move(label));
  }
  std::vector<FinitePoset::Cover> covers;
  for (const auto& point : points) {
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (point[i] + 1 < sizes[i]) {
        auto bumped = point;
        ++bumped[i];
        covers.emplace_back(index.at(point), index.at(bumped));
      }
    }
  }
  return FinitePoset::from_covers(std::move(labels), covers);
}

FinitePoset pentagon() {
  const std::vector<FinitePoset::Cover> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return FinitePoset::from_covers({"0", "a", "c", "b", "1"}, covers);
}

FinitePoset diamond() {
  const std::vector<FinitePoset::Cover> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return FinitePoset::from_covers({"0", "a", "b", "c", "1"}, covers);
}

std::string to_edge_list(const FinitePoset& p) {
  std::string out;
  for (Index i = 0; i < p.size(); ++i) {
    if (p.lower_covers(i).empty() && p.upper_covers(i).empty()) out += p.label(i) + "\n";
  }
  for (const auto& [lo, hi] : p.covers()) out += p.label(lo) + " < " + p.label(hi) + "\n";
  return out;
}

FinitePoset from_edge_list(std::string_view text) {
  GraphBuilder graph;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    const auto line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto sep = line.find(" < ");
    if (sep == std::string_view::npos) {
      graph.node(line);
      continue;
    }
    const Index lo = graph.node(trim(line.substr(0, sep)));
    const Index hi = graph.node(trim(line.substr(sep + 3)));
    graph.covers.emplace_back(lo, hi);
  }
  return graph.build();
}

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Reads consecutive quoted identifiers from a DOT statement.
std::vector<std::string> quoted_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while ((i = line.find('"', i)) != std::string_view::npos) {
    std::string token;
    ++i;
    while (i < line.size() && line[i] != '"') {
      if (line[i] == '\\' && i + 1 < line.size()) ++i;
      token += line[i++];
    }
    ++i;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace

std::string to_dot(const FinitePoset& p, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n  rankdir=BT;\n";
  for (Index i = 0; i < p.size(); ++i) out << "  " << quote(p.label(i)) << ";\n";
  for (const auto& [lo, hi] : p.covers()) out << "  " << quote(p.label(lo)) << " -> " << quote(p.label(hi)) << ";\n";
  out << "}\n";
  return out.str();
}

FinitePoset from_dot(std::string_view text) {
  GraphBuilder graph;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    const auto line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() != '"') continue;
    const auto tokens = quoted_tokens(line);
    if (line.find("->") != std::string_view::npos && tokens.size() >= 2) {
      const Index lo = graph.node(tokens[0]);
      const Index hi = graph.node(tokens[1]);
      graph.covers.emplace_back(lo, hi);
    } else if (!tokens.empty()) {
      graph.node(tokens[0]);
    }
  }
  return graph.build();
}

}  // namespace middle_order
