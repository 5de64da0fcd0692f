#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "middle_order/poset.hpp"

using namespace middle_order;

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

std::size_t relation_size(const FinitePoset& p) {
  std::size_t total = 0;
  for (Index i = 0; i < p.size(); ++i) total += p.up_set(i).count();
  return total;
}

// Subsets of {0..m-1} closed under intersection, with the full set added: always a lattice.
FinitePoset closure_system(std::mt19937& rng, int m, int generators) {
  const unsigned full = (1u << m) - 1;
  std::set<unsigned> family{full};
  std::uniform_int_distribution<unsigned> pick(0, full);
  for (int g = 0; g < generators; ++g) {
    const unsigned s = pick(rng);
    std::set<unsigned> next = family;
    for (unsigned t : family) next.insert(s & t);
    next.insert(s);
    if (next.size() > 30) break;
    family = std::move(next);
  }
  const std::vector<unsigned> sets(family.begin(), family.end());
  return FinitePoset::from_relation(numbered(sets.size()),
                                    [&](Index a, Index b) { return (sets[a] & ~sets[b]) == 0; });
}

// Down-sets of a random poset on m points: a distributive lattice.
FinitePoset down_set_lattice(std::mt19937& rng, int m) {
  std::vector<unsigned> below(static_cast<std::size_t>(m), 0);
  std::bernoulli_distribution edge(0.3);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < j; ++i) {
      if (edge(rng)) below[j] |= (1u << i) | below[i];
    }
  }
  std::vector<unsigned> ideals;
  for (unsigned s = 0; s < (1u << m); ++s) {
    bool closed = true;
    for (int j = 0; j < m; ++j) {
      if ((s >> j & 1u) && (below[j] & ~s)) closed = false;
    }
    if (closed) ideals.push_back(s);
  }
  return FinitePoset::from_relation(numbered(ideals.size()),
                                    [&](Index a, Index b) { return (ideals[a] & ~ideals[b]) == 0; });
}

}  // namespace

TEST_CASE("from_covers closes the relation") {
  const std::vector<FinitePoset::Cover> covers{{0, 1}, {1, 2}};
  const auto p = FinitePoset::from_covers(numbered(3), covers);
  CHECK(relation_size(p) == 6);
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(relation_size(antichain(3)) == 3);
}

TEST_CASE("from_covers rejects cycles and dangling indices") {
  const std::vector<FinitePoset::Cover> cycle{{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(FinitePoset::from_covers(numbered(3), cycle), std::invalid_argument);
  const std::vector<FinitePoset::Cover> dangling{{0, 5}};
  CHECK_THROWS_AS(FinitePoset::from_covers(numbered(3), dangling), std::invalid_argument);
  const std::vector<FinitePoset::Cover> loop{{1, 1}};
  CHECK_THROWS_AS(FinitePoset::from_covers(numbered(3), loop), std::invalid_argument);
  CHECK_THROWS_AS(FinitePoset::from_covers({"a", "a"}, {}), std::invalid_argument);
}

TEST_CASE("from_relation rejects non-orders") {
  CHECK_THROWS_AS(FinitePoset::from_relation(numbered(2), [](Index, Index) { return true; }), std::invalid_argument);
  CHECK_THROWS_AS(FinitePoset::from_relation(numbered(2), [](Index a, Index b) { return a < b; }),
                  std::invalid_argument);
}

TEST_CASE("transitive reduction round trip on random DAGs") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 100;
    std::bernoulli_distribution edge(trial % 2 ? 0.05 : 0.3);
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<FinitePoset::Cover> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (edge(rng)) edges.emplace_back(order[i], order[j]);
      }
    }
    const auto p = FinitePoset::from_covers(numbered(n), edges);
    const auto q = FinitePoset::from_covers(numbered(n), p.covers());
    CHECK(p == q);
    CHECK(p.covers() == q.covers());
    for (const auto& [lo, hi] : p.covers()) {
      CHECK(p.less(lo, hi));
      for (Index m = 0; m < n; ++m) CHECK_FALSE((p.less(lo, m) && p.less(m, hi)));
    }
  }
}

TEST_CASE("linear extension respects the order") {
  const auto p = boolean_lattice(4);
  std::vector<std::size_t> position(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) position[p.linear_extension()[k]] = k;
  for (const auto& [lo, hi] : p.covers()) CHECK(position[lo] < position[hi]);
}

TEST_CASE("Mobius by recursion") {
  const auto c = chain(2);
  CHECK(mobius(c, 0, 0) == 1);
  CHECK(mobius(c, 0, 1) == -1);
  CHECK(mobius(c, 1, 0) == 0);
  const auto b = boolean_lattice(3);
  const auto bottom = b.minimal_elements().front();
  const auto top = b.maximal_elements().front();
  CHECK(mobius(b, bottom, top) == -1);
  CHECK(mobius(chain(4), 0, 2) == 0);
  const auto m3 = diamond();
  CHECK(mobius(m3, m3.minimal_elements().front(), m3.maximal_elements().front()) == 2);
}

TEST_CASE("Mobius sum rule on random posets") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = closure_system(rng, 5, 12);
    for (Index s = 0; s < p.size(); ++s) {
      const auto mu = mobius_from(p, s);
      for (Index u = 0; u < p.size(); ++u) {
        if (!p.less(s, u)) continue;
        int sum = 0;
        for (Index t : interval_elements(p, s, u)) sum += mu[t];
        CHECK(sum == 0);
        CHECK(mobius(p, s, u) == mu[u]);
      }
    }
  }
}

TEST_CASE("interval enumeration") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(enumerate_intervals(chain(n)).size() == n * (n + 1) / 2);
  CHECK(enumerate_intervals(antichain(4)).size() == 4);
  const std::vector<int> sizes{1, 2, 3};
  CHECK(enumerate_intervals(chain_product(sizes)).size() == 18);
}

TEST_CASE("gradedness") {
  CHECK(is_graded(chain(5)).graded);
  CHECK(is_graded(boolean_lattice(3)).graded);
  const auto n5 = is_graded(pentagon());
  CHECK_FALSE(n5.graded);
  REQUIRE(n5.witness.has_value());
  CHECK(n5.witness->first.size() != n5.witness->second.size());
  const auto product = is_graded(chain_product(std::vector<int>{2, 3}));
  REQUIRE(product.graded);
  CHECK(*std::max_element(product.rank.begin(), product.rank.end()) == 3);
}

TEST_CASE("lattice and distributivity on named posets") {
  CHECK(is_lattice(boolean_lattice(3)).lattice);
  CHECK(is_distributive(boolean_lattice(3)));
  CHECK(is_lattice(pentagon()).lattice);
  CHECK_FALSE(is_distributive(pentagon()));
  CHECK(find_pentagon(pentagon()).has_value());
  CHECK_FALSE(find_diamond(pentagon()).has_value());
  CHECK(is_lattice(diamond()).lattice);
  CHECK_FALSE(is_distributive(diamond()));
  CHECK(find_diamond(diamond()).has_value());
  const auto not_lattice = is_lattice(antichain(2));
  CHECK_FALSE(not_lattice.lattice);
  CHECK(not_lattice.witness.has_value());
  CHECK_FALSE(is_distributive_by_triples(antichain(2)));
}

TEST_CASE("distributivity checkers agree on random lattices") {
  std::mt19937 rng(99);
  int distributive = 0;
  int other = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = trial % 3 == 0 ? down_set_lattice(rng, 4) : closure_system(rng, 4 + trial % 2, 3 + trial % 9);
    REQUIRE(p.size() <= 30);
    REQUIRE(is_lattice(p).lattice);
    const bool by_triples = is_distributive_by_triples(p);
    CHECK(by_triples == is_distributive_by_sublattices(p));
    (by_triples ? distributive : other) += 1;
  }
  CHECK(distributive > 10);
  CHECK(other > 10);
}

TEST_CASE("induced subposet") {
  const auto b = boolean_lattice(3);
  std::vector<Index> chain_subset{b.minimal_elements().front(), b.lower_covers(b.maximal_elements().front()).front(),
                                  b.maximal_elements().front()};
  CHECK(are_isomorphic(induced_subposet(b, chain_subset), chain(3)));
  // Bottom and top with the middle ranks removed: the order is kept, the covers are recomputed.
  std::vector<Index> ends{b.minimal_elements().front(), b.maximal_elements().front()};
  const auto sub = induced_subposet(b, ends);
  CHECK(sub.covers().size() == 1);
}

TEST_CASE("isomorphism") {
  const std::vector<int> sizes{1, 2, 3};
  const std::vector<int> permuted{3, 1, 2};
  CHECK(are_isomorphic(chain_product(sizes), chain_product(permuted)));
  CHECK_FALSE(are_isomorphic(chain(2), antichain(2)));
  CHECK_FALSE(are_isomorphic(pentagon(), diamond()));
  CHECK(are_isomorphic(boolean_lattice(2), chain_product(std::vector<int>{2, 2})));
  CHECK_THROWS_AS(are_isomorphic(chain(65), chain(65)), std::length_error);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = closure_system(rng, 5, 8);
    std::vector<Index> shuffled(p.size());
    std::iota(shuffled.begin(), shuffled.end(), Index{0});
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(are_isomorphic(p, induced_subposet(p, shuffled)));
  }
}

TEST_CASE("edge list round trip") {
  const auto p = pentagon();
  const auto text = to_edge_list(p);
  CHECK(text.find("0 < a") != std::string::npos);
  const auto q = from_edge_list(text);
  CHECK(are_isomorphic(p, q));
  const auto lonely = from_edge_list("# comment\nx\ny < z\n");
  CHECK(lonely.size() == 3);
  CHECK(lonely.covers().size() == 1);
  CHECK(from_edge_list(to_edge_list(antichain(3))).size() == 3);
}

TEST_CASE("DOT round trip") {
  const auto p = boolean_lattice(3);
  const auto dot = to_dot(p, "cube");
  CHECK(dot.rfind("digraph cube {", 0) == 0);
  const auto q = from_dot(dot);
  CHECK(q == p);
  CHECK(are_isomorphic(p, q));
}
