#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "middle_order/errors.hpp"
#include "middle_order/orders.hpp"

using namespace middle_order;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

using Edge = std::pair<std::string, std::string>;

std::set<Edge> edge_set(const FinitePoset& p) {
  std::set<Edge> edges;
  for (const auto& [lo, hi] : p.covers()) edges.emplace(p.label(lo), p.label(hi));
  return edges;
}

// Tableau criterion: #{a <= i : v(a) >= k} <= #{a <= i : w(a) >= k} for all i, k.
bool tableau_leq(const Permutation& v, const Permutation& w) {
  const int n = v.size();
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      int cv = 0;
      int cw = 0;
      for (int a = 1; a <= i; ++a) {
        cv += v(a) >= k;
        cw += w(a) >= k;
      }
      if (cv > cw) return false;
    }
  }
  return true;
}

// Inversions as value pairs (small, large) with the large value first.
std::set<std::pair<int, int>> inversion_set(const Permutation& w) {
  std::set<std::pair<int, int>> out;
  for (int a = 1; a <= w.size(); ++a) {
    for (int b = a + 1; b <= w.size(); ++b) {
      if (w(a) > w(b)) out.emplace(w(b), w(a));
    }
  }
  return out;
}

bool inversion_set_leq(const Permutation& v, const Permutation& w) {
  const auto a = inversion_set(v);
  const auto b = inversion_set(w);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool coordinatewise(const Permutation& v, const Permutation& w) {
  const auto x = inversion_sequence(v);
  const auto y = inversion_sequence(w);
  for (int i = 1; i <= x.size(); ++i) {
    if (x.coord(i) > y.coord(i)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("middle order examples") {
  CHECK(middle_leq(P("123"), P("321")));
  CHECK_FALSE(middle_leq(P("213"), P("312")));
  CHECK_FALSE(middle_leq(P("312"), P("213")));
  CHECK(middle_leq(P("132"), P("312")));
  CHECK(middle_covers(P("123"), P("132")));
  CHECK_FALSE(middle_covers(P("123"), P("321")));
  CHECK_FALSE(middle_covers(P("231"), P("231")));
  CHECK_THROWS_AS(middle_leq(P("12"), P("123")), SizeMismatch);
  CHECK_THROWS_AS(meet(P("12"), P("123")), SizeMismatch);
}

TEST_CASE("meet, join and rank examples") {
  CHECK(join(P("213"), P("132")) == P("231"));
  CHECK(join(P("312"), P("231")) == P("321"));
  CHECK(meet(P("415623"), P("123456")) == P("123456"));
  CHECK(rank(P("123")) == 0);
  CHECK(rank(P("415623")) == 7);
  for (int n = 1; n <= 8; ++n) CHECK(rank(Permutation::long_element(n)) == n * (n - 1) / 2);
}

TEST_CASE("middle order equals the closure of its covers") {
  for (int n = 1; n <= 5; ++n) {
    const auto p = order_poset(Order::middle, n);
    for (Index a = 0; a < p.size(); ++a) {
      const auto v = P(p.label(a).c_str());
      for (Index b = 0; b < p.size(); ++b) {
        const auto w = P(p.label(b).c_str());
        CHECK(p.leq(a, b) == coordinatewise(v, w));
        CHECK(middle_leq(v, w) == coordinatewise(v, w));
      }
    }
  }
}

TEST_CASE("lattice axioms on S_n") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = all_permutations(n);
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
    const std::size_t m = all.size();
    std::vector<std::size_t> mt(m * m);
    std::vector<std::size_t> jn(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        mt[a * m + b] = index.at(meet(all[a], all[b]));
        jn[a * m + b] = index.at(join(all[a], all[b]));
      }
    }
    const auto M = [&](std::size_t a, std::size_t b) { return mt[a * m + b]; };
    const auto J = [&](std::size_t a, std::size_t b) { return jn[a * m + b]; };
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      ok &= M(a, a) == a && J(a, a) == a;
      for (std::size_t b = 0; b < m && ok; ++b) {
        ok &= M(a, b) == M(b, a) && J(a, b) == J(b, a);
        ok &= M(a, J(a, b)) == a && J(a, M(a, b)) == a;
        ok &= middle_leq(all[M(a, b)], all[a]) && middle_leq(all[a], all[J(a, b)]);
        for (std::size_t c = 0; c < m && ok; ++c) {
          ok &= M(M(a, b), c) == M(a, M(b, c)) && J(J(a, b), c) == J(a, J(b, c));
          ok &= M(a, J(b, c)) == J(M(a, b), M(a, c));
          ok &= J(a, M(b, c)) == M(J(a, b), J(a, c));
        }
      }
    }
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("P_n is graded by inversion count and a distributive lattice") {
  for (int n = 1; n <= 5; ++n) {
    const auto p = order_poset(Order::middle, n);
    const auto graded = is_graded(p);
    REQUIRE(graded.graded);
    for (Index i = 0; i < p.size(); ++i) CHECK(graded.rank[i] == rank(P(p.label(i).c_str())));
  }
  for (int n = 1; n <= 4; ++n) {
    const auto p = order_poset(Order::middle, n);
    CHECK(is_lattice(p).lattice);
    CHECK(is_distributive(p));
    std::vector<int> sizes;
    for (int i = 1; i <= n; ++i) sizes.push_back(i);
    CHECK(are_isomorphic(p, chain_product(sizes)));
  }
}

TEST_CASE("join-irreducibles") {
  CHECK(join_irreducibles(1).empty());
  CHECK(join_irreducibles(2) == std::vector<Permutation>{P("21")});
  const auto three = join_irreducibles(3);
  CHECK(std::set<Permutation>(three.begin(), three.end()) == std::set<Permutation>{P("213"), P("312"), P("132")});
  for (int n = 1; n <= 6; ++n) {
    const auto p = order_poset(Order::middle, n);
    std::set<Permutation> expected;
    for (Index i = 0; i < p.size(); ++i) {
      if (p.lower_covers(i).size() == 1) expected.insert(P(p.label(i).c_str()));
    }
    const auto got = join_irreducibles(n);
    CHECK(got.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(std::set<Permutation>(got.begin(), got.end()) == expected);
    for (const auto& a : got) CHECK(inversion_sequence(a).nonzero_count() == 1);
  }
}

TEST_CASE("Mobius closed form") {
  CHECK(mobius_middle(P("123"), P("231")) == 1);
  CHECK(mobius_middle(P("123"), P("312")) == 0);
  CHECK(mobius_middle(P("2413"), P("2413")) == 1);
  CHECK(mobius_middle(P("321"), P("123")) == 0);
  for (int n = 1; n <= 4; ++n) {
    const auto p = order_poset(Order::middle, n);
    for (Index s = 0; s < p.size(); ++s) {
      const auto mu = mobius_from(p, s);
      for (Index u = 0; u < p.size(); ++u) CHECK(mu[u] == mobius_middle(P(p.label(s).c_str()), P(p.label(u).c_str())));
    }
  }
}

TEST_CASE("weak and Bruhat examples") {
  CHECK(weak_covers(P("123"), P("213")));
  CHECK_FALSE(weak_covers(P("213"), P("312")));
  for (const auto& w : all_permutations(4)) CHECK(weak_leq(Permutation::identity(4), w));
  CHECK(bruhat_covers(P("132"), P("231")));
  CHECK(bruhat_leq(P("213"), P("312")));
  CHECK_FALSE(bruhat_covers(P("123"), P("321")));
  CHECK_THROWS_AS(bruhat_leq(P("12"), P("123")), SizeMismatch);
}

TEST_CASE("weak and Bruhat orders match independent criteria") {
  for (int n = 1; n <= 4; ++n) {
    const auto all = all_permutations(n);
    for (const auto& v : all) {
      for (const auto& w : all) {
        CHECK(weak_leq(v, w) == inversion_set_leq(v, w));
        CHECK(bruhat_leq(v, w) == tableau_leq(v, w));
      }
    }
  }
  for (int n = 5; n <= 6; ++n) {
    const auto weak = order_poset(Order::weak, n);
    const auto bruhat = order_poset(Order::bruhat, n);
    std::vector<Permutation> elems;
    for (const auto& label : weak.labels()) elems.push_back(P(label.c_str()));
    bool ok = true;
    for (Index a = 0; a < elems.size(); ++a) {
      for (Index b = 0; b < elems.size(); ++b) {
        ok &= weak.leq(a, b) == inversion_set_leq(elems[a], elems[b]);
        ok &= bruhat.leq(a, b) == tableau_leq(elems[a], elems[b]);
      }
    }
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("weak refines middle refines Bruhat") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_permutations(n);
    bool ok = true;
    for (const auto& v : all) {
      for (const auto& w : all) {
        const bool middle = coordinatewise(v, w);
        if (inversion_set_leq(v, w)) ok &= middle;
        if (middle) ok &= tableau_leq(v, w);
      }
    }
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("middle order coincides with Bruhat on 213-avoiders and weak on 132-avoiders") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_permutations(n);
    bool bruhat_ok = true;
    bool weak_ok = true;
    for (const auto& v : all) {
      for (const auto& w : all) {
        const bool middle = coordinatewise(v, w);
        if (n < 3 || (avoids_classical(v, P("213")) && avoids_classical(w, P("213")))) bruhat_ok &= middle == tableau_leq(v, w);
        if (n < 3 || (avoids_classical(v, P("132")) && avoids_classical(w, P("132")))) weak_ok &= middle == inversion_set_leq(v, w);
      }
    }
    CHECK_MESSAGE(bruhat_ok, "n = " << n);
    CHECK_MESSAGE(weak_ok, "n = " << n);
  }
}

TEST_CASE("cover mesh witness") {
  CHECK(cover_mesh_witness(P("123"), P("132")) == std::pair<int, int>{2, 3});
  CHECK(cover_mesh_witness(P("132"), P("312")) == std::pair<int, int>{1, 3});
  CHECK_FALSE(cover_mesh_witness(P("123"), P("321")).has_value());
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_permutations(n);
    bool ok = true;
    for (const auto& v : all) {
      for (const auto& w : middle_upper_covers(v)) {
        // Exactly one mesh occurrence swaps into w, and it raises coordinate i by one.
        int swaps = 0;
        for (const auto& occ : mesh_occurrences(v, middle_cover_mesh())) {
          std::vector<int> word(v.word().begin(), v.word().end());
          std::swap(word[occ[0] - 1], word[occ[1] - 1]);
          swaps += Permutation(word) == w;
        }
        ok &= swaps == 1;
        const auto witness = cover_mesh_witness(v, w);
        ok &= witness.has_value() &&
              inversion_sequence(w).coord(witness->second) == inversion_sequence(v).coord(witness->second) + 1;
      }
      if (n <= 5) {
        for (const auto& w : all) ok &= middle_covers(v, w) == cover_mesh_witness(v, w).has_value();
      }
    }
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("cover lists") {
  for (int n = 1; n <= 5; ++n) {
    const auto p = order_poset(Order::middle, n);
    for (Index i = 0; i < p.size(); ++i) {
      const auto v = P(p.label(i).c_str());
      CHECK(middle_upper_covers(v).size() == p.upper_covers(i).size());
      CHECK(middle_lower_covers(v).size() == p.lower_covers(i).size());
    }
  }
  const auto weak = order_poset(Order::weak, 4);
  const auto bruhat = order_poset(Order::bruhat, 4);
  for (Index i = 0; i < weak.size(); ++i) {
    CHECK(weak_upper_covers(P(weak.label(i).c_str())).size() == weak.upper_covers(i).size());
    CHECK(bruhat_upper_covers(P(bruhat.label(i).c_str())).size() == bruhat.upper_covers(i).size());
  }
}

TEST_CASE("Hasse diagrams of the three orders on S_3") {
  const std::set<Edge> middle{{"123", "213"}, {"123", "132"}, {"213", "231"}, {"132", "231"},
                              {"132", "312"}, {"231", "321"}, {"312", "321"}};
  const std::set<Edge> bruhat{{"123", "213"}, {"123", "132"}, {"213", "231"}, {"213", "312"},
                              {"132", "231"}, {"132", "312"}, {"231", "321"}, {"312", "321"}};
  const std::set<Edge> weak{{"123", "213"}, {"123", "132"}, {"132", "312"},
                            {"213", "231"}, {"231", "321"}, {"312", "321"}};
  CHECK(edge_set(order_poset(Order::middle, 3)) == middle);
  CHECK(edge_set(order_poset(Order::bruhat, 3)) == bruhat);
  CHECK(edge_set(order_poset(Order::weak, 3)) == weak);
  std::vector<FinitePoset::Cover> drawn;
  const auto p = order_poset(Order::middle, 3);
  for (const auto& [lo, hi] : middle) drawn.emplace_back(*p.index_of(lo), *p.index_of(hi));
  CHECK(FinitePoset::from_covers(p.labels(), drawn) == p);
}

TEST_CASE("order names") {
  CHECK(parse_order("middle") == Order::middle);
  CHECK(order_name(Order::bruhat) == "bruhat");
  CHECK_THROWS_AS(parse_order("tamari"), std::invalid_argument);
  CHECK_THROWS_AS(order_poset(Order::middle, 9), LimitExceeded);
}
