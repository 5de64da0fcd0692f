#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "middle_order/involutions.hpp"
#include "middle_order/orders.hpp"

using namespace middle_order;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }
InversionSequence X(std::vector<int> coords) { return InversionSequence(std::move(coords)); }

std::string code(const std::string& word) {
  std::string out;
  const auto x = inversion_sequence(parse_permutation(word));
  for (int c : x.coords()) out += static_cast<char>('0' + c);
  return out;
}

// Brute force over all index intervals.
std::vector<Cluster> naive_clusters(const InversionSequence& y) {
  const int n = y.size();
  const auto good = [&](int a, int b) {
    if (a < 1 || b > n) return false;
    for (int j = 0; j <= b - a; ++j) {
      if (y.coord(a + j) < j) return false;
    }
    return true;
  };
  std::vector<Cluster> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      if (good(a, b) && !good(a - 1, b) && !good(a, b + 1)) out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("involution sequence recursion") {
  CHECK(involution_seq_check(X({0, 0, 0, 0})));
  CHECK(involution_seq_check(X({0, 1, 0, 1})));
  CHECK_FALSE(involution_seq_check(X({0, 0, 1, 1})));
  for (int n = 1; n <= 8; ++n) {
    bool ok = true;
    for (const auto& x : all_inversion_sequences(n)) ok &= involution_seq_check(x) == is_involution(from_inversion_sequence(x));
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("involution counts") {
  CHECK(involution_count(0) == 1);
  CHECK(involution_count(1) == 1);
  CHECK(involution_count(4) == 10);
  CHECK(involution_count(6) == 76);
  for (int n = 1; n <= 8; ++n) CHECK(BigInt(all_involutions(n).size()) == involution_count(n));
  CHECK(all_involutions(8).size() == 764);
}

TEST_CASE("slow-climbing sequences") {
  CHECK(is_slow_climbing(X({0, 1, 2, 3})));
  CHECK_FALSE(is_slow_climbing(X({0, 0, 2, 2})));
  CHECK(is_slow_climbing(InversionSequence::zero(5)));
  CHECK(slow_climb_decompose(X({0, 1, 0, 1})).blocks == std::vector<std::vector<int>>{{0, 1}, {0, 1}});
  CHECK(slow_climb_decompose(X({0, 0, 0})).block_count() == 3);
  CHECK(slow_climb_decompose(X({0, 1, 2, 3})).blocks == std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK_THROWS_AS(slow_climb_decompose(X({0, 0, 2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(slow_climb_decompose(X({0, 0, 1, 1})), std::invalid_argument);
}

TEST_CASE("slow-climbing involutions are exactly the block concatenations") {
  for (int n = 1; n <= 8; ++n) {
    bool ok = true;
    for (const auto& x : all_inversion_sequences(n)) {
      if (!involution_seq_check(x)) continue;
      bool decomposes = true;
      try {
        const auto d = slow_climb_decompose(x);
        std::vector<int> flat;
        for (const auto& block : d.blocks) flat.insert(flat.end(), block.begin(), block.end());
        ok &= flat == std::vector<int>(x.coords().begin(), x.coords().end());
        ok &= x.nonzero_count() == n - d.block_count();
      } catch (const std::invalid_argument&) {
        decomposes = false;
      }
      ok &= decomposes == is_slow_climbing(x);
    }
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("meets of slow-climbing involutions") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<Permutation> slow;
    for (const auto& w : all_involutions(n)) {
      if (is_slow_climbing(inversion_sequence(w))) slow.push_back(w);
    }
    bool ok = true;
    for (const auto& v : slow) {
      for (const auto& w : slow) {
        const auto m = meet(v, w);
        ok &= is_involution(m) && is_slow_climbing(inversion_sequence(m));
      }
    }
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("clusters") {
  CHECK(clusters(X({0, 1, 2, 0, 1})) == std::vector<Cluster>{{1, 3}, {4, 5}});
  CHECK(clusters(InversionSequence::zero(3)) == std::vector<Cluster>{{1, 1}, {2, 2}, {3, 3}});
  const auto c = clusters(X({0, 0, 2, 2}));
  CHECK(std::set<Cluster>(c.begin(), c.end()) == std::set<Cluster>{{2, 4}, {1, 1}});
  for (int n = 1; n <= 7; ++n) {
    bool ok = true;
    for (const auto& x : all_inversion_sequences(n)) {
      const auto got = clusters(x);
      ok &= got == naive_clusters(x);
      std::vector<int> covered(static_cast<std::size_t>(n + 1), 0);
      for (const auto& a : got) {
        for (int i = a.first; i <= a.last; ++i) covered[i] = 1;
        for (const auto& b : got) ok &= a == b || !(b.first <= a.first && a.last <= b.last);
      }
      ok &= std::count(covered.begin() + 1, covered.end(), 1) == n;
    }
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("maximal slow-climbing involutions below w") {
  CHECK(maximal_slow_climbing_below(P("4321")) == std::vector<Permutation>{P("4321")});
  CHECK(maximal_slow_climbing_below(P("3412")) == std::vector<Permutation>{P("1432")});
  CHECK_THROWS_AS(maximal_slow_climbing_below(P("231")), std::invalid_argument);
  for (int n = 1; n <= 7; ++n) {
    bool ok = true;
    for (const auto& w : all_involutions(n)) {
      const auto m = maximal_slow_climbing_below(w);
      if (is_slow_climbing(inversion_sequence(w))) ok &= m == std::vector<Permutation>{w};
      for (const auto& a : m) {
        ok &= middle_leq(a, w);
        for (const auto& b : m) ok &= a == b || !middle_leq(a, b);
      }
      if (w != Permutation::identity(n)) {
        auto wedge = m.front();
        for (const auto& a : m) wedge = meet(wedge, a);
        ok &= wedge != Permutation::identity(n);
      }
    }
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("Mobius of principal ideals of involutions") {
  CHECK(mobius_involution_ideal(P("4321")) == -1);
  CHECK(mobius_involution_ideal(P("2143")) == 1);
  CHECK(mobius_involution_ideal(P("3412")) == 0);
  CHECK_THROWS_AS(mobius_involution_ideal(P("231")), std::invalid_argument);
  for (int n = 1; n <= 7; ++n) {
    const auto p = involution_poset(n);
    const auto mu = mobius_from(p, *p.index_of(to_string(Permutation::identity(n))));
    for (Index u = 0; u < p.size(); ++u) CHECK(mu[u] == mobius_involution_ideal(P(p.label(u).c_str())));
  }
}

TEST_CASE("on boolean ideals the involution Mobius function is the middle one") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : all_involutions(n)) {
      const auto x = inversion_sequence(w);
      if (std::all_of(x.coords().begin(), x.coords().end(), [](int c) { return c <= 1; })) {
        CHECK(mobius_involution_ideal(w) == mobius_middle(Permutation::identity(n), w));
      }
    }
  }
}

TEST_CASE("I_4 is neither graded nor a lattice") {
  const auto p = involution_poset(4);
  CHECK(p.size() == 10);
  const auto graded = is_graded(p);
  CHECK_FALSE(graded.graded);
  CHECK(graded.witness.has_value());
  const auto lattice = is_lattice(p);
  CHECK_FALSE(lattice.lattice);
  CHECK(lattice.witness.has_value());
}

TEST_CASE("Hasse diagram of I_4") {
  const std::set<std::pair<std::string, std::string>> drawn{
      {"0000", "0100"}, {"0000", "0010"}, {"0000", "0001"}, {"0100", "0120"}, {"0100", "0101"},
      {"0010", "0120"}, {"0010", "0012"}, {"0001", "0101"}, {"0001", "0012"}, {"0101", "0113"},
      {"0012", "0113"}, {"0012", "0022"}, {"0120", "0123"}, {"0022", "0123"}, {"0113", "0123"}};
  const auto p = involution_poset(4);
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [lo, hi] : p.covers()) edges.emplace(code(p.label(lo)), code(p.label(hi)));
  CHECK(edges == drawn);
  std::set<std::string> words(p.labels().begin(), p.labels().end());
  CHECK(words == std::set<std::string>{"1234", "2134", "1324", "1243", "3214", "2143", "1432", "4231", "3412", "4321"});
}
