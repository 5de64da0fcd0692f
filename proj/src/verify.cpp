#include "middle_order/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "middle_order/enumeration.hpp"
#include "middle_order/heyting.hpp"
#include "middle_order/involutions.hpp"
#include "middle_order/orders.hpp"
#include "middle_order/parking.hpp"
#include "middle_order/permutation.hpp"
#include "middle_order/poset.hpp"

namespace middle_order {

namespace {

// An empty string means the check held; anything else is the counterexample.
using Check = std::function<std::string(int n)>;

const std::vector<std::vector<long>> kTable1 = {
    {1},
    {2, 1},
    {6, 7, 4, 1},
    {24, 46, 49, 36, 18, 6, 1},
    {120, 326, 501, 562, 497, 354, 204, 94, 33, 8, 1},
};

const std::vector<std::vector<long>> kTable2 = {
    {1},
    {2, 1},
    {6, 7, 2},
    {24, 46, 29, 6},
    {120, 326, 329, 146, 24},
};

class Runner {
public:
  Runner(int n_max, const VerifyOptions& options) : n_max_(n_max), options_(options) {}

  void run(const std::string& name, int shallow_cap, int deep_cap, const Check& check) {
    int cap = options_.deep ? deep_cap : shallow_cap;
    if (options_.limit > 0) cap = options_.limit;
    const int top = std::min(n_max_, cap);
    CheckResult result{name, true, ""};
    try {
      for (int n = 1; n <= top; ++n) {
        std::string failure = check(n);
        if (!failure.empty()) {
          result.passed = false;
          result.detail = "n = " + std::to_string(n) + ": " + failure;
          break;
        }
      }
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("error: ") + e.what();
    }
    if (result.passed) result.detail = top < 1 ? "no sizes in range" : "n = 1.." + std::to_string(top);
    report_.checks.push_back(std::move(result));
  }

  VerifyReport take() { return std::move(report_); }

private:
  int n_max_;
  VerifyOptions options_;
  VerifyReport report_;
};

std::string row_mismatch(const CountRow& row, const std::vector<long>& expected) {
  if (row.size() != expected.size()) return "row length " + std::to_string(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k] != expected[k]) return "k = " + std::to_string(k) + " gives " + row[k].str();
  }
  return {};
}

std::vector<Permutation> elements(const FinitePoset& p) {
  std::vector<Permutation> result;
  for (const auto& label : p.labels()) result.push_back(parse_permutation(label));
  return result;
}

void bijection_suite(Runner& r) {
  r.run("bijection: inversion sequences encode S_n", 7, 8, [](int n) {
    return round_trip_all(n, n) ? std::string() : "round trip failed";
  });
  r.run("bijection: right-to-left minima are the zero coordinates", 7, 8, [](int n) {
    for (const auto& w : all_permutations(n, n)) {
      const auto x = inversion_sequence(w);
      std::vector<int> zeros;
      for (int i = 1; i <= n; ++i) {
        if (x.coord(i) == 0) zeros.push_back(i);
      }
      if (zeros != right_to_left_minima(w)) return to_string(w);
    }
    return std::string();
  });
  r.run("bijection: Foata map sends cycles to right-to-left minima", 6, 8, [](int n) {
    std::vector<Permutation> images;
    for (const auto& w : all_permutations(n, n)) {
      auto image = foata_image(w);
      if (static_cast<int>(right_to_left_minima(image).size()) != cycle_count(w)) return to_string(w);
      images.push_back(std::move(image));
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return std::string("not injective");
    return std::string();
  });
}

void sandwich_suite(Runner& r) {
  r.run("sandwich: weak <= middle <= Bruhat", 5, 6, [](int n) {
    const auto weak = order_poset(Order::weak, n, n);
    const auto middle = order_poset(Order::middle, n, n);
    const auto bruhat = order_poset(Order::bruhat, n, n);
    for (Index a = 0; a < middle.size(); ++a) {
      if (!weak.up_set(a).is_subset_of(middle.up_set(a))) return "weak not inside middle at " + middle.label(a);
      if (!middle.up_set(a).is_subset_of(bruhat.up_set(a))) return "middle not inside Bruhat at " + middle.label(a);
    }
    return std::string();
  });
  const auto coincidence = [](Order other, const char* pattern) {
    return [other, pattern](int n) {
      const auto middle = order_poset(Order::middle, n, n);
      const auto rival = order_poset(other, n, n);
      const auto p = parse_permutation(pattern);
      std::vector<Index> subset;
      for (Index i = 0; i < middle.size(); ++i) {
        if (n < p.size() || avoids_classical(parse_permutation(middle.label(i)), p)) subset.push_back(i);
      }
      for (Index a : subset) {
        for (Index b : subset) {
          if (middle.leq(a, b) != rival.leq(a, b)) return middle.label(a) + " vs " + middle.label(b);
        }
      }
      return std::string();
    };
  };
  r.run("sandwich: middle = Bruhat on 213-avoiders", 5, 6, coincidence(Order::bruhat, "213"));
  r.run("sandwich: middle = weak on 132-avoiders", 5, 6, coincidence(Order::weak, "132"));
}

void mesh_suite(Runner& r) {
  r.run("mesh: worked example 1423", 1, 1, [](int) {
    const auto w = parse_permutation("1423");
    const auto p = parse_permutation("12");
    if (mesh_contains(w, MeshPattern(p, {})) != 4) return std::string("empty mesh count");
    if (mesh_contains(w, middle_cover_mesh()) != 3) return std::string("shaded mesh count");
    return std::string();
  });
  r.run("mesh: middle covers are mesh occurrences", 5, 6, [](int n) {
    const auto all = all_permutations(n, n);
    for (const auto& v : all) {
      for (const auto& w : all) {
        if (middle_covers(v, w) != cover_mesh_witness(v, w).has_value()) return to_string(v) + " " + to_string(w);
      }
    }
    return std::string();
  });
  r.run("mesh: weak and Bruhat covers are mesh occurrences", 5, 6, [](int n) {
    for (const auto& v : all_permutations(n, n)) {
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          if (v(a) > v(b)) continue;
          std::vector<int> word(v.word().begin(), v.word().end());
          std::swap(word[a - 1], word[b - 1]);
          const Permutation w(word);
          bool weak_mesh = false;
          bool bruhat_mesh = false;
          for (const auto& occ : mesh_occurrences(v, weak_cover_mesh())) weak_mesh |= occ == std::vector<int>{a, b};
          for (const auto& occ : mesh_occurrences(v, bruhat_cover_mesh())) bruhat_mesh |= occ == std::vector<int>{a, b};
          if (weak_covers(v, w) != weak_mesh) return "weak " + to_string(v) + " " + to_string(w);
          if (bruhat_covers(v, w) != bruhat_mesh) return "Bruhat " + to_string(v) + " " + to_string(w);
        }
      }
    }
    return std::string();
  });
}

void tables_suite(Runner& r) {
  r.run("tables: intervals by rank, n <= 5", 5, 5, [](int n) {
    return row_mismatch(intervals_by_rank(n), kTable1[static_cast<std::size_t>(n - 1)]);
  });
  r.run("tables: boolean intervals by rank, n <= 5 (formula and recursion)", 5, 5, [](int n) {
    const auto& expected = kTable2[static_cast<std::size_t>(n - 1)];
    auto failure = row_mismatch(boolean_by_rank(n), expected);
    if (failure.empty()) failure = row_mismatch(boolean_by_rank_recursive(n), expected);
    return failure;
  });
  r.run("tables: oracle intervals bucketed by rank", 5, 6, [](int n) {
    const auto p = order_poset(Order::middle, n, n);
    const auto perms = elements(p);
    const auto f = intervals_by_rank(n);
    const auto b = boolean_by_rank(n);
    CountRow all(f.size(), 0);
    CountRow boolean(b.size(), 0);
    for (const auto& [s, u] : enumerate_intervals(p)) {
      const int k = rank(perms[u]) - rank(perms[s]);
      ++all[static_cast<std::size_t>(k)];
      const auto members = interval_elements(p, s, u);
      if (members.size() != (std::size_t{1} << std::min(k, 20))) continue;
      if (are_isomorphic(induced_subposet(p, members), boolean_lattice(k))) ++boolean[static_cast<std::size_t>(k)];
    }
    if (all != f) return std::string("interval ranks differ");
    if (boolean != b) return std::string("boolean interval ranks differ");
    if (std::accumulate(f.begin(), f.end(), BigInt(0)) != interval_count_total(n)) return std::string("interval total");
    if (std::accumulate(b.begin(), b.end(), BigInt(0)) != boolean_interval_total(n)) return std::string("boolean total");
    return std::string();
  });
  r.run("tables: covering relations n!(n - H_n) and reflection lengths", 7, 8, [](int n) {
    const auto count = covering_relation_count(n);
    if (count.from_recursion != count.from_harmonic) return std::string("harmonic form differs");
    if (count.from_recursion != reflection_length_sum(n, n)) return std::string("reflection length sum differs");
    return std::string();
  });
  r.run("tables: reversed polynomial rows equal interval rows", 7, 12, [](int n) {
    auto p = polynomial_row(n);
    std::reverse(p.begin(), p.end());
    return p == intervals_by_rank(n) ? std::string() : std::string("rows differ");
  });
  r.run("tables: Euler characteristic distribution is c(n, n-k)", 7, 8, [](int n) {
    const auto row = euler_distribution(n, n);
    for (int k = 0; k < n; ++k) {
      if (row[static_cast<std::size_t>(k)] != stirling_first_unsigned(n, n - k)) return "k = " + std::to_string(k);
    }
    return std::string();
  });
}

void mobius_suite(Runner& r) {
  r.run("mobius: closed form equals the oracle on P_n", 5, 5, [](int n) {
    const auto p = order_poset(Order::middle, n, n);
    const auto perms = elements(p);
    for (Index s = 0; s < p.size(); ++s) {
      const auto mu = mobius_from(p, s);
      for (Index u = 0; u < p.size(); ++u) {
        if (mu[u] != mobius_middle(perms[s], perms[u])) return p.label(s) + " " + p.label(u);
      }
    }
    return std::string();
  });
  r.run("mobius: Euler characteristic is a valuation", 5, 5, [](int n) {
    const auto all = all_permutations(n, n);
    for (const auto& v : all) {
      for (const auto& w : all) {
        if (euler_characteristic(v) + euler_characteristic(w) !=
            euler_characteristic(meet(v, w)) + euler_characteristic(join(v, w))) {
          return to_string(v) + " " + to_string(w);
        }
      }
    }
    for (const auto& a : join_irreducibles(n)) {
      if (euler_characteristic(a) != 1) return "join-irreducible " + to_string(a);
    }
    return std::string();
  });
}

void involutions_suite(Runner& r) {
  r.run("involutions: sequence recursion matches membership", 7, 8, [](int n) {
    BigInt count = 0;
    for (const auto& x : all_inversion_sequences(n, n)) {
      const bool member = is_involution(from_inversion_sequence(x));
      if (member != involution_seq_check(x)) return to_string(x);
      if (member) ++count;
    }
    return count == involution_count(n) ? std::string() : std::string("count differs");
  });
  r.run("involutions: Mobius of principal ideals", 7, 8, [](int n) {
    const auto p = involution_poset(n, n);
    const auto bottom = p.index_of(to_string(Permutation::identity(n))).value();
    const auto mu = mobius_from(p, bottom);
    for (Index u = 0; u < p.size(); ++u) {
      if (mu[u] != mobius_involution_ideal(parse_permutation(p.label(u)))) return p.label(u);
    }
    return std::string();
  });
}

void heyting_suite(Runner& r) {
  r.run("heyting: worked example", 1, 1, [](int) {
    const auto v = parse_permutation("361592784");
    const auto w = parse_permutation("614928537");
    if (to_string(relative_pseudocomplement(v, w)) != "986421537") return std::string("relative pseudocomplement");
    if (to_string(pseudocomplement(v)) != "421356789") return std::string("pseudocomplement");
    return std::string();
  });
  r.run("heyting: adjunction over all triples", 4, 5, [](int n) {
    const auto all = all_permutations(n, n);
    for (const auto& v : all) {
      for (const auto& w : all) {
        const auto arrow = relative_pseudocomplement(v, w);
        for (const auto& z : all) {
          if (middle_leq(meet(v, z), w) != middle_leq(z, arrow)) return to_string(v) + " " + to_string(w) + " " + to_string(z);
        }
      }
    }
    return std::string();
  });
  r.run("heyting: regular elements by three criteria", 6, 8, [](int n) {
    int count = 0;
    for (const auto& v : all_permutations(n, n)) {
      if (!middle_leq(v, pseudocomplement(pseudocomplement(v)))) return "v <= ~~v fails at " + to_string(v);
      const bool regular = is_regular(v);
      if (regular != is_regular_by_coordinates(v) || regular != is_regular_by_patterns(v)) return to_string(v);
      count += regular;
    }
    return count == (1 << (n - 1)) ? std::string() : std::string("count ") + std::to_string(count);
  });
  r.run("heyting: regular elements form a boolean lattice", 5, 6, [](int n) {
    return are_isomorphic(regular_subposet(n, n), boolean_lattice(n - 1)) ? std::string() : std::string("not boolean");
  });
}

void parking_suite(Runner& r) {
  r.run("parking: sorted criterion matches simulation", 5, 6, [](int n) {
    std::vector<int> prefs(static_cast<std::size_t>(n), 1);
    long count = 0;
    while (true) {
      const bool sorted = is_parking_function(prefs);
      if (sorted != parks_all(prefs)) {
        std::string word;
        for (int v : prefs) word += (word.empty() ? "" : ",") + std::to_string(v);
        return word;
      }
      count += sorted;
      int i = n - 1;
      while (i >= 0 && prefs[static_cast<std::size_t>(i)] == n) prefs[static_cast<std::size_t>(i--)] = 1;
      if (i < 0) break;
      ++prefs[static_cast<std::size_t>(i)];
    }
    long expected = 1;
    for (int i = 1; i < n; ++i) expected *= n + 1;
    return count == expected ? std::string() : "count " + std::to_string(count);
  });
  r.run("parking: lattice with a pentagon", 4, 4, [](int n) {
    if (n < 3) return std::string();
    const auto p = parking_poset(n, n);
    if (!is_lattice(p).lattice) return std::string("not a lattice");
    if (!find_pentagon(p)) return std::string("no pentagon");
    std::vector<Index> witness;
    for (const auto& element : pentagon_witness(n)) witness.push_back(p.index_of(to_string(element)).value());
    return are_isomorphic(induced_subposet(p, witness), pentagon()) ? std::string() : std::string("witness not a pentagon");
  });
}

}  // namespace

Suite parse_suite(std::string_view name) {
  static const std::map<std::string_view, Suite> names = {
      {"bijection", Suite::bijection}, {"sandwich", Suite::sandwich},       {"mesh", Suite::mesh},
      {"tables", Suite::tables},       {"mobius", Suite::mobius},           {"involutions", Suite::involutions},
      {"heyting", Suite::heyting},     {"parking", Suite::parking},         {"all", Suite::all}};
  const auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  return it->second;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::bijection: return "bijection";
    case Suite::sandwich: return "sandwich";
    case Suite::mesh: return "mesh";
    case Suite::tables: return "tables";
    case Suite::mobius: return "mobius";
    case Suite::involutions: return "involutions";
    case Suite::heyting: return "heyting";
    case Suite::parking: return "parking";
    case Suite::all: return "all";
  }
  return "";
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  std::size_t failures = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    failures += !c.passed;
  }
  out << checks.size() - failures << '/' << checks.size() << " checks passed\n";
  return out.str();
}

VerifyReport run_suite(Suite suite, int n_max, const VerifyOptions& options) {
  Runner runner(n_max, options);
  const auto wanted = [suite](Suite s) { return suite == Suite::all || suite == s; };
  if (wanted(Suite::bijection)) bijection_suite(runner);
  if (wanted(Suite::sandwich)) sandwich_suite(runner);
  if (wanted(Suite::mesh)) mesh_suite(runner);
  if (wanted(Suite::tables)) tables_suite(runner);
  if (wanted(Suite::mobius)) mobius_suite(runner);
  if (wanted(Suite::involutions)) involutions_suite(runner);
  if (wanted(Suite::heyting)) heyting_suite(runner);
  if (wanted(Suite::parking)) parking_suite(runner);
  return runner.take();
}

}  // namespace middle_order
