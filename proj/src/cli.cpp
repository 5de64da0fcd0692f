#include "middle_order/cli.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "middle_order/errors.hpp"
#include "middle_order/heyting.hpp"
#include "middle_order/involutions.hpp"
#include "middle_order/orders.hpp"
#include "middle_order/parking.hpp"
#include "middle_order/permutation.hpp"

namespace middle_order::cli {

namespace {

std::string compact_code(const InversionSequence& x) {
  if (x.size() > 10) return to_string(x);
  std::string out;
  for (int c : x.coords()) out += static_cast<char>('0' + c);
  return out;
}

Permutation permutation_argument(const std::string& text, std::size_t argument) {
  try {
    return parse_permutation(text);
  } catch (const ParseError& e) {
    throw ParseError("argument " + std::to_string(argument) + " '" + text + "': " + e.reason(), e.position());
  }
}

void require_arity(std::span<const std::string> words, std::size_t operands) {
  if (words.size() != operands + 1) {
    throw std::invalid_argument("'" + words[0] + "' takes " + std::to_string(operands) + " argument(s)");
  }
}

}  // namespace

TableKind parse_table_kind(std::string_view name) {
  if (name == "intervals") return TableKind::intervals;
  if (name == "boolean") return TableKind::boolean;
  if (name == "euler") return TableKind::euler;
  if (name == "stirling") return TableKind::stirling;
  throw std::invalid_argument("unknown table kind '" + std::string(name) + "'");
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  if (name == "oeis") return TableFormat::oeis;
  throw std::invalid_argument("unknown table format '" + std::string(name) + "'");
}

CountTable build_table(TableKind kind, int n_max, std::optional<int> limit) {
  if (n_max < 1) throw std::invalid_argument("n must be at least 1");
  CountTable table;
  table.first_n = 1;
  switch (kind) {
    case TableKind::intervals:
      table.kind = "intervals";
      for (int n = 1; n <= n_max; ++n) table.rows.push_back(intervals_by_rank(n, limit.value_or(kDefaultCountingLimit)));
      break;
    case TableKind::boolean:
      table.kind = "boolean";
      for (int n = 1; n <= n_max; ++n) table.rows.push_back(boolean_by_rank(n, limit.value_or(kDefaultCountingLimit)));
      break;
    case TableKind::euler:
      table.kind = "euler";
      for (int n = 1; n <= n_max; ++n) table.rows.push_back(euler_distribution(n, limit.value_or(kDefaultExhaustiveLimit)));
      break;
    case TableKind::stirling: {
      table.kind = "stirling";
      const int ceiling = limit.value_or(kDefaultCountingLimit);
      if (n_max > ceiling) throw LimitExceeded("stirling table", n_max, ceiling);
      auto rows = stirling_first_rows(n_max);
      table.rows.assign(rows.begin() + 1, rows.end());
      break;
    }
  }
  return table;
}

std::string format_table(const CountTable& table, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::csv:
      out << "n,k,value\n";
      for (int n = table.first_n; n <= table.last_n(); ++n) {
        const auto& row = table.row(n);
        for (std::size_t k = 0; k < row.size(); ++k) out << n << ',' << k << ',' << row[k] << '\n';
      }
      break;
    case TableFormat::json:
      out << "{\"kind\": \"" << table.kind << "\", \"rows\": [";
      for (int n = table.first_n; n <= table.last_n(); ++n) {
        if (n > table.first_n) out << ", ";
        out << "{\"n\": " << n << ", \"values\": [";
        const auto& row = table.row(n);
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? ", " : "") << row[k];
        out << "]}";
      }
      out << "]}\n";
      break;
    case TableFormat::oeis: {
      std::size_t index = 1;
      for (const auto& row : table.rows) {
        for (const auto& value : row) out << index++ << ' ' << value << '\n';
      }
      break;
    }
  }
  return out.str();
}

Diagram parse_diagram(std::string_view name) {
  if (name == "middle") return Diagram::middle;
  if (name == "bruhat") return Diagram::bruhat;
  if (name == "weak") return Diagram::weak;
  if (name == "involutions") return Diagram::involutions;
  if (name == "parking") return Diagram::parking;
  if (name == "regular") return Diagram::regular;
  throw std::invalid_argument("unknown order '" + std::string(name) + "'");
}

FinitePoset diagram_poset(Diagram diagram, int n, NodeLabel label, int limit) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > limit) throw LimitExceeded("hasse", n, limit);
  FinitePoset poset = [&] {
    switch (diagram) {
      case Diagram::middle: return order_poset(Order::middle, n, limit);
      case Diagram::bruhat: return order_poset(Order::bruhat, n, limit);
      case Diagram::weak: return order_poset(Order::weak, n, limit);
      case Diagram::involutions: return involution_poset(n, limit);
      case Diagram::parking: return parking_poset(n, limit);
      case Diagram::regular: return regular_subposet(n, limit);
    }
    throw std::logic_error("unhandled diagram");
  }();
  if (label == NodeLabel::word || diagram == Diagram::parking) return poset;

  std::vector<std::string> labels;
  for (const auto& word : poset.labels()) labels.push_back(compact_code(inversion_sequence(parse_permutation(word))));
  return FinitePoset::from_covers(std::move(labels), poset.covers());
}

std::string hasse_dot(Diagram diagram, int n, NodeLabel label, int limit) {
  return to_dot(diagram_poset(diagram, n, label, limit), "hasse");
}

std::string run_query(std::span<const std::string> words) {
  if (words.empty()) throw std::invalid_argument("empty query");
  const std::string& op = words[0];
  const auto perm = [&](std::size_t i) { return permutation_argument(words[i], i); };

  if (op == "invseq") {
    require_arity(words, 1);
    return to_string(inversion_sequence(perm(1)));
  }
  if (op == "perm") {
    require_arity(words, 1);
    try {
      return to_string(from_inversion_sequence(parse_inversion_sequence(words[1])));
    } catch (const ParseError& e) {
      throw ParseError("argument 1 '" + words[1] + "': " + e.reason(), e.position());
    }
  }
  if (op == "meet" || op == "join" || op == "mobius" || op == "heyting") {
    require_arity(words, 2);
    const auto v = perm(1);
    const auto w = perm(2);
    if (op == "meet") return to_string(meet(v, w));
    if (op == "join") return to_string(join(v, w));
    if (op == "mobius") return std::to_string(mobius_middle(v, w));
    return to_string(relative_pseudocomplement(v, w));
  }
  if (op == "mobius-inv") {
    require_arity(words, 1);
    return std::to_string(mobius_involution_ideal(perm(1)));
  }
  if (op == "pseudo") {
    require_arity(words, 1);
    return to_string(pseudocomplement(perm(1)));
  }
  if (op == "euler") {
    require_arity(words, 1);
    return std::to_string(euler_characteristic(perm(1)));
  }
  if (op == "covers") {
    require_arity(words, 1);
    std::string out;
    for (const auto& v : middle_lower_covers(perm(1))) out += (out.empty() ? "" : " ") + to_string(v);
    return out;
  }
  throw std::invalid_argument("unknown query '" + op + "'");
}

}  // namespace middle_order::cli
