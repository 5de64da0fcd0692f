#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "middle_order/enumeration.hpp"
#include "middle_order/poset.hpp"

namespace middle_order::cli {

enum class TableKind { intervals, boolean, euler, stirling };
enum class TableFormat { csv, json, oeis };

TableKind parse_table_kind(std::string_view name);
TableFormat parse_table_format(std::string_view name);

/// Rows 1..n_max. `limit` overrides the default size ceiling of the kind (counting limit for
/// closed forms, exhaustive limit for the Euler histogram).
CountTable build_table(TableKind kind, int n_max, std::optional<int> limit = std::nullopt);

/// csv: "n,k,value" header then one line per entry. json: {"kind", "rows": [{"n", "values"}]}
/// with values as bare integers. oeis: b-file lines "index value", rows flattened left to right,
/// index starting at 1.
std::string format_table(const CountTable& table, TableFormat format);

enum class Diagram { middle, bruhat, weak, involutions, parking, regular };
enum class NodeLabel { word, code };

inline constexpr int kDefaultDiagramLimit = 5;

Diagram parse_diagram(std::string_view name);

/// The poset drawn by `hasse`. NodeLabel::code relabels permutations by their inversion
/// sequences (parking functions are unaffected). Throws LimitExceeded above `limit`.
FinitePoset diagram_poset(Diagram diagram, int n, NodeLabel label = NodeLabel::word,
                          int limit = kDefaultDiagramLimit);

std::string hasse_dot(Diagram diagram, int n, NodeLabel label = NodeLabel::word, int limit = kDefaultDiagramLimit);

/// Evaluates one query ("invseq W", "meet V W", ...) and returns the answer without a
/// trailing newline. Throws ParseError for malformed arguments and std::invalid_argument for
/// unknown operations, wrong arity or size mismatches.
std::string run_query(std::span<const std::string> words);

}  // namespace middle_order::cli
