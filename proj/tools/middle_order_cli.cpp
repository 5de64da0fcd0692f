#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "middle_order/cli.hpp"
#include "middle_order/verify.hpp"

namespace cli = middle_order::cli;

int main(int argc, char** argv) {
  CLI::App app{"Middle order on permutations: tables, Hasse diagrams, queries and verification", "middle-order"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "Print a counting table");
  std::string table_kind;
  int table_n = 5;
  std::string table_format = "csv";
  std::optional<int> table_limit;
  table->add_option("kind", table_kind, "intervals | boolean | euler | stirling")->required();
  table->add_option("--n", table_n, "Largest row")->check(CLI::PositiveNumber);
  table->add_option("--format", table_format, "csv | json | oeis");
  table->add_option("--limit", table_limit, "Override the size ceiling");

  auto* hasse = app.add_subcommand("hasse", "Print a Hasse diagram as DOT");
  std::string hasse_order = "middle";
  int hasse_n = 3;
  std::string hasse_label = "word";
  int hasse_limit = cli::kDefaultDiagramLimit;
  hasse->add_option("--order", hasse_order, "middle | bruhat | weak | involutions | parking | regular");
  hasse->add_option("--n", hasse_n, "Size")->check(CLI::PositiveNumber);
  hasse->add_option("--label", hasse_label, "word | code");
  hasse->add_option("--limit", hasse_limit, "Override the size ceiling");

  auto* query = app.add_subcommand("query", "Evaluate one expression");
  std::vector<std::string> query_words;
  query->add_option("expr", query_words, "invseq W | perm X | meet V W | join V W | mobius V W | mobius-inv W | "
                                         "heyting V W | pseudo V | euler W | covers W")
      ->required();

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  std::string verify_suite = "all";
  int verify_n_max = 4;
  int verify_limit = 0;
  bool verify_deep = false;
  verify->add_option("--suite", verify_suite,
                     "bijection | sandwich | mesh | tables | mobius | involutions | heyting | parking | all");
  verify->add_option("--n-max", verify_n_max, "Largest size")->check(CLI::PositiveNumber);
  verify->add_option("--limit", verify_limit, "Override every per-check size cap");
  verify->add_flag("--deep", verify_deep, "Use the larger per-check caps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*table) {
      const auto t = cli::build_table(cli::parse_table_kind(table_kind), table_n, table_limit);
      std::cout << cli::format_table(t, cli::parse_table_format(table_format));
    } else if (*hasse) {
      const auto label = hasse_label == "code"   ? cli::NodeLabel::code
                         : hasse_label == "word" ? cli::NodeLabel::word
                                                 : throw std::invalid_argument("unknown label '" + hasse_label + "'");
      std::cout << cli::hasse_dot(cli::parse_diagram(hasse_order), hasse_n, label, hasse_limit);
    } else if (*query) {
      std::cout << cli::run_query(query_words) << '\n';
    } else if (*verify) {
      middle_order::VerifyOptions options;
      options.deep = verify_deep;
      options.limit = verify_limit;
      const auto report = middle_order::run_suite(middle_order::parse_suite(verify_suite), verify_n_max, options);
      std::cout << report.text();
      return report.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
