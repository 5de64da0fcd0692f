#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "middle_order/cli.hpp"
#include "middle_order/enumeration.hpp"
#include "middle_order/errors.hpp"
#include "middle_order/heyting.hpp"
#include "middle_order/involutions.hpp"
#include "middle_order/orders.hpp"
#include "middle_order/parking.hpp"
#include "middle_order/permutation.hpp"
#include "middle_order/verify.hpp"

namespace py = pybind11;
namespace mo = middle_order;

namespace {

// Accepts "415623", "10,3,1,..." or a sequence of ints.
mo::Permutation perm(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return mo::parse_permutation(obj.cast<std::string>());
  return mo::Permutation(obj.cast<std::vector<int>>());
}

std::vector<int> word(const mo::Permutation& w) { return {w.word().begin(), w.word().end()}; }

py::int_ big(const mo::BigInt& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

py::list row(const mo::CountRow& values) {
  py::list out;
  for (const auto& v : values) out.append(big(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Middle order on permutations";

  py::register_exception<mo::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<mo::SizeMismatch>(m, "SizeMismatch", PyExc_ValueError);
  py::register_exception<mo::LimitExceeded>(m, "LimitExceeded", PyExc_ValueError);

  m.def("inversion_sequence", [](const py::object& w) {
    const auto x = mo::inversion_sequence(perm(w));
    return std::vector<int>(x.coords().begin(), x.coords().end());
  }, py::arg("w"));
  m.def("from_inversion_sequence", [](std::vector<int> x) {
    return word(mo::from_inversion_sequence(mo::InversionSequence(std::move(x))));
  }, py::arg("x"));
  m.def("to_string", [](const py::object& w) { return mo::to_string(perm(w)); }, py::arg("w"));

  m.def("middle_leq", [](const py::object& v, const py::object& w) { return mo::middle_leq(perm(v), perm(w)); });
  m.def("middle_covers", [](const py::object& v, const py::object& w) { return mo::middle_covers(perm(v), perm(w)); });
  m.def("weak_leq", [](const py::object& v, const py::object& w) { return mo::weak_leq(perm(v), perm(w)); });
  m.def("bruhat_leq", [](const py::object& v, const py::object& w) { return mo::bruhat_leq(perm(v), perm(w)); });
  m.def("meet", [](const py::object& v, const py::object& w) { return mo::to_string(mo::meet(perm(v), perm(w))); });
  m.def("join", [](const py::object& v, const py::object& w) { return mo::to_string(mo::join(perm(v), perm(w))); });
  m.def("rank", [](const py::object& w) { return mo::rank(perm(w)); });
  m.def("mobius", [](const py::object& v, const py::object& w) { return mo::mobius_middle(perm(v), perm(w)); });
  m.def("join_irreducibles", [](int n) {
    std::vector<std::string> out;
    for (const auto& a : mo::join_irreducibles(n)) out.push_back(mo::to_string(a));
    return out;
  });

  m.def("relative_pseudocomplement", [](const py::object& v, const py::object& w) {
    return mo::to_string(mo::relative_pseudocomplement(perm(v), perm(w)));
  });
  m.def("pseudocomplement", [](const py::object& v) { return mo::to_string(mo::pseudocomplement(perm(v))); });
  m.def("is_regular", [](const py::object& v) { return mo::is_regular(perm(v)); });

  m.def("is_involution", [](const py::object& w) { return mo::is_involution(perm(w)); });
  m.def("mobius_involution", [](const py::object& w) { return mo::mobius_involution_ideal(perm(w)); });
  m.def("involution_count", [](int n) { return big(mo::involution_count(n)); });
  m.def("euler_characteristic", [](const py::object& w) { return mo::euler_characteristic(perm(w)); });

  m.def("intervals_by_rank", [](int n) { return row(mo::intervals_by_rank(n)); });
  m.def("boolean_by_rank", [](int n) { return row(mo::boolean_by_rank(n)); });
  m.def("euler_distribution", [](int n) { return row(mo::euler_distribution(n)); });
  m.def("interval_count", [](int n) { return big(mo::interval_count_total(n)); });
  m.def("boolean_interval_count", [](int n) { return big(mo::boolean_interval_total(n)); });
  m.def("stirling_first", [](int n, int j) { return big(mo::stirling_first_unsigned(n, j)); });

  m.def("is_parking_function", [](std::vector<int> prefs) { return mo::is_parking_function(prefs); });
  m.def("parking_function_count", [](int n) { return mo::all_parking_functions(n).size(); });

  m.def("table", [](const std::string& kind, int n, const std::string& format) {
    return mo::cli::format_table(mo::cli::build_table(mo::cli::parse_table_kind(kind), n), mo::cli::parse_table_format(format));
  }, py::arg("kind"), py::arg("n"), py::arg("format") = "csv");
  m.def("hasse", [](const std::string& order, int n, const std::string& label) {
    const auto node = label == "code" ? mo::cli::NodeLabel::code : mo::cli::NodeLabel::word;
    return mo::cli::hasse_dot(mo::cli::parse_diagram(order), n, node);
  }, py::arg("order"), py::arg("n"), py::arg("label") = "word");
  m.def("query", [](const std::vector<std::string>& words) { return mo::cli::run_query(words); }, py::arg("words"));
  m.def("verify", [](const std::string& suite, int n_max, bool deep) {
    mo::VerifyOptions options;
    options.deep = deep;
    const auto report = mo::run_suite(mo::parse_suite(suite), n_max, options);
    return py::make_tuple(report.passed(), report.text());
  }, py::arg("suite"), py::arg("n_max"), py::arg("deep") = false);
}
