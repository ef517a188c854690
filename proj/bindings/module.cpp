// Python bindings: the core operations with words as plain strings at the
// boundary. Structured results keep their C++ types; word-valued fields are
// exposed as str properties.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "powfact/classes.hpp"
#include "powfact/extremal.hpp"
#include "powfact/powers.hpp"
#include "powfact/rauzy.hpp"
#include "powfact/search.hpp"
#include "powfact/word.hpp"

namespace py = pybind11;
using namespace powfact;

namespace {

Word W(const std::string& s) { return Word::parse(s); }

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const Word& w : ws) out.push_back(w.str());
  return out;
}

SearchBudget budget_of(std::uint64_t max_words) {
  SearchBudget b;
  if (max_words) b.max_words = max_words;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Distinct power factors, Rauzy-graph circuits and extremal "
      "repetition-rich words";
  m.attr("__version__") = "1.0.0";

  py::register_exception<FalsificationError>(m, "FalsificationError");

  py::class_<PowerFactor>(m, "PowerFactor")
      .def_property_readonly(
          "text", [](const PowerFactor& p) { return p.text.str(); })
      .def_property_readonly(
          "root", [](const PowerFactor& p) { return p.root.str(); })
      .def_readonly("exponent", &PowerFactor::exponent)
      .def("__repr__", [](const PowerFactor& p) {
        return "PowerFactor(" + p.text.str() + " = " + p.root.str() + "^" +
               std::to_string(p.exponent) + ")";
      });

  py::class_<ClassRecord>(m, "ClassRecord")
      .def_property_readonly(
          "canonical", [](const ClassRecord& r) { return r.canonical.str(); })
      .def_readonly("index", &ClassRecord::index)
      .def_readonly("mp", &ClassRecord::mp)
      .def_property_readonly(
          "max_pow", [](const ClassRecord& r) { return strs(r.max_pow); })
      .def_property_readonly(
          "members", [](const ClassRecord& r) { return strs(r.members); })
      .def_property_readonly(
          "prim_prime",
          [](const ClassRecord& r) { return strs(r.prim_prime); })
      .def("__repr__", [](const ClassRecord& r) {
        return "ClassRecord([" + r.canonical.str() +
               "], index=" + std::to_string(r.index) +
               ", mp=" + std::to_string(r.mp) + ")";
      });

  py::class_<RauzyGraph>(m, "RauzyGraph")
      .def_readonly("level", &RauzyGraph::level)
      .def_property_readonly(
          "vertices", [](const RauzyGraph& g) { return strs(g.vertices); })
      .def_property_readonly(
          "edges", [](const RauzyGraph& g) { return strs(g.edges); })
      .def("__repr__", [](const RauzyGraph& g) {
        return "RauzyGraph(level=" + std::to_string(g.level) + ", " +
               std::to_string(g.vertices.size()) + " vertices, " +
               std::to_string(g.edges.size()) + " edges)";
      });

  py::class_<SmallCircuit>(m, "SmallCircuit")
      .def_property_readonly("q",
                             [](const SmallCircuit& c) { return c.q.str(); })
      .def_readonly("level", &SmallCircuit::level)
      .def_property_readonly("size",
                             [](const SmallCircuit& c) { return c.size(); })
      .def(py::self == py::self)
      .def("__repr__", [](const SmallCircuit& c) {
        return "C(" + c.q.str() + "," + std::to_string(c.level) + ")";
      });

  py::class_<InjectionEntry>(m, "InjectionEntry")
      .def_property_readonly(
          "power", [](const InjectionEntry& e) { return e.power.str(); })
      .def_readonly("circuit", &InjectionEntry::circuit)
      .def("__repr__", [](const InjectionEntry& e) {
        return e.power.str() + " -> C(" + e.circuit.q.str() + "," +
               std::to_string(e.circuit.level) + ")";
      });

  py::class_<FamilyReport>(m, "FamilyReport")
      .def_readonly("k", &FamilyReport::k)
      .def_readonly("m", &FamilyReport::m)
      .def_readonly("n", &FamilyReport::n)
      .def_readonly("count", &FamilyReport::count)
      .def_readonly("expected_len", &FamilyReport::expected_len)
      .def_readonly("lower_bound", &FamilyReport::lower_bound)
      .def_readonly("upper_bound", &FamilyReport::upper_bound)
      .def_readonly("length_ok", &FamilyReport::length_ok)
      .def_readonly("count_ok", &FamilyReport::count_ok)
      .def_readonly("sqrt_bound_ok", &FamilyReport::sqrt_bound_ok)
      .def_readonly("slack_ok", &FamilyReport::slack_ok)
      .def_readonly("count_margin", &FamilyReport::count_margin)
      .def_readonly("upper_margin", &FamilyReport::upper_margin)
      .def("ok", &FamilyReport::ok)
      .def("__repr__", [](const FamilyReport& r) {
        return "FamilyReport(k=" + std::to_string(r.k) +
               ", m=" + std::to_string(r.m) + ", n=" + std::to_string(r.n) +
               ", count=" + std::to_string(r.count) + ")";
      });

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("n", &SearchResult::n)
      .def_readonly("k", &SearchResult::k)
      .def_readonly("sigma", &SearchResult::sigma)
      .def_readonly("max_count", &SearchResult::max_count)
      .def_readonly("upper_bound", &SearchResult::upper_bound)
      .def_property_readonly(
          "witnesses", [](const SearchResult& r) { return strs(r.witnesses); })
      .def("__repr__", [](const SearchResult& r) {
        return "SearchResult(n=" + std::to_string(r.n) +
               ", k=" + std::to_string(r.k) +
               ", max_count=" + std::to_string(r.max_count) + ")";
      });

  py::class_<PowersMaxResult>(m, "PowersMaxResult")
      .def_readonly("n", &PowersMaxResult::n)
      .def_readonly("sigma", &PowersMaxResult::sigma)
      .def_readonly("max_count", &PowersMaxResult::max_count)
      .def_readonly("upper_bound", &PowersMaxResult::upper_bound)
      .def_property_readonly("witnesses", [](const PowersMaxResult& r) {
        return strs(r.witnesses);
      });

  m.def(
      "count",
      [](const std::string& w, long k) { return count_k_powers(W(w), k); },
      py::arg("word"), py::arg("k"),
      "Number of distinct k-power factors of word");
  m.def(
      "powers",
      [](const std::string& w) { return enumerate_powers(W(w)); },
      py::arg("word"),
      "All distinct power factors in shortlex order");
  m.def(
      "max_exponent",
      [](const std::string& w, const std::string& v) {
        return max_exponent(W(w), W(v));
      },
      py::arg("word"), py::arg("base"),
      "Largest e with base^e a factor of word");
  m.def(
      "classes", [](const std::string& w) { return build_classes(W(w)); },
      py::arg("word"), "Power factors grouped by root conjugacy class");
  m.def(
      "rauzy",
      [](const std::string& w, std::size_t level) {
        return build_rauzy(W(w), level);
      },
      py::arg("word"), py::arg("level"), "The level-l factor graph");
  m.def(
      "rauzy_dot",
      [](const std::string& w, std::size_t level, bool highlight) {
        return to_dot(build_rauzy(W(w), level), highlight);
      },
      py::arg("word"), py::arg("level"), py::arg("highlight") = false,
      "Graphviz DOT text for the level-l factor graph");
  m.def(
      "small_circuits",
      [](const std::string& w) { return small_circuits_graph(W(w)); },
      py::arg("word"), "Small circuits found by graph search");
  m.def(
      "small_circuits_structural",
      [](const std::string& w) { return small_circuits_structural(W(w)); },
      py::arg("word"), "Small circuits from the structural description");
  m.def(
      "injection", [](const std::string& w) { return injection_map(W(w)); },
      py::arg("word"), "The power-to-circuit injection");
  m.def(
      "gen_q", [](int k, int i) { return gen_q(k, i).str(); }, py::arg("k"),
      py::arg("i"), "The i-th family block");
  m.def(
      "gen_r", [](int k, int m) { return gen_r(k, m).str(); }, py::arg("k"),
      py::arg("m"), "The m-th extremal family word");
  m.def(
      "gen_fraenkel_simpson",
      [](int m) { return gen_fraenkel_simpson(m).str(); }, py::arg("m"),
      "The m-th square-rich comparison word");
  m.def("verify_family", &verify_family, py::arg("k"), py::arg("m"),
        "Length and count bounds for one family member");
  m.def(
      "exhaustive_max",
      [](int n, int k, int sigma, std::uint64_t budget) {
        return exhaustive_max(n, k, sigma, budget_of(budget));
      },
      py::arg("n"), py::arg("k"), py::arg("sigma"), py::arg("budget") = 0,
      "Exact maximum of the k-power count over all length-n words");
  m.def(
      "exhaustive_powers_max",
      [](int n, int sigma, std::uint64_t budget) {
        return exhaustive_powers_max(n, sigma, budget_of(budget));
      },
      py::arg("n"), py::arg("sigma"), py::arg("budget") = 0,
      "Exact maximum of the power-factor total over all length-n words");
  m.def(
      "canonical_rotation",
      [](const std::string& w) { return canonical_rotation(W(w)).str(); },
      py::arg("word"), "Least rotation of word");
  m.def(
      "primitive_root",
      [](const std::string& w) {
        PrimitiveRoot pr = primitive_root(W(w));
        return py::make_tuple(pr.root.str(), pr.exponent);
      },
      py::arg("word"), "(root, exponent) with word = root^exponent maximal");
  m.def(
      "is_primitive",
      [](const std::string& w) { return is_primitive(W(w)); },
      py::arg("word"), "True when word is not a power of a shorter word");
  m.def(
      "rational_power",
      [](const std::string& u, std::size_t length) {
        return rational_power(W(u), length).str();
      },
      py::arg("base"), py::arg("length"),
      "Prefix of base repeated forever, cut to the given length");
}
