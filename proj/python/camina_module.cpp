#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "camina/cli.hpp"
#include "camina/harness.hpp"

namespace py = pybind11;
using namespace camina;

namespace {

FiniteGroup from_generators(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& gens,
                            std::size_t max_order) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.emplace_back(g);
  return group_from_generators(degree, perms, max_order);
}

py::dict report_dict(const BoundReport& r) {
  py::dict d;
  d["p"] = r.p;
  d["n"] = r.n;
  d["m"] = r.m;
  d["l"] = r.l;
  d["class_c"] = r.class_c;
  d["quotient_exponent_n"] = r.quotient_exponent_n;
  py::dict checks;
  for (const auto& c : r.checks) checks[py::str(c.id)] = std::string(to_string(c.outcome()));
  d["checks"] = checks;
  return d;
}

py::dict analysis_dict(const FiniteGroup& g, bool with_characters) {
  std::optional<CharacterTable> table;
  const auto z = center(g);
  if (with_characters && !z.is_trivial() && !z.is_whole()) table = dixon_character_table(g);
  const auto a = analyze_center_pair(g, table ? &*table : nullptr);
  py::dict d;
  d["order"] = g.order();
  d["center_order"] = z.order();
  d["applicable"] = a.applicable;
  d["camina_group"] = is_camina_group(g);
  if (a.verdict) {
    d["verdict"] = a.verdict->holds();
    d["by_classes"] = a.verdict->by_classes;
    d["by_commutators"] = a.verdict->by_commutators;
    d["by_centralizers"] = a.verdict->by_centralizers;
    d["by_characters"] = a.verdict->by_characters;
  } else {
    d["verdict"] = py::none();
  }
  d["report"] = a.report ? py::object(report_dict(*a.report)) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_camina, m) {
  m.doc() = "Camina pairs (G, Z(G)) on finite groups";

  py::register_exception<Error>(m, "CaminaError", PyExc_ValueError);

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_property_readonly("order", &FiniteGroup::order)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def_property_readonly("generators", &FiniteGroup::generators)
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) { return "<FiniteGroup of order " + std::to_string(g.order()) + ">"; });

  m.def("group_from_generators", &from_generators, py::arg("degree"), py::arg("generators"),
        py::arg("max_order") = kDefaultOrderCap, "Closure of 1-based permutation images.");
  m.def("group_from_cayley_table", &group_from_cayley_table, py::arg("table"));
  m.def("build_family", [](const std::string& spec, std::size_t cap) { return build_family(parse_family_spec(spec), cap); },
        py::arg("spec"), py::arg("max_order") = kDefaultOrderCap, "Build a family member from name:params.");
  m.def("builtin_families", [](std::uint64_t max_order) {
    std::vector<std::string> out;
    for (const auto& s : builtin_families(max_order)) out.push_back(s.to_string());
    return out;
  }, py::arg("max_order"));

  m.def("load_corpus", [](const std::string& path, std::size_t cap) {
    std::vector<std::tuple<std::string, std::string, FiniteGroup>> out;
    for (const auto& e : parse_corpus_file(path, cap)) out.emplace_back(e.id(), e.name, e.build(cap));
    return out;
  }, py::arg("path"), py::arg("max_order") = kDefaultOrderCap, "List of (id, name, group).");

  m.def("element_order", &element_order);
  m.def("exponent", &group_exponent);
  m.def("center_order", [](const FiniteGroup& g) { return center(g).order(); });
  m.def("derived_order", [](const FiniteGroup& g) { return derived_subgroup(g).order(); });
  m.def("class_sizes", [](const FiniteGroup& g) {
    std::vector<std::size_t> s;
    for (const auto& c : conjugacy_classes(g).classes) s.push_back(c.size());
    return s;
  });
  m.def("nilpotency_class", &nilpotency_class);
  m.def("is_camina_group", &is_camina_group);

  m.def("analyze", &analysis_dict, py::arg("group"), py::arg("with_characters") = true,
        "Center-pair verdict and bound checks as a dict.");
  m.def("character_degrees", [](const FiniteGroup& g) { return dixon_character_table(g).degrees; });
  m.def("character_table", [](const FiniteGroup& g) { return format_character_table(dixon_character_table(g)); });

  m.def("census", [](const std::vector<std::string>& paths, std::uint64_t order, const std::string& predicate,
                     std::size_t workers) {
    AnalysisOptions o;
    o.workers = workers;
    const auto rows = analyze_all(load_records(paths), o);
    std::vector<std::string> hits;
    for (const auto* r : census(rows, order, predicate).hits) hits.push_back(r->id.to_string());
    return hits;
  }, py::arg("paths"), py::arg("order"), py::arg("predicate") = "center-pair-not-camina-group", py::arg("workers") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return std::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command line; returns (exit_code, stdout, stderr).");
}
