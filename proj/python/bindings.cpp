#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ucfam/enumeration.hpp"
#include "ucfam/family_io.hpp"
#include "ucfam/hyperiso.hpp"
#include "ucfam/lattice.hpp"
#include "ucfam/morphism.hpp"
#include "ucfam/purification.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<int>> member_lists(const ucfam::SetFamily& family) {
  std::vector<std::vector<int>> out;
  out.reserve(family.size());
  for (ucfam::MemberSet m : family.members()) out.push_back(m.elements());
  return out;
}

std::string repr_family(const ucfam::SetFamily& family) {
  std::ostringstream out;
  out << "SetFamily(ground=" << family.ground_size() << ", members=[";
  bool first_member = true;
  for (ucfam::MemberSet m : family.members()) {
    if (!first_member) out << ", ";
    out << "[";
    bool first = true;
    for (int e : m.elements()) {
      if (!first) out << ", ";
      out << e;
      first = false;
    }
    out << "]";
    first_member = false;
  }
  out << "])";
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "union-closed set family toolkit";

  py::register_exception<ucfam::Error>(m, "FamilyError");

  py::class_<ucfam::SetFamily>(m, "SetFamily")
      .def(py::init([](int ground, const std::vector<std::vector<int>>& members) {
             return ucfam::make_family(ground, members);
           }),
           py::arg("ground"), py::arg("members"))
      .def_property_readonly("ground", &ucfam::SetFamily::ground_size)
      .def_property_readonly("members", &member_lists)
      .def("__len__", &ucfam::SetFamily::size)
      .def("__eq__", [](const ucfam::SetFamily& a, const ucfam::SetFamily& b) { return a == b; })
      .def("__repr__", &repr_family);

  m.def("is_union_closed", &ucfam::is_union_closed, py::arg("family"));
  m.def("union_closure", &ucfam::union_closure, py::arg("family"));
  m.def(
      "family_union",
      [](const ucfam::SetFamily& f) { return ucfam::family_union(f).elements(); },
      py::arg("family"));
  m.def(
      "minimal_members",
      [](const ucfam::SetFamily& f) {
        std::vector<std::vector<int>> out;
        for (ucfam::MemberSet m : ucfam::minimal_members(f)) out.push_back(m.elements());
        return out;
      },
      py::arg("family"));
  m.def(
      "member_star",
      [](const ucfam::SetFamily& f, int element) { return ucfam::member_star(f, element); },
      py::arg("family"), py::arg("element"));

  m.def("is_pure", &ucfam::is_pure, py::arg("family"));
  m.def("redundant_elements", &ucfam::redundant_elements, py::arg("family"));
  m.def("is_redundant", &ucfam::is_redundant, py::arg("family"), py::arg("element"));
  m.def("reduce", &ucfam::reduce, py::arg("family"), py::arg("element"));
  m.def(
      "purify",
      [](const ucfam::SetFamily& f, const std::string& order) {
        ucfam::RemovalOrder policy = order == "largest" ? ucfam::RemovalOrder::kLargestFirst
                                                        : ucfam::RemovalOrder::kSmallestFirst;
        ucfam::PurificationResult result = ucfam::purify(f, policy);
        std::vector<int> removed;
        for (const ucfam::PurificationStep& step : result.steps)
          removed.push_back(step.removed_element);
        return py::make_tuple(result.family, removed);
      },
      py::arg("family"), py::arg("order") = "smallest",
      "purified family and the removed elements, in removal order");

  m.def(
      "lift",
      [](const ucfam::SetFamily& source,
         const ucfam::SetFamily& target) -> py::object {
        std::vector<ucfam::FamilyMap> isos = ucfam::find_isomorphisms(source, target, 1);
        if (isos.empty()) return py::none();
        return py::cast(ucfam::extract_hyperisomorphism(isos.front()).pairs());
      },
      py::arg("source"), py::arg("target"),
      "ground bijection under some isomorphism, or None when no isomorphism exists");

  m.def("hyperisomorphic", &ucfam::hyperisomorphic, py::arg("a"), py::arg("b"));
  m.def(
      "canonical_fingerprint",
      [](const ucfam::SetFamily& f) { return ucfam::canonical_form(f).fingerprint; },
      py::arg("family"));

  m.def("frankl_abundant_elements", &ucfam::frankl_abundant_elements, py::arg("family"));
  m.def(
      "lattice_dot",
      [](const ucfam::SetFamily& f) { return ucfam::export_dot(ucfam::to_lattice(f)); },
      py::arg("family"));
  m.def(
      "cover_edges",
      [](const ucfam::SetFamily& f) { return ucfam::to_lattice(f).cover_edges(); },
      py::arg("family"), "covering index pairs of the inclusion order");

  m.def(
      "enumerate_union_closed",
      [](int ground_size, bool require_empty, const std::string& method) {
        ucfam::EnumerationMethod chosen = method == "direct"
                                              ? ucfam::EnumerationMethod::kDirectFilter
                                              : ucfam::EnumerationMethod::kRecursiveSplit;
        return ucfam::enumerate_union_closed(ground_size, require_empty, chosen);
      },
      py::arg("ground_size"), py::arg("require_empty") = false, py::arg("method") = "split");
  m.def("enumerate_pure", &ucfam::enumerate_pure, py::arg("ground_size"));

  m.def("parse_family", &ucfam::parse_family, py::arg("text"));
  m.def("read_family_file", &ucfam::read_family_file, py::arg("path"));
  m.def("write_family", &ucfam::write_family, py::arg("family"));
}
