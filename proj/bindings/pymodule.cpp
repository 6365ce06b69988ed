#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "siglat/report.hpp"

namespace py = pybind11;
using namespace siglat;

namespace {

Caps make_caps(int max_order, int max_subgroups) {
  Caps caps;
  caps.max_order = max_order;
  caps.max_subgroups = max_subgroups;
  return caps;
}

}  // namespace

PYBIND11_MODULE(_siglat, m) {
  m.doc() = "sigma-permutable subgroup lattice analysis";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OrderCapExceeded>(m, "OrderCapExceeded",
                                           PyExc_RuntimeError);

  py::class_<GroupSpec>(m, "GroupSpec")
      .def(py::init([](std::string name, int degree,
                       std::vector<std::string> generators) {
             GroupSpec s;
             s.name = std::move(name);
             s.degree = degree;
             s.generators = std::move(generators);
             return s;
           }),
           py::arg("name"), py::arg("degree"), py::arg("generators"))
      .def_readwrite("name", &GroupSpec::name)
      .def_readwrite("degree", &GroupSpec::degree)
      .def_readwrite("generators", &GroupSpec::generators)
      .def("order", [](const GroupSpec& s) { return s.build()->order(); });

  m.def("builtin_corpus", [] { return builtin_corpus(); });

  m.def("parse_group_json",
        [](const std::string& text) { return parse_group_json(text); });

  m.def(
      "validate_partition",
      [](const std::string& text) { return parse_partition(text).name; },
      "Parses a partition spec, raising ParseError on bad input.");

  m.def(
      "analyze_json",
      [](const GroupSpec& spec, const std::string& partition, int max_order,
         int max_subgroups) {
        Caps caps = make_caps(max_order, max_subgroups);
        GroupWork gw = GroupWork::build(spec.build(caps.max_order), caps);
        return report_to_json(analyze_pair(gw, parse_partition(partition)));
      },
      py::arg("spec"), py::arg("partition") = "sigma0",
      py::arg("max_order") = 2000, py::arg("max_subgroups") = 20000,
      "Full report for one (group, partition) pair as a JSON string.");

  m.def(
      "subgroup_orders",
      [](const GroupSpec& spec, int max_order, int max_subgroups) {
        GroupPtr g = spec.build(max_order);
        SubgroupFamily fam = all_subgroups(g, max_subgroups);
        std::vector<int> out;
        for (int i = 0; i < fam.size(); ++i) out.push_back(fam.order_of(i));
        return out;
      },
      py::arg("spec"), py::arg("max_order") = 2000,
      py::arg("max_subgroups") = 20000);

  m.def(
      "sigma_permutable_orders",
      [](const GroupSpec& spec, const std::string& partition, int max_order,
         int max_subgroups) {
        Caps caps = make_caps(max_order, max_subgroups);
        GroupData gd = build_group_data(spec.build(caps.max_order), caps);
        SigmaContext sc = build_sigma_context(gd, parse_partition(partition));
        SubgroupFamily fam = sigma_permutable_family(gd, sc);
        std::vector<int> out;
        for (int i = 0; i < fam.size(); ++i) out.push_back(fam.order_of(i));
        return out;
      },
      py::arg("spec"), py::arg("partition") = "sigma0",
      py::arg("max_order") = 2000, py::arg("max_subgroups") = 20000);

  m.def(
      "is_sigma_full",
      [](const GroupSpec& spec, const std::string& partition, int max_order,
         int max_subgroups) {
        Caps caps = make_caps(max_order, max_subgroups);
        GroupData gd = build_group_data(spec.build(caps.max_order), caps);
        return is_sigma_full(gd, parse_partition(partition));
      },
      py::arg("spec"), py::arg("partition") = "sigma0",
      py::arg("max_order") = 2000, py::arg("max_subgroups") = 20000);

  m.def(
      "sweep_json",
      [](const std::vector<std::string>& partitions, int jobs) {
        std::vector<PrimePartition> parts;
        for (const auto& p : partitions) parts.push_back(parse_partition(p));
        std::vector<std::string> out;
        for (const auto& r : run_sweep(builtin_corpus(), parts, Caps{}, jobs))
          out.push_back(report_to_json(r));
        return out;
      },
      py::arg("partitions"), py::arg("jobs") = 1,
      "Reports for the builtin corpus, one JSON string per pair, sorted by "
      "(group, partition).");
}
