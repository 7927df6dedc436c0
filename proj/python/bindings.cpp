#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "cutbat/bat.hpp"
#include "cutbat/enumerate.hpp"
#include "cutbat/generator.hpp"
#include "cutbat/layering.hpp"
#include "cutbat/network.hpp"
#include "cutbat/oracle.hpp"
#include "cutbat/reliability.hpp"

namespace py = pybind11;
using namespace cutbat;

namespace {

py::list cuts_to_list(const McCatalog& catalog) {
  py::list cuts;
  for (const CutSet& cut : catalog.cuts()) {
    py::list arcs;
    for (ArcId a : cut.arc_ids) arcs.append(a);
    cuts.append(arcs);
  }
  return cuts;
}

py::dict stats_to_dict(const EnumStats& stats) {
  py::dict out;
  out["vectors_generated"] = stats.vectors_generated;
  out["vectors_feasible"] = stats.vectors_feasible;
  out["parents_removed"] = stats.parents_removed;
  out["t_side_divergences"] = stats.t_side_divergences;
  out["wall_time_ns"] = stats.wall_time.count();
  return out;
}

py::dict result_to_dict(const ReliabilityResult& result) {
  py::dict out;
  out["reliability"] = result.reliability;
  out["unreliability"] = result.unreliability;
  out["terms_evaluated"] = result.terms_evaluated;
  out["method"] = result.method;
  return out;
}

FailureModel model_for(const Network& net, std::optional<double> p) {
  return p ? FailureModel::uniform(net.arc_count(), *p)
           : FailureModel::from_network(net);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimal-cut enumeration and two-terminal reliability";

  py::register_exception<GuardError>(m, "GuardError");

  py::class_<Network>(m, "Network")
      .def_property_readonly("node_count", &Network::node_count)
      .def_property_readonly("arc_count", &Network::arc_count)
      .def_property_readonly("source", &Network::source)
      .def_property_readonly("sink", &Network::sink)
      .def_property_readonly("arcs",
                             [](const Network& net) {
                               py::list out;
                               for (const Arc& a : net.arcs())
                                 out.append(py::make_tuple(a.id, a.u, a.v));
                               return out;
                             })
      .def_property_readonly("probabilities",
                             [](const Network& net) -> py::object {
                               if (!net.has_probabilities()) return py::none();
                               py::list out;
                               for (double p : net.probabilities())
                                 out.append(p);
                               return out;
                             })
      .def("neighbors", &Network::neighbors, py::arg("v"))
      .def("original_label", &Network::original_label, py::arg("v"))
      .def("serialize", [](const Network& net) { return serialize(net); })
      .def("__repr__", [](const Network& net) {
        return "<Network n=" + std::to_string(net.node_count()) +
               " m=" + std::to_string(net.arc_count()) + ">";
      });

  m.def("parse_network",
        [](const std::string& text) { return parse_network(text); },
        py::arg("text"));
  m.def("load_network", &load_network, py::arg("path"));

  m.def("validate", [](const Network& net) {
    ValidationReport report = validate(net);
    py::dict out;
    out["connected"] = report.connected;
    out["nodes_off_all_paths"] = report.nodes_off_all_paths;
    out["warnings"] = report.warnings;
    return out;
  });

  m.def(
      "plsa_layers",
      [](const Network& net, NodeId root) {
        Layering layering = plsa_layers(net, root);
        py::dict out;
        out["layer_of"] = std::vector<int>(layering.layer_of.begin() + 1,
                                           layering.layer_of.end());
        out["layers"] = layering.layers;
        return out;
      },
      py::arg("net"), py::arg("root") = 1);

  m.def("renumber", [](const Network& net) {
    auto [ordered, renumbering] = renumber(net);
    return py::make_tuple(
        ordered,
        std::vector<NodeId>(renumbering.forward.begin() + 1,
                            renumbering.forward.end()),
        std::vector<NodeId>(renumbering.backward.begin() + 1,
                            renumbering.backward.end()));
  });

  m.def(
      "cut_of",
      [](const Network& net, const std::vector<NodeId>& s_side) {
        return cut_of(net, nodes_to_mask(s_side)).arc_ids;
      },
      py::arg("net"), py::arg("s_side"));

  m.def(
      "enumerate_mcs",
      [](const Network& net, const std::string& algo, const std::string& check,
         bool prune_isolated, bool prune_parent, int limit_arcs) {
        py::dict out;
        if (algo == "oracle") {
          out["cuts"] = cuts_to_list(mc_oracle(net, limit_arcs));
          return out;
        }
        if (algo == "baseline") {
          auto [catalog, stats] = enumerate_baseline(net);
          out["cuts"] = cuts_to_list(catalog);
          out["stats"] = stats_to_dict(stats);
          return out;
        }
        EnumOptions options;
        options.t_side_mode =
            check == "edge-node" ? TSideMode::edge_node : TSideMode::plsa;
        options.prune_isolated = prune_isolated;
        options.prune_parent = prune_parent;
        auto [catalog, stats] = enumerate_recursive(net, options);
        out["cuts"] = cuts_to_list(catalog);
        out["stats"] = stats_to_dict(stats);
        return out;
      },
      py::arg("net"), py::arg("algo") = "recursive", py::arg("check") = "plsa",
      py::arg("prune_isolated") = true, py::arg("prune_parent") = true,
      py::arg("limit_arcs") = 24);

  m.def(
      "mc_oracle",
      [](const Network& net, int max_arcs) {
        return cuts_to_list(mc_oracle(net, max_arcs));
      },
      py::arg("net"), py::arg("max_arcs") = 24);

  m.def(
      "is_minimal_cut",
      [](const Network& net, const std::vector<ArcId>& arcs) {
        return is_minimal_cut(net, CutSet(std::vector<ArcId>(arcs)));
      },
      py::arg("net"), py::arg("arc_ids"));

  m.def(
      "reliability",
      [](const Network& net, const std::string& method,
         std::optional<double> p, int limit_mc, int limit_arcs) {
        FailureModel model = model_for(net, p);
        if (method == "brute")
          return result_to_dict(reliability_brute(net, model, limit_arcs));
        auto [catalog, stats] = enumerate_recursive(net);
        return result_to_dict(unreliability_iet(catalog, model, limit_mc));
      },
      py::arg("net"), py::arg("method") = "iet",
      py::arg("p") = std::nullopt, py::arg("limit_mc") = 20,
      py::arg("limit_arcs") = 24);

  m.def(
      "generate_network",
      [](int nodes, int arcs, std::uint64_t seed, std::optional<double> p) {
        GenSpec spec;
        spec.node_count = nodes;
        spec.arc_count = arcs;
        spec.seed = seed;
        spec.arc_probability = p;
        return generate_network(spec);
      },
      py::arg("nodes"), py::arg("arcs"), py::arg("seed") = 42,
      py::arg("p") = std::optional<double>(0.9));

  m.def(
      "bat_order",
      [](int width) {
        if (width < 0 || width > 20)
          throw std::invalid_argument("width must be in [0, 20]");
        py::list order;
        NodeVector x(width);
        while (true) {
          py::list vec;
          for (int k = 1; k <= width; ++k) vec.append(x.get(k) ? 1 : 0);
          order.append(vec);
          if (bat_next(x)) break;
        }
        return order;
      },
      py::arg("width"));

  m.attr("__version__") = "0.1.0";
}
