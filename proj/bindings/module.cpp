#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "domdraw/dag.hpp"
#include "domdraw/drawing.hpp"
#include "domdraw/errors.hpp"
#include "domdraw/fips.hpp"
#include "domdraw/linear_extensions.hpp"
#include "domdraw/md_tree.hpp"
#include "domdraw/optimizer.hpp"
#include "domdraw/reach_index.hpp"
#include "domdraw/reachability.hpp"
#include "domdraw/svg.hpp"

namespace py = pybind11;

namespace {

using namespace domdraw;

Drawing as_drawing(const std::vector<std::vector<int>>& orders) {
    Drawing dr;
    dr.orders = orders;
    return dr;
}

py::dict report_to_dict(const FipReport& report) {
    py::dict out;
    out["fips"] = report.fips;
    out["count"] = report.count;
    out["cost"] = report.cost;
    return out;
}

py::dict result_to_dict(const OptResult& result) {
    py::dict out;
    out["cost"] = result.cost;
    out["explored"] = result.explored;
    out["k"] = result.k;
    out["d"] = result.d;
    out["orders"] = result.drawing.orders;
    return out;
}

py::dict node_to_dict(const MdNode& node) {
    py::dict out;
    out["kind"] = to_string(node.kind);
    out["members"] = node.members;
    py::list children;
    for (const auto& child : node.children) children.append(node_to_dict(child));
    out["children"] = children;
    return out;
}

py::dict stats_to_dict(const IndexStats& stats) {
    py::dict out;
    out["queries"] = stats.queries;
    out["certificates"] = stats.certificates;
    out["fallbacks"] = stats.fallbacks;
    out["fallback_fips"] = stats.fallback_fips;
    return out;
}

SearchOptions make_options(int max_vertices, std::uint64_t max_tuples, int threads) {
    SearchOptions opts;
    opts.max_vertices = max_vertices;
    opts.max_tuples = max_tuples;
    opts.threads = threads;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "weak dominance drawings of dags with minimum falsely implied paths";

    py::register_exception<bound_error>(m, "BoundError");

    py::class_<Dag>(m, "Dag")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &Dag::n)
        .def_property_readonly("m", &Dag::m)
        .def("edges", &Dag::edges)
        .def("successors", &Dag::successors, py::arg("v"))
        .def("predecessors", &Dag::predecessors, py::arg("v"))
        .def("topo_order", &Dag::topo_order)
        .def("__repr__", [](const Dag& g) {
            return "Dag(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
        });

    py::class_<Reachability>(m, "Reachability")
        .def_property_readonly("n", &Reachability::n)
        .def("reach", &Reachability::reach, py::arg("u"), py::arg("v"))
        .def("comparable", &Reachability::comparable, py::arg("u"), py::arg("v"));

    py::class_<ReachIndex>(m, "ReachIndex")
        .def(py::init([](const Dag& g, const std::vector<std::vector<int>>& orders) {
                 return ReachIndex(g, as_drawing(orders));
             }),
             py::arg("g"), py::arg("orders"))
        .def_property_readonly("n", &ReachIndex::n)
        .def_property_readonly("dims", &ReachIndex::dims)
        .def("query",
             [](const ReachIndex& index, int u, int v) {
                 QueryResult res = index.query(u, v);
                 return py::make_tuple(res.reachable,
                                       res.method == QueryMethod::certificate
                                           ? "certificate"
                                           : "fallback");
             },
             py::arg("u"), py::arg("v"))
        .def("sweep_stats",
             [](const ReachIndex& index) { return stats_to_dict(index.sweep_stats()); });

    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("write_edge_list", &write_edge_list, py::arg("g"));
    m.def("gen_chain", &gen_chain, py::arg("n"));
    m.def("gen_antichain", &gen_antichain, py::arg("n"));
    m.def("gen_crown", &gen_crown, py::arg("n"));
    m.def("gen_random_dag", &gen_random_dag, py::arg("n"), py::arg("edge_prob"),
          py::arg("seed"));

    m.def("transitive_closure", &transitive_closure, py::arg("g"));
    m.def("incomparable", &incomparable, py::arg("r"), py::arg("u"), py::arg("v"));
    m.def("topological_orders",
          [](const Dag& g, std::size_t cap) { return all_linear_extensions(g, cap); },
          py::arg("g"), py::arg("cap") = std::size_t(1) << 20);
    m.def("count_topological_orders", &count_linear_extensions, py::arg("g"),
          py::arg("cap") = std::uint64_t(1) << 40);

    m.def("is_module",
          py::overload_cast<const Reachability&, const std::vector<int>&>(&is_module),
          py::arg("r"), py::arg("s"));
    m.def("minimal_module",
          py::overload_cast<const Reachability&, int, int>(&minimal_module), py::arg("r"),
          py::arg("u"), py::arg("v"));
    m.def("md_tree",
          [](const Dag& g, const Reachability& r) {
              MdTree tree = md_tree(g, r);
              py::dict out;
              out["k"] = tree.k();
              out["tree"] = node_to_dict(tree.root);
              return out;
          },
          py::arg("g"), py::arg("r"));
    m.def("quotient",
          [](const Dag& g, const Reachability& r,
             const std::vector<std::vector<int>>& partition) {
              QuotientGraph q = quotient(g, r, partition);
              py::dict out;
              out["n"] = q.dag.n();
              out["edges"] = q.dag.edges();
              out["costs"] = q.costs;
              out["blocks"] = q.blocks;
              return out;
          },
          py::arg("g"), py::arg("r"), py::arg("partition"));
    m.def("enumerate_all_modules",
          [](const Reachability& r, int max_n) {
              ModuleEnumeration e = enumerate_all_modules(r, max_n);
              py::dict out;
              out["modules"] = e.modules;
              out["strong_modules"] = e.strong_modules;
              return out;
          },
          py::arg("r"), py::arg("max_n") = 12);

    m.def("validate",
          [](const Dag& g, const std::vector<std::vector<int>>& orders) {
              return validate(g, as_drawing(orders));
          },
          py::arg("g"), py::arg("orders"));
    m.def("fips",
          [](const Reachability& r, const std::vector<std::vector<int>>& orders,
             const std::vector<std::int64_t>& costs) {
              return report_to_dict(fips(r, as_drawing(orders), costs));
          },
          py::arg("r"), py::arg("orders"),
          py::arg("costs") = std::vector<std::int64_t>{});
    m.def("is_compact",
          [](const std::vector<std::vector<int>>& orders, const std::vector<int>& module) {
              return is_compact(as_drawing(orders), module);
          },
          py::arg("orders"), py::arg("module"));
    m.def("separator",
          [](const std::vector<std::vector<int>>& orders, const std::vector<int>& module,
             int dim) { return separator(as_drawing(orders), module, dim); },
          py::arg("orders"), py::arg("module"), py::arg("dim"));
    m.def("compaction",
          [](const Reachability& r, const std::vector<std::vector<int>>& orders,
             const std::vector<int>& module) {
              return compaction(r, as_drawing(orders), module).orders;
          },
          py::arg("r"), py::arg("orders"), py::arg("module"));

    m.def("brute_force_min_cost",
          [](const Dag& h, int d, const std::vector<std::int64_t>& costs,
             int max_vertices, std::uint64_t max_tuples, int threads) {
              return result_to_dict(brute_force_min_cost(
                  h, d, costs, make_options(max_vertices, max_tuples, threads)));
          },
          py::arg("h"), py::arg("d"), py::arg("costs") = std::vector<std::int64_t>{},
          py::arg("max_vertices") = 9, py::arg("max_tuples") = std::uint64_t(400000000),
          py::arg("threads") = 0);
    m.def("expand",
          [](const std::vector<std::vector<int>>& quotient_orders,
             const std::vector<std::int64_t>& costs,
             const std::vector<std::vector<std::vector<int>>>& module_orders) {
              std::vector<Drawing> mods;
              mods.reserve(module_orders.size());
              for (const auto& orders : module_orders) mods.push_back(as_drawing(orders));
              return expand(as_drawing(quotient_orders), costs, mods).orders;
          },
          py::arg("quotient_orders"), py::arg("costs"), py::arg("module_orders"));
    m.def("fpt_min_fips",
          [](const Dag& g, int d, int max_k, std::uint64_t max_tuples, int threads) {
              return result_to_dict(
                  fpt_min_fips(g, d, make_options(max_k, max_tuples, threads)));
          },
          py::arg("g"), py::arg("d"), py::arg("max_k") = 9,
          py::arg("max_tuples") = std::uint64_t(400000000), py::arg("threads") = 0);
    m.def("dominance_dimension_at_most",
          [](const Dag& g, int d, int max_k) {
              return dominance_dimension_at_most(g, d, make_options(max_k, 400000000, 0));
          },
          py::arg("g"), py::arg("d"), py::arg("max_k") = 9);
    m.def("dominance_dimension",
          [](const Dag& g, int d_max, int max_k) -> py::object {
              auto answer =
                  dominance_dimension(g, d_max, make_options(max_k, 400000000, 0));
              if (!answer) return py::none();
              return py::int_(*answer);
          },
          py::arg("g"), py::arg("d_max"), py::arg("max_k") = 9);

    m.def("render_svg",
          [](const Dag& g, const std::vector<std::vector<int>>& orders,
             bool highlight_fips) {
              SvgOptions opts;
              opts.highlight_fips = highlight_fips;
              return render_svg(g, as_drawing(orders), opts);
          },
          py::arg("g"), py::arg("orders"), py::arg("highlight_fips") = false);
}
