#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "enumfpt/backdoors.hpp"
#include "enumfpt/chordal.hpp"
#include "enumfpt/closest_string.hpp"
#include "enumfpt/cluster_editing.hpp"
#include "enumfpt/error.hpp"
#include "enumfpt/minones.hpp"
#include "enumfpt/triangle_deletion.hpp"

namespace py = pybind11;
using namespace enumfpt;

namespace {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = Graph::with_vertices(n);
    for (auto [u, v] : edges)
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

CnfFormula make_formula(const std::vector<std::vector<int>>& clauses) {
    CnfFormula phi;
    for (const auto& lits : clauses) phi.clauses.push_back(make_clause(lits));
    return phi;
}

py::tuple op_to_tuple(const GraphOp& op) {
    switch (op.kind) {
    case GraphOp::Kind::DeleteVertex: return py::make_tuple("delVertex", op.u);
    case GraphOp::Kind::DeleteEdge: return py::make_tuple("delEdge", op.u, op.v);
    default: return py::make_tuple("addEdge", op.u, op.v);
    }
}

py::list op_sets_to_py(const std::vector<OperationSet>& family) {
    py::list out;
    for (const OperationSet& s : family) {
        py::list sol;
        for (const GraphOp& op : s) sol.append(op_to_tuple(op));
        out.append(std::move(sol));
    }
    return out;
}

bool want_all(const std::string& mode) {
    if (mode == "all") return true;
    if (mode == "min") return false;
    throw Error("config-error", "mode must be 'all' or 'min'");
}

template <class Inst, class Nbf, class MinEnum>
py::list run_graph_problem(const Inst& x, const std::string& mode, Nbf&& nbf,
                           MinEnum&& min_enum) {
    if (want_all(mode)) return op_sets_to_py(enumerate_to_vector<OperationSet>(x, nbf));
    return op_sets_to_py(min_enum(x));
}

template <class Inst, class Nbf, class MinEnum>
py::list run_set_problem(const Inst& x, const std::string& mode, Nbf&& nbf,
                         MinEnum&& min_enum) {
    std::vector<std::vector<int>> family =
        want_all(mode) ? enumerate_to_vector<std::vector<int>>(x, nbf) : min_enum(x);
    py::list out;
    for (const auto& s : family) out.append(py::cast(s));
    return out;
}

} // namespace

PYBIND11_MODULE(_enumfpt, m) {
    m.doc() = "Ordered enumeration of bounded-size solutions with FPT delay";

    py::register_exception<Error>(m, "EnumError");

    m.def(
        "cluster_editing",
        [](int n, const std::vector<std::pair<int, int>>& edges, int k,
           const std::string& mode) {
            ClusterInstance x{make_graph(n, edges), k};
            return run_graph_problem(
                x, mode,
                [](const ClusterInstance& y, const NbInput<OperationSet>& in) {
                    return ce_neighbourhood(y, in);
                },
                [](const ClusterInstance& y) { return min_cluster_edit(y); });
        },
        py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("mode") = "all",
        "Edge edits of size <= k turning the graph into disjoint cliques, by size.");

    m.def(
        "chordal_completion",
        [](int n, const std::vector<std::pair<int, int>>& edges, int k,
           const std::string& mode) {
            ChordalInstance x{make_graph(n, edges), k};
            return run_graph_problem(
                x, mode,
                [](const ChordalInstance& y, const NbInput<OperationSet>& in) {
                    return cc_neighbourhood(y, in);
                },
                [](const ChordalInstance& y) { return min_k_triangulations(y.graph, y.k); });
        },
        py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("mode") = "all",
        "Edge additions of size <= k making the graph chordal, by size.");

    m.def(
        "triangle_deletion",
        [](int n, const std::vector<std::pair<int, int>>& edges, int k,
           const std::string& mode) {
            TriangleDeletionInstance x{make_graph(n, edges), k};
            return run_graph_problem(
                x, mode,
                [](const TriangleDeletionInstance& y, const NbInput<OperationSet>& in) {
                    return td_neighbourhood(y, in);
                },
                [](const TriangleDeletionInstance& y) {
                    return min_triangle_deletion(y.graph, y.k);
                });
        },
        py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("mode") = "all",
        "Vertex deletions of size <= k making the graph triangle-free, by size.");

    m.def(
        "closest_string",
        [](const std::vector<std::string>& strings, int d, const std::string& mode) {
            StringInstance x{strings, d};
            return run_set_problem(
                x, mode,
                [](const StringInstance& y, const NbInput<FlipSet>& in) {
                    return cs_neighbourhood(y, in);
                },
                [](const StringInstance& y) { return min_closest_string(y); });
        },
        py::arg("strings"), py::arg("d"), py::arg("mode") = "all",
        "Flip sets keeping every string within Hamming distance d, by size.");

    m.def(
        "weak_backdoors",
        [](const std::vector<std::vector<int>>& clauses, int k, const std::string& base,
           const std::string& mode) {
            BackdoorInstance x{make_formula(clauses), k, &base_class_by_name(base)};
            return run_set_problem(
                x, mode,
                [](const BackdoorInstance& y, const NbInput<VarSet>& in) {
                    return weak_neighbourhood(y, in);
                },
                [](const BackdoorInstance& y) {
                    return min_weak_backdoors(y.phi, y.k, *y.base);
                });
        },
        py::arg("clauses"), py::arg("k"), py::arg("base") = "horn", py::arg("mode") = "all",
        "Weak C-backdoor sets of size <= k of a 3CNF formula, by size.");

    m.def(
        "strong_backdoors",
        [](const std::vector<std::vector<int>>& clauses, int k, const std::string& base,
           const std::string& mode) {
            BackdoorInstance x{make_formula(clauses), k, &base_class_by_name(base)};
            return run_set_problem(
                x, mode,
                [](const BackdoorInstance& y, const NbInput<VarSet>& in) {
                    return strong_neighbourhood(y, in);
                },
                [](const BackdoorInstance& y) {
                    return min_strong_backdoors(y.phi, y.k, *y.base);
                });
        },
        py::arg("clauses"), py::arg("k"), py::arg("base") = "horn", py::arg("mode") = "all",
        "Strong C-backdoor sets of size <= k of a 3CNF formula, by size.");

    m.def(
        "min_ones",
        [](const std::vector<std::vector<int>>& clauses, int k, const std::string& mode) {
            MinOnesInstance x{make_formula(clauses), k};
            return run_set_problem(
                x, mode,
                [](const MinOnesInstance& y, const NbInput<VarSet>& in) {
                    return minones_neighbourhood(y, in);
                },
                [](const MinOnesInstance& y) { return min_minones(y.phi, y.k); });
        },
        py::arg("clauses"), py::arg("k"), py::arg("mode") = "all",
        "Satisfying true-sets of weight <= k, by weight.");
}
