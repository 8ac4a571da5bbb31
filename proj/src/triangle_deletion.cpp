#include "enumfpt/triangle_deletion.hpp"

#include <algorithm>

namespace enumfpt {

ForbiddenSet triangle_forbidden_set() {
    Graph k3 = Graph::with_vertices(3);
    k3.add_edge(1, 2);
    k3.add_edge(1, 3);
    k3.add_edge(2, 3);
    return ForbiddenSet{{k3}, AllowedOps{true, false, false}};
}

std::vector<OperationSet> min_triangle_deletion(const Graph& g, int k, SearchStats* stats) {
    return min_bst(g, k, triangle_forbidden_set(), stats);
}

std::vector<GraphOp> TriangleDeletionContract::universe(const Instance& x) const {
    std::vector<GraphOp> out;
    for (int v : x.graph.vertices()) out.push_back(GraphOp::delete_vertex(v));
    std::sort(out.begin(), out.end());
    return out;
}

bool TriangleDeletionContract::is_solution(const Instance& x, const Solution& s) const {
    if (static_cast<int>(s.size()) > x.k || !is_consistent(s)) return false;
    for (const GraphOp& op : s)
        if (op.kind != GraphOp::Kind::DeleteVertex) return false;
    Graph reduced = apply_ops(x.graph, s);
    return !find_forbidden(reduced, triangle_forbidden_set()).has_value();
}

TriangleDeletionInstance TriangleDeletionContract::apply(const Instance& x, const Solution& s,
                                                         int new_budget) const {
    return TriangleDeletionInstance{apply_ops(x.graph, s), new_budget};
}

std::vector<OperationSet> td_neighbourhood(const TriangleDeletionInstance& x,
                                           const NbInput<OperationSet>& input) {
    return build_neighbourhood(
        TriangleDeletionContract{}, x,
        [](const TriangleDeletionInstance& y) { return min_triangle_deletion(y.graph, y.k); },
        input);
}

} // namespace enumfpt
