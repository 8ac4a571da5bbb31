#include "enumfpt/cluster_editing.hpp"

#include <algorithm>

namespace enumfpt {

bool is_cluster(const Graph& g) {
    // P3-free: no vertex has two non-adjacent neighbors.
    for (int b : g.vertices()) {
        const auto& nbrs = g.neighbors(b);
        for (auto it = nbrs.begin(); it != nbrs.end(); ++it) {
            for (auto jt = std::next(it); jt != nbrs.end(); ++jt) {
                if (!g.has_edge(*it, *jt)) return false;
            }
        }
    }
    return true;
}

ForbiddenSet cluster_forbidden_set() {
    Graph p3 = Graph::with_vertices(3);
    p3.add_edge(1, 2);
    p3.add_edge(2, 3);
    return ForbiddenSet{{p3}, AllowedOps{false, true, true}};
}

std::vector<OperationSet> min_cluster_edit(const ClusterInstance& x, SearchStats* stats) {
    return min_bst(x.graph, x.k, cluster_forbidden_set(), stats);
}

namespace {

void collect_merges(const OperationSet& s, const std::vector<std::vector<int>>& cliques,
                    int slack, std::vector<OperationSet>& out) {
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        for (std::size_t j = i + 1; j < cliques.size(); ++j) {
            if (static_cast<int>(cliques[i].size() * cliques[j].size()) > slack) continue;
            OperationSet merged = s;
            for (int u : cliques[i])
                for (int v : cliques[j]) insert_sorted(merged, GraphOp::add_edge(u, v));
            if (!is_consistent(merged)) continue; // re-adds an edge deleted by S
            out.push_back(std::move(merged));
        }
    }
}

void collect_splits(const OperationSet& s, const std::vector<std::vector<int>>& cliques,
                    int slack, std::vector<OperationSet>& out) {
    for (const auto& clique : cliques) {
        int len = static_cast<int>(clique.size());
        if (len < 2 || len - 1 > slack) continue;
        // Proper bipartitions up to symmetry: the first vertex stays in part A.
        for (unsigned long long mask = 1; mask + 1 < (1ull << len); mask += 2) {
            int a = __builtin_popcountll(mask);
            if (a * (len - a) > slack) continue;
            OperationSet cut = s;
            for (int i = 0; i < len; ++i) {
                if (!(mask >> i & 1)) continue;
                for (int j = 0; j < len; ++j) {
                    if (mask >> j & 1) continue;
                    insert_sorted(cut, GraphOp::delete_edge(clique[i], clique[j]));
                }
            }
            if (!is_consistent(cut)) continue; // re-deletes an edge added by S
            out.push_back(std::move(cut));
        }
    }
}

} // namespace

std::vector<OperationSet> ce_neighbourhood(const ClusterInstance& x,
                                           const NbInput<OperationSet>& input) {
    if (!input) return min_cluster_edit(x);
    const OperationSet& s = *input;
    int slack = x.k - static_cast<int>(s.size());
    std::vector<OperationSet> out;
    if (slack <= 0) return out;
    auto cliques = apply_ops(x.graph, s).components();
    collect_merges(s, cliques, slack, out);
    collect_splits(s, cliques, slack, out);
    return normalize_family<GraphOp>(std::move(out));
}

std::vector<GraphOp> ClusterEditingContract::universe(const Instance& x) const {
    std::vector<GraphOp> out;
    auto verts = x.graph.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (x.graph.has_edge(verts[i], verts[j]))
                out.push_back(GraphOp::delete_edge(verts[i], verts[j]));
            else
                out.push_back(GraphOp::add_edge(verts[i], verts[j]));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool ClusterEditingContract::is_solution(const Instance& x, const Solution& s) const {
    if (static_cast<int>(s.size()) > x.k || !is_consistent(s)) return false;
    return is_cluster(apply_ops(x.graph, s));
}

ClusterInstance ClusterEditingContract::apply(const Instance& x, const Solution& s,
                                              int new_budget) const {
    return ClusterInstance{apply_ops(x.graph, s), new_budget};
}

} // namespace enumfpt
