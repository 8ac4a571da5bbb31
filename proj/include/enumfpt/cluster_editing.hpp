#pragma once

#include <vector>

#include "enumfpt/enumerate.hpp"
#include "enumfpt/forbidden.hpp"
#include "enumfpt/graph.hpp"

namespace enumfpt {

// Cluster editing: make every connected component a clique using at most k
// edge additions/deletions. Forbidden pattern is the induced P3.
struct ClusterInstance {
    Graph graph;
    int k = 0;
};

bool is_cluster(const Graph& g);

ForbiddenSet cluster_forbidden_set();

// All inclusion-minimal solutions, in solution order.
std::vector<OperationSet> min_cluster_edit(const ClusterInstance& x,
                                           SearchStats* stats = nullptr);

// Neighbourhood function: the seed maps to the minimal solutions; a solution
// S maps to every consistent S plus the edges merging two cliques of S(G)
// (i*j <= k-|S|) or cutting one clique into two parts (cut cost <= k-|S|).
std::vector<OperationSet> ce_neighbourhood(const ClusterInstance& x,
                                           const NbInput<OperationSet>& input);

// Contract used by the brute-force oracle and the generic neighbourhood
// construction.
struct ClusterEditingContract {
    using Instance = ClusterInstance;
    using Op = GraphOp;
    using Solution = OperationSet;

    int parameter(const Instance& x) const { return x.k; }
    std::vector<Op> universe(const Instance& x) const;
    bool consistent(const Solution& s) const { return is_consistent(s); }
    bool is_solution(const Instance& x, const Solution& s) const;
    Instance apply(const Instance& x, const Solution& s, int new_budget) const;
};

} // namespace enumfpt
