#pragma once

#include <vector>

#include "enumfpt/enumerate.hpp"
#include "enumfpt/forbidden.hpp"
#include "enumfpt/graph.hpp"

namespace enumfpt {

// Triangle deletion: remove at most k vertices so no triangle remains.
// Exercises the generic machinery end to end: the forbidden set is {K3},
// only vertex deletion is allowed, and all-enumeration comes from the
// generic neighbourhood construction over the minimal enumerator.
struct TriangleDeletionInstance {
    Graph graph;
    int k = 0;
};

ForbiddenSet triangle_forbidden_set();

std::vector<OperationSet> min_triangle_deletion(const Graph& g, int k,
                                                SearchStats* stats = nullptr);

struct TriangleDeletionContract {
    using Instance = TriangleDeletionInstance;
    using Op = GraphOp;
    using Solution = OperationSet;

    int parameter(const Instance& x) const { return x.k; }
    std::vector<Op> universe(const Instance& x) const;
    bool consistent(const Solution& s) const { return is_consistent(s); }
    bool is_solution(const Instance& x, const Solution& s) const;
    Instance apply(const Instance& x, const Solution& s, int new_budget) const;
};

std::vector<OperationSet> td_neighbourhood(const TriangleDeletionInstance& x,
                                           const NbInput<OperationSet>& input);

} // namespace enumfpt
