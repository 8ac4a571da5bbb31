#pragma once

#include <vector>

#include "enumfpt/cnf.hpp"
#include "enumfpt/enumerate.hpp"
#include "enumfpt/forbidden.hpp"

namespace enumfpt {

// Weighted satisfiability: enumerate satisfying true-sets of at most k
// variables, ordered by weight.
struct MinOnesInstance {
    CnfFormula phi;
    int k = 0;
};

// All subset-minimal models with at most k variables set to true. Branching:
// starting from the all-zero assignment, pick the first unsatisfied clause
// and set one of its positively occurring variables to true.
std::vector<VarSet> min_minones(const CnfFormula& phi, int k, SearchStats* stats = nullptr);

std::vector<VarSet> minones_neighbourhood(const MinOnesInstance& x, const NbInput<VarSet>& input);

struct MinOnesContract {
    using Instance = MinOnesInstance;
    using Op = int;
    using Solution = VarSet;

    int parameter(const Instance& x) const { return x.k; }
    std::vector<int> universe(const Instance& x) const { return x.phi.variables(); }
    bool consistent(const Solution&) const { return true; }
    bool is_solution(const Instance& x, const Solution& s) const {
        return static_cast<int>(s.size()) <= x.k && satisfies(x.phi, s);
    }
    Instance apply(const Instance& x, const Solution& s, int new_budget) const {
        Assignment theta;
        for (int v : s) theta[v] = true;
        return MinOnesInstance{apply_assignment(x.phi, theta), new_budget};
    }
};

} // namespace enumfpt
