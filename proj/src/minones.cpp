#include "enumfpt/minones.hpp"

#include <algorithm>
#include <cstdlib>

namespace enumfpt {

namespace {

struct MinOnesSearch {
    const CnfFormula& phi;
    int k;
    std::vector<VarSet> collected;
    SearchStats& stats;

    const Clause* first_unsatisfied(const VarSet& true_set) const {
        for (const Clause& c : phi.clauses) {
            bool clause_true = false;
            for (int lit : c.literals) {
                bool value =
                    std::binary_search(true_set.begin(), true_set.end(), std::abs(lit));
                if (value == (lit > 0)) {
                    clause_true = true;
                    break;
                }
            }
            if (!clause_true) return &c;
        }
        return nullptr;
    }

    void run(VarSet& true_set) {
        ++stats.calls;
        const Clause* unsat = first_unsatisfied(true_set);
        if (!unsat) {
            ++stats.leaves;
            collected.push_back(true_set);
            return;
        }
        if (static_cast<int>(true_set.size()) == k) {
            ++stats.leaves;
            return;
        }
        bool branched = false;
        for (int lit : unsat->literals) {
            // In an unsatisfied clause only positive literals name variables
            // still false; those are the flips that can help.
            if (lit < 0) continue;
            branched = true;
            VarSet next = true_set;
            insert_sorted(next, lit);
            run(next);
        }
        if (!branched) ++stats.leaves; // clause needs some variable to stay false
    }
};

} // namespace

std::vector<VarSet> min_minones(const CnfFormula& phi, int k, SearchStats* stats) {
    SearchStats local;
    MinOnesSearch search{phi, k, {}, stats ? *stats : local};
    VarSet empty;
    if (k >= 0) search.run(empty);
    return minimal_antichain(std::move(search.collected));
}

std::vector<VarSet> minones_neighbourhood(const MinOnesInstance& x,
                                          const NbInput<VarSet>& input) {
    return build_neighbourhood(
        MinOnesContract{}, x,
        [](const MinOnesInstance& y) { return min_minones(y.phi, y.k); }, input);
}

} // namespace enumfpt
