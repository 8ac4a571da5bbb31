#include "enumfpt/backdoors.hpp"

#include <algorithm>
#include <set>

#include "enumfpt/error.hpp"

namespace enumfpt {

namespace {

// All 2^|vars| assignments over the given variables.
std::vector<Assignment> all_assignments(const VarSet& vars) {
    std::vector<Assignment> out;
    out.reserve(1ull << vars.size());
    for (unsigned long long mask = 0; mask < (1ull << vars.size()); ++mask) {
        Assignment theta;
        for (std::size_t i = 0; i < vars.size(); ++i) theta[vars[i]] = (mask >> i) & 1;
        out.push_back(std::move(theta));
    }
    return out;
}

} // namespace

bool is_weak_backdoor(const CnfFormula& phi, const BaseClass& c, const VarSet& s) {
    for (const Assignment& theta : all_assignments(s)) {
        CnfFormula residue = apply_assignment(phi, theta);
        if (is_in_class(residue, c) && c.satisfiable(residue)) return true;
    }
    return false;
}

bool is_strong_backdoor(const CnfFormula& phi, const BaseClass& c, const VarSet& s) {
    return is_in_class(delete_vars(phi, s), c);
}

namespace {

struct WeakSearch {
    const CnfFormula& phi;
    int k;
    const BaseClass& c;
    std::vector<VarSet> collected;
    SearchStats& stats;

    void run(VarSet& s) {
        ++stats.calls;
        bool weak = false;
        std::vector<int> branch; // deduplicated, ascending
        for (const Assignment& theta : all_assignments(s)) {
            CnfFormula residue = apply_assignment(phi, theta);
            const Clause* bad = nullptr;
            for (const Clause& cl : residue.clauses) {
                if (!c.clause_in_class(cl)) {
                    bad = &cl;
                    break;
                }
            }
            if (bad) {
                // Any weak backdoor extending S must touch this clause.
                for (int lit : bad->literals) insert_sorted(branch, std::abs(lit));
            } else if (c.satisfiable(residue)) {
                weak = true;
                break;
            }
        }
        if (weak) {
            ++stats.leaves;
            collected.push_back(s);
            return;
        }
        if (static_cast<int>(s.size()) == k || branch.empty()) {
            ++stats.leaves; // budget exhausted, or every residue is an
            return;         // in-class unsatisfiable formula (dead subtree)
        }
        for (int var : branch) {
            VarSet next = s;
            insert_sorted(next, var);
            run(next);
        }
    }
};

struct StrongSearch {
    const CnfFormula& phi;
    int k;
    const BaseClass& c;
    std::vector<VarSet> collected;
    SearchStats& stats;

    void run(VarSet& s) {
        ++stats.calls;
        CnfFormula residue = delete_vars(phi, s);
        const Clause* bad = nullptr;
        for (const Clause& cl : residue.clauses) {
            if (!c.clause_in_class(cl)) {
                bad = &cl;
                break;
            }
        }
        if (!bad) {
            ++stats.leaves;
            collected.push_back(s);
            return;
        }
        if (static_cast<int>(s.size()) == k || bad->empty()) {
            ++stats.leaves;
            return;
        }
        for (int lit : bad->literals) {
            VarSet next = s;
            insert_sorted(next, std::abs(lit));
            run(next);
        }
    }
};

} // namespace

std::vector<VarSet> min_weak_backdoors(const CnfFormula& phi, int k, const BaseClass& c,
                                       SearchStats* stats) {
    if (!c.closed_under_literal_removal)
        throw Error("unsupported-class",
                    c.name + " is not closed under literal removal");
    SearchStats local;
    WeakSearch search{phi, k, c, {}, stats ? *stats : local};
    VarSet s;
    if (k >= 0) search.run(s);
    return minimal_antichain(std::move(search.collected));
}

std::vector<VarSet> min_strong_backdoors(const CnfFormula& phi, int k, const BaseClass& c,
                                         SearchStats* stats) {
    SearchStats local;
    StrongSearch search{phi, k, c, {}, stats ? *stats : local};
    VarSet s;
    if (k >= 0) search.run(s);
    return minimal_antichain(std::move(search.collected));
}

std::vector<VarSet> weak_neighbourhood(const BackdoorInstance& x, const NbInput<VarSet>& input) {
    if (!input) return min_weak_backdoors(x.phi, x.k, *x.base);
    const VarSet& s = *input;
    const int budget = x.k - static_cast<int>(s.size()) - 1;
    std::vector<VarSet> out;
    if (budget < 0) return out;
    for (int var : x.phi.variables()) {
        if (std::binary_search(s.begin(), s.end(), var)) continue;
        VarSet with_var = s;
        insert_sorted(with_var, var);
        for (const Assignment& theta : all_assignments(with_var)) {
            CnfFormula residue = apply_assignment(x.phi, theta);
            for (const VarSet& t : min_weak_backdoors(residue, budget, *x.base)) {
                VarSet candidate = with_var;
                for (int v : t) insert_sorted(candidate, v);
                out.push_back(std::move(candidate));
            }
        }
    }
    return normalize_family<int>(std::move(out));
}

std::vector<VarSet> strong_neighbourhood(const BackdoorInstance& x, const NbInput<VarSet>& input) {
    if (!input) return min_strong_backdoors(x.phi, x.k, *x.base);
    const VarSet& s = *input;
    const int budget = x.k - static_cast<int>(s.size()) - 1;
    std::vector<VarSet> out;
    if (budget < 0) return out;
    for (int var : x.phi.variables()) {
        if (std::binary_search(s.begin(), s.end(), var)) continue;
        VarSet with_var = s;
        insert_sorted(with_var, var);
        CnfFormula residue = delete_vars(x.phi, with_var);
        for (const VarSet& t : min_strong_backdoors(residue, budget, *x.base)) {
            VarSet candidate = with_var;
            for (int v : t) insert_sorted(candidate, v);
            out.push_back(std::move(candidate));
        }
    }
    return normalize_family<int>(std::move(out));
}

} // namespace enumfpt
