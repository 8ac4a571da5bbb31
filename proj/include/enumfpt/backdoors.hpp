#pragma once

#include <vector>

#include "enumfpt/base_class.hpp"
#include "enumfpt/cnf.hpp"
#include "enumfpt/enumerate.hpp"
#include "enumfpt/forbidden.hpp"

namespace enumfpt {

// Instance for weak/strong C-backdoor enumeration on 3CNF formulas.
struct BackdoorInstance {
    CnfFormula phi;
    int k = 0;
    const BaseClass* base = &horn_class();
};

// Weak: some assignment over S puts phi into the class and leaves it
// satisfiable. Checked over all 2^|S| assignments.
bool is_weak_backdoor(const CnfFormula& phi, const BaseClass& c, const VarSet& s);

// Strong: every assignment over S puts phi into the class; for clause-defined
// classes this coincides with deleting S from phi.
bool is_strong_backdoor(const CnfFormula& phi, const BaseClass& c, const VarSet& s);

// All inclusion-minimal weak C-backdoors of size <= k. Bounded search tree:
// at a node S, if no assignment over S yields a member-and-satisfiable
// residue, branch on the variables of the first out-of-class residual clause
// of every assignment's residue (any larger backdoor must use one of them).
// Requires a class closed under literal removal: Error("unsupported-class").
std::vector<VarSet> min_weak_backdoors(const CnfFormula& phi, int k, const BaseClass& c,
                                       SearchStats* stats = nullptr);

// All inclusion-minimal strong C-backdoors of size <= k, branching on the
// at most three variables of a residual clause outside the class.
std::vector<VarSet> min_strong_backdoors(const CnfFormula& phi, int k, const BaseClass& c,
                                         SearchStats* stats = nullptr);

std::vector<VarSet> weak_neighbourhood(const BackdoorInstance& x, const NbInput<VarSet>& input);
std::vector<VarSet> strong_neighbourhood(const BackdoorInstance& x, const NbInput<VarSet>& input);

struct WeakBackdoorContract {
    using Instance = BackdoorInstance;
    using Op = int;
    using Solution = VarSet;

    int parameter(const Instance& x) const { return x.k; }
    std::vector<int> universe(const Instance& x) const { return x.phi.variables(); }
    bool consistent(const Solution&) const { return true; }
    bool is_solution(const Instance& x, const Solution& s) const {
        return static_cast<int>(s.size()) <= x.k && is_weak_backdoor(x.phi, *x.base, s);
    }
};

struct StrongBackdoorContract {
    using Instance = BackdoorInstance;
    using Op = int;
    using Solution = VarSet;

    int parameter(const Instance& x) const { return x.k; }
    std::vector<int> universe(const Instance& x) const { return x.phi.variables(); }
    bool consistent(const Solution&) const { return true; }
    bool is_solution(const Instance& x, const Solution& s) const {
        return static_cast<int>(s.size()) <= x.k && is_strong_backdoor(x.phi, *x.base, s);
    }
};

} // namespace enumfpt
