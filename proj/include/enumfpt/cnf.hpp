#pragma once

#include <map>
#include <vector>

namespace enumfpt {

// A clause is a set of literals; a literal is a signed variable id (positive
// for the variable, negative for its negation). Literals are kept sorted by
// (variable, sign) and no variable occurs twice in a clause.
struct Clause {
    std::vector<int> literals;

    bool empty() const { return literals.empty(); }
    int positive_count() const;
    bool contains_var(int var) const;

    friend bool operator==(const Clause&, const Clause&) = default;
};

struct CnfFormula {
    std::vector<Clause> clauses;

    // Variables occurring in some clause, sorted.
    std::vector<int> variables() const;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

Clause make_clause(std::vector<int> literals);

// Partial assignment: variable id -> value.
using Assignment = std::map<int, bool>;

// Sorted set of variable ids (backdoor sets, true-sets).
using VarSet = std::vector<int>;

// Clauses with a satisfied literal are removed; falsified literals are
// removed. A clause losing all its literals stays as the empty clause, so the
// residue remains recognizably unsatisfiable.
CnfFormula apply_assignment(const CnfFormula& phi, const Assignment& theta);

// Remove all literals over the given variables from every clause.
CnfFormula delete_vars(const CnfFormula& phi, const std::vector<int>& vars);

// True-set semantics: the named variables are 1, all others 0.
bool satisfies(const CnfFormula& phi, const std::vector<int>& true_set);

// Unit propagation; returns false iff an empty clause appears. Complete as a
// satisfiability test for Horn formulas.
bool unit_propagation_consistent(const CnfFormula& phi);

// Implication-graph satisfiability for formulas with at most two literals
// per clause.
bool two_cnf_satisfiable(const CnfFormula& phi);

} // namespace enumfpt
