#pragma once

#include <functional>
#include <string>

#include "enumfpt/cnf.hpp"

namespace enumfpt {

// Clause-defined base class: a formula belongs iff every clause passes the
// per-clause predicate; recognition and satisfiability are polynomial.
// closed_under_literal_removal means removing literals from a member clause
// keeps it a member (both shipped classes have this).
struct BaseClass {
    std::string name;
    std::function<bool(const Clause&)> clause_in_class;
    std::function<bool(const CnfFormula&)> satisfiable; // callers check membership first
    bool closed_under_literal_removal = false;
};

// Horn: at most one positive literal per clause; unit-propagation decides
// satisfiability.
const BaseClass& horn_class();

// 2CNF: at most two literals per clause; implication graph decides
// satisfiability.
const BaseClass& twocnf_class();

bool is_in_class(const CnfFormula& phi, const BaseClass& c);

// Lookup by CLI name ("horn" / "2cnf"); throws Error("unsupported-class").
const BaseClass& base_class_by_name(const std::string& name);

} // namespace enumfpt
