#include "enumfpt/base_class.hpp"

#include "enumfpt/error.hpp"

namespace enumfpt {

const BaseClass& horn_class() {
    static const BaseClass c{
        "horn",
        [](const Clause& cl) { return cl.positive_count() <= 1; },
        [](const CnfFormula& phi) { return unit_propagation_consistent(phi); },
        true,
    };
    return c;
}

const BaseClass& twocnf_class() {
    static const BaseClass c{
        "2cnf",
        [](const Clause& cl) { return cl.literals.size() <= 2; },
        [](const CnfFormula& phi) { return two_cnf_satisfiable(phi); },
        true,
    };
    return c;
}

bool is_in_class(const CnfFormula& phi, const BaseClass& c) {
    for (const Clause& cl : phi.clauses)
        if (!c.clause_in_class(cl)) return false;
    return true;
}

const BaseClass& base_class_by_name(const std::string& name) {
    if (name == "horn") return horn_class();
    if (name == "2cnf") return twocnf_class();
    throw Error("unsupported-class", name);
}

} // namespace enumfpt
