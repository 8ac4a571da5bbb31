#include "enumfpt/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "enumfpt/error.hpp"

namespace enumfpt {

namespace {

bool literal_less(int a, int b) {
    int va = std::abs(a), vb = std::abs(b);
    return va != vb ? va < vb : a < b;
}

} // namespace

int Clause::positive_count() const {
    int c = 0;
    for (int lit : literals)
        if (lit > 0) ++c;
    return c;
}

bool Clause::contains_var(int var) const {
    for (int lit : literals)
        if (std::abs(lit) == var) return true;
    return false;
}

Clause make_clause(std::vector<int> literals) {
    std::sort(literals.begin(), literals.end(), literal_less);
    for (std::size_t i = 0; i + 1 < literals.size(); ++i)
        if (std::abs(literals[i]) == std::abs(literals[i + 1]))
            throw Error("invariant-violation",
                        "variable " + std::to_string(std::abs(literals[i])) +
                            " occurs twice in a clause");
    for (int lit : literals)
        if (lit == 0) throw Error("invariant-violation", "zero literal");
    return Clause{std::move(literals)};
}

std::vector<int> CnfFormula::variables() const {
    std::set<int> vars;
    for (const Clause& c : clauses)
        for (int lit : c.literals) vars.insert(std::abs(lit));
    return {vars.begin(), vars.end()};
}

CnfFormula apply_assignment(const CnfFormula& phi, const Assignment& theta) {
    CnfFormula out;
    for (const Clause& c : phi.clauses) {
        Clause reduced;
        bool satisfied = false;
        for (int lit : c.literals) {
            auto it = theta.find(std::abs(lit));
            if (it == theta.end()) {
                reduced.literals.push_back(lit);
                continue;
            }
            if (it->second == (lit > 0)) {
                satisfied = true;
                break;
            }
            // falsified literal dropped
        }
        if (!satisfied) out.clauses.push_back(std::move(reduced));
    }
    return out;
}

CnfFormula delete_vars(const CnfFormula& phi, const std::vector<int>& vars) {
    std::set<int> doomed(vars.begin(), vars.end());
    CnfFormula out;
    for (const Clause& c : phi.clauses) {
        Clause reduced;
        for (int lit : c.literals)
            if (!doomed.count(std::abs(lit))) reduced.literals.push_back(lit);
        out.clauses.push_back(std::move(reduced));
    }
    return out;
}

bool satisfies(const CnfFormula& phi, const std::vector<int>& true_set) {
    for (const Clause& c : phi.clauses) {
        bool clause_true = false;
        for (int lit : c.literals) {
            bool value = std::binary_search(true_set.begin(), true_set.end(), std::abs(lit));
            if (value == (lit > 0)) {
                clause_true = true;
                break;
            }
        }
        if (!clause_true) return false;
    }
    return true;
}

bool unit_propagation_consistent(const CnfFormula& phi) {
    CnfFormula current = phi;
    for (;;) {
        int unit = 0;
        for (const Clause& c : current.clauses) {
            if (c.empty()) return false;
            if (c.literals.size() == 1) unit = c.literals[0];
        }
        if (unit == 0) return true;
        current = apply_assignment(current, Assignment{{std::abs(unit), unit > 0}});
    }
}

bool two_cnf_satisfiable(const CnfFormula& phi) {
    for (const Clause& c : phi.clauses)
        if (c.empty()) return false;

    std::vector<int> vars = phi.variables();
    std::map<int, int> index;
    for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = static_cast<int>(i);
    auto node = [&](int lit) { return 2 * index[std::abs(lit)] + (lit > 0 ? 0 : 1); };
    auto negated = [](int n) { return n ^ 1; };

    int n = 2 * static_cast<int>(vars.size());
    std::vector<std::vector<int>> fwd(n), rev(n);
    auto add_implication = [&](int from_lit, int to_lit) {
        fwd[node(from_lit)].push_back(node(to_lit));
        rev[node(to_lit)].push_back(node(from_lit));
    };
    for (const Clause& c : phi.clauses) {
        if (c.literals.size() == 1) {
            add_implication(-c.literals[0], c.literals[0]);
        } else if (c.literals.size() == 2) {
            add_implication(-c.literals[0], c.literals[1]);
            add_implication(-c.literals[1], c.literals[0]);
        } else {
            throw Error("invariant-violation", "clause width exceeds 2");
        }
    }

    // Kosaraju: order by finish time, then label components on the reverse graph.
    std::vector<char> seen(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
        seen[start] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < fwd[v].size()) {
                int w = fwd[v][next++];
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }
    std::vector<int> comp(n, -1);
    int label = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] != -1) continue;
        std::vector<int> stack{*it};
        comp[*it] = label;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : rev[v]) {
                if (comp[w] == -1) {
                    comp[w] = label;
                    stack.push_back(w);
                }
            }
        }
        ++label;
    }
    for (int v = 0; v < n; v += 2)
        if (comp[v] == comp[negated(v)]) return false;
    return true;
}

} // namespace enumfpt
