#pragma once

#include <set>
#include <string>
#include <vector>

#include "enumfpt/error.hpp"
#include "enumfpt/solution.hpp"

namespace enumfpt {

// Independent ground truth: exhaustive enumeration over every consistent
// subset of the operation universe of size at most k. Deliberately shares
// nothing with the search trees or neighbourhood functions beyond the
// contract's solution predicate and the canonical encoding.
template <class Sol>
struct OracleResult {
    std::vector<Sol> all;     // in solution order
    std::vector<Sol> minimal; // the inclusion-minimal members, same order
};

inline constexpr std::size_t kOracleMaxUniverse = 40;
inline constexpr int kOracleMaxBudget = 5;

template <class Contract>
OracleResult<typename Contract::Solution> brute_force(const Contract& c,
                                                      const typename Contract::Instance& x) {
    using Op = typename Contract::Op;
    using Sol = typename Contract::Solution;

    const std::vector<Op> universe = c.universe(x);
    const int k = c.parameter(x);
    if (universe.size() > kOracleMaxUniverse || k > kOracleMaxBudget)
        throw Error("instance-too-large",
                    "universe " + std::to_string(universe.size()) + ", budget " +
                        std::to_string(k));

    OracleResult<Sol> result;
    Sol current;
    // Depth-first over index combinations; universe is already sorted, so
    // every candidate is in canonical form. Supersets of an inconsistent set
    // stay inconsistent, which prunes the descent.
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!c.consistent(current)) return;
        if (c.is_solution(x, current)) result.all.push_back(current);
        if (static_cast<int>(current.size()) == k) return;
        for (std::size_t i = start; i < universe.size(); ++i) {
            current.push_back(universe[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    if (k >= 0) rec(rec, 0);

    std::sort(result.all.begin(), result.all.end(), key_less<Op>);

    // A solution is minimal iff none of its proper subsets is a solution;
    // with |s| <= k <= 5 the subsets are cheap to enumerate.
    std::set<Sol> membership(result.all.begin(), result.all.end());
    for (const Sol& s : result.all) {
        bool minimal = true;
        for (unsigned mask = 0; minimal && mask + 1 < (1u << s.size()); ++mask) {
            Sol subset;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (mask >> i & 1) subset.push_back(s[i]);
            if (membership.count(subset)) minimal = false;
        }
        if (minimal) result.minimal.push_back(s);
    }
    return result;
}

} // namespace enumfpt
