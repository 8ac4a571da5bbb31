#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "enumfpt/queue.hpp"
#include "enumfpt/solution.hpp"

namespace enumfpt {

// Input of a neighbourhood function: either the seed marker (nullopt) or a
// solution. The seed requests the initial solution set, typically all
// inclusion-minimal solutions.
template <class Sol>
using NbInput = std::optional<Sol>;

inline constexpr std::nullopt_t seed_input = std::nullopt;

// Ordered enumeration driver. Starting from nbf(x, seed), repeatedly extracts
// the least solution from the queue, hands it to the sink and inserts its
// neighbourhood. Emits every solution exactly once in non-decreasing key
// order, provided nbf satisfies the neighbourhood axioms (each neighbour is a
// strictly larger solution and every solution is reachable from the seed).
// The sink returns false to stop early.
template <class Sol, class Inst, class Nbf, class Sink>
void enumerate_ordered(const Inst& x, Nbf&& nbf, Sink&& sink) {
    SolutionQueue<Sol> queue;
    for (auto& s : nbf(x, NbInput<Sol>{})) queue.insert(std::move(s));
    while (!queue.empty()) {
        Sol current = queue.extract_min();
        if (!sink(static_cast<const Sol&>(current))) return;
        for (auto& s : nbf(x, NbInput<Sol>(current))) queue.insert(std::move(s));
    }
}

// Convenience collector used by tests.
template <class Sol, class Inst, class Nbf>
std::vector<Sol> enumerate_to_vector(const Inst& x, Nbf&& nbf) {
    std::vector<Sol> out;
    enumerate_ordered<Sol>(x, nbf, [&](const Sol& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

// Generic neighbourhood construction from a minimal-solution enumerator.
//
// A problem contract provides:
//   types Instance, Op (Solution = std::vector<Op>)
//   int parameter(const Instance&)                      -- the budget
//   std::vector<Op> universe(const Instance&)           -- atomic operations
//   bool consistent(const std::vector<Op>&)
//   bool is_solution(const Instance&, const std::vector<Op>&)
//   Instance apply(const Instance&, const std::vector<Op>&, int new_budget)
//
// min_enum(y) must return all inclusion-minimal solutions of instance y
// within y's own budget. For the seed the result is min_enum(x); for a
// solution S it is every consistent S ∪ {t} ∪ S' with t a fresh operation
// consistent with S and S' a minimal solution of the instance obtained by
// applying S ∪ {t}, with budget parameter(x) - |S| - 1.
template <class Contract, class MinEnum>
std::vector<std::vector<typename Contract::Op>>
build_neighbourhood(const Contract& c, const typename Contract::Instance& x,
                    MinEnum&& min_enum,
                    const NbInput<std::vector<typename Contract::Op>>& input) {
    using Op = typename Contract::Op;
    using Sol = std::vector<Op>;

    if (!input) return normalize_family<Op>(min_enum(x));

    const Sol& s = *input;
    const int budget = c.parameter(x) - static_cast<int>(s.size()) - 1;
    std::vector<Sol> out;
    if (budget < 0) return out;

    for (const Op& t : c.universe(x)) {
        if (std::binary_search(s.begin(), s.end(), t)) continue;
        Sol with_t = s;
        insert_sorted(with_t, t);
        if (!c.consistent(with_t)) continue;
        auto modified = c.apply(x, with_t, budget);
        for (const Sol& extension : min_enum(modified)) {
            Sol candidate = with_t;
            for (const Op& op : extension) insert_sorted(candidate, op);
            if (!c.consistent(candidate)) continue;
            out.push_back(std::move(candidate));
        }
    }
    return normalize_family<Op>(std::move(out));
}

} // namespace enumfpt
