#pragma once

#include <optional>
#include <vector>

#include "enumfpt/enumerate.hpp"
#include "enumfpt/graph.hpp"

namespace enumfpt {

// Chordal completion (minimum fill-in): add at most k edges so that every
// induced cycle of length >= 4 has a chord.
struct ChordalInstance {
    Graph graph;
    int k = 0;
};

// Maximum-cardinality search followed by a perfect-elimination-ordering check.
bool is_chordal(const Graph& g);

// A chordless cycle of length >= 4 in cyclic vertex order, or nullopt iff the
// graph is chordal. Deterministic for a fixed input.
std::optional<std::vector<int>> find_chordless_cycle(const Graph& g);

// All inclusion-minimal sets of at most k edge additions making g chordal
// (addEdge operations only), in solution order. Bounded search tree branching
// on the chords of a chordless cycle; a cycle of length l needs at least l-3
// chords, which prunes hopeless branches.
std::vector<OperationSet> min_k_triangulations(const Graph& g, int k);

std::vector<OperationSet> cc_neighbourhood(const ChordalInstance& x,
                                           const NbInput<OperationSet>& input);

struct ChordalCompletionContract {
    using Instance = ChordalInstance;
    using Op = GraphOp;
    using Solution = OperationSet;

    int parameter(const Instance& x) const { return x.k; }
    std::vector<Op> universe(const Instance& x) const; // addEdge per non-edge
    bool consistent(const Solution& s) const { return is_consistent(s); }
    bool is_solution(const Instance& x, const Solution& s) const;
    Instance apply(const Instance& x, const Solution& s, int new_budget) const;
};

} // namespace enumfpt
