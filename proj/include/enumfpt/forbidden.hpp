#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "enumfpt/graph.hpp"

namespace enumfpt {

struct AllowedOps {
    bool delete_vertex = false;
    bool delete_edge = false;
    bool add_edge = false;
};

// Finite family of forbidden induced patterns plus the operation kinds the
// problem admits. The property holds iff no pattern occurs induced.
struct ForbiddenSet {
    std::vector<Graph> patterns;
    AllowedOps allowed;

    std::size_t max_pattern_size() const;
};

// First induced occurrence of any pattern in scan order: the returned vector
// maps pattern vertices (in sorted id order) to vertices of g. nullopt iff no
// pattern occurs, i.e. g satisfies the property.
std::optional<std::vector<int>> find_forbidden(const Graph& g, const ForbiddenSet& f);

struct SearchStats {
    std::uint64_t calls = 0;  // recursive invocations, root included
    std::uint64_t leaves = 0; // invocations that did not branch
};

// Bounded search tree enumerating all inclusion-minimal operation sets S with
// |S| <= k whose application removes every forbidden occurrence. Branches on
// the operations touching one occurrence; collected sets are post-filtered to
// the inclusion-minimal family and returned in solution order.
std::vector<OperationSet> min_bst(const Graph& g, int k, const ForbiddenSet& f,
                                  SearchStats* stats = nullptr);

} // namespace enumfpt
