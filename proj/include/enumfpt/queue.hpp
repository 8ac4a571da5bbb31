#pragma once

#include <map>
#include <utility>

#include "enumfpt/error.hpp"
#include "enumfpt/solution.hpp"

namespace enumfpt {

// Duplicate-free priority queue over solutions, ordered by SolutionKey.
// Backed by a balanced tree; the canonical bytes inside the key double as the
// membership index, so inserting an element already present is a no-op.
template <class Sol>
class SolutionQueue {
public:
    // Returns false when the solution was already present.
    bool insert(SolutionKey key, Sol solution) {
        return entries_.emplace(std::move(key), std::move(solution)).second;
    }

    bool insert(Sol solution) {
        auto key = key_of(solution);
        return insert(std::move(key), std::move(solution));
    }

    Sol extract_min() {
        if (entries_.empty()) throw Error("queue-empty");
        auto it = entries_.begin();
        Sol out = std::move(it->second);
        entries_.erase(it);
        return out;
    }

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::map<SolutionKey, Sol> entries_;
};

} // namespace enumfpt
