#pragma once

#include <string>
#include <vector>

#include "enumfpt/enumerate.hpp"
#include "enumfpt/forbidden.hpp"

namespace enumfpt {

// Closest string over {0,1}: find flip sets S of positions of s1 such that
// S(s1) has Hamming distance at most d from every input string. Since
// d_H(S(s1), s1) = |S|, every solution has at most d flips.
struct StringInstance {
    std::vector<std::string> strings; // equal length, characters '0'/'1'
    int d = 0;

    int length() const { return strings.empty() ? 0 : static_cast<int>(strings[0].size()); }
};

using FlipSet = std::vector<int>; // sorted 1-based positions

int hamming(const std::string& a, const std::string& b); // Error("length-mismatch")

// Flip the indicated 1-based positions; applying the same set twice is the
// identity. Error("position-out-of-range").
std::string apply_flips(const std::string& w, const FlipSet& s);

// All inclusion-minimal solutions with at most  min(d, size_budget)  flips;
// size_budget < 0 means the instance's own bound d. Gramm-style bounded
// search tree: while some string is too far, branch on up to d+1 fresh
// mismatch positions (any solution extending the branch must flip one).
std::vector<FlipSet> min_closest_string(const StringInstance& x, int size_budget = -1,
                                        SearchStats* stats = nullptr);

// Seed maps to the minimal solutions; a solution S maps, per fresh position
// i, to S' = S ∪ {i} joined with each minimal solution T of the instance
// whose first string is S'(s1), under size budget d - |S| - 1 and disjoint
// from S'.
std::vector<FlipSet> cs_neighbourhood(const StringInstance& x, const NbInput<FlipSet>& input);

struct ClosestStringContract {
    using Instance = StringInstance;
    using Op = int;
    using Solution = FlipSet;

    int parameter(const Instance& x) const { return x.d; }
    std::vector<int> universe(const Instance& x) const;
    bool consistent(const Solution&) const { return true; }
    bool is_solution(const Instance& x, const Solution& s) const;
};

} // namespace enumfpt
