#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace enumfpt {

// Solutions are kept as sorted, duplicate-free vectors of atomic operations.
// The total order used everywhere is: cardinality first, then the canonical
// byte encoding lexicographically. Operation types provide
// append_op_bytes(out, op); the byte order must agree with operator<=> of the
// operation type so vector comparison and byte comparison coincide.

inline void append_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>((v >> 24) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>(v & 0xff));
}

// Plain integer operations (flip positions, variable ids). Values are >= 0.
inline void append_op_bytes(std::string& out, int v) {
    append_u32(out, static_cast<std::uint32_t>(v));
}

template <class Op>
std::string canonical_bytes(const std::vector<Op>& sorted_ops) {
    std::string out;
    for (const Op& op : sorted_ops) append_op_bytes(out, op);
    return out;
}

struct SolutionKey {
    std::size_t cardinality = 0;
    std::string bytes;

    friend auto operator<=>(const SolutionKey&, const SolutionKey&) = default;
};

template <class Op>
SolutionKey key_of(const std::vector<Op>& sorted_ops) {
    return SolutionKey{sorted_ops.size(), canonical_bytes(sorted_ops)};
}

// Same order as key_of comparison, without materializing byte strings.
template <class Op>
bool key_less(const std::vector<Op>& a, const std::vector<Op>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

template <class Op>
std::strong_ordering compare_solutions(const std::vector<Op>& a, const std::vector<Op>& b) {
    if (key_less(a, b)) return std::strong_ordering::less;
    if (key_less(b, a)) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Insert op into a sorted vector, ignoring duplicates.
template <class Op>
void insert_sorted(std::vector<Op>& sol, const Op& op) {
    auto it = std::lower_bound(sol.begin(), sol.end(), op);
    if (it != sol.end() && *it == op) return;
    sol.insert(it, op);
}

template <class Op>
std::vector<Op> make_solution(std::vector<Op> ops) {
    std::sort(ops.begin(), ops.end());
    ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
    return ops;
}

// Sort a family by the solution order and drop duplicates.
template <class Op>
std::vector<std::vector<Op>> normalize_family(std::vector<std::vector<Op>> family) {
    std::sort(family.begin(), family.end(), key_less<Op>);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

// Restrict a (deduplicated) family to its inclusion-minimal members.
template <class Op>
std::vector<std::vector<Op>> minimal_antichain(std::vector<std::vector<Op>> family) {
    family = normalize_family(std::move(family));
    std::vector<std::vector<Op>> out;
    for (const auto& s : family) {
        bool has_proper_subset = false;
        for (const auto& t : family) {
            if (t.size() >= s.size()) break; // sorted by size
            if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
                has_proper_subset = true;
                break;
            }
        }
        if (!has_proper_subset) out.push_back(s);
    }
    return out;
}

} // namespace enumfpt
