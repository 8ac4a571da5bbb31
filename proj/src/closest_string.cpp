#include "enumfpt/closest_string.hpp"

#include <algorithm>

#include "enumfpt/error.hpp"

namespace enumfpt {

int hamming(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) throw Error("length-mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

std::string apply_flips(const std::string& w, const FlipSet& s) {
    std::string out = w;
    for (int pos : s) {
        if (pos < 1 || pos > static_cast<int>(w.size()))
            throw Error("position-out-of-range", std::to_string(pos));
        out[pos - 1] = out[pos - 1] == '0' ? '1' : '0';
    }
    return out;
}

namespace {

struct CsSearch {
    const StringInstance& x;
    int cap; // maximum number of flips
    std::vector<FlipSet> collected;
    SearchStats& stats;

    // center = current(S applied to s1); true iff all distances <= d.
    int first_violated(const std::string& center) const {
        for (std::size_t i = 0; i < x.strings.size(); ++i)
            if (hamming(center, x.strings[i]) > x.d) return static_cast<int>(i);
        return -1;
    }

    void run(FlipSet& flips, const std::string& center) {
        ++stats.calls;
        int bad = first_violated(center);
        if (bad < 0) {
            ++stats.leaves;
            collected.push_back(flips);
            return;
        }
        if (static_cast<int>(flips.size()) >= cap) {
            ++stats.leaves;
            return;
        }
        // Fresh mismatch positions against the violated string; flipping
        // none of d+1 of them leaves the distance above d (pigeonhole).
        const std::string& target = x.strings[bad];
        std::vector<int> branch;
        for (int pos = 1; pos <= static_cast<int>(center.size()); ++pos) {
            if (center[pos - 1] == target[pos - 1]) continue;
            if (std::binary_search(flips.begin(), flips.end(), pos)) continue;
            branch.push_back(pos);
            if (static_cast<int>(branch.size()) == x.d + 1) break;
        }
        if (branch.empty()) {
            ++stats.leaves; // every remaining mismatch is pinned by S
            return;
        }
        for (int pos : branch) {
            FlipSet next = flips;
            insert_sorted(next, pos);
            std::string child = center;
            child[pos - 1] = child[pos - 1] == '0' ? '1' : '0';
            run(next, child);
        }
    }
};

} // namespace

std::vector<FlipSet> min_closest_string(const StringInstance& x, int size_budget,
                                        SearchStats* stats) {
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    int cap = x.d;
    if (size_budget >= 0) cap = std::min(cap, size_budget);
    if (cap < 0) return {};
    CsSearch search{x, cap, {}, st};
    FlipSet flips;
    std::string center = x.strings.empty() ? std::string() : x.strings[0];
    search.run(flips, center);
    return minimal_antichain(std::move(search.collected));
}

std::vector<FlipSet> cs_neighbourhood(const StringInstance& x, const NbInput<FlipSet>& input) {
    if (!input) return min_closest_string(x);
    const FlipSet& s = *input;
    const int budget = x.d - static_cast<int>(s.size()) - 1;
    std::vector<FlipSet> out;
    if (budget < 0) return out;
    const int n = x.length();
    for (int pos = 1; pos <= n; ++pos) {
        if (std::binary_search(s.begin(), s.end(), pos)) continue;
        FlipSet with_pos = s;
        insert_sorted(with_pos, pos);
        StringInstance shifted = x;
        shifted.strings[0] = apply_flips(x.strings[0], with_pos);
        for (const FlipSet& t : min_closest_string(shifted, budget)) {
            bool disjoint = true;
            for (int p : t)
                if (std::binary_search(with_pos.begin(), with_pos.end(), p)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            FlipSet candidate = with_pos;
            for (int p : t) insert_sorted(candidate, p);
            out.push_back(std::move(candidate));
        }
    }
    return normalize_family<int>(std::move(out));
}

std::vector<int> ClosestStringContract::universe(const Instance& x) const {
    std::vector<int> out(static_cast<std::size_t>(x.length()));
    for (int i = 0; i < x.length(); ++i) out[static_cast<std::size_t>(i)] = i + 1;
    return out;
}

bool ClosestStringContract::is_solution(const Instance& x, const Solution& s) const {
    if (x.strings.empty()) return true;
    std::string center = apply_flips(x.strings[0], s);
    for (const std::string& t : x.strings)
        if (hamming(center, t) > x.d) return false;
    return true;
}

} // namespace enumfpt
