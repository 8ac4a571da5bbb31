#include "enumfpt/forbidden.hpp"

#include <algorithm>

namespace enumfpt {

std::size_t ForbiddenSet::max_pattern_size() const {
    std::size_t c = 0;
    for (const Graph& p : patterns) c = std::max(c, p.vertex_count());
    return c;
}

namespace {

// Backtracking search for an induced embedding of pattern into g. Pattern
// vertices are assigned in sorted id order; adjacency and non-adjacency with
// all previously assigned vertices are checked at each step.
bool embed(const Graph& g, const Graph& pattern, const std::vector<int>& pverts,
           std::size_t idx, std::vector<int>& image, std::vector<char>& used,
           const std::vector<int>& gverts) {
    if (idx == pverts.size()) return true;
    int pv = pverts[idx];
    for (std::size_t gi = 0; gi < gverts.size(); ++gi) {
        if (used[gi]) continue;
        int gv = gverts[gi];
        bool ok = true;
        for (std::size_t j = 0; j < idx; ++j) {
            bool padj = pattern.has_edge(pv, pverts[j]);
            bool gadj = g.has_edge(gv, image[j]);
            if (padj != gadj) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        image[idx] = gv;
        used[gi] = 1;
        if (embed(g, pattern, pverts, idx + 1, image, used, gverts)) return true;
        used[gi] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_forbidden(const Graph& g, const ForbiddenSet& f) {
    std::vector<int> gverts = g.vertices();
    for (const Graph& pattern : f.patterns) {
        if (pattern.vertex_count() > gverts.size()) continue;
        std::vector<int> pverts = pattern.vertices();
        std::vector<int> image(pverts.size());
        std::vector<char> used(gverts.size(), 0);
        if (embed(g, pattern, pverts, 0, image, used, gverts)) return image;
    }
    return std::nullopt;
}

namespace {

// Candidate operations destroying an occurrence: any modification touching
// its vertex set, restricted to the allowed kinds.
std::vector<GraphOp> occurrence_ops(const Graph& current, const std::vector<int>& occ,
                                    const AllowedOps& allowed) {
    std::vector<int> verts = occ;
    std::sort(verts.begin(), verts.end());
    std::vector<GraphOp> out;
    if (allowed.delete_vertex)
        for (int v : verts) out.push_back(GraphOp::delete_vertex(v));
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (current.has_edge(verts[i], verts[j])) {
                if (allowed.delete_edge) out.push_back(GraphOp::delete_edge(verts[i], verts[j]));
            } else if (allowed.add_edge) {
                out.push_back(GraphOp::add_edge(verts[i], verts[j]));
            }
        }
    }
    return out;
}

void min_bst_rec(const Graph& current, int k, const ForbiddenSet& f, OperationSet& partial,
                 std::vector<OperationSet>& collected, SearchStats& stats) {
    ++stats.calls;
    auto occ = find_forbidden(current, f);
    if (!occ) {
        ++stats.leaves;
        collected.push_back(partial);
        return;
    }
    if (static_cast<int>(partial.size()) == k) {
        ++stats.leaves;
        return;
    }
    auto candidates = occurrence_ops(current, *occ, f.allowed);
    bool branched = false;
    for (const GraphOp& t : candidates) {
        OperationSet next = partial;
        insert_sorted(next, t);
        if (!is_consistent(next)) continue;
        branched = true;
        Graph child = current;
        switch (t.kind) {
        case GraphOp::Kind::DeleteVertex: child.remove_vertex(t.u); break;
        case GraphOp::Kind::DeleteEdge: child.remove_edge(t.u, t.v); break;
        case GraphOp::Kind::AddEdge: child.add_edge(t.u, t.v); break;
        }
        min_bst_rec(child, k, f, next, collected, stats);
    }
    if (!branched) ++stats.leaves;
}

} // namespace

std::vector<OperationSet> min_bst(const Graph& g, int k, const ForbiddenSet& f,
                                  SearchStats* stats) {
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    std::vector<OperationSet> collected;
    OperationSet partial;
    min_bst_rec(g, k, f, partial, collected, st);
    return minimal_antichain(std::move(collected));
}

} // namespace enumfpt
