#include "enumfpt/chordal.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace enumfpt {

namespace {

// MCS visit order: repeatedly pick the unvisited vertex with the most visited
// neighbors, smallest id on ties. The reverse visit order is a perfect
// elimination ordering iff the graph is chordal.
std::vector<int> mcs_order(const Graph& g) {
    std::vector<int> verts = g.vertices();
    std::map<int, int> weight;
    std::map<int, char> visited;
    for (int v : verts) weight[v] = 0;
    std::vector<int> order;
    order.reserve(verts.size());
    for (std::size_t step = 0; step < verts.size(); ++step) {
        int best = -1;
        for (int v : verts) {
            if (visited[v]) continue;
            if (best == -1 || weight[v] > weight[best]) best = v;
        }
        visited[best] = 1;
        order.push_back(best);
        for (int u : g.neighbors(best))
            if (!visited[u]) ++weight[u];
    }
    return order;
}

} // namespace

bool is_chordal(const Graph& g) {
    std::vector<int> visit = mcs_order(g);
    std::map<int, std::size_t> pos; // elimination position: reverse visit order
    for (std::size_t i = 0; i < visit.size(); ++i) pos[visit[i]] = visit.size() - 1 - i;
    for (int v : visit) {
        // Later neighbors in elimination order must form a clique; it suffices
        // to check them against the earliest one.
        int anchor = -1;
        for (int u : g.neighbors(v))
            if (pos[u] > pos[v] && (anchor == -1 || pos[u] < pos[anchor])) anchor = u;
        if (anchor == -1) continue;
        for (int u : g.neighbors(v)) {
            if (pos[u] <= pos[v] || u == anchor) continue;
            if (!g.has_edge(anchor, u)) return false;
        }
    }
    return true;
}

std::optional<std::vector<int>> find_chordless_cycle(const Graph& g) {
    // Every hole through an edge (b,a) and a second neighbor c of b with
    // ac absent closes via a shortest a-c path avoiding N[b] \ {a,c}.
    for (int b : g.vertices()) {
        const auto& nbrs = g.neighbors(b);
        for (auto ia = nbrs.begin(); ia != nbrs.end(); ++ia) {
            for (auto ic = std::next(ia); ic != nbrs.end(); ++ic) {
                int a = *ia, c = *ic;
                if (g.has_edge(a, c)) continue;
                std::map<int, int> parent;
                parent[a] = a;
                std::deque<int> fifo{a};
                bool found = false;
                while (!fifo.empty() && !found) {
                    int v = fifo.front();
                    fifo.pop_front();
                    for (int w : g.neighbors(v)) {
                        if (parent.count(w)) continue;
                        if (w != c && (w == b || g.has_edge(w, b))) continue;
                        parent[w] = v;
                        if (w == c) {
                            found = true;
                            break;
                        }
                        fifo.push_back(w);
                    }
                }
                if (!found) continue;
                std::vector<int> path; // c back to a
                for (int v = c;; v = parent[v]) {
                    path.push_back(v);
                    if (v == a) break;
                }
                path.push_back(b); // cycle: c .. a, b, (back to c)
                return path;
            }
        }
    }
    return std::nullopt;
}

namespace {

void min_tri_rec(const Graph& current, int remaining, OperationSet& partial,
                 std::vector<OperationSet>& collected) {
    auto cycle = find_chordless_cycle(current);
    if (!cycle) {
        collected.push_back(partial);
        return;
    }
    int len = static_cast<int>(cycle->size());
    if (len - 3 > remaining) return; // even l-3 chords cannot fit
    for (int i = 0; i < len; ++i) {
        for (int j = i + 2; j < len; ++j) {
            if (i == 0 && j == len - 1) continue; // consecutive on the cycle
            GraphOp chord = GraphOp::add_edge((*cycle)[i], (*cycle)[j]);
            OperationSet next = partial;
            insert_sorted(next, chord);
            Graph child = current;
            child.add_edge(chord.u, chord.v);
            min_tri_rec(child, remaining - 1, next, collected);
        }
    }
}

} // namespace

std::vector<OperationSet> min_k_triangulations(const Graph& g, int k) {
    std::vector<OperationSet> collected;
    OperationSet partial;
    if (k >= 0) min_tri_rec(g, k, partial, collected);
    return minimal_antichain(std::move(collected));
}

std::vector<OperationSet> cc_neighbourhood(const ChordalInstance& x,
                                           const NbInput<OperationSet>& input) {
    return build_neighbourhood(
        ChordalCompletionContract{}, x,
        [](const ChordalInstance& y) { return min_k_triangulations(y.graph, y.k); }, input);
}

std::vector<GraphOp> ChordalCompletionContract::universe(const Instance& x) const {
    std::vector<GraphOp> out;
    auto verts = x.graph.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!x.graph.has_edge(verts[i], verts[j]))
                out.push_back(GraphOp::add_edge(verts[i], verts[j]));
    std::sort(out.begin(), out.end());
    return out;
}

bool ChordalCompletionContract::is_solution(const Instance& x, const Solution& s) const {
    if (static_cast<int>(s.size()) > x.k || !is_consistent(s)) return false;
    for (const GraphOp& op : s)
        if (op.kind != GraphOp::Kind::AddEdge) return false;
    return is_chordal(apply_ops(x.graph, s));
}

ChordalInstance ChordalCompletionContract::apply(const Instance& x, const Solution& s,
                                                 int new_budget) const {
    return ChordalInstance{apply_ops(x.graph, s), new_budget};
}

} // namespace enumfpt
