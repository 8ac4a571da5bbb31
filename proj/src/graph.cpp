#include "enumfpt/graph.hpp"

#include <algorithm>

#include "enumfpt/error.hpp"

namespace enumfpt {

Graph Graph::with_vertices(int n) {
    Graph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v);
    return g;
}

void Graph::add_vertex(int v) { adj_.try_emplace(v); }

void Graph::add_edge(int u, int v) {
    if (u == v) throw Error("inapplicable-operation", "self-loop " + std::to_string(u));
    auto iu = adj_.find(u);
    auto iv = adj_.find(v);
    if (iu == adj_.end() || iv == adj_.end())
        throw Error("inapplicable-operation", "edge endpoint missing");
    if (iu->second.insert(v).second) {
        iv->second.insert(u);
        ++edge_count_;
    }
}

void Graph::remove_edge(int u, int v) {
    auto iu = adj_.find(u);
    auto iv = adj_.find(v);
    if (iu == adj_.end() || iv == adj_.end() || iu->second.erase(v) == 0)
        throw Error("inapplicable-operation", "edge not present");
    iv->second.erase(u);
    --edge_count_;
}

void Graph::remove_vertex(int v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw Error("inapplicable-operation", "vertex not present");
    for (int u : it->second) {
        adj_[u].erase(v);
        --edge_count_;
    }
    adj_.erase(it);
}

bool Graph::has_edge(int u, int v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

const std::set<int>& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw Error("inapplicable-operation", "vertex not present");
    return it->second;
}

std::vector<int> Graph::vertices() const {
    std::vector<int> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (const auto& [v, nbrs] : adj_)
        for (int u : nbrs)
            if (v < u) out.emplace_back(v, u);
    return out;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> out;
    std::set<int> seen;
    for (const auto& [start, _] : adj_) {
        if (seen.count(start)) continue;
        std::vector<int> comp;
        std::vector<int> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : adj_.at(v)) {
                if (seen.insert(u).second) stack.push_back(u);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_consistent(const OperationSet& ops) {
    std::set<std::pair<int, int>> added, deleted;
    std::set<int> removed_vertices;
    for (const GraphOp& op : ops) {
        switch (op.kind) {
        case GraphOp::Kind::DeleteVertex: removed_vertices.insert(op.u); break;
        case GraphOp::Kind::DeleteEdge: deleted.emplace(op.u, op.v); break;
        case GraphOp::Kind::AddEdge: added.emplace(op.u, op.v); break;
        }
    }
    for (const auto& e : added)
        if (deleted.count(e)) return false;
    for (const GraphOp& op : ops) {
        if (op.kind == GraphOp::Kind::DeleteVertex) continue;
        if (removed_vertices.count(op.u) || removed_vertices.count(op.v)) return false;
    }
    return true;
}

Graph apply_ops(const Graph& g, const OperationSet& ops) {
    if (!is_consistent(ops)) throw Error("inconsistent-set");
    Graph out = g;
    for (const GraphOp& op : ops) {
        switch (op.kind) {
        case GraphOp::Kind::AddEdge:
            if (g.has_edge(op.u, op.v))
                throw Error("inapplicable-operation", "addEdge target present");
            out.add_edge(op.u, op.v);
            break;
        case GraphOp::Kind::DeleteEdge:
            if (!g.has_edge(op.u, op.v))
                throw Error("inapplicable-operation", "deleteEdge target absent");
            out.remove_edge(op.u, op.v);
            break;
        case GraphOp::Kind::DeleteVertex:
            break; // applied below, after edge operations
        }
    }
    for (const GraphOp& op : ops) {
        if (op.kind != GraphOp::Kind::DeleteVertex) continue;
        if (!g.has_vertex(op.u))
            throw Error("inapplicable-operation", "deleteVertex target absent");
        out.remove_vertex(op.u);
    }
    return out;
}

std::string to_string(const GraphOp& op) {
    switch (op.kind) {
    case GraphOp::Kind::DeleteVertex: return "delVertex(" + std::to_string(op.u) + ")";
    case GraphOp::Kind::DeleteEdge:
        return "delEdge(" + std::to_string(op.u) + "," + std::to_string(op.v) + ")";
    case GraphOp::Kind::AddEdge:
        return "addEdge(" + std::to_string(op.u) + "," + std::to_string(op.v) + ")";
    }
    return "?";
}

} // namespace enumfpt
