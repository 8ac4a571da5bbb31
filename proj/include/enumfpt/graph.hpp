#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "enumfpt/solution.hpp"

namespace enumfpt {

// Atomic graph modification. Edge endpoints are stored with u < v; a vertex
// deletion stores the id in both fields. The declaration order of the kinds
// fixes the canonical operation order (deletions before additions).
struct GraphOp {
    enum class Kind : std::uint8_t { DeleteVertex = 0, DeleteEdge = 1, AddEdge = 2 };

    Kind kind;
    int u;
    int v;

    static GraphOp delete_vertex(int id) { return {Kind::DeleteVertex, id, id}; }
    static GraphOp delete_edge(int a, int b) {
        return {Kind::DeleteEdge, a < b ? a : b, a < b ? b : a};
    }
    static GraphOp add_edge(int a, int b) {
        return {Kind::AddEdge, a < b ? a : b, a < b ? b : a};
    }

    friend auto operator<=>(const GraphOp&, const GraphOp&) = default;
};

using OperationSet = std::vector<GraphOp>; // sorted, duplicate-free

inline void append_op_bytes(std::string& out, const GraphOp& op) {
    out.push_back(static_cast<char>(op.kind));
    append_u32(out, static_cast<std::uint32_t>(op.u));
    if (op.kind != GraphOp::Kind::DeleteVertex)
        append_u32(out, static_cast<std::uint32_t>(op.v));
}

// Undirected simple graph over integer vertex ids. Ids survive vertex
// deletion unchanged (no renumbering), so operation encodings stay stable.
class Graph {
public:
    Graph() = default;

    // Vertices 1..n, no edges.
    static Graph with_vertices(int n);

    void add_vertex(int v);
    void add_edge(int u, int v);    // endpoints must exist, no loops
    void remove_edge(int u, int v); // edge must exist
    void remove_vertex(int v);      // vertex must exist; drops incident edges

    bool has_vertex(int v) const { return adj_.count(v) != 0; }
    bool has_edge(int u, int v) const;

    const std::set<int>& neighbors(int v) const;
    std::vector<int> vertices() const;
    std::vector<std::pair<int, int>> edges() const; // sorted, u < v

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    // Connected components as sorted vertex lists, ordered by least vertex.
    std::vector<std::vector<int>> components() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::map<int, std::set<int>> adj_;
    std::size_t edge_count_ = 0;
};

// True iff the set never pairs addEdge/deleteEdge on the same edge and never
// pairs deleteVertex with an edge operation incident to that vertex.
bool is_consistent(const OperationSet& ops);

// Applies a consistent operation set; every operation must be applicable to
// g (addEdge targets an absent edge, deleteEdge a present edge, deleteVertex
// a present vertex). Throws Error("inconsistent-set") or
// Error("inapplicable-operation").
Graph apply_ops(const Graph& g, const OperationSet& ops);

std::string to_string(const GraphOp& op);

} // namespace enumfpt
