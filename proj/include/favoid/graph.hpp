#pragma once

// Loopless multigraphs with stable edge indices, orientations over them, and
// the reachability / reversal primitives the solvers are built from.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "favoid/error.hpp"

namespace favoid {

using Vertex = int;
using EdgeId = int;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

class MultiGraph {
public:
    MultiGraph() = default;

    /// Throws LoopEdge for u == v and BadVertexId for endpoints outside [0, n).
    MultiGraph(int vertex_count, std::span<const Edge> edges);
    MultiGraph(int vertex_count, std::initializer_list<Edge> edges)
        : MultiGraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    int vertex_count() const noexcept { return static_cast<int>(incidence_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Edge slots at v; a parallel edge appears once per copy.
    std::span<const EdgeId> incident(Vertex v) const { return incidence_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(incidence_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const noexcept;

    Vertex other_end(EdgeId e, Vertex v) const
    {
        const Edge& ed = edge(e);
        return ed.u == v ? ed.v : ed.u;
    }

    bool is_regular(int d) const noexcept;

    /// Subgraph on the same vertex set keeping the listed edges, in the given order.
    MultiGraph edge_subgraph(std::span<const EdgeId> keep) const;

    friend bool operator==(const MultiGraph& a, const MultiGraph& b)
    {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

/// Per-edge direction over a MultiGraph. Holds a non-owning pointer to the graph,
/// which must outlive every orientation built on it.
class Orientation {
public:
    Orientation() = default;
    /// Every edge directed from its first endpoint to its second.
    explicit Orientation(const MultiGraph& graph);
    /// Directions from explicit tails; BadVertexId if a tail is not an endpoint of its edge.
    static Orientation from_tails(const MultiGraph& graph, std::span<const Vertex> tails);

    const MultiGraph& graph() const noexcept { return *graph_; }

    Vertex tail(EdgeId e) const
    {
        const Edge& ed = graph_->edge(e);
        return reversed_[static_cast<std::size_t>(e)] ? ed.v : ed.u;
    }
    Vertex head(EdgeId e) const
    {
        const Edge& ed = graph_->edge(e);
        return reversed_[static_cast<std::size_t>(e)] ? ed.u : ed.v;
    }

    int out_degree(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
    int in_degree(Vertex v) const { return graph_->degree(v) - out_degree(v); }
    std::span<const int> out_degrees() const noexcept { return out_; }

    void flip(EdgeId e);
    void set_tail(EdgeId e, Vertex tail);

    bool is_source(Vertex v) const { return out_degree(v) == graph_->degree(v); }
    bool is_sink(Vertex v) const { return out_degree(v) == 0; }

    /// Recomputes out-degrees from directions and compares; used in tests and debug asserts.
    bool consistent() const;

    friend bool operator==(const Orientation& a, const Orientation& b)
    {
        return a.graph_ == b.graph_ && a.reversed_ == b.reversed_;
    }

private:
    const MultiGraph* graph_ = nullptr;
    std::vector<std::uint8_t> reversed_;
    std::vector<int> out_;
};

/// Simple directed path: vertices distinct, edges[i] runs vertices[i] -> vertices[i+1].
struct DirectedPath {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;

    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
};

/// S_v: vertices reachable from v along directed edges, v included. Sorted.
std::vector<Vertex> reachable_from(const Orientation& d, Vertex v);
/// T_v: vertices that can reach v, v included. Sorted.
std::vector<Vertex> reachable_to(const Orientation& d, Vertex v);

/// BFS shortest directed path from -> to with lowest-edge-id tie breaking.
std::optional<DirectedPath> shortest_path(const Orientation& d, Vertex from, Vertex to);

bool is_directed_path(const Orientation& d, const DirectedPath& p);

/// Throws NotADirectedPath if p is not a simple directed path in d.
Orientation reverse_path(const Orientation& d, const DirectedPath& p);
void reverse_path_in_place(Orientation& d, const DirectedPath& p);

Orientation reverse_all(const Orientation& d);

/// Same edge directions over another graph with identical edge list (e.g. a copy).
Orientation rebind(const Orientation& d, const MultiGraph& g);

/// Connected components as a per-vertex component id, ids numbered from 0 by smallest member.
std::vector<int> component_ids(const MultiGraph& g, int* component_count = nullptr);

/// Two-colouring if bipartite.
std::optional<std::vector<int>> bipartition(const MultiGraph& g);

}  // namespace favoid
