#include "favoid/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace favoid {

std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::BadVertexId: return "BadVertexId";
    case ErrorCode::BadEdgeId: return "BadEdgeId";
    case ErrorCode::NotADirectedPath: return "NotADirectedPath";
    case ErrorCode::OutOfRangeForbidden: return "OutOfRangeForbidden";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::MalformedBounds: return "MalformedBounds";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::StaleLasso: return "StaleLasso";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::NonEmptyListAtLowDegree: return "NonEmptyListAtLowDegree";
    case ErrorCode::NotTwoDegenerate: return "NotTwoDegenerate";
    case ErrorCode::BadDecomposition: return "BadDecomposition";
    case ErrorCode::SubSolverFailed: return "SubSolverFailed";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

MultiGraph::MultiGraph(int vertex_count, std::span<const Edge> edges)
{
    if (vertex_count < 0)
        throw Error(ErrorCode::BadParameter, "negative vertex count");
    incidence_.resize(static_cast<std::size_t>(vertex_count));
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            throw Error(ErrorCode::BadVertexId,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") with n=" +
                            std::to_string(vertex_count));
        if (e.u == e.v)
            throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
        auto id = static_cast<EdgeId>(edges_.size());
        edges_.push_back(e);
        incidence_[static_cast<std::size_t>(e.u)].push_back(id);
        incidence_[static_cast<std::size_t>(e.v)].push_back(id);
    }
}

int MultiGraph::max_degree() const noexcept
{
    int best = 0;
    for (const auto& inc : incidence_)
        best = std::max(best, static_cast<int>(inc.size()));
    return best;
}

bool MultiGraph::is_regular(int d) const noexcept
{
    return std::all_of(incidence_.begin(), incidence_.end(),
                       [d](const auto& inc) { return static_cast<int>(inc.size()) == d; });
}

MultiGraph MultiGraph::edge_subgraph(std::span<const EdgeId> keep) const
{
    std::vector<Edge> kept;
    kept.reserve(keep.size());
    for (EdgeId e : keep) {
        if (e < 0 || e >= edge_count())
            throw Error(ErrorCode::BadEdgeId, "edge id " + std::to_string(e));
        kept.push_back(edge(e));
    }
    return MultiGraph(vertex_count(), kept);
}

Orientation::Orientation(const MultiGraph& graph)
    : graph_(&graph), reversed_(static_cast<std::size_t>(graph.edge_count()), 0),
      out_(static_cast<std::size_t>(graph.vertex_count()), 0)
{
    for (const Edge& e : graph.edges())
        ++out_[static_cast<std::size_t>(e.u)];
}

Orientation Orientation::from_tails(const MultiGraph& graph, std::span<const Vertex> tails)
{
    if (static_cast<int>(tails.size()) != graph.edge_count())
        throw Error(ErrorCode::BadParameter, "tail count differs from edge count");
    Orientation d(graph);
    for (EdgeId e = 0; e < graph.edge_count(); ++e)
        d.set_tail(e, tails[static_cast<std::size_t>(e)]);
    return d;
}

void Orientation::flip(EdgeId e)
{
    --out_[static_cast<std::size_t>(tail(e))];
    reversed_[static_cast<std::size_t>(e)] ^= 1U;
    ++out_[static_cast<std::size_t>(tail(e))];
}

void Orientation::set_tail(EdgeId e, Vertex t)
{
    const Edge& ed = graph_->edge(e);
    if (t != ed.u && t != ed.v)
        throw Error(ErrorCode::BadVertexId,
                    "vertex " + std::to_string(t) + " is not an endpoint of edge " + std::to_string(e));
    if (tail(e) != t)
        flip(e);
}

bool Orientation::consistent() const
{
    std::vector<int> out(static_cast<std::size_t>(graph_->vertex_count()), 0);
    for (EdgeId e = 0; e < graph_->edge_count(); ++e)
        ++out[static_cast<std::size_t>(tail(e))];
    return out == out_ && std::accumulate(out.begin(), out.end(), 0) == graph_->edge_count();
}

namespace {

    // forward: follow tail -> head; backward: follow head -> tail.
    std::vector<Vertex> bfs_reach(const Orientation& d, Vertex start, bool forward)
    {
        const MultiGraph& g = d.graph();
        if (start < 0 || start >= g.vertex_count())
            throw Error(ErrorCode::BadVertexId, "vertex " + std::to_string(start));
        std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
        std::deque<Vertex> queue{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (! queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (EdgeId e : g.incident(x)) {
                Vertex from = forward ? d.tail(e) : d.head(e);
                if (from != x)
                    continue;
                Vertex y = g.other_end(e, x);
                if (! seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    queue.push_back(y);
                }
            }
        }
        std::vector<Vertex> out;
        for (Vertex x = 0; x < g.vertex_count(); ++x)
            if (seen[static_cast<std::size_t>(x)])
                out.push_back(x);
        return out;
    }

}  // namespace

std::vector<Vertex> reachable_from(const Orientation& d, Vertex v) { return bfs_reach(d, v, true); }

std::vector<Vertex> reachable_to(const Orientation& d, Vertex v) { return bfs_reach(d, v, false); }

std::optional<DirectedPath> shortest_path(const Orientation& d, Vertex from, Vertex to)
{
    const MultiGraph& g = d.graph();
    if (from == to)
        return std::nullopt;
    std::vector<EdgeId> via(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::deque<Vertex> queue{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (! queue.empty() && ! seen[static_cast<std::size_t>(to)]) {
        Vertex x = queue.front();
        queue.pop_front();
        // incident() lists edge ids in increasing order, so ties go to the lowest id.
        for (EdgeId e : g.incident(x)) {
            if (d.tail(e) != x)
                continue;
            Vertex y = d.head(e);
            if (! seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                via[static_cast<std::size_t>(y)] = e;
                queue.push_back(y);
            }
        }
    }
    if (! seen[static_cast<std::size_t>(to)])
        return std::nullopt;

    DirectedPath p;
    for (Vertex x = to; x != from; x = d.tail(via[static_cast<std::size_t>(x)])) {
        p.vertices.push_back(x);
        p.edges.push_back(via[static_cast<std::size_t>(x)]);
    }
    p.vertices.push_back(from);
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

bool is_directed_path(const Orientation& d, const DirectedPath& p)
{
    const MultiGraph& g = d.graph();
    if (p.vertices.size() < 2 || p.edges.size() + 1 != p.vertices.size())
        return false;
    std::vector<Vertex> vs = p.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        return false;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        EdgeId e = p.edges[i];
        if (e < 0 || e >= g.edge_count())
            return false;
        if (d.tail(e) != p.vertices[i] || d.head(e) != p.vertices[i + 1])
            return false;
    }
    return true;
}

void reverse_path_in_place(Orientation& d, const DirectedPath& p)
{
    if (! is_directed_path(d, p))
        throw Error(ErrorCode::NotADirectedPath, "path edges absent or misdirected");
    for (EdgeId e : p.edges)
        d.flip(e);
}

Orientation reverse_path(const Orientation& d, const DirectedPath& p)
{
    Orientation out = d;
    reverse_path_in_place(out, p);
    return out;
}

Orientation reverse_all(const Orientation& d)
{
    Orientation out = d;
    for (EdgeId e = 0; e < d.graph().edge_count(); ++e)
        out.flip(e);
    return out;
}

Orientation rebind(const Orientation& d, const MultiGraph& g)
{
    if (d.graph().edges().size() != g.edges().size() ||
        ! std::equal(g.edges().begin(), g.edges().end(), d.graph().edges().begin()))
        throw Error(ErrorCode::BadParameter, "rebind needs an identical edge list");
    std::vector<Vertex> tails(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        tails[static_cast<std::size_t>(e)] = d.tail(e);
    return Orientation::from_tails(g, tails);
}

std::vector<int> component_ids(const MultiGraph& g, int* component_count)
{
    std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1)
            continue;
        std::vector<Vertex> stack{s};
        comp[static_cast<std::size_t>(s)] = next;
        while (! stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(x)) {
                Vertex y = g.other_end(e, x);
                if (comp[static_cast<std::size_t>(y)] == -1) {
                    comp[static_cast<std::size_t>(y)] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    if (component_count)
        *component_count = next;
    return comp;
}

std::optional<std::vector<int>> bipartition(const MultiGraph& g)
{
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (side[static_cast<std::size_t>(s)] != -1)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<Vertex> stack{s};
        while (! stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(x)) {
                Vertex y = g.other_end(e, x);
                if (side[static_cast<std::size_t>(y)] == -1) {
                    side[static_cast<std::size_t>(y)] = 1 - side[static_cast<std::size_t>(x)];
                    stack.push_back(y);
                }
                else if (side[static_cast<std::size_t>(y)] == side[static_cast<std::size_t>(x)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

}  // namespace favoid
