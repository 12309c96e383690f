#include "favoid/orient_base.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace favoid {

BalancedOrientation balanced_orientation(const MultiGraph& g)
{
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const Vertex dummy = n;

    std::vector<Edge> augmented(g.edges().begin(), g.edges().end());
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) % 2 != 0)
            augmented.push_back({v, dummy});
    const MultiGraph h(n + 1, augmented);

    // Every vertex of h has even degree, so each greedy walk closes where it started;
    // orienting edges in walk direction balances in- and out-degree everywhere.
    std::vector<Vertex> tail(augmented.size(), -1);
    std::vector<std::size_t> cursor(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex start = 0; start <= n; ++start) {
        std::vector<Vertex> stack{start};
        while (! stack.empty()) {
            Vertex x = stack.back();
            auto inc = h.incident(x);
            auto& c = cursor[static_cast<std::size_t>(x)];
            while (c < inc.size() && tail[static_cast<std::size_t>(inc[c])] != -1)
                ++c;
            if (c == inc.size()) {
                stack.pop_back();
                continue;
            }
            EdgeId e = inc[c];
            tail[static_cast<std::size_t>(e)] = x;
            stack.push_back(h.other_end(e, x));
        }
    }

    BalancedOrientation out{Orientation(g), std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (EdgeId e = 0; e < m; ++e)
        out.orientation.set_tail(e, tail[static_cast<std::size_t>(e)]);
    for (Vertex v = 0; v < n; ++v)
        out.imbalance[static_cast<std::size_t>(v)] = 2 * out.orientation.out_degree(v) - g.degree(v);
    return out;
}

Orientation orient_h_component(const MultiGraph& h)
{
    if (h.max_degree() > 2)
        throw Error(ErrorCode::DegreeTooHigh, "maximum degree " + std::to_string(h.max_degree()) + " > 2");
    return balanced_orientation(h).orientation;
}

std::vector<Vertex> maximal_independent_set(const MultiGraph& g, const std::vector<Vertex>& order)
{
    std::vector<Vertex> visit = order;
    if (visit.empty()) {
        visit.resize(static_cast<std::size_t>(g.vertex_count()));
        std::iota(visit.begin(), visit.end(), 0);
    }
    std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> chosen;
    for (Vertex v : visit) {
        if (blocked[static_cast<std::size_t>(v)])
            continue;
        chosen.push_back(v);
        blocked[static_cast<std::size_t>(v)] = 1;
        for (EdgeId e : g.incident(v))
            blocked[static_cast<std::size_t>(g.other_end(e, v))] = 1;
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

Orientation extreme_avoiding(const MultiGraph& g, int k, std::optional<std::uint64_t> mis_seed)
{
    if (k < 1)
        throw Error(ErrorCode::BadParameter, "k must be positive");
    const int n = g.vertex_count();
    if (n > 0 && ! g.is_regular(g.degree(0)))
        throw Error(ErrorCode::NotRegular, "graph is not regular");
    if (n > 0 && g.degree(0) != 2 * k + 1)
        throw Error(ErrorCode::WrongDegree,
                    "degree " + std::to_string(g.degree(0)) + " != 2k+1 = " + std::to_string(2 * k + 1));

    std::vector<Vertex> order;
    if (mis_seed) {
        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::mt19937_64 rng(*mis_seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    std::vector<char> in_sinks(static_cast<std::size_t>(n), 0);
    for (Vertex v : maximal_independent_set(g, order))
        in_sinks[static_cast<std::size_t>(v)] = 1;

    std::vector<EdgeId> inner;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (! in_sinks[static_cast<std::size_t>(ed.u)] && ! in_sinks[static_cast<std::size_t>(ed.v)])
            inner.push_back(e);
    }
    const MultiGraph rest = g.edge_subgraph(inner);
    // Maximality gives every non-sink a sink neighbour, hence degree <= 2k in the rest.
    if (rest.max_degree() > 2 * k)
        throw Error(ErrorCode::InternalError, "independent set is not maximal");
    const Orientation inner_d = balanced_orientation(rest).orientation;

    Orientation d(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (in_sinks[static_cast<std::size_t>(ed.u)])
            d.set_tail(e, ed.v);
        else if (in_sinks[static_cast<std::size_t>(ed.v)])
            d.set_tail(e, ed.u);
    }
    for (std::size_t i = 0; i < inner.size(); ++i)
        d.set_tail(inner[i], inner_d.tail(static_cast<EdgeId>(i)));
    return d;
}

}  // namespace favoid
