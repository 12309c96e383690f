#include "favoid/fg_flow.hpp"

#include <optional>
#include <string>

#include "maxflow.hpp"

namespace favoid {

namespace {

    void check_bounds(const MultiGraph& g, const DegreeBounds& b)
    {
        const auto n = static_cast<std::size_t>(g.vertex_count());
        if (b.lower.size() != n || b.upper.size() != n)
            throw Error(ErrorCode::MalformedBounds, "bound vectors differ from vertex count");
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            int lo = b.lower[static_cast<std::size_t>(v)];
            int hi = b.upper[static_cast<std::size_t>(v)];
            if (lo < 0 || lo > hi || hi > g.degree(v))
                throw Error(ErrorCode::MalformedBounds,
                            "vertex " + std::to_string(v) + ": need 0 <= " + std::to_string(lo) +
                                " <= " + std::to_string(hi) + " <= " + std::to_string(g.degree(v)));
        }
    }

    struct SetCounts {
        std::int64_t internal = 0;
        std::int64_t boundary = 0;
    };

    SetCounts count_edges(const MultiGraph& g, const std::vector<char>& in_set)
    {
        SetCounts c;
        for (const Edge& e : g.edges()) {
            int inside = in_set[static_cast<std::size_t>(e.u)] + in_set[static_cast<std::size_t>(e.v)];
            if (inside == 2)
                ++c.internal;
            else if (inside == 1)
                ++c.boundary;
        }
        return c;
    }

    ViolationCertificate make_certificate(const MultiGraph& g, const DegreeBounds& b, const std::vector<char>& in_set,
                                          BoundKind kind)
    {
        ViolationCertificate cert;
        cert.kind = kind;
        const auto& values = kind == BoundKind::Lower ? b.lower : b.upper;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (in_set[static_cast<std::size_t>(v)]) {
                cert.subset.push_back(v);
                cert.bound_sum += values[static_cast<std::size_t>(v)];
            }
        SetCounts c = count_edges(g, in_set);
        cert.internal_edges = c.internal;
        cert.boundary_edges = c.boundary;
        return cert;
    }

    // One-sided feasibility: every edge picks the endpoint it is "charged" to and
    // each vertex takes at most cap(v). Charging to the tail bounds out-degree from
    // above; charging to the head bounds in-degree, i.e. out-degree from below.
    // On failure, returns the vertex nodes reachable from the source in the residual
    // network; for that set S the cut argument gives cap(S) < e[S].
    std::optional<std::vector<char>> one_sided_violation(const MultiGraph& g, const std::vector<int>& cap)
    {
        const int n = g.vertex_count();
        const int m = g.edge_count();
        const int s = 0;
        const int t = 1;
        const int edge_base = 2;
        const int vertex_base = 2 + m;
        detail::MaxFlow net(vertex_base + n);
        for (EdgeId e = 0; e < m; ++e) {
            net.add_arc(s, edge_base + e, 1);
            net.add_arc(edge_base + e, vertex_base + g.edge(e).u, 1);
            net.add_arc(edge_base + e, vertex_base + g.edge(e).v, 1);
        }
        for (Vertex v = 0; v < n; ++v)
            net.add_arc(vertex_base + v, t, cap[static_cast<std::size_t>(v)]);
        if (net.run(s, t) == m)
            return std::nullopt;
        auto reach = net.residual_reach(s);
        std::vector<char> in_set(static_cast<std::size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v)
            in_set[static_cast<std::size_t>(v)] = reach[static_cast<std::size_t>(vertex_base + v)];
        return in_set;
    }

    std::optional<ViolationCertificate> exhaustive_certificate(const MultiGraph& g, const DegreeBounds& b)
    {
        const int n = g.vertex_count();
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
            std::vector<char> in_set(static_cast<std::size_t>(n), 0);
            for (Vertex v = 0; v < n; ++v)
                in_set[static_cast<std::size_t>(v)] = (mask >> v) & 1U;
            for (BoundKind kind : {BoundKind::Upper, BoundKind::Lower}) {
                auto cert = make_certificate(g, b, in_set, kind);
                if (certificate_holds(g, b, cert))
                    return cert;
            }
        }
        return std::nullopt;
    }

}  // namespace

FgResult fg_orient(const MultiGraph& g, const DegreeBounds& bounds)
{
    check_bounds(g, bounds);
    const int n = g.vertex_count();
    const int m = g.edge_count();

    // Source -> edge node [1,1], edge node -> either endpoint [0,1],
    // vertex -> sink [l(v), u(v)], sink -> source [0, m]. Lower bounds are moved
    // into node excesses served from a super source / super sink.
    const int s = 0;
    const int t = 1;
    const int edge_base = 2;
    const int vertex_base = 2 + m;
    const int super_s = vertex_base + n;
    const int super_t = super_s + 1;
    detail::MaxFlow net(super_t + 1);
    std::vector<std::int64_t> excess(static_cast<std::size_t>(super_t + 1), 0);

    std::vector<detail::MaxFlow::ArcRef> to_u(static_cast<std::size_t>(m));
    for (EdgeId e = 0; e < m; ++e) {
        excess[static_cast<std::size_t>(edge_base + e)] += 1;
        excess[static_cast<std::size_t>(s)] -= 1;
        to_u[static_cast<std::size_t>(e)] = net.add_arc(edge_base + e, vertex_base + g.edge(e).u, 1);
        net.add_arc(edge_base + e, vertex_base + g.edge(e).v, 1);
    }
    for (Vertex v = 0; v < n; ++v) {
        int lo = bounds.lower[static_cast<std::size_t>(v)];
        int hi = bounds.upper[static_cast<std::size_t>(v)];
        net.add_arc(vertex_base + v, t, hi - lo);
        excess[static_cast<std::size_t>(t)] += lo;
        excess[static_cast<std::size_t>(vertex_base + v)] -= lo;
    }
    net.add_arc(t, s, m);

    std::int64_t demand = 0;
    for (int x = 0; x < super_s; ++x) {
        std::int64_t ex = excess[static_cast<std::size_t>(x)];
        if (ex > 0) {
            net.add_arc(super_s, x, ex);
            demand += ex;
        }
        else if (ex < 0) {
            net.add_arc(x, super_t, -ex);
        }
    }

    if (net.run(super_s, super_t) == demand) {
        Orientation d(g);
        for (EdgeId e = 0; e < m; ++e)
            d.set_tail(e, net.flow_on(to_u[static_cast<std::size_t>(e)]) == 1 ? g.edge(e).u : g.edge(e).v);
        if (! satisfies_bounds(d, bounds))
            throw Error(ErrorCode::InternalError, "flow orientation violates bounds");
        return d;
    }

    // Infeasible. By the two-sided characterisation one of the one-sided
    // problems must already fail, and its min cut is the certificate.
    if (auto in_set = one_sided_violation(g, bounds.upper)) {
        auto cert = make_certificate(g, bounds, *in_set, BoundKind::Upper);
        if (certificate_holds(g, bounds, cert))
            return cert;
    }
    std::vector<int> in_cap(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        in_cap[static_cast<std::size_t>(v)] = g.degree(v) - bounds.lower[static_cast<std::size_t>(v)];
    if (auto in_set = one_sided_violation(g, in_cap)) {
        auto cert = make_certificate(g, bounds, *in_set, BoundKind::Lower);
        if (certificate_holds(g, bounds, cert))
            return cert;
    }

    if (n <= 20)
        if (auto cert = exhaustive_certificate(g, bounds))
            return *cert;
    throw Error(ErrorCode::InternalError, "infeasible bounds without an extractable certificate");
}

bool certificate_holds(const MultiGraph& g, const DegreeBounds& bounds, const ViolationCertificate& cert)
{
    std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
    std::int64_t sum = 0;
    const auto& values = cert.kind == BoundKind::Lower ? bounds.lower : bounds.upper;
    for (Vertex v : cert.subset) {
        if (v < 0 || v >= g.vertex_count() || in_set[static_cast<std::size_t>(v)])
            return false;
        in_set[static_cast<std::size_t>(v)] = 1;
        sum += values[static_cast<std::size_t>(v)];
    }
    SetCounts c = count_edges(g, in_set);
    if (sum != cert.bound_sum || c.internal != cert.internal_edges || c.boundary != cert.boundary_edges)
        return false;
    if (cert.kind == BoundKind::Lower)
        return sum > c.internal + c.boundary;
    return sum < c.internal;
}

bool satisfies_bounds(const Orientation& d, const DegreeBounds& bounds)
{
    for (Vertex v = 0; v < d.graph().vertex_count(); ++v) {
        int k = d.out_degree(v);
        if (k < bounds.lower[static_cast<std::size_t>(v)] || k > bounds.upper[static_cast<std::size_t>(v)])
            return false;
    }
    return true;
}

DegreeBounds bounds_from_single_home(const IntervalProfile& p)
{
    DegreeBounds b;
    for (const VertexProfile& vp : p.vertices) {
        const Interval* home = nullptr;
        for (const Interval& i : vp.intervals)
            if (! i.hole) {
                if (home)
                    throw Error(ErrorCode::HypothesisViolated, "vertex has more than one home");
                home = &i;
            }
        if (! home)
            throw Error(ErrorCode::HypothesisViolated, "vertex has no home");
        b.lower.push_back(home->lo);
        b.upper.push_back(home->hi);
    }
    return b;
}

Orientation thm7_solve(const MultiGraph& g, const ForbiddenLists& f)
{
    const IntervalProfile p = interval_profile(f, g);
    if (! check_thm7(p))
        throw Error(ErrorCode::HypothesisViolated, "holes must be end-intervals with |F(v)| <= d(v)/2");
    FgResult r = fg_orient(g, bounds_from_single_home(p));
    if (std::holds_alternative<ViolationCertificate>(r))
        throw Error(ErrorCode::InternalError, "flow solver refuted bounds that straddle d(v)/2");
    return std::get<Orientation>(std::move(r));
}

}  // namespace favoid
