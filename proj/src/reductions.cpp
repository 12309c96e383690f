#include "favoid/reductions.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "favoid/fg_flow.hpp"
#include "favoid/lasso.hpp"
#include "favoid/oracle.hpp"
#include "favoid/orient_base.hpp"

namespace favoid {

const char* rule_name(ReductionRule r) noexcept
{
    switch (r) {
    case ReductionRule::EdgeAB: return "EDGE_AB";
    case ReductionRule::LowDegCase1: return "LOW_DEG_CASE1";
    case ReductionRule::LowDegCase2: return "LOW_DEG_CASE2";
    case ReductionRule::HShift: return "H_SHIFT";
    }
    return "?";
}

namespace {

    MultiGraph without_edge(const MultiGraph& g, EdgeId removed)
    {
        std::vector<EdgeId> keep;
        keep.reserve(static_cast<std::size_t>(g.edge_count()));
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (e != removed)
                keep.push_back(e);
        return g.edge_subgraph(keep);
    }

    void change_list(ForbiddenLists& f, ReductionStep& step, Vertex v, std::vector<int> after)
    {
        ListChange c{v, f.at(v), {}};
        f.set(v, std::move(after));
        c.after = f.at(v);
        if (c.after != c.before)
            step.list_changes.push_back(std::move(c));
    }

    std::vector<int> without(std::vector<int> values, int drop)
    {
        values.erase(std::remove(values.begin(), values.end(), drop), values.end());
        return values;
    }

    // Values above the degree are unreachable and can be dropped.
    std::vector<int> clip(std::vector<int> values, int degree)
    {
        values.erase(std::remove_if(values.begin(), values.end(), [degree](int x) { return x > degree; }),
                     values.end());
        return values;
    }

}  // namespace

Orientation lift(const ReductionStep& step, const MultiGraph& parent, const Orientation& child)
{
    if (child.graph().edge_count() + 1 != parent.edge_count())
        throw Error(ErrorCode::InternalError, "lift applied to a mismatched instance");
    Orientation d(parent);
    for (EdgeId e = 0; e < parent.edge_count(); ++e) {
        if (e == step.removed_edge)
            continue;
        d.set_tail(e, child.tail(e < step.removed_edge ? e : e - 1));
    }
    Vertex t = step.default_tail;
    if (step.switch_when && child.out_degree(step.switch_when->first) == step.switch_when->second)
        t = step.switch_when->first;
    d.set_tail(step.removed_edge, t);
    return d;
}

std::optional<std::pair<Instance, ReductionStep>> edge_ab_reduce(const MultiGraph& g, const ForbiddenLists& f)
{
    if (! check_strict_half_or_isolated_empty(f, g))
        throw Error(ErrorCode::BoundViolated, "edge rule needs |F(v)| < d(v)/2");

    auto in_a2 = [&](Vertex x) { return f.contains(x, g.degree(x)); };
    auto in_a = [&](Vertex x) { return g.degree(x) % 2 == 0 || in_a2(x); };
    auto in_b = [&](Vertex x) { return g.degree(x) % 2 == 0 || f.contains(x, 0); };

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        for (auto [a, b] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
            if (! in_a(a) || ! in_b(b))
                continue;
            ReductionStep step;
            step.rule = ReductionRule::EdgeAB;
            step.removed_edge = e;
            step.default_tail = b;
            Instance child{without_edge(g, e), f};
            if (in_a2(a))
                change_list(child.lists, step, a, without(f.at(a), g.degree(a)));
            change_list(child.lists, step, b, shift_list_down(f.at(b)));
            if (! check_strict_half_or_isolated_empty(child.lists, child.graph))
                throw Error(ErrorCode::InternalError, "edge rule broke the strict-half bound");
            return std::pair{std::move(child), std::move(step)};
        }
    }
    return std::nullopt;
}

std::pair<Instance, ReductionStep> low_degree_eliminate(const MultiGraph& g, const ForbiddenLists& f, Vertex v0)
{
    if (v0 < 0 || v0 >= g.vertex_count())
        throw Error(ErrorCode::BadVertexId, "vertex " + std::to_string(v0));
    if (g.degree(v0) < 1 || g.degree(v0) > 2)
        throw Error(ErrorCode::BadParameter, "low-degree rule needs d(v0) in {1,2}");
    if (f.size(v0) != 0)
        throw Error(ErrorCode::NonEmptyListAtLowDegree, "F(" + std::to_string(v0) + ") is not empty");

    const EdgeId e = g.incident(v0).front();
    const Vertex u = g.other_end(e, v0);
    ReductionStep step;
    step.removed_edge = e;
    step.default_tail = v0;
    Instance child{without_edge(g, e), f};

    if (f.contains(u, g.degree(u))) {
        step.rule = ReductionRule::LowDegCase1;
        change_list(child.lists, step, u, without(f.at(u), g.degree(u)));
    }
    else {
        step.rule = ReductionRule::LowDegCase2;
        if (f.size(u) != 0) {
            // d(u) is not forbidden, so alpha + 1 <= d(u) is allowed.
            const int alpha = f.at(u).back();
            change_list(child.lists, step, u, without(f.at(u), alpha));
            step.switch_when = std::pair{u, alpha};
        }
    }
    return {std::move(child), std::move(step)};
}

std::optional<std::vector<Vertex>> two_degenerate_order(const MultiGraph& g)
{
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (! gone[static_cast<std::size_t>(v)] &&
                (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]))
                best = v;
        if (deg[static_cast<std::size_t>(best)] > 2)
            return std::nullopt;
        gone[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
        for (EdgeId e : g.incident(best)) {
            Vertex w = g.other_end(e, best);
            if (! gone[static_cast<std::size_t>(w)])
                --deg[static_cast<std::size_t>(w)];
        }
    }
    return order;
}

TwoDegenerateResult two_degenerate_solve_detailed(const MultiGraph& g, const ForbiddenLists& f)
{
    f.validate(g);
    if (! two_degenerate_order(g))
        throw Error(ErrorCode::NotTwoDegenerate, "some subgraph has minimum degree >= 3");
    if (! check_strict_half_or_isolated_empty(f, g))
        throw Error(ErrorCode::BoundViolated, "need |F(v)| < d(v)/2 (F empty at isolated vertices)");

    std::deque<Instance> levels{Instance{g, f}};
    std::vector<ReductionStep> steps;
    while (levels.back().graph.edge_count() > 0) {
        const Instance& cur = levels.back();
        Vertex v0 = -1;
        for (Vertex v = 0; v < cur.graph.vertex_count(); ++v) {
            int dv = cur.graph.degree(v);
            if (dv > 0 && (v0 < 0 || dv < cur.graph.degree(v0)))
                v0 = v;
        }
        if (cur.graph.degree(v0) > 2)
            throw Error(ErrorCode::InternalError, "peeling found no vertex of degree <= 2");
        auto [child, step] = low_degree_eliminate(cur.graph, cur.lists, v0);
        if (! check_strict_half_or_isolated_empty(child.lists, child.graph))
            throw Error(ErrorCode::InternalError, "elimination broke the strict-half bound");
        steps.push_back(std::move(step));
        levels.push_back(std::move(child));
    }

    TwoDegenerateResult r;
    r.eliminations = static_cast<int>(steps.size());
    Orientation d(levels.back().graph);
    for (std::size_t i = steps.size(); i-- > 0;) {
        d = lift(steps[i], levels[i].graph, d);
        ++r.lifts;
    }
    r.orientation = rebind(d, g);
    if (! verify(r.orientation, f).ok)
        throw Error(ErrorCode::InternalError, "lifted orientation is not F-avoiding");
    return r;
}

Orientation two_degenerate_solve(const MultiGraph& g, const ForbiddenLists& f)
{
    return two_degenerate_solve_detailed(g, f).orientation;
}

BipartiteSubSolver oracle_sub_solver(int budget)
{
    return [budget](const MultiGraph& g, const ForbiddenLists& f) -> std::optional<Orientation> {
        OracleOptions opts;
        opts.budget = budget;
        opts.stop_at_first = true;
        return oracle_decide(g, f, opts).witness;
    };
}

BipartiteSubSolver lasso_sub_solver()
{
    return [](const MultiGraph& g, const ForbiddenLists& f) -> std::optional<Orientation> {
        LassoOutcome r = lasso_solve(g, f);
        if (! r.success)
            return std::nullopt;
        return std::move(r.orientation);
    };
}

BipartiteSubSolver fg_sub_solver()
{
    return [](const MultiGraph& g, const ForbiddenLists& f) -> std::optional<Orientation> {
        const IntervalProfile p = interval_profile(f, g);
        if (! single_home_everywhere(p))
            return std::nullopt;
        FgResult r = fg_orient(g, bounds_from_single_home(p));
        if (auto* d = std::get_if<Orientation>(&r))
            return std::move(*d);
        return std::nullopt;
    };
}

Orientation bipartite_plus_h_solve(const MultiGraph& g, const ForbiddenLists& f, const Decomposition& dec,
                                   const BipartiteSubSolver& sub)
{
    f.validate(g);
    const int n = g.vertex_count();
    std::vector<int> seen(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto* set : {&dec.bipartite_edges, &dec.h_edges})
        for (EdgeId e : *set) {
            if (e < 0 || e >= g.edge_count())
                throw Error(ErrorCode::BadDecomposition, "edge id " + std::to_string(e) + " out of range");
            ++seen[static_cast<std::size_t>(e)];
        }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
        throw Error(ErrorCode::BadDecomposition, "edge sets do not partition E(G)");

    const MultiGraph h = g.edge_subgraph(dec.h_edges);
    const MultiGraph rest = g.edge_subgraph(dec.bipartite_edges);
    if (h.max_degree() > 2)
        throw Error(ErrorCode::BadDecomposition, "H has a vertex of degree > 2");
    for (Vertex v = 0; v < n; ++v)
        if (h.degree(v) == 2 && g.degree(v) % 2 != 0)
            throw Error(ErrorCode::BadDecomposition,
                        "vertex " + std::to_string(v) + " has d_H = 2 but odd degree in G");
    if (! bipartition(rest))
        throw Error(ErrorCode::BadDecomposition, "G - E(H) is not bipartite");
    if (! check_strict_half_or_isolated_empty(f, g))
        throw Error(ErrorCode::BoundViolated, "need |F(v)| < d(v)/2");

    const Orientation dh = orient_h_component(h);
    ForbiddenLists shifted(n);
    for (Vertex v = 0; v < n; ++v) {
        auto values = dh.out_degree(v) == 0 ? f.at(v) : shift_list_down(f.at(v));
        shifted.set(v, clip(std::move(values), rest.degree(v)));
    }

    std::optional<Orientation> sub_d = sub(rest, shifted);
    if (! sub_d)
        throw Error(ErrorCode::SubSolverFailed, "bipartite sub-solver found no orientation");

    Orientation d(g);
    for (std::size_t i = 0; i < dec.h_edges.size(); ++i)
        d.set_tail(dec.h_edges[i], dh.tail(static_cast<EdgeId>(i)));
    for (std::size_t i = 0; i < dec.bipartite_edges.size(); ++i)
        d.set_tail(dec.bipartite_edges[i], sub_d->tail(static_cast<EdgeId>(i)));
    if (! verify(d, f).ok)
        throw Error(ErrorCode::InternalError, "combined orientation is not F-avoiding");
    return d;
}

}  // namespace favoid
