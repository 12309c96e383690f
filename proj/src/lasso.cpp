#include "favoid/lasso.hpp"

#include <algorithm>
#include <sstream>

#include "favoid/orient_base.hpp"

namespace favoid {

namespace {

    // Tail/head as seen by a lasso of the given kind: In works on the reversed orientation.
    Vertex from_end(const Orientation& d, EdgeId e, LassoKind kind)
    {
        return kind == LassoKind::Out ? d.tail(e) : d.head(e);
    }
    Vertex to_end(const Orientation& d, EdgeId e, LassoKind kind)
    {
        return kind == LassoKind::Out ? d.head(e) : d.tail(e);
    }

    bool meets_only_at(const std::vector<Vertex>& s, const std::vector<Vertex>& t, Vertex v)
    {
        std::vector<Vertex> common;
        std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(common));
        return common.size() == 1 && common.front() == v;
    }

}  // namespace

std::optional<Lasso> find_lasso(const Orientation& d, Vertex v, LassoKind kind)
{
    const MultiGraph& g = d.graph();
    if (! meets_only_at(reachable_from(d, v), reachable_to(d, v), v))
        throw Error(ErrorCode::PreconditionViolated, "S_v and T_v share a vertex other than v");

    Lasso l;
    l.kind = kind;
    l.vertices.push_back(v);
    std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
    position[static_cast<std::size_t>(v)] = 0;

    for (;;) {
        Vertex x = l.vertices.back();
        EdgeId extend = -1;
        EdgeId close = -1;
        bool has_out = false;
        for (EdgeId e : g.incident(x)) {
            if (from_end(d, e, kind) != x)
                continue;
            has_out = true;
            Vertex y = to_end(d, e, kind);
            if (position[static_cast<std::size_t>(y)] < 0) {
                if (extend < 0 || y < to_end(d, extend, kind))
                    extend = e;
            }
            else if (close < 0) {
                close = e;
            }
        }
        if (! has_out)
            return std::nullopt;
        if (extend >= 0) {
            Vertex y = to_end(d, extend, kind);
            position[static_cast<std::size_t>(y)] = static_cast<int>(l.vertices.size());
            l.vertices.push_back(y);
            l.path_edges.push_back(extend);
            continue;
        }
        l.closing_edge = close;
        l.anchor = position[static_cast<std::size_t>(to_end(d, close, kind))];
        // An edge back to v would put x in both S_v and T_v.
        if (l.anchor < 1 || l.anchor + 1 >= static_cast<int>(l.vertices.size()))
            throw Error(ErrorCode::InternalError, "closing edge does not land on the path interior");
        return l;
    }
}

bool is_valid_lasso(const Orientation& d, const Lasso& l)
{
    const MultiGraph& g = d.graph();
    const auto k = static_cast<int>(l.vertices.size());
    if (k < 3 || l.anchor < 1 || l.anchor > k - 2 || static_cast<int>(l.path_edges.size()) != k - 1)
        return false;
    std::vector<Vertex> sorted = l.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    auto runs = [&](EdgeId e, Vertex a, Vertex b) {
        return e >= 0 && e < g.edge_count() && from_end(d, e, l.kind) == a && to_end(d, e, l.kind) == b;
    };
    for (int j = 0; j + 1 < k; ++j)
        if (! runs(l.path_edges[static_cast<std::size_t>(j)], l.vertices[static_cast<std::size_t>(j)],
                   l.vertices[static_cast<std::size_t>(j + 1)]))
            return false;
    if (std::find(l.path_edges.begin(), l.path_edges.end(), l.closing_edge) != l.path_edges.end())
        return false;
    return runs(l.closing_edge, l.end(), l.anchor_vertex());
}

void flip_lasso_in_place(Orientation& d, const Lasso& l)
{
    if (! is_valid_lasso(d, l))
        throw Error(ErrorCode::StaleLasso, "lasso edges missing or misdirected");
    for (int j = 0; j < l.anchor; ++j)
        d.flip(l.path_edges[static_cast<std::size_t>(j)]);
    d.flip(l.closing_edge);
}

Orientation flip_lasso(const Orientation& d, const Lasso& l)
{
    Orientation out = d;
    flip_lasso_in_place(out, l);
    return out;
}

Potential potential(const Orientation& d, const IntervalProfile& p)
{
    Potential pot;
    for (Vertex v = 0; v < p.vertex_count(); ++v) {
        std::uint8_t t = p[v].tag(d.out_degree(v));
        pot.forbidden += (t & InF) ? 1 : 0;
        pot.far += (t & InX) ? 1 : 0;
    }
    return pot;
}

std::string MoveTrace::to_log() const
{
    std::ostringstream out;
    for (const Move& m : moves) {
        out << (m.kind == MoveKind::PathReversal ? "path" : "lasso") << ' ' << m.rule << " focus=" << m.focus
            << " vertices=";
        for (std::size_t i = 0; i < m.vertices.size(); ++i)
            out << (i ? "," : "") << m.vertices[i];
        out << " potential=" << m.before.forbidden << ',' << m.before.far << "->" << m.after.forbidden << ','
            << m.after.far << '\n';
    }
    return out.str();
}

namespace {

    struct Search {
        const Orientation& d;
        const IntervalProfile& p;
        std::mt19937_64* rng;
        Potential before;

        std::vector<Vertex> others(std::vector<Vertex> set, Vertex v) const
        {
            set.erase(std::remove(set.begin(), set.end(), v), set.end());
            if (rng)
                std::shuffle(set.begin(), set.end(), *rng);
            return set;
        }

        std::optional<StepResult> try_path(Vertex from, Vertex to, Vertex focus, const char* rule,
                                           bool need_fewer_forbidden) const
        {
            auto path = shortest_path(d, from, to);
            if (! path)
                return std::nullopt;
            Orientation next = reverse_path(d, *path);
            Potential after = potential(next, p);
            if (! after.better_than(before) || (need_fewer_forbidden && after.forbidden >= before.forbidden))
                return std::nullopt;
            Move m{MoveKind::PathReversal, rule, focus, path->vertices, before, after};
            return StepResult{StepStatus::Moved, std::move(next), std::move(m)};
        }

        std::optional<StepResult> try_lasso(Vertex v, LassoKind kind, const char* rule) const
        {
            auto lasso = find_lasso(d, v, kind);
            if (! lasso)
                return std::nullopt;
            Orientation next = flip_lasso(d, *lasso);
            Potential after = potential(next, p);
            if (! after.better_than(before))
                return std::nullopt;
            Move m{MoveKind::LassoFlip, rule, v, lasso->vertices, before, after};
            return StepResult{StepStatus::Moved, std::move(next), std::move(m)};
        }

        // Raise d+(v) by one: v needs an in-path from some w in T_v.
        std::optional<StepResult> raise(Vertex v) const
        {
            const auto s = reachable_from(d, v);
            const auto t = reachable_to(d, v);
            for (Vertex w : others(t, v))
                if (auto r = try_path(w, v, v, "case1.i", true))
                    return r;
            std::vector<Vertex> both;
            std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(both));
            if (both.size() > 1) {
                for (Vertex u : others(both, v))
                    if (auto r = try_path(v, u, v, "case1.ii", false))
                        return r;
                return std::nullopt;
            }
            return try_lasso(v, LassoKind::In, "case1.iii");
        }

        // Lower d+(v) by one: v needs an out-path to some u in S_v.
        std::optional<StepResult> lower(Vertex v) const
        {
            const auto s = reachable_from(d, v);
            const auto t = reachable_to(d, v);
            for (Vertex u : others(s, v))
                if (auto r = try_path(v, u, v, "case2.i", true))
                    return r;
            std::vector<Vertex> both;
            std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(both));
            if (both.size() > 1) {
                for (Vertex w : others(both, v))
                    if (auto r = try_path(w, v, v, "case2.ii", false))
                        return r;
                return std::nullopt;
            }
            return try_lasso(v, LassoKind::Out, "case2.iii");
        }
    };

}  // namespace

StepResult improve_step(const Orientation& d, const IntervalProfile& p, std::mt19937_64* rng)
{
    std::vector<Vertex> bad;
    for (Vertex v = 0; v < p.vertex_count(); ++v)
        if (p[v].forbidden(d.out_degree(v)))
            bad.push_back(v);
    if (bad.empty())
        return StepResult{StepStatus::Done, d, std::nullopt};
    if (rng)
        std::shuffle(bad.begin(), bad.end(), *rng);

    const Search search{d, p, rng, potential(d, p)};
    for (Vertex v : bad) {
        const VertexProfile& vp = p[v];
        const int k = d.out_degree(v);
        if (vp.allowed(k + 1))
            if (auto r = search.raise(v))
                return std::move(*r);
        if (vp.allowed(k - 1))
            if (auto r = search.lower(v))
                return std::move(*r);
    }
    return StepResult{StepStatus::Stuck, d, std::nullopt};
}

Orientation random_orientation(const MultiGraph& g, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Orientation d(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (rng() & 1U)
            d.flip(e);
    return d;
}

LassoOutcome lasso_solve(const MultiGraph& g, const ForbiddenLists& f, const LassoOptions& options)
{
    const IntervalProfile p = interval_profile(f, g);
    LassoOutcome out;
    if (const auto* given = std::get_if<Orientation>(&options.initial))
        out.orientation = *given;
    else if (const auto* r = std::get_if<RandomStart>(&options.initial))
        out.orientation = random_orientation(g, r->seed);
    else
        out.orientation = balanced_orientation(g).orientation;

    std::optional<std::mt19937_64> rng;
    if (options.policy_seed)
        rng.emplace(*options.policy_seed);

    const auto n = static_cast<std::size_t>(g.vertex_count());
    const std::size_t move_cap = (n + 1) * (n + 1);
    for (;;) {
        StepResult step = improve_step(out.orientation, p, rng ? &*rng : nullptr);
        if (step.status == StepStatus::Done) {
            out.success = true;
            break;
        }
        if (step.status == StepStatus::Stuck) {
            out.failure_reason = check_thm5(p) ? "stuck although hole/home hypothesis holds (internal error)"
                                               : "stuck; lists fail the hole/home hypothesis";
            break;
        }
        if (! step.move->after.better_than(step.move->before) || out.trace.moves.size() >= move_cap)
            throw Error(ErrorCode::InternalError, "local search potential failed to decrease");
        out.orientation = std::move(step.next);
        out.trace.moves.push_back(std::move(*step.move));
    }
    out.final_classification = classify(out.orientation, p);
    return out;
}

}  // namespace favoid
