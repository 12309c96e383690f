#include "favoid/lists.hpp"

#include <algorithm>
#include <string>

namespace favoid {

namespace {

    void normalize(std::vector<int>& values)
    {
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
    }

}  // namespace

ForbiddenLists::ForbiddenLists(std::vector<std::vector<int>> sets) : sets_(std::move(sets))
{
    for (auto& s : sets_)
        normalize(s);
}

ForbiddenLists ForbiddenLists::uniform(int vertex_count, std::span<const int> values)
{
    ForbiddenLists out(vertex_count);
    for (Vertex v = 0; v < vertex_count; ++v)
        out.set(v, std::vector<int>(values.begin(), values.end()));
    return out;
}

bool ForbiddenLists::contains(Vertex v, int value) const
{
    const auto& s = at(v);
    return std::binary_search(s.begin(), s.end(), value);
}

bool ForbiddenLists::all_empty() const noexcept
{
    return std::all_of(sets_.begin(), sets_.end(), [](const auto& s) { return s.empty(); });
}

void ForbiddenLists::set(Vertex v, std::vector<int> values)
{
    normalize(values);
    sets_[static_cast<std::size_t>(v)] = std::move(values);
}

void ForbiddenLists::insert(Vertex v, int value)
{
    auto& s = sets_[static_cast<std::size_t>(v)];
    auto it = std::lower_bound(s.begin(), s.end(), value);
    if (it == s.end() || *it != value)
        s.insert(it, value);
}

void ForbiddenLists::erase(Vertex v, int value)
{
    auto& s = sets_[static_cast<std::size_t>(v)];
    auto it = std::lower_bound(s.begin(), s.end(), value);
    if (it != s.end() && *it == value)
        s.erase(it);
}

void ForbiddenLists::validate(const MultiGraph& g) const
{
    if (vertex_count() != g.vertex_count())
        throw Error(ErrorCode::OutOfRangeForbidden, "list count differs from vertex count");
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& s = at(v);
        if (! s.empty() && (s.front() < 0 || s.back() > g.degree(v)))
            throw Error(ErrorCode::OutOfRangeForbidden,
                        "F(" + std::to_string(v) + ") leaves {0.." + std::to_string(g.degree(v)) + "}");
    }
}

int VertexProfile::hole_count() const
{
    return static_cast<int>(std::count_if(intervals.begin(), intervals.end(), [](const Interval& i) { return i.hole; }));
}

VertexProfile vertex_profile(int degree, std::span<const int> forbidden)
{
    VertexProfile vp;
    vp.degree = degree;
    vp.tags.assign(static_cast<std::size_t>(degree + 1), 0);
    for (int x : forbidden) {
        if (x < 0 || x > degree)
            throw Error(ErrorCode::OutOfRangeForbidden, "value " + std::to_string(x) + " outside {0.." +
                                                            std::to_string(degree) + "}");
        if (! vp.tags[static_cast<std::size_t>(x)])
            ++vp.forbidden_count;
        vp.tags[static_cast<std::size_t>(x)] = InF;
    }

    for (int i = 0; i <= degree; ++i) {
        bool hole = vp.forbidden(i);
        if (vp.intervals.empty() || vp.intervals.back().hole != hole)
            vp.intervals.push_back({i, i, hole});
        else
            vp.intervals.back().hi = i;
    }

    for (int i = 0; i <= degree; ++i) {
        if (vp.forbidden(i))
            continue;
        auto& tag = vp.tags[static_cast<std::size_t>(i)];
        if (i >= 1 && vp.forbidden(i - 1)) {
            tag |= InA;
            vp.a.push_back(i);
        }
        if (i + 1 <= degree && vp.forbidden(i + 1)) {
            tag |= InB;
            vp.b.push_back(i);
        }
        if (tag == 0) {
            tag = InX;
            vp.x.push_back(i);
        }
    }
    return vp;
}

IntervalProfile interval_profile(const ForbiddenLists& f, const MultiGraph& g)
{
    f.validate(g);
    IntervalProfile p;
    p.vertices.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        p.vertices.push_back(vertex_profile(g.degree(v), f.at(v)));
    return p;
}

VertexClassification classify(const Orientation& d, const IntervalProfile& p)
{
    VertexClassification c;
    for (Vertex v = 0; v < p.vertex_count(); ++v) {
        std::uint8_t t = p[v].tag(d.out_degree(v));
        if (t & InF)
            c.f.push_back(v);
        if (t & InA)
            c.a.push_back(v);
        if (t & InB)
            c.b.push_back(v);
        if (t & InX)
            c.x.push_back(v);
    }
    return c;
}

bool check_strict_half(const ForbiddenLists& f, const MultiGraph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (2 * f.size(v) >= g.degree(v))
            return false;
    return true;
}

bool check_weak_half(const ForbiddenLists& f, const MultiGraph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (2 * f.size(v) > g.degree(v))
            return false;
    return true;
}

bool check_strict_half_or_isolated_empty(const ForbiddenLists& f, const MultiGraph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0 ? f.size(v) != 0 : 2 * f.size(v) >= g.degree(v))
            return false;
    }
    return true;
}

bool vertex_meets_thm5(const VertexProfile& vp, bool strict_end_homes)
{
    // A lone hole covering {0} is vacuously "an end hole of size one" but leaves nothing to move into.
    if (vp.home_count() == 0)
        return false;
    const auto& iv = vp.intervals;
    for (std::size_t i = 0; i < iv.size(); ++i) {
        if (iv[i].hole && iv[i].size() > 2)
            return false;
        bool interior = i > 0 && i + 1 < iv.size();
        if (interior && ! iv[i].hole && iv[i].size() < 3)
            return false;
    }
    for (const Interval* end : {&vp.low_end(), &vp.high_end()}) {
        bool ok = end->hole ? (! strict_end_homes && end->size() == 1) : end->size() >= 2;
        if (! ok)
            return false;
    }
    return true;
}

bool check_thm5(const IntervalProfile& p, bool strict_end_homes)
{
    return std::all_of(p.vertices.begin(), p.vertices.end(),
                       [&](const VertexProfile& vp) { return vertex_meets_thm5(vp, strict_end_homes); });
}

bool check_thm7(const IntervalProfile& p)
{
    for (const VertexProfile& vp : p.vertices) {
        if (2 * vp.forbidden_count > vp.degree)
            return false;
        for (const Interval& i : vp.intervals)
            if (i.hole && i.lo != 0 && i.hi != vp.degree)
                return false;
    }
    return true;
}

bool single_home_everywhere(const IntervalProfile& p)
{
    return std::all_of(p.vertices.begin(), p.vertices.end(),
                       [](const VertexProfile& vp) { return vp.home_count() == 1; });
}

std::vector<int> shift_list_down(std::span<const int> values)
{
    std::vector<int> out;
    for (int i : values)
        if (i >= 1)
            out.push_back(i - 1);
    normalize(out);
    return out;
}

}  // namespace favoid
