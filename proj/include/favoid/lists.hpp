#pragma once

// Forbidden out-degree lists and their hole/home structure.
//
// For a vertex v of degree d, {0, ..., d} splits into maximal runs inside F(v)
// (holes) and maximal runs outside it (homes). A(v) holds home values sitting
// directly above a hole, B(v) home values directly below one, and X(v) the
// remaining home values.

#include <cstdint>
#include <span>
#include <vector>

#include "favoid/graph.hpp"

namespace favoid {

class ForbiddenLists {
public:
    ForbiddenLists() = default;
    explicit ForbiddenLists(int vertex_count) : sets_(static_cast<std::size_t>(vertex_count)) {}
    ForbiddenLists(std::vector<std::vector<int>> sets);

    /// Same set at every vertex.
    static ForbiddenLists uniform(int vertex_count, std::span<const int> values);

    int vertex_count() const noexcept { return static_cast<int>(sets_.size()); }
    const std::vector<int>& at(Vertex v) const { return sets_[static_cast<std::size_t>(v)]; }
    int size(Vertex v) const { return static_cast<int>(at(v).size()); }
    bool contains(Vertex v, int value) const;
    bool all_empty() const noexcept;

    /// Stores a sorted, de-duplicated copy.
    void set(Vertex v, std::vector<int> values);
    void insert(Vertex v, int value);
    void erase(Vertex v, int value);

    /// OutOfRangeForbidden unless F(v) is within {0, ..., d(v)} everywhere.
    void validate(const MultiGraph& g) const;

    friend bool operator==(const ForbiddenLists&, const ForbiddenLists&) = default;

private:
    std::vector<std::vector<int>> sets_;
};

struct Interval {
    int lo;
    int hi;
    bool hole;

    int size() const noexcept { return hi - lo + 1; }
    bool contains(int x) const noexcept { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

enum ValueClass : std::uint8_t {
    InF = 1,
    InA = 2,
    InB = 4,
    InX = 8,
};

struct VertexProfile {
    int degree = 0;
    int forbidden_count = 0;
    /// Alternating holes/homes in increasing order, covering {0, ..., degree}.
    std::vector<Interval> intervals;
    std::vector<int> a, b, x;
    /// ValueClass bits per value 0..degree; A and B may both be set on a size-one home.
    std::vector<std::uint8_t> tags;

    const Interval& low_end() const { return intervals.front(); }
    const Interval& high_end() const { return intervals.back(); }
    std::uint8_t tag(int value) const
    {
        return value < 0 || value > degree ? 0 : tags[static_cast<std::size_t>(value)];
    }
    bool forbidden(int value) const { return (tag(value) & InF) != 0; }
    /// In range and not forbidden.
    bool allowed(int value) const { return value >= 0 && value <= degree && ! forbidden(value); }
    int hole_count() const;
    int home_count() const { return static_cast<int>(intervals.size()) - hole_count(); }
};

struct IntervalProfile {
    std::vector<VertexProfile> vertices;

    const VertexProfile& operator[](Vertex v) const { return vertices[static_cast<std::size_t>(v)]; }
    int vertex_count() const noexcept { return static_cast<int>(vertices.size()); }
};

struct VertexClassification {
    std::vector<Vertex> f, a, b, x;
};

/// Profile of one vertex of the given degree; values of `forbidden` must lie in {0..degree}.
VertexProfile vertex_profile(int degree, std::span<const int> forbidden);

/// OutOfRangeForbidden if some F(v) leaves {0, ..., d(v)}.
IntervalProfile interval_profile(const ForbiddenLists& f, const MultiGraph& g);

/// Raw membership by definition; a vertex may land in both D_A and D_B.
VertexClassification classify(const Orientation& d, const IntervalProfile& p);

/// |F(v)| < d(v)/2 at every vertex (false at any isolated vertex).
bool check_strict_half(const ForbiddenLists& f, const MultiGraph& g);
/// |F(v)| <= d(v)/2 at every vertex.
bool check_weak_half(const ForbiddenLists& f, const MultiGraph& g);
/// Strict bound on non-isolated vertices, empty lists on isolated ones. This is
/// the form the reductions keep invariant once edges start disappearing.
bool check_strict_half_or_isolated_empty(const ForbiddenLists& f, const MultiGraph& g);

/// Holes of size <= 2, homes between holes of size >= 3, and each end-interval a
/// hole of size one or a home of size >= 2. With strict_end_homes both
/// end-intervals must instead be homes of size >= 2. Every vertex also needs a home.
bool check_thm5(const IntervalProfile& p, bool strict_end_homes = false);
bool vertex_meets_thm5(const VertexProfile& vp, bool strict_end_homes = false);

/// Every hole touches 0 or d(v), and |F(v)| <= d(v)/2.
bool check_thm7(const IntervalProfile& p);

/// Every vertex has exactly one home (all holes are end-intervals), with no size bound.
bool single_home_everywhere(const IntervalProfile& p);

/// {i - 1 : i in values, i >= 1}.
std::vector<int> shift_list_down(std::span<const int> values);

}  // namespace favoid
