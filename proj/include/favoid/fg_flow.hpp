#pragma once

// Orientations with out-degree bounds l(v) <= d+(v) <= u(v), decided by max-flow.
// When none exists the solver returns a vertex set S violating one of
//     l(S) <= e[S] + delta(S)     or     e[S] <= u(S),
// where e[S] counts edges inside S and delta(S) edges leaving it.

#include <cstdint>
#include <variant>
#include <vector>

#include "favoid/graph.hpp"
#include "favoid/lists.hpp"

namespace favoid {

struct DegreeBounds {
    std::vector<int> lower;
    std::vector<int> upper;
};

enum class BoundKind { Lower, Upper };

struct ViolationCertificate {
    std::vector<Vertex> subset;
    BoundKind kind = BoundKind::Upper;
    /// l(S) for Lower, u(S) for Upper.
    std::int64_t bound_sum = 0;
    std::int64_t internal_edges = 0;
    std::int64_t boundary_edges = 0;
};

using FgResult = std::variant<Orientation, ViolationCertificate>;

/// MalformedBounds unless 0 <= l(v) <= u(v) <= d(v) everywhere.
FgResult fg_orient(const MultiGraph& g, const DegreeBounds& bounds);

/// Recomputes e[S], delta(S) and the bound sum from scratch and checks the
/// stored values match and the stated inequality is violated.
bool certificate_holds(const MultiGraph& g, const DegreeBounds& bounds, const ViolationCertificate& cert);

bool satisfies_bounds(const Orientation& d, const DegreeBounds& bounds);

/// l(v) and u(v) are the ends of the unique home of v. Requires single_home_everywhere.
DegreeBounds bounds_from_single_home(const IntervalProfile& p);

/// F-avoiding orientation when every hole is an end-interval and |F(v)| <= d(v)/2.
/// HypothesisViolated otherwise.
Orientation thm7_solve(const MultiGraph& g, const ForbiddenLists& f);

}  // namespace favoid
