#pragma once

// Sound edge-deletion rules for forbidden-list instances. Each rule deletes one
// edge, edits at most two lists, and records how to orient the deleted edge once
// the smaller instance is solved ("lift"). All rules keep
//     |F(v)| < d(v)/2 on non-isolated vertices, F(v) empty on isolated ones
// whenever the parent satisfies it.

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "favoid/graph.hpp"
#include "favoid/lists.hpp"

namespace favoid {

struct Instance {
    MultiGraph graph;
    ForbiddenLists lists;
};

enum class ReductionRule { EdgeAB, LowDegCase1, LowDegCase2, HShift };

const char* rule_name(ReductionRule r) noexcept;

struct ListChange {
    Vertex vertex;
    std::vector<int> before;
    std::vector<int> after;
};

struct ReductionStep {
    ReductionRule rule = ReductionRule::EdgeAB;
    /// Index of the deleted edge in the parent graph; later edges shift down by one.
    EdgeId removed_edge = -1;
    std::vector<ListChange> list_changes;
    /// Tail of the deleted edge in the lifted orientation...
    Vertex default_tail = -1;
    /// ...unless the sub-solution has d+(pivot) == value, in which case pivot is the tail.
    std::optional<std::pair<Vertex, int>> switch_when;
};

/// Parent orientation from a solution of the reduced instance produced by `step`.
Orientation lift(const ReductionStep& step, const MultiGraph& parent, const Orientation& child);

/// Deletes an edge uv with u in A1 u A2 and v in B1 u B2, where A1 = B1 are the
/// even-degree vertices, A2 = {d(u) in F(u)}, B2 = {0 in F(v)}. F'(u) drops d(u)
/// when u is in A2; F'(v) is F(v) shifted down by one. The lift orients v -> u.
/// BoundViolated if the parent fails the strict-half bound.
std::optional<std::pair<Instance, ReductionStep>> edge_ab_reduce(const MultiGraph& g, const ForbiddenLists& f);

/// Deletes the lowest-id edge v0u at a vertex of degree 1 or 2 with F(v0) empty:
///  - d(u) in F(u): F'(u) = F(u) \ {d(u)}, lift v0 -> u;
///  - F(u) empty: lists unchanged, lift v0 -> u;
///  - otherwise a = max F(u): F'(u) = F(u) \ {a}, lift u -> v0 iff the sub-solution has d+(u) = a.
/// NonEmptyListAtLowDegree if F(v0) is nonempty, BadParameter if d(v0) is not 1 or 2.
std::pair<Instance, ReductionStep> low_degree_eliminate(const MultiGraph& g, const ForbiddenLists& f, Vertex v0);

/// A peeling order that removes a vertex of current degree <= 2 each time, if one exists.
std::optional<std::vector<Vertex>> two_degenerate_order(const MultiGraph& g);

struct TwoDegenerateResult {
    Orientation orientation;
    int eliminations = 0;
    int lifts = 0;
};

/// NotTwoDegenerate, or BoundViolated unless the strict-half bound holds (isolated vertices need F empty).
TwoDegenerateResult two_degenerate_solve_detailed(const MultiGraph& g, const ForbiddenLists& f);
Orientation two_degenerate_solve(const MultiGraph& g, const ForbiddenLists& f);

/// Solves a bipartite instance, or returns nullopt.
using BipartiteSubSolver = std::function<std::optional<Orientation>(const MultiGraph&, const ForbiddenLists&)>;

BipartiteSubSolver oracle_sub_solver(int budget = 24);
BipartiteSubSolver lasso_sub_solver();
/// Succeeds only when the shifted lists happen to have all holes at the ends.
BipartiteSubSolver fg_sub_solver();

struct Decomposition {
    std::vector<EdgeId> bipartite_edges;
    std::vector<EdgeId> h_edges;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Orients H with out-degrees in {0,1}, shifts F down by one where H contributes an
/// out-edge, and hands the bipartite remainder to `sub`.
/// BadDecomposition if the edge sets do not partition E(G), Delta(H) > 2, some
/// d_H(v) = 2 vertex has odd d_G(v), or G - E(H) is not bipartite; BoundViolated
/// if the strict-half bound fails; SubSolverFailed if `sub` returns nothing.
Orientation bipartite_plus_h_solve(const MultiGraph& g, const ForbiddenLists& f, const Decomposition& decomposition,
                                   const BipartiteSubSolver& sub = oracle_sub_solver());

}  // namespace favoid
