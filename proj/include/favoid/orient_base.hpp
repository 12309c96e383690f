#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "favoid/graph.hpp"

namespace favoid {

struct BalancedOrientation {
    Orientation orientation;
    /// d+(v) - d-(v); within [-1, 1], and 0 wherever d(v) is even.
    std::vector<int> imbalance;
};

/// Joins a dummy vertex to every odd-degree vertex, walks Euler circuits of the
/// result (Hierholzer, per component), orients each edge along the walk, and
/// drops the dummy edges.
BalancedOrientation balanced_orientation(const MultiGraph& g);

/// Out-degrees in {0, 1} for a graph of maximum degree at most 2.
/// DegreeTooHigh otherwise.
Orientation orient_h_component(const MultiGraph& h);

/// Greedy maximal independent set visiting vertices in `order` (ascending ids if empty).
std::vector<Vertex> maximal_independent_set(const MultiGraph& g, const std::vector<Vertex>& order = {});

/// {1, ..., k}-avoiding orientation of a (2k+1)-regular multigraph. A maximal
/// independent set becomes a set of sinks and the rest is balanced-oriented,
/// so every other vertex keeps in-degree at most k. With mis_seed the set is
/// grown in a shuffled vertex order.
/// NotRegular / WrongDegree if the degree hypothesis fails; BadParameter if k < 1.
Orientation extreme_avoiding(const MultiGraph& g, int k, std::optional<std::uint64_t> mis_seed = std::nullopt);

}  // namespace favoid
