#pragma once

// Lasso moves and the local search that drives an orientation toward zero
// forbidden vertices.
//
// An out-lasso (v1, ..., vk; vi) is a directed path v1 -> ... -> vk plus a
// closing edge vk -> vi with 2 <= i <= k-1; an in-lasso has every edge
// reversed. Flipping reverses the sub-path v1..vi and the closing edge, which
// changes out-degrees only at v1, vi, vk: by (-1, +2, -1) for an out-lasso and
// (+1, -2, +1) for an in-lasso.
//
// The search minimises the potential (|D_F|, -|D_X|) lexicographically. Each
// accepted move strictly decreases it, so at most (n+1)^2 moves are made.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "favoid/graph.hpp"
#include "favoid/lists.hpp"

namespace favoid {

enum class LassoKind { Out, In };

struct Lasso {
    std::vector<Vertex> vertices;
    /// 0-based position of the vertex the closing edge enters (Out) or leaves (In); 1 <= anchor <= k-2.
    int anchor = 1;
    LassoKind kind = LassoKind::Out;
    /// path_edges[j] joins vertices[j] and vertices[j+1].
    std::vector<EdgeId> path_edges;
    EdgeId closing_edge = -1;

    Vertex start() const { return vertices.front(); }
    Vertex anchor_vertex() const { return vertices[static_cast<std::size_t>(anchor)]; }
    Vertex end() const { return vertices.back(); }
};

/// Grows a non-extendable directed path from v (along reversed edges for In) and
/// closes it with the lowest-id edge back onto the path. nullopt if the path ends
/// at a sink (Out) / source (In). PreconditionViolated unless S_v and T_v meet only in v.
std::optional<Lasso> find_lasso(const Orientation& d, Vertex v, LassoKind kind);

bool is_valid_lasso(const Orientation& d, const Lasso& l);

/// StaleLasso if any edge of l is missing or misdirected in d.
Orientation flip_lasso(const Orientation& d, const Lasso& l);
void flip_lasso_in_place(Orientation& d, const Lasso& l);

struct Potential {
    int forbidden = 0;
    int far = 0;

    /// Lexicographically smaller (|D_F|, -|D_X|).
    bool better_than(const Potential& o) const
    {
        return forbidden < o.forbidden || (forbidden == o.forbidden && far > o.far);
    }
    friend bool operator==(const Potential&, const Potential&) = default;
};

Potential potential(const Orientation& d, const IntervalProfile& p);

enum class MoveKind { PathReversal, LassoFlip };

struct Move {
    MoveKind kind = MoveKind::PathReversal;
    /// "case1.i", "case1.ii", "case1.iii", "case2.i", ...
    std::string rule;
    Vertex focus = -1;
    std::vector<Vertex> vertices;
    Potential before;
    Potential after;
};

struct MoveTrace {
    std::vector<Move> moves;

    /// One line per move: kind, rule, focus, vertices, potential before -> after.
    std::string to_log() const;
};

enum class StepStatus { Moved, Done, Stuck };

struct StepResult {
    StepStatus status = StepStatus::Stuck;
    Orientation next;
    std::optional<Move> move;
};

/// One strictly improving move, or Done when D_F is empty, or Stuck.
/// Focus vertices are tried in increasing id order (shuffled when rng is given);
/// under the hole/home hypothesis the first one always yields a move.
StepResult improve_step(const Orientation& d, const IntervalProfile& p, std::mt19937_64* rng = nullptr);

struct BalancedStart {};
struct RandomStart {
    std::uint64_t seed = 0;
};
using InitialOrientation = std::variant<BalancedStart, RandomStart, Orientation>;

struct LassoOptions {
    InitialOrientation initial = BalancedStart{};
    /// Randomised focus / candidate order, for restarts.
    std::optional<std::uint64_t> policy_seed;
};

struct LassoOutcome {
    bool success = false;
    /// F-avoiding on success, otherwise the stuck orientation.
    Orientation orientation;
    MoveTrace trace;
    VertexClassification final_classification;
    /// Empty on success; otherwise why no guarantee applied.
    std::string failure_reason;
};

LassoOutcome lasso_solve(const MultiGraph& g, const ForbiddenLists& f, const LassoOptions& options = {});

Orientation random_orientation(const MultiGraph& g, std::uint64_t seed);

}  // namespace favoid
