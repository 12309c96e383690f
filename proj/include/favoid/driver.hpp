#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "favoid/fg_flow.hpp"
#include "favoid/graph.hpp"
#include "favoid/lasso.hpp"
#include "favoid/lists.hpp"
#include "favoid/reductions.hpp"

namespace favoid {

enum class SolveStatus { Sat, Unsat, GiveUp };

/// Where the answer's correctness comes from.
enum class Guarantee {
    ProvenInPaper,
    /// Existence is known from the holes-of-size-one result; the search itself is heuristic.
    ExternalMaLu,
    Heuristic,
    Exhaustive,
};

const char* status_name(SolveStatus s) noexcept;
const char* guarantee_name(Guarantee g) noexcept;

struct SolveStats {
    int moves = 0;
    int restarts = 0;
    int reductions = 0;
    std::uint64_t oracle_states = 0;
};

struct SolveReport {
    SolveStatus status = SolveStatus::GiveUp;
    /// Always F-avoiding against the original lists when status is Sat.
    std::optional<Orientation> orientation;
    /// Present for Unsat answers backed by a flow certificate.
    std::optional<ViolationCertificate> certificate;
    std::vector<std::string> method_chain;
    Guarantee guarantee = Guarantee::Heuristic;
    SolveStats stats;
    MoveTrace trace;
    /// Free-form diagnostics (e.g. why an input decomposition was rejected).
    std::vector<std::string> notes;
};

struct SolveOptions {
    int oracle_budget = 24;
    std::uint64_t seed = 0;
    /// Randomised lasso restarts tried before exhaustive search.
    int restarts = 50;
    std::optional<Decomposition> decomposition;
    BipartiteSubSolver sub_solver;
};

/// Case analysis for a d-regular graph (d >= 5) with one common forbidden set of size <= 2.
/// NotRegular, DegreeTooSmall, BadParameter (|F| > 2) or OutOfRangeForbidden.
SolveReport regular_solve(const MultiGraph& g, std::span<const int> forbidden, const SolveOptions& options = {});

/// Routes an arbitrary instance to the strongest applicable method. Never throws
/// on unsolvable input: failures are report statuses.
SolveReport solve(const MultiGraph& g, const ForbiddenLists& f, const SolveOptions& options = {});

}  // namespace favoid
