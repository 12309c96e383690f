#pragma once

// Exhaustive ground truth over all 2^m edge directions.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "favoid/graph.hpp"
#include "favoid/lists.hpp"

namespace favoid {

inline constexpr int default_oracle_budget = 24;

enum class OracleStatus { Sat, Unsat };

struct OracleResult {
    OracleStatus status = OracleStatus::Unsat;
    std::optional<Orientation> witness;
    std::uint64_t solution_count = 0;
    std::uint64_t enumerated_count = 0;

    bool sat() const noexcept { return status == OracleStatus::Sat; }
};

struct OracleOptions {
    int budget = default_oracle_budget;
    /// Stop at the first witness; solution_count is then 1 rather than exact.
    bool stop_at_first = false;
    /// Work is split by fixing the directions of the highest-indexed edges.
    int threads = 1;
};

/// BudgetExceeded if m > budget.
OracleResult oracle_decide(const MultiGraph& g, const ForbiddenLists& f, const OracleOptions& options = {});

struct Verification {
    bool ok = true;
    /// (v, d+(v)) for every v with d+(v) in F(v).
    std::vector<std::pair<Vertex, int>> violations;
};

Verification verify(const Orientation& d, const ForbiddenLists& f);

}  // namespace favoid
