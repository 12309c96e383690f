#pragma once

// Line-oriented text format for instances:
//
//   n m
//   u v            (m lines, edge ids in order)
//   [lists]
//   v k f1 .. fk   (any number; omitted vertices have F = {})
//   [decomposition
//    e e e ..      bipartite part, "-" for empty
//    e e e ..]     H part
//   [orientation
//    tail head     (m lines)]
//
// '#' starts a comment. Sections after the edge block may appear in any order.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "favoid/driver.hpp"
#include "favoid/graph.hpp"
#include "favoid/lists.hpp"
#include "favoid/reductions.hpp"

namespace favoid {

inline constexpr const char* report_schema = "favoid-report/1";

struct InstanceFile {
    MultiGraph graph;
    ForbiddenLists lists;
    std::optional<Decomposition> decomposition;
    /// Tail of every edge, in edge-id order.
    std::optional<std::vector<Vertex>> tails;

    Orientation orientation() const;
    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// ParseError (with "line L, column C") on malformed text; OutOfRangeForbidden,
/// BadDecomposition or BadVertexId when the content is inconsistent with the graph.
InstanceFile parse_instance(std::string_view text);
InstanceFile read_instance(const std::string& path);

/// Canonical form: lists only for nonempty F(v), in vertex order.
std::string emit_instance(const InstanceFile& inst);

/// Standalone decomposition file: the decomposition section, keyword optional.
Decomposition parse_decomposition(std::string_view text, const MultiGraph& g);
std::string emit_decomposition(const Decomposition& d);

/// Exact partition of the edge ids; BadDecomposition otherwise.
void validate_decomposition(const Decomposition& d, const MultiGraph& g);

std::string read_text_file(const std::string& path);

nlohmann::json certificate_json(const ViolationCertificate& cert);
nlohmann::json report_json(const SolveReport& report);
/// One row per vertex with degree, F, holes, homes, A, B, X, plus hypothesis checks.
nlohmann::json profile_json(const MultiGraph& g, const ForbiddenLists& f);
std::string profile_text(const MultiGraph& g, const ForbiddenLists& f);

}  // namespace favoid
