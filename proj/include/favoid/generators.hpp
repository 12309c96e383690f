#pragma once

// Instance families and random forbidden-list schemes used by the CLI,
// the experiment harness and the property tests.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "favoid/graph.hpp"
#include "favoid/lists.hpp"
#include "favoid/reductions.hpp"

namespace favoid {

/// Configuration model: shuffles n*d stubs and pairs them. A loop is repaired by
/// swapping partners with a random other pair (bounded retries, then a full
/// reshuffle). Parallel edges are kept. ParityError if n*d is odd.
MultiGraph gen_regular(int n, int d, std::uint64_t seed);

MultiGraph gen_clique(int n);

/// Each new vertex attaches to at most two earlier vertices (parallel edges allowed).
MultiGraph gen_2degenerate(int n, std::uint64_t seed);

/// K6 minus the first `size` edges of the matching {01, 23, 45}; size 3 gives K_{2,2,2}.
MultiGraph gen_k6_minus_matching(int size);

MultiGraph gen_bipartite(int a, int b, double p, std::uint64_t seed);

MultiGraph gen_petersen();

/// Random loopless multigraph with m edges on n >= 2 vertices.
MultiGraph gen_random_multigraph(int n, int m, std::uint64_t seed);

/// For gen_k6_minus_matching(3): K_{2,4} between {0,1} and {2,3,4,5}, plus the
/// 4-cycle between {2,3} and {4,5}.
Decomposition k222_decomposition(const MultiGraph& k222);

/// |F(v)| < d(v)/2, uniformly random subset of {0..d(v)}; empty at isolated vertices.
ForbiddenLists random_strict_half_lists(const MultiGraph& g, std::mt19937_64& rng);

/// Holes only at the ends, |F(v)| <= d(v)/2.
ForbiddenLists random_end_hole_lists(const MultiGraph& g, std::mt19937_64& rng);

/// Holes of size <= 2, homes between holes of size >= 3, end-intervals a size-one
/// hole or a home of size >= 2. Every vertex needs degree >= 1.
ForbiddenLists random_thm5_lists(const MultiGraph& g, std::mt19937_64& rng);

/// Arbitrary subsets of {0..d(v)} with at most max_size elements.
ForbiddenLists random_lists(const MultiGraph& g, std::mt19937_64& rng, int max_size);

/// Named scheme: "none", "strict_half", "end_hole", "thm5", "random:K" or
/// "uniform:a,b,..". BadParameter on an unknown name.
ForbiddenLists lists_by_scheme(std::string_view scheme, const MultiGraph& g, std::mt19937_64& rng);

/// Named family with integer/real parameters, e.g. ("regular", {10, 5}).
/// Parameter counts: regular n d, clique n, 2degenerate n, k6mm size,
/// bipartite a b p, petersen, random n m. BadParameter otherwise.
MultiGraph graph_by_family(std::string_view family, const std::vector<double>& params, std::uint64_t seed);

}  // namespace favoid
