#pragma once

#include <random>
#include <vector>

#include "favoid/generators.hpp"
#include "favoid/graph.hpp"
#include "favoid/lists.hpp"
#include "favoid/oracle.hpp"

namespace favoid::test {

inline ForbiddenLists same(int n, std::vector<int> values) { return ForbiddenLists::uniform(n, values); }

inline std::vector<int> degs(const Orientation& d)
{
    auto s = d.out_degrees();
    return {s.begin(), s.end()};
}

inline Orientation oriented(const MultiGraph& g, std::vector<Vertex> tails) { return Orientation::from_tails(g, tails); }

inline MultiGraph random_small_graph(std::mt19937_64& rng, int max_n, int max_m)
{
    int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    int m = std::uniform_int_distribution<int>(0, max_m)(rng);
    return gen_random_multigraph(n, m, rng());
}

}  // namespace favoid::test
