#include <doctest.h>

#include "favoid/orient_base.hpp"
#include "helpers.hpp"

using namespace favoid;

namespace {

bool balanced(const BalancedOrientation& b)
{
    const Orientation& d = b.orientation;
    for (Vertex v = 0; v < d.graph().vertex_count(); ++v) {
        int diff = d.out_degree(v) - d.in_degree(v);
        if (diff != b.imbalance[static_cast<std::size_t>(v)] || std::abs(diff) > 1)
            return false;
        if (d.graph().degree(v) % 2 == 0 && diff != 0)
            return false;
    }
    return d.consistent();
}

}  // namespace

TEST_CASE("balanced orientation of C4 and P3")
{
    MultiGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto b = balanced_orientation(c4);
    CHECK(test::degs(b.orientation) == std::vector<int>{1, 1, 1, 1});
    CHECK(b.imbalance == std::vector<int>{0, 0, 0, 0});

    MultiGraph p3(3, {{0, 1}, {1, 2}});
    auto bp = balanced_orientation(p3);
    CHECK(bp.imbalance[1] == 0);
    CHECK(std::abs(bp.imbalance[0]) == 1);
    CHECK(std::abs(bp.imbalance[2]) == 1);
}

TEST_CASE("balanced orientation of 5-regular graphs has d+ in {2,3}")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        MultiGraph g = gen_regular(12, 5, seed);
        auto b = balanced_orientation(g);
        for (Vertex v = 0; v < 12; ++v) {
            int out = b.orientation.out_degree(v);
            CHECK((out == 2 || out == 3));
        }
    }
}

TEST_CASE("balanced orientation property on random multigraphs")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        MultiGraph g = test::random_small_graph(rng, 15, 45);
        CHECK(balanced(balanced_orientation(g)));
    }
    MultiGraph empty(0, {});
    CHECK(balanced(balanced_orientation(empty)));
}

TEST_CASE("orient_h_component")
{
    MultiGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(test::degs(orient_h_component(c5)) == std::vector<int>{1, 1, 1, 1, 1});

    MultiGraph e(2, {{0, 1}});
    auto de = orient_h_component(e);
    CHECK(de.out_degree(0) + de.out_degree(1) == 1);

    MultiGraph mix(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 3}});
    auto dm = orient_h_component(mix);
    for (Vertex v = 0; v < 6; ++v)
        CHECK(dm.out_degree(v) <= 1);

    MultiGraph digon(2, {{0, 1}, {0, 1}});
    CHECK(test::degs(orient_h_component(digon)) == std::vector<int>{1, 1});

    MultiGraph claw(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(orient_h_component(claw), Error);
}

TEST_CASE("maximal independent set is independent and maximal")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        MultiGraph g = test::random_small_graph(rng, 12, 30);
        auto mis = maximal_independent_set(g);
        std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
        for (Vertex v : mis)
            in[static_cast<std::size_t>(v)] = 1;
        for (const Edge& e : g.edges())
            CHECK_FALSE((in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]));
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (in[static_cast<std::size_t>(v)])
                continue;
            bool dominated = false;
            for (EdgeId e : g.incident(v))
                dominated = dominated || in[static_cast<std::size_t>(g.other_end(e, v))];
            CHECK(dominated);
        }
    }
}

TEST_CASE("extreme orientation: K4, k=1")
{
    MultiGraph k4 = gen_clique(4);
    auto d = extreme_avoiding(k4, 1);
    CHECK(test::degs(d) == std::vector<int>{0, 2, 2, 2});
    CHECK(verify(d, test::same(4, {1})).ok);
}

TEST_CASE("extreme orientation: K6, k=2")
{
    MultiGraph k6 = gen_clique(6);
    auto d = extreme_avoiding(k6, 2);
    CHECK(test::degs(d) == std::vector<int>{0, 3, 3, 3, 3, 3});
    CHECK(verify(d, test::same(6, {1, 2})).ok);
}

TEST_CASE("extreme orientation: Petersen, k=1")
{
    MultiGraph p = gen_petersen();
    CHECK(verify(extreme_avoiding(p, 1), test::same(10, {1})).ok);
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(verify(extreme_avoiding(p, 1, seed), test::same(10, {1})).ok);
}

TEST_CASE("extreme orientation errors")
{
    CHECK_THROWS_AS(extreme_avoiding(gen_clique(4), 0), Error);
    CHECK_THROWS_AS(extreme_avoiding(gen_clique(4), 2), Error);
    CHECK_THROWS_AS(extreme_avoiding(MultiGraph(3, {{0, 1}, {1, 2}}), 1), Error);
}

TEST_CASE("extreme orientation on random (2k+1)-regular multigraphs")
{
    for (int k = 1; k <= 4; ++k)
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            MultiGraph g = gen_regular(2 * (2 + static_cast<int>(seed % 9)), 2 * k + 1, seed);
            std::vector<int> f;
            for (int x = 1; x <= k; ++x)
                f.push_back(x);
            CHECK(verify(extreme_avoiding(g, k, seed), test::same(g.vertex_count(), f)).ok);
        }
}
