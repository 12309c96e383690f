#include <doctest.h>

#include "favoid/fg_flow.hpp"
#include "helpers.hpp"

using namespace favoid;

namespace {

DegreeBounds bounds(std::vector<int> lo, std::vector<int> hi) { return {std::move(lo), std::move(hi)}; }

bool exhaustive(const MultiGraph& g, const DegreeBounds& b)
{
    const int m = g.edge_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
        for (EdgeId e = 0; e < m; ++e)
            ++out[static_cast<std::size_t>((mask >> e) & 1 ? g.edge(e).v : g.edge(e).u)];
        bool ok = true;
        for (std::size_t v = 0; v < out.size(); ++v)
            ok = ok && b.lower[v] <= out[v] && out[v] <= b.upper[v];
        if (ok)
            return true;
    }
    return false;
}

}  // namespace

TEST_CASE("triangle with l=u=1 is cyclic")
{
    MultiGraph tri = gen_clique(3);
    auto r = fg_orient(tri, bounds({1, 1, 1}, {1, 1, 1}));
    REQUIRE(std::holds_alternative<Orientation>(r));
    CHECK(test::degs(std::get<Orientation>(r)) == std::vector<int>{1, 1, 1});
}

TEST_CASE("triangle with u=0 gives an upper certificate on V")
{
    MultiGraph tri = gen_clique(3);
    auto b = bounds({0, 0, 0}, {0, 0, 0});
    auto r = fg_orient(tri, b);
    REQUIRE(std::holds_alternative<ViolationCertificate>(r));
    const auto& c = std::get<ViolationCertificate>(r);
    CHECK(c.kind == BoundKind::Upper);
    CHECK(c.subset == std::vector<Vertex>{0, 1, 2});
    CHECK(c.internal_edges == 3);
    CHECK(c.bound_sum == 0);
    CHECK(certificate_holds(tri, b, c));
}

TEST_CASE("lower-bound certificate")
{
    MultiGraph tri = gen_clique(3);
    auto b = bounds({2, 2, 0}, {2, 2, 2});
    auto r = fg_orient(tri, b);
    REQUIRE(std::holds_alternative<ViolationCertificate>(r));
    const auto& c = std::get<ViolationCertificate>(r);
    CHECK(certificate_holds(tri, b, c));
    if (c.kind == BoundKind::Lower)
        CHECK(c.bound_sum > c.internal_edges + c.boundary_edges);
    else
        CHECK(c.bound_sum < c.internal_edges);
}

TEST_CASE("star centre forced out")
{
    MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto r = fg_orient(star, bounds({2, 0, 0, 0}, {3, 0, 0, 0}));
    REQUIRE(std::holds_alternative<Orientation>(r));
    CHECK(std::get<Orientation>(r).out_degree(0) == 3);
}

TEST_CASE("malformed bounds")
{
    MultiGraph tri = gen_clique(3);
    CHECK_THROWS_AS(fg_orient(tri, bounds({0, 0, 0}, {3, 1, 1})), Error);
    CHECK_THROWS_AS(fg_orient(tri, bounds({2, 0, 0}, {1, 1, 1})), Error);
    CHECK_THROWS_AS(fg_orient(tri, bounds({0, 0}, {1, 1})), Error);
}

TEST_CASE("tampered certificate fails re-verification")
{
    MultiGraph tri = gen_clique(3);
    auto b = bounds({0, 0, 0}, {0, 0, 0});
    auto c = std::get<ViolationCertificate>(fg_orient(tri, b));
    c.internal_edges = 1;
    CHECK_FALSE(certificate_holds(tri, b, c));
}

TEST_CASE("agreement with exhaustive search")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        MultiGraph g = test::random_small_graph(rng, 6, 10);
        DegreeBounds b;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            int lo = std::uniform_int_distribution<int>(0, g.degree(v))(rng);
            b.lower.push_back(lo);
            b.upper.push_back(std::uniform_int_distribution<int>(lo, g.degree(v))(rng));
        }
        auto r = fg_orient(g, b);
        bool feasible = exhaustive(g, b);
        CHECK(std::holds_alternative<Orientation>(r) == feasible);
        if (auto* d = std::get_if<Orientation>(&r))
            CHECK(satisfies_bounds(*d, b));
        else
            CHECK(certificate_holds(g, b, std::get<ViolationCertificate>(r)));
    }
}

TEST_CASE("thm7 examples")
{
    CHECK_THROWS_AS(thm7_solve(gen_clique(4), test::same(4, {0, 3})), Error);

    MultiGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto d = thm7_solve(c4, test::same(4, {0}));
    for (Vertex v = 0; v < 4; ++v)
        CHECK((d.out_degree(v) == 1 || d.out_degree(v) == 2));

    auto k4 = gen_clique(4);
    auto f = test::same(4, {0});
    CHECK(oracle_decide(k4, f).solution_count > 0);
    CHECK(verify(thm7_solve(k4, f), f).ok);
}

TEST_CASE("thm7 on random end-hole lists")
{
    std::mt19937_64 rng(37);
    int solved = 0;
    for (int trial = 0; trial < 200; ++trial) {
        MultiGraph g = test::random_small_graph(rng, 12, 40);
        ForbiddenLists f = random_end_hole_lists(g, rng);
        if (! check_thm7(interval_profile(f, g)))
            continue;
        CHECK(verify(thm7_solve(g, f), f).ok);
        ++solved;
    }
    CHECK(solved > 100);
}

TEST_CASE("bounds from single home")
{
    MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    ForbiddenLists f(4);
    f.set(0, {0, 3});
    auto b = bounds_from_single_home(interval_profile(f, star));
    CHECK(b.lower[0] == 1);
    CHECK(b.upper[0] == 2);
    CHECK(b.lower[1] == 0);
    CHECK(b.upper[1] == 1);
}
