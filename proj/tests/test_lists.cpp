#include <doctest.h>

#include "favoid/lists.hpp"
#include "helpers.hpp"

using namespace favoid;

namespace {

VertexProfile single(int d, std::vector<int> f) { return vertex_profile(d, f); }

IntervalProfile star_profile(int d, std::vector<int> f)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= d; ++v)
        edges.push_back({0, v});
    MultiGraph g(d + 1, edges);
    ForbiddenLists lists(d + 1);
    lists.set(0, f);
    return interval_profile(lists, g);
}

}  // namespace

TEST_CASE("interval profile d=7 F={3,4}")
{
    auto vp = single(7, {3, 4});
    REQUIRE(vp.intervals.size() == 3);
    CHECK(vp.intervals[0] == Interval{0, 2, false});
    CHECK(vp.intervals[1] == Interval{3, 4, true});
    CHECK(vp.intervals[2] == Interval{5, 7, false});
    CHECK(vp.a == std::vector<int>{5});
    CHECK(vp.b == std::vector<int>{2});
    CHECK(vp.x == std::vector<int>{0, 1, 6, 7});
}

TEST_CASE("interval profile d=10 F={0,4,5}")
{
    auto vp = single(10, {0, 4, 5});
    CHECK(vp.hole_count() == 2);
    CHECK(vp.home_count() == 2);
    CHECK(vp.low_end() == Interval{0, 0, true});
    CHECK(vp.high_end() == Interval{6, 10, false});
    CHECK(vp.intervals[1] == Interval{1, 3, false});
    CHECK(vp.a == std::vector<int>{1, 6});
    CHECK(vp.b == std::vector<int>{3});
}

TEST_CASE("interval profile d=5 empty F")
{
    auto vp = single(5, {});
    CHECK(vp.intervals.size() == 1);
    CHECK(vp.a.empty());
    CHECK(vp.b.empty());
    CHECK(vp.x == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("size-one home between holes is in both A and B")
{
    auto vp = single(5, {2, 4});
    CHECK(vp.tag(3) == (InA | InB));
    CHECK(vp.forbidden(2));
    CHECK_FALSE(vp.allowed(6));
}

TEST_CASE("interval profile rejects out-of-range values")
{
    MultiGraph g(2, {{0, 1}});
    ForbiddenLists f(2);
    f.set(0, {2});
    CHECK_THROWS_AS(interval_profile(f, g), Error);
}

TEST_CASE("classify")
{
    MultiGraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
    Orientation cyc(tri);
    auto p = interval_profile(test::same(3, {1}), tri);
    CHECK(classify(cyc, p).f == std::vector<Vertex>{0, 1, 2});
    auto empty = interval_profile(ForbiddenLists(3), tri);
    CHECK(classify(cyc, empty).f.empty());

    // d=7 star centre with out-degree 5 lands in D_A.
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= 7; ++v)
        edges.push_back({v <= 5 ? 0 : v, v <= 5 ? v : 0});
    MultiGraph star(8, edges);
    ForbiddenLists f(8);
    f.set(0, {3, 4});
    Orientation d(star);
    REQUIRE(d.out_degree(0) == 5);
    auto c = classify(d, interval_profile(f, star));
    CHECK(std::find(c.a.begin(), c.a.end(), 0) != c.a.end());
}

TEST_CASE("strict and weak half")
{
    MultiGraph k6 = gen_clique(6);
    CHECK(check_strict_half(test::same(6, {2, 3}), k6));
    MultiGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    MultiGraph k5 = gen_clique(5);
    CHECK_FALSE(check_strict_half(test::same(5, {0, 1}), k5));
    CHECK(check_weak_half(test::same(5, {0, 1}), k5));
    MultiGraph iso(1, {});
    CHECK_FALSE(check_strict_half(ForbiddenLists(1), iso));
    CHECK(check_weak_half(ForbiddenLists(1), iso));
    CHECK(check_strict_half_or_isolated_empty(ForbiddenLists(1), iso));
    CHECK(check_strict_half_or_isolated_empty(ForbiddenLists(4), c4));
}

TEST_CASE("thm5 hypothesis")
{
    CHECK(check_thm5(star_profile(7, {3, 4})));
    CHECK_FALSE(check_thm5(star_profile(5, {2, 4})));
    CHECK_FALSE(check_thm5(star_profile(4, {2, 3})));
    CHECK(check_thm5(star_profile(6, {0, 4})));
    CHECK_FALSE(check_thm5(star_profile(6, {0, 4}), true));
    CHECK_FALSE(check_thm5(star_profile(6, {1, 2, 3})));
    CHECK_FALSE(vertex_meets_thm5(vertex_profile(0, std::vector<int>{0})));
}

TEST_CASE("thm7 hypothesis")
{
    CHECK(check_thm7(star_profile(4, {0, 1})));
    CHECK(check_thm7(star_profile(6, {0, 5, 6})));
    CHECK_FALSE(check_thm7(star_profile(6, {3})));
    CHECK_FALSE(check_thm7(star_profile(3, {0, 2, 3})));
}

TEST_CASE("single home")
{
    CHECK(single_home_everywhere(star_profile(5, {0, 4, 5})));
    CHECK_FALSE(single_home_everywhere(star_profile(5, {2})));
}

TEST_CASE("shift_list_down")
{
    CHECK(shift_list_down(std::vector<int>{0, 3, 5}) == std::vector<int>{2, 4});
    CHECK(shift_list_down(std::vector<int>{}).empty());
    CHECK(shift_list_down(std::vector<int>{0}).empty());
}

TEST_CASE("forbidden lists normalise and compare")
{
    ForbiddenLists f(2);
    f.set(0, {3, 1, 3});
    CHECK(f.at(0) == std::vector<int>{1, 3});
    f.insert(0, 2);
    f.erase(0, 3);
    CHECK(f.at(0) == std::vector<int>{1, 2});
    CHECK(f.contains(0, 2));
    CHECK_FALSE(f.all_empty());
    CHECK(ForbiddenLists(2).all_empty());
}

TEST_CASE("classes partition home values")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int d = std::uniform_int_distribution<int>(0, 12)(rng);
        std::vector<int> f;
        for (int x = 0; x <= d; ++x)
            if (rng() % 3 == 0)
                f.push_back(x);
        auto vp = vertex_profile(d, f);
        int covered = 0;
        for (const auto& iv : vp.intervals)
            covered += iv.size();
        CHECK(covered == d + 1);
        for (std::size_t i = 1; i < vp.intervals.size(); ++i)
            CHECK(vp.intervals[i].hole != vp.intervals[i - 1].hole);
        for (int x = 0; x <= d; ++x) {
            auto t = vp.tag(x);
            bool in_f = (t & InF) != 0;
            CHECK(in_f == (std::find(f.begin(), f.end(), x) != f.end()));
            if (! in_f)
                CHECK(((t & InX) != 0) != ((t & (InA | InB)) != 0));
        }
    }
}
