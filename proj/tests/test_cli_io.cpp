#include <doctest.h>

#include "favoid/io.hpp"
#include "helpers.hpp"

using namespace favoid;

namespace {

std::string error_text(auto&& fn)
{
    try {
        fn();
    }
    catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse K3 with F={1}")
{
    auto inst = parse_instance("3 3\n0 1\n1 2\n2 0\n0 1 1\n1 1 1\n2 1 1\n");
    CHECK(inst.graph.edge_count() == 3);
    CHECK(inst.graph.is_regular(2));
    CHECK(inst.lists == test::same(3, {1}));
    CHECK_FALSE(inst.decomposition);
    CHECK_FALSE(inst.tails);
}

TEST_CASE("missing lists mean empty F")
{
    auto inst = parse_instance("3 2\n0 1\n1 2\n");
    CHECK(inst.lists.all_empty());
    auto kw = parse_instance("3 2\n0 1\n1 2\nlists\n");
    CHECK(kw.lists.all_empty());
}

TEST_CASE("comments, blank lines and keywords")
{
    auto inst = parse_instance("# triangle\n3 3\n\n0 1 # first\n1 2\n2 0\nlists\n1 2 0 2\n"
                               "orientation\n0 1\n1 2\n2 0\n");
    CHECK(inst.lists.at(1) == std::vector<int>{0, 2});
    REQUIRE(inst.tails);
    CHECK(test::degs(inst.orientation()) == std::vector<int>{1, 1, 1});
}

TEST_CASE("orientation line count must equal m")
{
    auto short_text = error_text([] { parse_instance("3 3\n0 1\n1 2\n2 0\norientation\n0 1\n1 2\n"); });
    CHECK(short_text.find("ParseError") != std::string::npos);
    CHECK(short_text.find("expected 3") != std::string::npos);
    auto long_text = error_text([] { parse_instance("2 1\n0 1\norientation\n0 1\n1 0\n"); });
    CHECK(long_text.find("ParseError") != std::string::npos);
}

TEST_CASE("parse errors report line and column")
{
    auto t = error_text([] { parse_instance("3 2\n0 1\n1 x\n"); });
    CHECK(t.find("line 3, column 3") != std::string::npos);
    CHECK(error_text([] { parse_instance("2 1\n0 0\n"); }).find("loop") != std::string::npos);
    CHECK(error_text([] { parse_instance("2 1\n0 5\n"); }).find("line 2, column 3") != std::string::npos);
    CHECK(error_text([] { parse_instance("2 2\n0 1\n"); }).find("edge lines") != std::string::npos);
    CHECK(error_text([] { parse_instance(""); }).find("empty") != std::string::npos);
    CHECK(error_text([] { parse_instance("2 1\n0 1\n0 2 0\n"); }).find("fields") != std::string::npos);
    CHECK(error_text([] { parse_instance("2 1\n0 1\n0 1 0\n0 1 1\n"); }).find("second list") != std::string::npos);
    CHECK(error_text([] { parse_instance("2 1\n0 1\norientation\n0 2\n"); }).find("does not match") !=
          std::string::npos);
}

TEST_CASE("consistency errors")
{
    CHECK(error_text([] { parse_instance("2 1\n0 1\n0 1 3\n"); }).find("OutOfRangeForbidden") != std::string::npos);
    CHECK(error_text([] { parse_instance("3 2\n0 1\n1 2\ndecomposition\n0\n0\n"); }).find("BadDecomposition") !=
          std::string::npos);
    CHECK(error_text([] { parse_instance("3 2\n0 1\n1 2\ndecomposition\n0\n-\n"); }).find("missing") !=
          std::string::npos);
}

TEST_CASE("decomposition section and standalone file")
{
    auto inst = parse_instance("3 2\n0 1\n1 2\ndecomposition\n0 1\n-\n");
    REQUIRE(inst.decomposition);
    CHECK(inst.decomposition->bipartite_edges == std::vector<EdgeId>{0, 1});
    CHECK(inst.decomposition->h_edges.empty());
    auto d = parse_decomposition("1\n0\n", inst.graph);
    CHECK(d.bipartite_edges == std::vector<EdgeId>{1});
    CHECK(d.h_edges == std::vector<EdgeId>{0});
    CHECK(parse_decomposition(emit_decomposition(d), inst.graph).h_edges == d.h_edges);
}

TEST_CASE("round trip on random instances")
{
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 200; ++trial) {
        MultiGraph g = test::random_small_graph(rng, 9, 20);
        InstanceFile inst{g, random_lists(g, rng, 3), std::nullopt, std::nullopt};
        if (trial % 2) {
            std::vector<Vertex> tails;
            for (const Edge& e : g.edges())
                tails.push_back(rng() % 2 ? e.u : e.v);
            inst.tails = tails;
        }
        if (trial % 3 == 0) {
            Decomposition d;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                (rng() % 2 ? d.bipartite_edges : d.h_edges).push_back(e);
            inst.decomposition = d;
        }
        std::string text = emit_instance(inst);
        InstanceFile back = parse_instance(text);
        CHECK(back == inst);
        CHECK(emit_instance(back) == text);
    }
}

TEST_CASE("gen_regular")
{
    MultiGraph two = gen_regular(2, 6, 1);
    CHECK(two.edge_count() == 6);
    CHECK(two.degree(0) == 6);
    MultiGraph g = gen_regular(6, 5, 2);
    CHECK(g.edge_count() == 15);
    CHECK(g.is_regular(5));
    try {
        gen_regular(5, 5, 0);
        CHECK(false);
    }
    catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParityError);
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        for (int d : {3, 4, 5, 6, 7}) {
            int n = 2 * (2 + static_cast<int>(seed % 10));
            MultiGraph r = gen_regular(n, d, seed);
            CHECK(r.is_regular(d));
            CHECK(r == gen_regular(n, d, seed));
        }
}

TEST_CASE("other generators")
{
    CHECK(gen_clique(5).edge_count() == 10);
    MultiGraph k222 = gen_k6_minus_matching(3);
    CHECK(k222.is_regular(4));
    CHECK(gen_k6_minus_matching(2).edge_count() == 13);
    CHECK_THROWS_AS(gen_k6_minus_matching(4), Error);
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        CHECK(two_degenerate_order(gen_2degenerate(25, seed)));
    MultiGraph b = gen_bipartite(4, 5, 0.5, 3);
    CHECK(bipartition(b).has_value());
    MultiGraph p = gen_petersen();
    CHECK(p.is_regular(3));
    CHECK(p.edge_count() == 15);
    CHECK(gen_random_multigraph(5, 12, 1).edge_count() == 12);
}

TEST_CASE("list schemes respect their hypotheses")
{
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        MultiGraph g = gen_regular(10, 1 + static_cast<int>(trial % 8), rng());
        CHECK(check_strict_half(random_strict_half_lists(g, rng), g));
        CHECK(check_thm7(interval_profile(random_end_hole_lists(g, rng), g)));
        CHECK(check_thm5(interval_profile(random_thm5_lists(g, rng), g)));
        auto any = random_lists(g, rng, 2);
        for (Vertex v = 0; v < 10; ++v)
            CHECK(any.size(v) <= 2);
    }
    MultiGraph k4 = gen_clique(4);
    CHECK(lists_by_scheme("uniform:1,7", k4, rng) == test::same(4, {1}));
    CHECK(lists_by_scheme("none", k4, rng).all_empty());
    CHECK_THROWS_AS(lists_by_scheme("bogus", k4, rng), Error);
    CHECK_THROWS_AS(lists_by_scheme("random:x", k4, rng), Error);
    CHECK_THROWS_AS(graph_by_family("clique", {}, 0), Error);
    CHECK(graph_by_family("regular", {8, 3}, 1).is_regular(3));
}

TEST_CASE("report JSON")
{
    MultiGraph k5 = gen_clique(5);
    auto unsat = report_json(solve(k5, test::same(5, {2, 3})));
    CHECK(unsat["schema"] == report_schema);
    CHECK(unsat["status"] == "UNSAT");
    CHECK(unsat["guarantee"] == "EXHAUSTIVE");
    CHECK(unsat["orientation"].is_null());

    MultiGraph k6 = gen_clique(6);
    auto sat = report_json(solve(k6, test::same(6, {2, 3})));
    CHECK(sat["status"] == "SAT");
    CHECK(sat["orientation"].size() == 15);
    CHECK(sat["out_degrees"].size() == 6);

    MultiGraph tri = gen_clique(3);
    auto cert = report_json(solve(tri, test::same(3, {0, 1})));
    CHECK(cert["certificate"]["kind"] == "lower");
}

TEST_CASE("profile output")
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= 7; ++v)
        edges.push_back({0, v});
    MultiGraph star(8, edges);
    ForbiddenLists f(8);
    f.set(0, {3, 4});
    auto j = profile_json(star, f);
    CHECK(j["checks"]["thm5"] == true);
    CHECK(j["vertices"][0]["A"] == nlohmann::json::array({5}));
    std::string text = profile_text(star, f);
    CHECK(text.find("thm5: true") != std::string::npos);
    CHECK(text.find("0 7 {3,4} [3..4] [0..2] [5..7] {5} {2} {0,1,6,7}") != std::string::npos);
}
