#include <doctest.h>

#include "favoid/driver.hpp"
#include "helpers.hpp"

using namespace favoid;

namespace {

bool chain_has(const SolveReport& r, const std::string& name)
{
    return std::find(r.method_chain.begin(), r.method_chain.end(), name) != r.method_chain.end();
}

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    }
    catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("regular_solve: F away from the middle gives the balanced orientation")
{
    MultiGraph g = gen_regular(10, 5, 1);
    std::vector<int> f{0, 5};
    auto r = regular_solve(g, f);
    CHECK(r.status == SolveStatus::Sat);
    CHECK(r.method_chain == std::vector<std::string>{"regular:balanced"});
    CHECK(r.guarantee == Guarantee::ProvenInPaper);
    for (Vertex v = 0; v < 10; ++v)
        CHECK((r.orientation->out_degree(v) == 2 || r.orientation->out_degree(v) == 3));
}

TEST_CASE("regular_solve: K6 with F={2,3} via lasso")
{
    MultiGraph k6 = gen_clique(6);
    std::vector<int> f{2, 3};
    auto r = regular_solve(k6, f);
    CHECK(r.status == SolveStatus::Sat);
    CHECK(chain_has(r, "regular:lasso"));
    CHECK(verify(*r.orientation, test::same(6, f)).ok);
    CHECK(oracle_decide(k6, test::same(6, f)).sat());
}

TEST_CASE("regular_solve: 5-regular with F={3,4} via extreme + reverse_all")
{
    MultiGraph g = gen_regular(12, 5, 7);
    std::vector<int> f{3, 4};
    auto r = regular_solve(g, f);
    CHECK(r.status == SolveStatus::Sat);
    CHECK(chain_has(r, "regular:extreme+reverse_all"));
    CHECK(verify(*r.orientation, test::same(12, f)).ok);
}

TEST_CASE("regular_solve: 5-regular with F={1,2} via extreme")
{
    MultiGraph g = gen_regular(8, 5, 3);
    std::vector<int> f{1, 2};
    auto r = regular_solve(g, f);
    CHECK(chain_has(r, "regular:extreme"));
    CHECK(verify(*r.orientation, test::same(8, f)).ok);
}

TEST_CASE("regular_solve errors")
{
    MultiGraph k4 = gen_clique(4);
    std::vector<int> one{1};
    CHECK(code_of([&] { regular_solve(k4, one); }) == ErrorCode::DegreeTooSmall);
    MultiGraph path(3, {{0, 1}, {1, 2}});
    CHECK(code_of([&] { regular_solve(path, one); }) == ErrorCode::NotRegular);
    MultiGraph k6 = gen_clique(6);
    std::vector<int> three{1, 2, 3};
    CHECK(code_of([&] { regular_solve(k6, three); }) == ErrorCode::BadParameter);
    std::vector<int> out_of_range{6};
    CHECK(code_of([&] { regular_solve(k6, out_of_range); }) == ErrorCode::OutOfRangeForbidden);
}

TEST_CASE("regular_solve covers every |F| <= 2 on 7- and 8-regular graphs")
{
    for (int d : {7, 8})
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            MultiGraph g = gen_regular(12, d, seed);
            for (int a = 0; a <= d; ++a)
                for (int b = a; b <= d; ++b) {
                    std::vector<int> f = a == b ? std::vector<int>{a} : std::vector<int>{a, b};
                    SolveOptions o;
                    o.seed = seed;
                    auto r = regular_solve(g, f, o);
                    REQUIRE(r.status == SolveStatus::Sat);
                    CHECK(verify(*r.orientation, test::same(12, f)).ok);
                }
        }
}

TEST_CASE("solve: K5 with F={2,3} is UNSAT by exhaustion")
{
    MultiGraph k5 = gen_clique(5);
    auto r = solve(k5, test::same(5, {2, 3}));
    CHECK(r.status == SolveStatus::Unsat);
    CHECK(r.guarantee == Guarantee::Exhaustive);
    CHECK(r.method_chain.back() == "oracle");
    CHECK(r.stats.oracle_states == 1024);
    CHECK_FALSE(r.orientation);
}

TEST_CASE("solve: K2,2,2 with decomposition")
{
    MultiGraph g = gen_k6_minus_matching(3);
    SolveOptions o;
    o.decomposition = k222_decomposition(g);
    int via_decomposition = 0;
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        ForbiddenLists f(6);
        for (Vertex v = 0; v < 6; ++v)
            f.set(v, {std::uniform_int_distribution<int>(0, 4)(rng)});
        auto r = solve(g, f, o);
        REQUIRE(r.status == SolveStatus::Sat);
        CHECK(verify(*r.orientation, f).ok);
        CHECK(r.guarantee == Guarantee::ProvenInPaper);
        if (chain_has(r, "bipartite_plus_h")) {
            ++via_decomposition;
            CHECK(r.method_chain == std::vector<std::string>{"bipartite_plus_h"});
        }
    }
    CHECK(via_decomposition > 0);
}

TEST_CASE("solve: trivial outcomes")
{
    MultiGraph g = gen_petersen();
    auto r = solve(g, ForbiddenLists(10));
    CHECK(r.status == SolveStatus::Sat);
    CHECK(r.method_chain == std::vector<std::string>{"trivial"});

    MultiGraph path(3, {{0, 1}, {1, 2}});
    ForbiddenLists full(3);
    full.set(1, {0, 1, 2});
    auto u = solve(path, full);
    CHECK(u.status == SolveStatus::Unsat);
    CHECK(u.method_chain == std::vector<std::string>{"full-list"});
}

TEST_CASE("solve: single home everywhere yields a flow certificate")
{
    // d = 2 and F = {0,1}: every vertex would need out-degree 2.
    MultiGraph tri = gen_clique(3);
    auto r = solve(tri, test::same(3, {0, 1}));
    CHECK(r.status == SolveStatus::Unsat);
    REQUIRE(r.certificate);
    CHECK(chain_has(r, "fg_flow"));
    CHECK(r.certificate->kind == BoundKind::Lower);
    CHECK(r.certificate->subset.size() == 3);
}

TEST_CASE("solve gives up beyond the oracle budget")
{
    // K7 with F = {3,4,5} is the next member of the tight family.
    MultiGraph k7 = gen_clique(7);
    SolveOptions o;
    o.oracle_budget = 10;
    o.restarts = 3;
    auto r = solve(k7, test::same(7, {3, 4, 5}), o);
    CHECK(r.status == SolveStatus::GiveUp);
    CHECK_FALSE(r.orientation);
}

TEST_CASE("solve is reproducible for a fixed seed")
{
    MultiGraph g = gen_regular(10, 4, 9);
    auto f = test::same(10, {1, 3});
    SolveOptions o;
    o.seed = 5;
    auto a = solve(g, f, o);
    auto b = solve(g, f, o);
    CHECK(a.status == b.status);
    CHECK(a.method_chain == b.method_chain);
    if (a.orientation && b.orientation)
        CHECK(*a.orientation == *b.orientation);
}

TEST_CASE("solve never throws and SAT always verifies")
{
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 300; ++trial) {
        MultiGraph g = test::random_small_graph(rng, 8, 14);
        ForbiddenLists f = random_lists(g, rng, 3);
        SolveOptions o;
        o.seed = rng();
        o.restarts = 3;
        SolveReport r;
        CHECK_NOTHROW(r = solve(g, f, o));
        if (r.status == SolveStatus::Sat)
            CHECK(verify(*r.orientation, f).ok);
        CHECK(r.status == (oracle_decide(g, f).sat() ? SolveStatus::Sat : SolveStatus::Unsat));
    }
}

TEST_CASE("names")
{
    CHECK(std::string(status_name(SolveStatus::GiveUp)) == "GIVEUP");
    CHECK(std::string(guarantee_name(Guarantee::ExternalMaLu)) == "EXTERNAL_MA_LU");
}
