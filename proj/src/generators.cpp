#include "favoid/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace favoid {

MultiGraph gen_regular(int n, int d, std::uint64_t seed)
{
    if (n < 0 || d < 0)
        throw Error(ErrorCode::BadParameter, "n and d must be nonnegative");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw Error(ErrorCode::ParityError, "n*d = " + std::to_string(n * d) + " is odd");
    if (d > 0 && n < 2)
        throw Error(ErrorCode::BadParameter, "a loopless regular graph of positive degree needs n >= 2");

    std::mt19937_64 rng(seed);
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v)
        stubs.insert(stubs.end(), static_cast<std::size_t>(d), v);
    const std::size_t pairs = stubs.size() / 2;

    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        bool ok = true;
        for (std::size_t i = 0; i < pairs && ok; ++i) {
            if (stubs[2 * i] != stubs[2 * i + 1])
                continue;
            ok = false;
            std::uniform_int_distribution<std::size_t> pick(0, pairs - 1);
            for (int retry = 0; retry < 100 && ! ok; ++retry) {
                std::size_t j = pick(rng);
                Vertex a = stubs[2 * i];
                Vertex c = stubs[2 * j];
                Vertex e = stubs[2 * j + 1];
                if (j == i || c == a || e == a)
                    continue;
                // (a,a),(c,e) -> (a,c),(a,e)
                stubs[2 * i + 1] = c;
                stubs[2 * j] = a;
                ok = true;
            }
        }
        if (! ok)
            continue;
        std::vector<Edge> edges;
        edges.reserve(pairs);
        for (std::size_t i = 0; i < pairs; ++i)
            edges.push_back({stubs[2 * i], stubs[2 * i + 1]});
        return MultiGraph(n, edges);
    }
    throw Error(ErrorCode::BadParameter, "could not pair stubs without loops");
}

MultiGraph gen_clique(int n)
{
    if (n < 0)
        throw Error(ErrorCode::BadParameter, "negative clique size");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return MultiGraph(n, edges);
}

MultiGraph gen_2degenerate(int n, std::uint64_t seed)
{
    if (n < 0)
        throw Error(ErrorCode::BadParameter, "negative vertex count");
    std::mt19937_64 rng(seed);
    std::discrete_distribution<int> attach({1.0, 3.0, 6.0});
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> earlier(0, v - 1);
        int k = attach(rng);
        for (int i = 0; i < k; ++i)
            edges.push_back({earlier(rng), v});
    }
    return MultiGraph(n, edges);
}

MultiGraph gen_k6_minus_matching(int size)
{
    if (size < 0 || size > 3)
        throw Error(ErrorCode::BadParameter, "matching size must be in [0, 3]");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = u + 1; v < 6; ++v) {
            bool removed = v == u + 1 && u % 2 == 0 && u / 2 < size;
            if (! removed)
                edges.push_back({u, v});
        }
    return MultiGraph(6, edges);
}

MultiGraph gen_bipartite(int a, int b, double p, std::uint64_t seed)
{
    if (a < 0 || b < 0 || p < 0.0 || p > 1.0)
        throw Error(ErrorCode::BadParameter, "need a, b >= 0 and p in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v)
            if (keep(rng))
                edges.push_back({u, a + v});
    return MultiGraph(a + b, edges);
}

MultiGraph gen_petersen()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return MultiGraph(10, edges);
}

MultiGraph gen_random_multigraph(int n, int m, std::uint64_t seed)
{
    if (m > 0 && n < 2)
        throw Error(ErrorCode::BadParameter, "edges need at least two vertices");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, std::max(0, n - 1));
    std::vector<Edge> edges;
    while (static_cast<int>(edges.size()) < m) {
        Vertex u = pick(rng);
        Vertex v = pick(rng);
        if (u != v)
            edges.push_back({u, v});
    }
    return MultiGraph(n, edges);
}

Decomposition k222_decomposition(const MultiGraph& k222)
{
    Decomposition d;
    for (EdgeId e = 0; e < k222.edge_count(); ++e) {
        const Edge& ed = k222.edge(e);
        bool both_outside = ed.u >= 2 && ed.v >= 2;
        (both_outside ? d.h_edges : d.bipartite_edges).push_back(e);
    }
    return d;
}

namespace {

    std::vector<int> random_subset(int degree, int size, std::mt19937_64& rng)
    {
        std::vector<int> values(static_cast<std::size_t>(degree + 1));
        std::iota(values.begin(), values.end(), 0);
        std::shuffle(values.begin(), values.end(), rng);
        values.resize(static_cast<std::size_t>(size));
        std::sort(values.begin(), values.end());
        return values;
    }

}  // namespace

ForbiddenLists random_strict_half_lists(const MultiGraph& g, std::mt19937_64& rng)
{
    ForbiddenLists f(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d == 0)
            continue;
        std::uniform_int_distribution<int> size(0, (d - 1) / 2);
        f.set(v, random_subset(d, size(rng), rng));
    }
    return f;
}

ForbiddenLists random_end_hole_lists(const MultiGraph& g, std::mt19937_64& rng)
{
    ForbiddenLists f(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        int total = std::uniform_int_distribution<int>(0, d / 2)(rng);
        int low = std::uniform_int_distribution<int>(0, total)(rng);
        std::vector<int> values;
        for (int i = 0; i < low; ++i)
            values.push_back(i);
        for (int i = d - (total - low) + 1; i <= d; ++i)
            values.push_back(i);
        f.set(v, std::move(values));
    }
    return f;
}

ForbiddenLists random_thm5_lists(const MultiGraph& g, std::mt19937_64& rng)
{
    ForbiddenLists f(g.vertex_count());
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d == 0)
            throw Error(ErrorCode::BadParameter, "hole/home lists need every vertex to have an edge");
        std::vector<int> chosen;
        for (int attempt = 0; attempt < 200; ++attempt) {
            const double density = 0.2 + 0.5 * unit(rng);
            std::vector<int> values;
            int x = unit(rng) < 0.3 ? 0 : 1 + static_cast<int>(unit(rng) * 3);
            while (x <= d) {
                if (unit(rng) < density) {
                    int size = unit(rng) < 0.5 ? 1 : 2;
                    for (int i = 0; i < size && x + i <= d; ++i)
                        values.push_back(x + i);
                    x += size + 3 + static_cast<int>(unit(rng) * 3);
                }
                else {
                    ++x;
                }
            }
            if (vertex_meets_thm5(vertex_profile(d, values))) {
                chosen = std::move(values);
                break;
            }
        }
        f.set(v, std::move(chosen));
    }
    return f;
}

ForbiddenLists random_lists(const MultiGraph& g, std::mt19937_64& rng, int max_size)
{
    ForbiddenLists f(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        int size = std::uniform_int_distribution<int>(0, std::min(max_size, d + 1))(rng);
        f.set(v, random_subset(d, size, rng));
    }
    return f;
}

ForbiddenLists lists_by_scheme(std::string_view scheme, const MultiGraph& g, std::mt19937_64& rng)
{
    auto colon = scheme.find(':');
    std::string_view name = scheme.substr(0, colon);
    std::string_view arg = colon == std::string_view::npos ? std::string_view{} : scheme.substr(colon + 1);
    auto need_no_arg = [&] {
        if (! arg.empty())
            throw Error(ErrorCode::BadParameter, "scheme '" + std::string(name) + "' takes no argument");
    };
    if (name == "none") {
        need_no_arg();
        return ForbiddenLists(g.vertex_count());
    }
    if (name == "strict_half") {
        need_no_arg();
        return random_strict_half_lists(g, rng);
    }
    if (name == "end_hole") {
        need_no_arg();
        return random_end_hole_lists(g, rng);
    }
    if (name == "thm5") {
        need_no_arg();
        return random_thm5_lists(g, rng);
    }
    if (name == "random" || name == "uniform") {
        std::vector<int> values;
        std::size_t pos = 0;
        while (pos < arg.size()) {
            std::size_t end = std::min(arg.find(',', pos), arg.size());
            try {
                values.push_back(std::stoi(std::string(arg.substr(pos, end - pos))));
            }
            catch (const std::exception&) {
                throw Error(ErrorCode::BadParameter, "bad number in scheme '" + std::string(scheme) + "'");
            }
            pos = end + 1;
        }
        if (name == "random") {
            if (values.size() != 1 || values[0] < 0)
                throw Error(ErrorCode::BadParameter, "random:K needs one nonnegative K");
            return random_lists(g, rng, values[0]);
        }
        ForbiddenLists f(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> kept;
            for (int x : values)
                if (x >= 0 && x <= g.degree(v))
                    kept.push_back(x);
            f.set(v, std::move(kept));
        }
        return f;
    }
    throw Error(ErrorCode::BadParameter, "unknown list scheme '" + std::string(scheme) + "'");
}

MultiGraph graph_by_family(std::string_view family, const std::vector<double>& params, std::uint64_t seed)
{
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw Error(ErrorCode::BadParameter, "family '" + std::string(family) + "' takes " +
                                                     std::to_string(count) + " parameters, got " +
                                                     std::to_string(params.size()));
    };
    auto p = [&](std::size_t i) { return static_cast<int>(params[i]); };
    if (family == "regular") {
        need(2);
        return gen_regular(p(0), p(1), seed);
    }
    if (family == "clique") {
        need(1);
        return gen_clique(p(0));
    }
    if (family == "2degenerate") {
        need(1);
        return gen_2degenerate(p(0), seed);
    }
    if (family == "k6mm") {
        need(1);
        return gen_k6_minus_matching(p(0));
    }
    if (family == "bipartite") {
        need(3);
        return gen_bipartite(p(0), p(1), params[2], seed);
    }
    if (family == "petersen") {
        need(0);
        return gen_petersen();
    }
    if (family == "random") {
        need(2);
        return gen_random_multigraph(p(0), p(1), seed);
    }
    throw Error(ErrorCode::BadParameter, "unknown family '" + std::string(family) + "'");
}

}  // namespace favoid
