#include "favoid/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>
#include <thread>

namespace favoid {

namespace {

    struct Table {
        std::vector<std::size_t> offset;
        std::vector<std::uint8_t> bad;

        Table(const MultiGraph& g, const ForbiddenLists& f)
        {
            offset.resize(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                offset[static_cast<std::size_t>(v) + 1] = offset[static_cast<std::size_t>(v)] +
                                                          static_cast<std::size_t>(g.degree(v)) + 1;
            bad.assign(offset.back(), 0);
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                for (int x : f.at(v))
                    bad[offset[static_cast<std::size_t>(v)] + static_cast<std::size_t>(x)] = 1;
        }

        bool is_bad(Vertex v, int out) const
        {
            return bad[offset[static_cast<std::size_t>(v)] + static_cast<std::size_t>(out)] != 0;
        }
    };

    struct Chunk {
        std::uint64_t solutions = 0;
        std::uint64_t enumerated = 0;
        // Bit e set: edge e reversed (tail = second endpoint).
        std::optional<std::uint64_t> witness_bits;
    };

    // Enumerates every direction of the low `low_bits` edges with the high edges fixed by `high`.
    Chunk run_chunk(const MultiGraph& g, const Table& table, int low_bits, std::uint64_t high, bool stop_at_first,
                    const std::atomic<bool>* found_elsewhere)
    {
        const int m = g.edge_count();
        std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
        std::uint64_t bits = high << low_bits;
        for (EdgeId e = 0; e < m; ++e) {
            const Edge& ed = g.edge(e);
            ++out[static_cast<std::size_t>((bits >> e) & 1U ? ed.v : ed.u)];
        }
        int bad = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            bad += table.is_bad(v, out[static_cast<std::size_t>(v)]) ? 1 : 0;

        Chunk c;
        const std::uint64_t steps = std::uint64_t{1} << low_bits;
        for (std::uint64_t i = 0;; ++i) {
            ++c.enumerated;
            if (bad == 0) {
                ++c.solutions;
                if (! c.witness_bits)
                    c.witness_bits = bits;
                if (stop_at_first)
                    break;
            }
            if (i + 1 == steps)
                break;
            if (stop_at_first && found_elsewhere && (i & 0xFFFF) == 0 && found_elsewhere->load())
                break;

            // Gray-code step: flip the edge at the lowest set bit of i + 1.
            auto e = static_cast<EdgeId>(std::countr_zero(i + 1));
            const Edge& ed = g.edge(e);
            bool reversed = (bits >> e) & 1U;
            Vertex from = reversed ? ed.v : ed.u;
            Vertex to = reversed ? ed.u : ed.v;
            auto& of = out[static_cast<std::size_t>(from)];
            auto& ot = out[static_cast<std::size_t>(to)];
            bad -= (table.is_bad(from, of) ? 1 : 0) + (table.is_bad(to, ot) ? 1 : 0);
            --of;
            ++ot;
            bad += (table.is_bad(from, of) ? 1 : 0) + (table.is_bad(to, ot) ? 1 : 0);
            bits ^= std::uint64_t{1} << e;
        }
        return c;
    }

}  // namespace

OracleResult oracle_decide(const MultiGraph& g, const ForbiddenLists& f, const OracleOptions& options)
{
    f.validate(g);
    const int m = g.edge_count();
    if (m > options.budget)
        throw Error(ErrorCode::BudgetExceeded,
                    std::to_string(m) + " edges exceeds oracle budget " + std::to_string(options.budget));
    if (m > 62)
        throw Error(ErrorCode::BudgetExceeded, "oracle supports at most 62 edges");

    const Table table(g, f);
    int high_bits = 0;
    if (options.threads > 1)
        high_bits = std::min(m, static_cast<int>(std::bit_width(static_cast<unsigned>(options.threads - 1))) + 2);
    const int low_bits = m - high_bits;
    const std::uint64_t chunks = std::uint64_t{1} << high_bits;

    std::vector<Chunk> results(static_cast<std::size_t>(chunks));
    std::atomic<bool> found{false};
    if (chunks == 1) {
        results[0] = run_chunk(g, table, low_bits, 0, options.stop_at_first, nullptr);
    }
    else {
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
            for (std::uint64_t h = next++; h < chunks; h = next++) {
                if (options.stop_at_first && found.load())
                    break;
                results[static_cast<std::size_t>(h)] =
                    run_chunk(g, table, low_bits, h, options.stop_at_first, &found);
                if (results[static_cast<std::size_t>(h)].witness_bits)
                    found = true;
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < options.threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    OracleResult r;
    for (const Chunk& c : results) {
        r.enumerated_count += c.enumerated;
        r.solution_count += c.solutions;
        if (c.witness_bits && ! r.witness) {
            Orientation d(g);
            for (EdgeId e = 0; e < m; ++e)
                if ((*c.witness_bits >> e) & 1U)
                    d.flip(e);
            r.witness = std::move(d);
        }
    }
    if (options.stop_at_first && r.solution_count > 1)
        r.solution_count = 1;
    r.status = r.solution_count > 0 ? OracleStatus::Sat : OracleStatus::Unsat;
    return r;
}

Verification verify(const Orientation& d, const ForbiddenLists& f)
{
    Verification out;
    const MultiGraph& g = d.graph();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int k = d.out_degree(v);
        if (f.contains(v, k))
            out.violations.emplace_back(v, k);
    }
    out.ok = out.violations.empty();
    return out;
}

}  // namespace favoid
