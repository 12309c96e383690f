#pragma once

// Dinic max-flow on small integer networks. Internal to the library.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

namespace favoid::detail {

class MaxFlow {
public:
    struct ArcRef {
        int node;
        std::size_t index;
    };

    explicit MaxFlow(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

    ArcRef add_arc(int from, int to, std::int64_t cap)
    {
        auto& a = adj_[static_cast<std::size_t>(from)];
        auto& b = adj_[static_cast<std::size_t>(to)];
        a.push_back({to, b.size(), cap, cap});
        b.push_back({from, a.size() - 1, 0, 0});
        return {from, a.size() - 1};
    }

    std::int64_t flow_on(ArcRef r) const
    {
        const Arc& a = adj_[static_cast<std::size_t>(r.node)][r.index];
        return a.original - a.cap;
    }

    std::int64_t run(int s, int t)
    {
        std::int64_t total = 0;
        while (build_levels(s, t)) {
            next_.assign(adj_.size(), 0);
            while (std::int64_t pushed = augment(s, t, std::numeric_limits<std::int64_t>::max()))
                total += pushed;
        }
        return total;
    }

    /// Nodes reachable from s in the residual network.
    std::vector<char> residual_reach(int s) const
    {
        std::vector<char> seen(adj_.size(), 0);
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (! stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const Arc& a : adj_[static_cast<std::size_t>(x)])
                if (a.cap > 0 && ! seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = 1;
                    stack.push_back(a.to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        std::size_t rev;
        std::int64_t cap;
        std::int64_t original;
    };

    bool build_levels(int s, int t)
    {
        level_.assign(adj_.size(), -1);
        level_[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (! queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (const Arc& a : adj_[static_cast<std::size_t>(x)])
                if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
                    level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(x)] + 1;
                    queue.push_back(a.to);
                }
        }
        return level_[static_cast<std::size_t>(t)] >= 0;
    }

    std::int64_t augment(int x, int t, std::int64_t limit)
    {
        if (x == t)
            return limit;
        auto& arcs = adj_[static_cast<std::size_t>(x)];
        for (auto& i = next_[static_cast<std::size_t>(x)]; i < arcs.size(); ++i) {
            Arc& a = arcs[i];
            if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(x)] + 1)
                continue;
            if (std::int64_t got = augment(a.to, t, std::min(limit, a.cap))) {
                a.cap -= got;
                adj_[static_cast<std::size_t>(a.to)][a.rev].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

}  // namespace favoid::detail
