#include "favoid/driver.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "favoid/oracle.hpp"
#include "favoid/orient_base.hpp"

namespace favoid {

const char* status_name(SolveStatus s) noexcept
{
    switch (s) {
    case SolveStatus::Sat: return "SAT";
    case SolveStatus::Unsat: return "UNSAT";
    case SolveStatus::GiveUp: return "GIVEUP";
    }
    return "?";
}

const char* guarantee_name(Guarantee g) noexcept
{
    switch (g) {
    case Guarantee::ProvenInPaper: return "PROVEN_IN_PAPER";
    case Guarantee::ExternalMaLu: return "EXTERNAL_MA_LU";
    case Guarantee::Heuristic: return "HEURISTIC";
    case Guarantee::Exhaustive: return "EXHAUSTIVE";
    }
    return "?";
}

namespace {

    void set_sat(SolveReport& r, const Orientation& d, const MultiGraph& g, const ForbiddenLists& f, Guarantee gu)
    {
        Orientation own = rebind(d, g);
        if (! verify(own, f).ok)
            throw Error(ErrorCode::InternalError, "solver produced a non-avoiding orientation");
        r.status = SolveStatus::Sat;
        r.orientation = std::move(own);
        r.guarantee = gu;
    }

    // Hole/home hypothesis, ignoring isolated vertices with empty lists (nothing to avoid there).
    bool thm5_on_nontrivial(const IntervalProfile& p)
    {
        IntervalProfile kept;
        for (const VertexProfile& vp : p.vertices)
            if (vp.degree > 0 || vp.forbidden_count > 0)
                kept.vertices.push_back(vp);
        return check_thm5(kept);
    }

    std::optional<LassoOutcome> lasso_with_restarts(const MultiGraph& g, const ForbiddenLists& f,
                                                    const SolveOptions& options, SolveReport& r)
    {
        LassoOutcome first = lasso_solve(g, f);
        r.stats.moves += static_cast<int>(first.trace.moves.size());
        if (first.success)
            return first;
        for (int i = 0; i < options.restarts; ++i) {
            ++r.stats.restarts;
            LassoOptions lo;
            lo.initial = RandomStart{options.seed + static_cast<std::uint64_t>(i)};
            lo.policy_seed = options.seed + static_cast<std::uint64_t>(i);
            LassoOutcome next = lasso_solve(g, f, lo);
            r.stats.moves += static_cast<int>(next.trace.moves.size());
            if (next.success)
                return next;
        }
        return std::nullopt;
    }

    bool run_oracle(const MultiGraph& g, const ForbiddenLists& f, const SolveOptions& options, SolveReport& r)
    {
        if (g.edge_count() > options.oracle_budget)
            return false;
        OracleOptions oo;
        oo.budget = options.oracle_budget;
        oo.stop_at_first = true;
        OracleResult o = oracle_decide(g, f, oo);
        r.stats.oracle_states += o.enumerated_count;
        r.method_chain.emplace_back("oracle");
        if (o.sat())
            set_sat(r, *o.witness, g, f, Guarantee::Exhaustive);
        else {
            r.status = SolveStatus::Unsat;
            r.guarantee = Guarantee::Exhaustive;
        }
        return true;
    }

    bool is_consecutive_pair(std::span<const int> fs) { return fs.size() == 2 && fs[1] == fs[0] + 1; }

}  // namespace

SolveReport regular_solve(const MultiGraph& g, std::span<const int> forbidden, const SolveOptions& options)
{
    const int n = g.vertex_count();
    const int d = n > 0 ? g.degree(0) : 0;
    if (! g.is_regular(d))
        throw Error(ErrorCode::NotRegular, "graph is not regular");
    if (d < 5)
        throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(d) + " < 5");
    std::vector<int> fs(forbidden.begin(), forbidden.end());
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    if (fs.size() > 2)
        throw Error(ErrorCode::BadParameter, "regular case needs |F| <= 2");
    const ForbiddenLists f = ForbiddenLists::uniform(n, fs);
    f.validate(g);

    SolveReport r;
    const int lo_mid = d / 2;
    const int hi_mid = (d + 1) / 2;
    const bool hits_middle = std::any_of(fs.begin(), fs.end(), [&](int x) { return x == lo_mid || x == hi_mid; });

    if (! hits_middle) {
        r.method_chain.emplace_back("regular:balanced");
        set_sat(r, balanced_orientation(g).orientation, g, f, Guarantee::ProvenInPaper);
        return r;
    }

    auto proven_lasso = [&](const char* tag) {
        r.method_chain.emplace_back(tag);
        LassoOutcome out = lasso_solve(g, f);
        r.stats.moves += static_cast<int>(out.trace.moves.size());
        if (! out.success)
            throw Error(ErrorCode::InternalError, "lasso search stuck on a qualifying instance");
        r.trace = std::move(out.trace);
        set_sat(r, out.orientation, g, f, Guarantee::ProvenInPaper);
    };

    if (is_consecutive_pair(fs)) {
        const int x = fs[0];
        if (x == lo_mid) {
            proven_lasso("regular:lasso");
        }
        else if (x == lo_mid - 1) {
            if (d >= 6) {
                proven_lasso("regular:lasso");
            }
            else {
                r.method_chain.emplace_back("regular:extreme");
                set_sat(r, extreme_avoiding(g, 2), g, f, Guarantee::ProvenInPaper);
            }
        }
        else {
            // x == ceil(d/2), d odd.
            if (d >= 7) {
                proven_lasso("regular:lasso");
            }
            else {
                r.method_chain.emplace_back("regular:extreme+reverse_all");
                set_sat(r, reverse_all(extreme_avoiding(g, 2)), g, f, Guarantee::ProvenInPaper);
            }
        }
        return r;
    }

    if (check_thm5(interval_profile(f, g))) {
        proven_lasso("regular:lasso");
        return r;
    }

    // Non-consecutive pair hitting the middle: existence is known but non-constructive.
    r.method_chain.emplace_back("regular:lasso_restarts");
    if (auto out = lasso_with_restarts(g, f, options, r)) {
        r.trace = std::move(out->trace);
        set_sat(r, out->orientation, g, f, Guarantee::ExternalMaLu);
        return r;
    }
    if (run_oracle(g, f, options, r)) {
        if (r.status == SolveStatus::Unsat)
            throw Error(ErrorCode::InternalError, "oracle refuted a d-regular instance with |F| <= 2, d >= 5");
        r.guarantee = Guarantee::ExternalMaLu;
        return r;
    }
    r.status = SolveStatus::GiveUp;
    r.guarantee = Guarantee::ExternalMaLu;
    return r;
}

SolveReport solve(const MultiGraph& g, const ForbiddenLists& f, const SolveOptions& options)
{
    SolveReport r;
    f.validate(g);
    const int n = g.vertex_count();

    // (0) trivial outcomes.
    if (f.all_empty()) {
        r.method_chain.emplace_back("trivial");
        set_sat(r, balanced_orientation(g).orientation, g, f, Guarantee::ProvenInPaper);
        return r;
    }
    for (Vertex v = 0; v < n; ++v)
        if (f.size(v) == g.degree(v) + 1) {
            r.method_chain.emplace_back("full-list");
            r.notes.push_back("every out-degree of vertex " + std::to_string(v) + " is forbidden");
            r.status = SolveStatus::Unsat;
            r.guarantee = Guarantee::Exhaustive;
            return r;
        }

    const IntervalProfile profile = interval_profile(f, g);
    if (check_thm7(profile)) {
        r.method_chain.emplace_back("thm7");
        set_sat(r, thm7_solve(g, f), g, f, Guarantee::ProvenInPaper);
        return r;
    }

    if (n > 0 && g.degree(0) >= 5 && g.is_regular(g.degree(0))) {
        bool common = true;
        for (Vertex v = 1; v < n && common; ++v)
            common = f.at(v) == f.at(0);
        if (common && f.size(0) <= 2) {
            SolveReport rr = regular_solve(g, f.at(0), options);
            if (rr.status != SolveStatus::GiveUp)
                return rr;
            r.method_chain = rr.method_chain;
            r.stats = rr.stats;
        }
    }

    // (1) edge reductions while the strict bound holds.
    std::deque<Instance> levels{Instance{g, f}};
    std::vector<ReductionStep> steps;
    if (check_strict_half_or_isolated_empty(f, g)) {
        while (auto red = edge_ab_reduce(levels.back().graph, levels.back().lists)) {
            steps.push_back(std::move(red->second));
            levels.push_back(std::move(red->first));
        }
    }
    r.stats.reductions = static_cast<int>(steps.size());
    if (! steps.empty())
        r.method_chain.push_back("edge_ab x" + std::to_string(steps.size()));

    auto lift_all = [&](Orientation d) {
        for (std::size_t i = steps.size(); i-- > 0;)
            d = lift(steps[i], levels[i].graph, d);
        return d;
    };

    // (2) certified routes on the reduced instance.
    const Instance& red = levels.back();
    const IntervalProfile red_profile = interval_profile(red.lists, red.graph);
    const bool bounded = check_strict_half_or_isolated_empty(red.lists, red.graph);
    if (red.lists.all_empty()) {
        r.method_chain.emplace_back("trivial");
        set_sat(r, lift_all(balanced_orientation(red.graph).orientation), g, f, Guarantee::ProvenInPaper);
        return r;
    }
    if (check_thm7(red_profile)) {
        r.method_chain.emplace_back("thm7");
        set_sat(r, lift_all(thm7_solve(red.graph, red.lists)), g, f, Guarantee::ProvenInPaper);
        return r;
    }
    if (bounded && two_degenerate_order(red.graph)) {
        r.method_chain.emplace_back("two_degenerate");
        TwoDegenerateResult td = two_degenerate_solve_detailed(red.graph, red.lists);
        set_sat(r, lift_all(td.orientation), g, f, Guarantee::ProvenInPaper);
        return r;
    }
    if (thm5_on_nontrivial(red_profile)) {
        r.method_chain.emplace_back("lasso");
        LassoOutcome out = lasso_solve(red.graph, red.lists);
        r.stats.moves += static_cast<int>(out.trace.moves.size());
        if (! out.success)
            throw Error(ErrorCode::InternalError, "lasso search stuck on a qualifying instance");
        r.trace = std::move(out.trace);
        set_sat(r, lift_all(out.orientation), g, f, Guarantee::ProvenInPaper);
        return r;
    }

    if (options.decomposition) {
        try {
            auto sub = options.sub_solver ? options.sub_solver : oracle_sub_solver(options.oracle_budget);
            Orientation d = bipartite_plus_h_solve(g, f, *options.decomposition, sub);
            if (! steps.empty()) {
                // Runs on the original graph, so the reductions above are not part of the answer.
                std::erase(r.method_chain, "edge_ab x" + std::to_string(steps.size()));
                r.notes.emplace_back("edge_ab reductions discarded: the decomposition refers to the original graph");
            }
            r.method_chain.emplace_back("bipartite_plus_h");
            set_sat(r, d, g, f, Guarantee::ProvenInPaper);
            return r;
        }
        catch (const Error& e) {
            if (e.code() == ErrorCode::InternalError)
                throw;
            r.notes.emplace_back(std::string("decomposition route skipped: ") + e.what());
        }
    }

    // (3) exact flow decision when every vertex has a single home.
    if (single_home_everywhere(profile)) {
        r.method_chain.emplace_back("fg_flow");
        const DegreeBounds bounds = bounds_from_single_home(profile);
        FgResult fr = fg_orient(g, bounds);
        if (auto* d = std::get_if<Orientation>(&fr)) {
            set_sat(r, *d, g, f, Guarantee::ProvenInPaper);
        }
        else {
            auto& cert = std::get<ViolationCertificate>(fr);
            if (! certificate_holds(g, bounds, cert))
                throw Error(ErrorCode::InternalError, "invalid flow certificate");
            r.status = SolveStatus::Unsat;
            r.guarantee = Guarantee::ProvenInPaper;
            r.certificate = std::move(cert);
        }
        return r;
    }

    // (4) heuristic, then exhaustive search on the original instance.
    r.method_chain.emplace_back("lasso_restarts");
    if (auto out = lasso_with_restarts(g, f, options, r)) {
        r.trace = std::move(out->trace);
        set_sat(r, out->orientation, g, f, Guarantee::Heuristic);
        return r;
    }
    if (run_oracle(g, f, options, r))
        return r;
    r.status = SolveStatus::GiveUp;
    r.guarantee = Guarantee::Heuristic;
    return r;
}

}  // namespace favoid
