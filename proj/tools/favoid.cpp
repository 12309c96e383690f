#include <atomic>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "favoid/driver.hpp"
#include "favoid/generators.hpp"
#include "favoid/io.hpp"
#include "favoid/oracle.hpp"

using namespace favoid;
using nlohmann::json;

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

constexpr int exit_ok = 0;
constexpr int exit_unsat = 1;
constexpr int exit_giveup = 2;
constexpr int exit_input = 3;

int status_exit(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Sat: return exit_ok;
    case SolveStatus::Unsat: return exit_unsat;
    case SolveStatus::GiveUp: return exit_giveup;
    }
    return exit_giveup;
}

BipartiteSubSolver sub_solver_named(const std::string& name, int budget)
{
    if (name == "oracle")
        return oracle_sub_solver(budget);
    if (name == "lasso")
        return lasso_sub_solver();
    if (name == "fg")
        return fg_sub_solver();
    throw Error(ErrorCode::BadParameter, "unknown sub-solver '" + name + "'");
}

std::string join(const std::vector<std::string>& parts, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

struct SolveArgs {
    std::string instance;
    std::string decomp;
    std::string sub_solver = "oracle";
    int oracle_budget = default_oracle_budget;
    std::uint64_t seed = 0;
    int restarts = 50;
    bool json = false;
};

int run_solve(const SolveArgs& a)
{
    InstanceFile inst = read_instance(a.instance);
    SolveOptions opts;
    opts.oracle_budget = a.oracle_budget;
    opts.seed = a.seed;
    opts.restarts = a.restarts;
    opts.sub_solver = sub_solver_named(a.sub_solver, a.oracle_budget);
    if (! a.decomp.empty())
        opts.decomposition = parse_decomposition(read_text_file(a.decomp), inst.graph);
    else
        opts.decomposition = inst.decomposition;

    SolveReport r = solve(inst.graph, inst.lists, opts);
    if (a.json) {
        std::cout << report_json(r).dump(2) << '\n';
    }
    else {
        std::cout << "# status " << status_name(r.status) << '\n'
                  << "# guarantee " << guarantee_name(r.guarantee) << '\n'
                  << "# method " << join(r.method_chain, " -> ") << '\n';
        for (const auto& note : r.notes)
            std::cout << "# note " << note << '\n';
        if (r.certificate) {
            const auto& c = *r.certificate;
            std::cout << "# certificate " << (c.kind == BoundKind::Upper ? "upper" : "lower") << " S={";
            for (std::size_t i = 0; i < c.subset.size(); ++i)
                std::cout << (i ? "," : "") << c.subset[i];
            std::cout << "} bound=" << c.bound_sum << " e[S]=" << c.internal_edges << " delta(S)=" << c.boundary_edges
                      << '\n';
        }
        if (r.orientation) {
            InstanceFile out = inst;
            std::vector<Vertex> tails;
            for (EdgeId e = 0; e < inst.graph.edge_count(); ++e)
                tails.push_back(r.orientation->tail(e));
            out.tails = std::move(tails);
            std::cout << emit_instance(out);
        }
    }
    return status_exit(r.status);
}

int run_verify(const std::string& path)
{
    InstanceFile inst = read_instance(path);
    if (! inst.tails) {
        std::cerr << "error: " << path << " has no orientation section\n";
        return exit_input;
    }
    Orientation d = inst.orientation();
    Verification v = verify(d, inst.lists);
    if (v.ok) {
        std::cout << "verified: F-avoiding\n";
        return exit_ok;
    }
    for (auto [vertex, deg] : v.violations)
        std::cout << "violation: vertex " << vertex << " has out-degree " << deg << " in F\n";
    return exit_unsat;
}

int run_oracle(const std::string& path, int budget, int threads, bool first, bool as_json)
{
    InstanceFile inst = read_instance(path);
    OracleOptions o;
    o.budget = budget;
    o.threads = threads;
    o.stop_at_first = first;
    OracleResult r = oracle_decide(inst.graph, inst.lists, o);
    if (as_json) {
        json j{{"schema", "favoid-oracle/1"},
               {"status", r.sat() ? "SAT" : "UNSAT"},
               {"solution_count", r.solution_count},
               {"enumerated_count", r.enumerated_count}};
        if (r.witness)
            j["out_degrees"] = r.witness->out_degrees();
        std::cout << j.dump(2) << '\n';
    }
    else {
        std::cout << (r.sat() ? "SAT" : "UNSAT") << " solutions=" << r.solution_count
                  << " enumerated=" << r.enumerated_count << '\n';
    }
    return r.sat() ? exit_ok : exit_unsat;
}

int run_profile(const std::string& path, bool as_json)
{
    InstanceFile inst = read_instance(path);
    if (as_json)
        std::cout << profile_json(inst.graph, inst.lists).dump(2) << '\n';
    else
        std::cout << profile_text(inst.graph, inst.lists);
    return exit_ok;
}

int run_gen(const std::string& family, const std::vector<double>& params, std::uint64_t seed,
            const std::string& scheme, bool with_decomp)
{
    MultiGraph g = graph_by_family(family, params, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    InstanceFile inst{g, lists_by_scheme(scheme, g, rng), std::nullopt, std::nullopt};
    if (with_decomp) {
        if (family != "k6mm" || params.size() != 1 || static_cast<int>(params[0]) != 3)
            throw Error(ErrorCode::BadParameter, "--with-decomp is only defined for 'k6mm 3'");
        inst.decomposition = k222_decomposition(g);
    }
    std::cout << emit_instance(inst);
    return exit_ok;
}

struct CellSpec {
    std::string family;
    std::vector<double> params;
};

struct Row {
    std::string family;
    std::string scheme;
    int index = 0;
    int n = 0;
    int m = 0;
    std::string status;
    std::string guarantee;
    std::string method;
    bool verified = false;
    SolveStats stats;
    double millis = 0;
    std::string error;
};

int run_experiment(const std::string& config_path, const std::string& format_override, int threads)
{
    json cfg;
    try {
        cfg = json::parse(read_text_file(config_path));
    }
    catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("config: ") + e.what());
    }
    std::uint64_t seed = cfg.value("seed", std::uint64_t{0});
    int per_cell = cfg.value("instances_per_cell", 10);
    int budget = cfg.value("oracle_budget", default_oracle_budget);
    int restarts = cfg.value("restarts", 50);
    std::string format = format_override.empty() ? cfg.value("format", std::string("csv")) : format_override;
    if (format != "csv" && format != "json")
        throw Error(ErrorCode::BadParameter, "format must be csv or json");

    std::vector<CellSpec> families;
    for (const auto& fam : cfg.at("families"))
        families.push_back({fam.at("name").get<std::string>(), fam.value("params", std::vector<double>{})});
    std::vector<std::string> schemes = cfg.at("list_schemes").get<std::vector<std::string>>();

    struct Job {
        std::size_t family;
        std::size_t scheme;
        int index;
    };
    std::vector<Job> jobs;
    for (std::size_t fi = 0; fi < families.size(); ++fi)
        for (std::size_t si = 0; si < schemes.size(); ++si)
            for (int k = 0; k < per_cell; ++k)
                jobs.push_back({fi, si, k});
    std::vector<Row> rows(jobs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) {
            const Job& job = jobs[j];
            Row& row = rows[j];
            row.family = families[job.family].family;
            for (double p : families[job.family].params) {
                std::ostringstream s;
                s << p;
                row.family += ":" + s.str();
            }
            row.scheme = schemes[job.scheme];
            row.index = job.index;
            std::uint64_t inst_seed = seed + 1000003ULL * j;
            try {
                MultiGraph g = graph_by_family(families[job.family].family, families[job.family].params, inst_seed);
                std::mt19937_64 rng(inst_seed ^ 0x9e3779b97f4a7c15ULL);
                ForbiddenLists f = lists_by_scheme(row.scheme, g, rng);
                row.n = g.vertex_count();
                row.m = g.edge_count();
                SolveOptions opts;
                opts.oracle_budget = budget;
                opts.seed = inst_seed;
                opts.restarts = restarts;
                auto t0 = std::chrono::steady_clock::now();
                SolveReport r = solve(g, f, opts);
                row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                row.status = status_name(r.status);
                row.guarantee = guarantee_name(r.guarantee);
                row.method = join(r.method_chain, ">");
                row.stats = r.stats;
                row.verified = r.orientation && verify(*r.orientation, f).ok;
            }
            catch (const std::exception& e) {
                row.status = "ERROR";
                row.error = e.what();
            }
        }
    };
    int workers = std::max(1, threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    std::map<std::pair<std::string, std::string>, std::pair<int, int>> summary;
    for (const Row& r : rows) {
        auto& [ok, total] = summary[{r.family, r.scheme}];
        ++total;
        ok += r.status == "SAT" && r.verified;
    }

    if (format == "csv") {
        std::cout << "family,scheme,index,n,m,status,guarantee,method_chain,verified,moves,restarts,reductions,"
                     "oracle_states,millis\n";
        for (const Row& r : rows)
            std::cout << csv_field(r.family) << ',' << csv_field(r.scheme) << ',' << r.index << ',' << r.n << ','
                      << r.m << ',' << r.status << ',' << r.guarantee << ',' << csv_field(r.method) << ','
                      << (r.verified ? 1 : 0)
                      << ',' << r.stats.moves << ',' << r.stats.restarts << ',' << r.stats.reductions << ','
                      << r.stats.oracle_states << ',' << r.millis << '\n';
        for (const auto& [key, val] : summary)
            std::cerr << key.first << ' ' << key.second << ": " << val.first << '/' << val.second
                      << " solved and verified\n";
    }
    else {
        json out{{"schema", "favoid-experiment/1"}, {"seed", seed}, {"rows", json::array()}, {"summary", json::array()}};
        for (const Row& r : rows) {
            json j{{"family", r.family},     {"scheme", r.scheme},       {"index", r.index},
                   {"n", r.n},               {"m", r.m},                 {"status", r.status},
                   {"guarantee", r.guarantee}, {"method_chain", r.method}, {"verified", r.verified},
                   {"moves", r.stats.moves}, {"restarts", r.stats.restarts}, {"reductions", r.stats.reductions},
                   {"oracle_states", r.stats.oracle_states}, {"millis", r.millis}};
            if (! r.error.empty())
                j["error"] = r.error;
            out["rows"].push_back(j);
        }
        for (const auto& [key, val] : summary)
            out["summary"].push_back(
                {{"family", key.first}, {"scheme", key.second}, {"solved", val.first}, {"total", val.second}});
        std::cout << out.dump(2) << '\n';
    }
    bool any_error = std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.status == "ERROR"; });
    return any_error ? exit_input : exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"F-avoiding orientations of multigraphs"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "Find an F-avoiding orientation or prove none exists");
    solve_cmd->add_option("instance", sa.instance, "Instance file")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--decomp", sa.decomp, "Decomposition file (bipartite + H edge ids)")
        ->check(CLI::ExistingFile);
    solve_cmd->add_option("--oracle-budget", sa.oracle_budget, "Largest edge count for exhaustive search")
        ->check(CLI::Range(0, 62));
    solve_cmd->add_option("--seed", sa.seed, "Seed for randomised restarts");
    solve_cmd->add_option("--restarts", sa.restarts, "Randomised lasso restarts")->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--sub-solver", sa.sub_solver, "Bipartite sub-solver for decompositions")
        ->check(CLI::IsMember({"oracle", "lasso", "fg"}));
    solve_cmd->add_flag("--json", sa.json, "Print a JSON report instead of an annotated instance");

    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check the orientation section of an instance");
    verify_cmd->add_option("instance", verify_path, "Instance file with orientation")
        ->required()
        ->check(CLI::ExistingFile);

    std::string oracle_path;
    int oracle_budget = default_oracle_budget;
    int oracle_threads = 1;
    bool oracle_first = false;
    bool oracle_json = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustively enumerate all 2^m orientations");
    oracle_cmd->add_option("instance", oracle_path, "Instance file")->required()->check(CLI::ExistingFile);
    oracle_cmd->add_option("--budget", oracle_budget, "Largest edge count accepted")->check(CLI::Range(0, 62));
    oracle_cmd->add_option("--threads", oracle_threads, "Worker threads")->check(CLI::PositiveNumber);
    oracle_cmd->add_flag("--first", oracle_first, "Stop at the first witness");
    oracle_cmd->add_flag("--json", oracle_json, "JSON output");

    std::string profile_path;
    bool profile_json_flag = false;
    auto* profile_cmd = app.add_subcommand("profile", "Print hole/home/A/B/X tables and hypothesis checks");
    profile_cmd->add_option("instance", profile_path, "Instance file")->required()->check(CLI::ExistingFile);
    profile_cmd->add_flag("--json", profile_json_flag, "JSON output");

    std::string family;
    std::vector<double> params;
    std::uint64_t gen_seed = 0;
    std::string scheme = "none";
    bool with_decomp = false;
    auto* gen_cmd = app.add_subcommand(
        "gen", "Generate an instance: regular n d | clique n | 2degenerate n | k6mm size | bipartite a b p | "
               "petersen | random n m");
    gen_cmd->add_option("family", family, "Graph family")
        ->required()
        ->check(CLI::IsMember({"regular", "clique", "2degenerate", "k6mm", "bipartite", "petersen", "random"}));
    gen_cmd->add_option("params", params, "Family parameters");
    gen_cmd->add_option("--seed", gen_seed, "Random seed");
    gen_cmd->add_option("--lists", scheme,
                        "List scheme: none | strict_half | end_hole | thm5 | random:K | uniform:a,b,..");
    gen_cmd->add_flag("--with-decomp", with_decomp, "Append the K2,4 + C4 decomposition (k6mm 3 only)");

    std::string config_path;
    std::string format;
    int exp_threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    auto* exp_cmd = app.add_subcommand("experiment", "Sweep families x list schemes and tabulate results");
    exp_cmd->add_option("config", config_path, "JSON configuration")->required()->check(CLI::ExistingFile);
    exp_cmd->add_option("--format", format, "Override output format")->check(CLI::IsMember({"csv", "json"}));
    exp_cmd->add_option("--threads", exp_threads, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*solve_cmd)
            return run_solve(sa);
        if (*verify_cmd)
            return run_verify(verify_path);
        if (*oracle_cmd)
            return run_oracle(oracle_path, oracle_budget, oracle_threads, oracle_first, oracle_json);
        if (*profile_cmd)
            return run_profile(profile_path, profile_json_flag);
        if (*gen_cmd)
            return run_gen(family, params, gen_seed, scheme, with_decomp);
        if (*exp_cmd)
            return run_experiment(config_path, format, exp_threads);
    }
    catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
