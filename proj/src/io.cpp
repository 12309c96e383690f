#include "favoid/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "favoid/fg_flow.hpp"

namespace favoid {

namespace {

    struct Token {
        std::string_view text;
        int column;
    };

    struct Line {
        int number;
        std::vector<Token> tokens;
    };

    [[noreturn]] void fail(int line, int column, const std::string& what)
    {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
    }

    std::vector<Line> tokenize(std::string_view text)
    {
        std::vector<Line> lines;
        int number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            std::string_view raw = text.substr(pos, end - pos);
            ++number;
            if (auto hash = raw.find('#'); hash != std::string_view::npos)
                raw = raw.substr(0, hash);
            Line line{number, {}};
            std::size_t i = 0;
            while (i < raw.size()) {
                if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                    ++i;
                    continue;
                }
                std::size_t j = i;
                while (j < raw.size() && ! std::isspace(static_cast<unsigned char>(raw[j])))
                    ++j;
                line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
                i = j;
            }
            if (! line.tokens.empty())
                lines.push_back(std::move(line));
            if (end == text.size())
                break;
            pos = end + 1;
        }
        return lines;
    }

    int to_int(const Line& line, const Token& t, const char* what)
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
            fail(line.number, t.column, std::string("expected integer ") + what + ", got '" + std::string(t.text) + "'");
        return value;
    }

    void expect_count(const Line& line, std::size_t count, const char* what)
    {
        if (line.tokens.size() != count) {
            int column = line.tokens.size() > count ? line.tokens[count].column : line.tokens.back().column;
            fail(line.number, column,
                 std::string(what) + ": expected " + std::to_string(count) + " fields, got " +
                     std::to_string(line.tokens.size()));
        }
    }

    bool is_keyword(const Line& line)
    {
        if (line.tokens.size() != 1)
            return false;
        auto t = line.tokens[0].text;
        return t == "lists" || t == "decomposition" || t == "orientation";
    }

    std::vector<EdgeId> edge_id_line(const Line& line, int m)
    {
        std::vector<EdgeId> ids;
        if (line.tokens.size() == 1 && line.tokens[0].text == "-")
            return ids;
        for (const Token& t : line.tokens) {
            int e = to_int(line, t, "edge id");
            if (e < 0 || e >= m)
                fail(line.number, t.column, "edge id " + std::to_string(e) + " out of range [0, " +
                                                std::to_string(m) + ")");
            ids.push_back(e);
        }
        return ids;
    }

    Decomposition decomposition_lines(const std::vector<Line>& lines, std::size_t& i, const MultiGraph& g,
                                      int header_line)
    {
        Decomposition d;
        for (auto* part : {&d.bipartite_edges, &d.h_edges}) {
            if (i >= lines.size() || is_keyword(lines[i]))
                fail(i < lines.size() ? lines[i].number : header_line, 1, "decomposition needs two edge-id lines");
            *part = edge_id_line(lines[i], g.edge_count());
            ++i;
        }
        validate_decomposition(d, g);
        return d;
    }

    void append_ids(std::ostringstream& out, const std::vector<EdgeId>& ids)
    {
        if (ids.empty()) {
            out << "-\n";
            return;
        }
        for (std::size_t i = 0; i < ids.size(); ++i)
            out << (i ? " " : "") << ids[i];
        out << '\n';
    }

}  // namespace

Orientation InstanceFile::orientation() const
{
    if (! tails)
        throw Error(ErrorCode::PreconditionViolated, "instance has no orientation section");
    return Orientation::from_tails(graph, *tails);
}

void validate_decomposition(const Decomposition& d, const MultiGraph& g)
{
    std::vector<int> seen(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto* part : {&d.bipartite_edges, &d.h_edges})
        for (EdgeId e : *part) {
            if (e < 0 || e >= g.edge_count())
                throw Error(ErrorCode::BadDecomposition, "edge id " + std::to_string(e) + " out of range");
            if (seen[static_cast<std::size_t>(e)]++)
                throw Error(ErrorCode::BadDecomposition, "edge " + std::to_string(e) + " listed twice");
        }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (! seen[static_cast<std::size_t>(e)])
            throw Error(ErrorCode::BadDecomposition, "edge " + std::to_string(e) + " missing from decomposition");
}

InstanceFile parse_instance(std::string_view text)
{
    auto lines = tokenize(text);
    if (lines.empty())
        fail(1, 1, "empty instance");
    expect_count(lines[0], 2, "header");
    int n = to_int(lines[0], lines[0].tokens[0], "vertex count");
    int m = to_int(lines[0], lines[0].tokens[1], "edge count");
    if (n < 0)
        fail(lines[0].number, lines[0].tokens[0].column, "negative vertex count");
    if (m < 0)
        fail(lines[0].number, lines[0].tokens[1].column, "negative edge count");

    std::vector<Edge> edges;
    std::size_t i = 1;
    for (int e = 0; e < m; ++e, ++i) {
        if (i >= lines.size() || is_keyword(lines[i]))
            fail(i < lines.size() ? lines[i].number : lines.back().number + 1, 1,
                 "expected " + std::to_string(m) + " edge lines, got " + std::to_string(e));
        const Line& l = lines[i];
        expect_count(l, 2, "edge");
        Vertex u = to_int(l, l.tokens[0], "endpoint");
        Vertex v = to_int(l, l.tokens[1], "endpoint");
        for (int k = 0; k < 2; ++k) {
            Vertex x = k ? v : u;
            if (x < 0 || x >= n)
                fail(l.number, l.tokens[static_cast<std::size_t>(k)].column,
                     "vertex " + std::to_string(x) + " out of range [0, " + std::to_string(n) + ")");
        }
        if (u == v)
            fail(l.number, l.tokens[0].column, "loop at vertex " + std::to_string(u));
        edges.push_back({u, v});
    }

    InstanceFile inst{MultiGraph(n, edges), ForbiddenLists(n), std::nullopt, std::nullopt};
    std::vector<char> list_seen(static_cast<std::size_t>(n), 0);
    bool seen_lists_kw = false;
    // List lines are accepted before the first other section, or after an explicit "lists".
    bool in_lists = true;
    const char* last_section = "";

    while (i < lines.size()) {
        const Line& l = lines[i];
        if (is_keyword(l)) {
            auto kw = l.tokens[0].text;
            ++i;
            if (kw == "lists") {
                if (seen_lists_kw)
                    fail(l.number, 1, "duplicate lists section");
                seen_lists_kw = true;
                in_lists = true;
            }
            else if (kw == "decomposition") {
                if (inst.decomposition)
                    fail(l.number, 1, "duplicate decomposition section");
                inst.decomposition = decomposition_lines(lines, i, inst.graph, l.number);
                in_lists = false;
                last_section = "decomposition";
            }
            else {
                if (inst.tails)
                    fail(l.number, 1, "duplicate orientation section");
                std::vector<Vertex> tails;
                for (int e = 0; e < m; ++e, ++i) {
                    if (i >= lines.size() || is_keyword(lines[i]))
                        fail(i < lines.size() ? lines[i].number : l.number, 1,
                             "orientation has " + std::to_string(e) + " lines, expected " + std::to_string(m));
                    const Line& o = lines[i];
                    expect_count(o, 2, "orientation");
                    Vertex t = to_int(o, o.tokens[0], "tail");
                    Vertex h = to_int(o, o.tokens[1], "head");
                    const Edge& ed = inst.graph.edge(e);
                    bool matches = (t == ed.u && h == ed.v) || (t == ed.v && h == ed.u);
                    if (! matches)
                        fail(o.number, o.tokens[0].column,
                             "orientation " + std::to_string(t) + " " + std::to_string(h) +
                                 " does not match edge " + std::to_string(e) + " = {" + std::to_string(ed.u) +
                                 "," + std::to_string(ed.v) + "}");
                    tails.push_back(t);
                }
                inst.tails = std::move(tails);
                in_lists = false;
                last_section = "orientation";
            }
            continue;
        }

        if (! in_lists)
            fail(l.number, l.tokens[0].column, std::string("unexpected line after ") + last_section + " section");
        if (l.tokens.size() < 2)
            fail(l.number, l.tokens[0].column, "list line needs 'v k f1 .. fk'");
        Vertex v = to_int(l, l.tokens[0], "vertex");
        int k = to_int(l, l.tokens[1], "list size");
        if (v < 0 || v >= n)
            fail(l.number, l.tokens[0].column, "vertex " + std::to_string(v) + " out of range");
        if (k < 0)
            fail(l.number, l.tokens[1].column, "negative list size");
        expect_count(l, static_cast<std::size_t>(k) + 2, "list");
        if (list_seen[static_cast<std::size_t>(v)]++)
            fail(l.number, l.tokens[0].column, "second list for vertex " + std::to_string(v));
        std::vector<int> values;
        for (int j = 0; j < k; ++j) {
            const Token& t = l.tokens[static_cast<std::size_t>(j) + 2];
            int x = to_int(l, t, "forbidden value");
            if (x < 0 || x > inst.graph.degree(v))
                throw Error(ErrorCode::OutOfRangeForbidden,
                            "line " + std::to_string(l.number) + ", column " + std::to_string(t.column) +
                                ": value " + std::to_string(x) + " outside {0.." +
                                std::to_string(inst.graph.degree(v)) + "} at vertex " + std::to_string(v));
            values.push_back(x);
        }
        inst.lists.set(v, std::move(values));
        ++i;
    }
    return inst;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

InstanceFile read_instance(const std::string& path) { return parse_instance(read_text_file(path)); }

std::string emit_instance(const InstanceFile& inst)
{
    const MultiGraph& g = inst.graph;
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& f = inst.lists.at(v);
        if (f.empty())
            continue;
        out << v << ' ' << f.size();
        for (int x : f)
            out << ' ' << x;
        out << '\n';
    }
    if (inst.decomposition)
        out << emit_decomposition(*inst.decomposition);
    if (inst.tails) {
        out << "orientation\n";
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            Vertex t = (*inst.tails)[static_cast<std::size_t>(e)];
            out << t << ' ' << g.other_end(e, t) << '\n';
        }
    }
    return out.str();
}

Decomposition parse_decomposition(std::string_view text, const MultiGraph& g)
{
    auto lines = tokenize(text);
    std::size_t i = 0;
    int header = 1;
    if (! lines.empty() && lines[0].tokens.size() == 1 && lines[0].tokens[0].text == "decomposition") {
        header = lines[0].number;
        i = 1;
    }
    Decomposition d = decomposition_lines(lines, i, g, header);
    if (i < lines.size())
        fail(lines[i].number, 1, "trailing content after decomposition");
    return d;
}

std::string emit_decomposition(const Decomposition& d)
{
    std::ostringstream out;
    out << "decomposition\n";
    append_ids(out, d.bipartite_edges);
    append_ids(out, d.h_edges);
    return out.str();
}

nlohmann::json certificate_json(const ViolationCertificate& cert)
{
    return {
        {"subset", cert.subset},
        {"kind", cert.kind == BoundKind::Upper ? "upper" : "lower"},
        {"bound_sum", cert.bound_sum},
        {"internal_edges", cert.internal_edges},
        {"boundary_edges", cert.boundary_edges},
    };
}

nlohmann::json report_json(const SolveReport& report)
{
    nlohmann::json j;
    j["schema"] = report_schema;
    j["status"] = status_name(report.status);
    j["guarantee"] = guarantee_name(report.guarantee);
    j["method_chain"] = report.method_chain;
    if (report.orientation) {
        const Orientation& d = *report.orientation;
        nlohmann::json arcs = nlohmann::json::array();
        for (EdgeId e = 0; e < d.graph().edge_count(); ++e)
            arcs.push_back({d.tail(e), d.head(e)});
        j["orientation"] = arcs;
        j["out_degrees"] = d.out_degrees();
    }
    else {
        j["orientation"] = nullptr;
    }
    j["certificate"] = report.certificate ? certificate_json(*report.certificate) : nlohmann::json(nullptr);
    j["stats"] = {
        {"moves", report.stats.moves},
        {"restarts", report.stats.restarts},
        {"reductions", report.stats.reductions},
        {"oracle_states", report.stats.oracle_states},
    };
    j["notes"] = report.notes;
    return j;
}

nlohmann::json profile_json(const MultiGraph& g, const ForbiddenLists& f)
{
    auto p = interval_profile(f, g);
    nlohmann::json rows = nlohmann::json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const VertexProfile& vp = p[v];
        nlohmann::json holes = nlohmann::json::array(), homes = nlohmann::json::array();
        for (const Interval& iv : vp.intervals)
            (iv.hole ? holes : homes).push_back({iv.lo, iv.hi});
        rows.push_back({
            {"vertex", v},
            {"degree", vp.degree},
            {"forbidden", f.at(v)},
            {"holes", holes},
            {"homes", homes},
            {"A", vp.a},
            {"B", vp.b},
            {"X", vp.x},
        });
    }
    return {
        {"schema", "favoid-profile/1"},
        {"vertices", rows},
        {"checks",
         {
             {"strict_half", check_strict_half(f, g)},
             {"weak_half", check_weak_half(f, g)},
             {"thm5", check_thm5(p)},
             {"thm7", check_thm7(p)},
             {"single_home", single_home_everywhere(p)},
         }},
    };
}

std::string profile_text(const MultiGraph& g, const ForbiddenLists& f)
{
    auto j = profile_json(g, f);
    auto set = [](const nlohmann::json& a) {
        std::string s = "{";
        for (std::size_t i = 0; i < a.size(); ++i)
            s += (i ? "," : "") + a[i].dump();
        return s + "}";
    };
    auto ranges = [](const nlohmann::json& a) {
        std::string s;
        for (const auto& r : a) {
            int lo = r[0], hi = r[1];
            s += (s.empty() ? "" : " ") + (lo == hi ? "[" + std::to_string(lo) + "]"
                                                    : "[" + std::to_string(lo) + ".." + std::to_string(hi) + "]");
        }
        return s.empty() ? std::string("-") : s;
    };
    std::ostringstream out;
    out << "vertex degree F holes homes A B X\n";
    for (const auto& r : j["vertices"])
        out << r["vertex"].get<int>() << ' ' << r["degree"].get<int>() << ' ' << set(r["forbidden"]) << ' '
            << ranges(r["holes"]) << ' ' << ranges(r["homes"]) << ' ' << set(r["A"]) << ' ' << set(r["B"]) << ' '
            << set(r["X"]) << '\n';
    for (const auto& [name, value] : j["checks"].items())
        out << name << ": " << (value.get<bool>() ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace favoid
