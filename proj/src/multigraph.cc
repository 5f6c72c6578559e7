#include <sgon/errors.hh>
#include <sgon/multigraph.hh>

#include "text_util.hh"

#include <algorithm>
#include <deque>
#include <sstream>

using std::optional;
using std::set;
using std::string;
using std::string_view;
using std::vector;

namespace sgon {

Multigraph::Multigraph(int vertex_count) :
    _incident(static_cast<std::size_t>(std::max(vertex_count, 0)))
{
    if (vertex_count < 0)
        throw InvalidInput("negative vertex count");
}

Multigraph::Multigraph(int vertex_count, vector<Edge> edges) :
    Multigraph(vertex_count)
{
    _edges.reserve(edges.size());
    for (auto & e : edges)
        add_edge(e.u, e.v);
}

auto Multigraph::add_vertex() -> VertexId
{
    _incident.emplace_back();
    return vertex_count() - 1;
}

auto Multigraph::add_edge(VertexId u, VertexId v) -> EdgeId
{
    if (! is_valid_vertex(u) || ! is_valid_vertex(v))
        throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    EdgeId id = edge_count();
    _edges.push_back(Edge{u, v});
    _incident[static_cast<std::size_t>(u)].push_back(id);
    if (u != v)
        _incident[static_cast<std::size_t>(v)].push_back(id);
    return id;
}

auto Multigraph::incident(VertexId v) const -> std::span<const EdgeId>
{
    if (! is_valid_vertex(v))
        throw InvalidInput("invalid vertex id " + std::to_string(v));
    return _incident[static_cast<std::size_t>(v)];
}

auto Subgraph::local(VertexId original) const -> optional<VertexId>
{
    auto it = std::find(to_original.begin(), to_original.end(), original);
    if (it == to_original.end())
        return std::nullopt;
    return static_cast<VertexId>(it - to_original.begin());
}

auto parse_mgf(string_view text) -> Multigraph
{
    auto lines = detail::content_lines(text);
    if (lines.empty())
        throw ParseError(0, "missing 'mgf <n>' header");

    auto & header = lines.front();
    if (header.tokens.front() != "mgf")
        throw ParseError(header.number, "expected 'mgf <n>' header");
    detail::expect_arity(header, 2);
    int n = detail::parse_count(header.tokens[1], header.number);

    Multigraph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto & line = lines[i];
        if (line.tokens.front() != "e")
            throw ParseError(line.number, "unknown directive '" + string(line.tokens.front()) + "'");
        detail::expect_arity(line, 3);
        auto u = detail::parse_int(line.tokens[1], line.number);
        auto v = detail::parse_int(line.tokens[2], line.number);
        for (auto x : {u, v})
            if (x < 0 || x >= n)
                throw ParseError(line.number, "vertex id " + std::to_string(x) + " out of range");
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return g;
}

auto write_mgf(const Multigraph & g) -> string
{
    std::ostringstream out;
    out << "mgf " << g.vertex_count() << '\n';
    for (auto & e : g.edges())
        out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

namespace {
    // Vertices reachable from `start` without passing through `blocked` (-1 for none).
    auto reachable(const Multigraph & g, VertexId start, VertexId blocked) -> vector<bool>
    {
        vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
        std::deque<VertexId> queue{start};
        seen[static_cast<std::size_t>(start)] = true;
        while (! queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            for (auto e : g.incident(x)) {
                auto y = g.edge(e).other(x);
                if (y == blocked || seen[static_cast<std::size_t>(y)])
                    continue;
                seen[static_cast<std::size_t>(y)] = true;
                queue.push_back(y);
            }
        }
        return seen;
    }

    auto induced(const Multigraph & g, const vector<bool> & keep) -> Subgraph
    {
        Subgraph result;
        vector<VertexId> local(static_cast<std::size_t>(g.vertex_count()), -1);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (keep[static_cast<std::size_t>(v)]) {
                local[static_cast<std::size_t>(v)] = result.graph.add_vertex();
                result.to_original.push_back(v);
            }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            if (keep[static_cast<std::size_t>(u)] && keep[static_cast<std::size_t>(v)]) {
                result.graph.add_edge(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
                result.to_original_edge.push_back(e);
            }
        }
        return result;
    }
}

auto is_connected(const Multigraph & g) -> bool
{
    if (g.vertex_count() == 0)
        return true;
    auto seen = reachable(g, 0, -1);
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

auto betti(const Multigraph & g) -> int
{
    return g.edge_count() - g.vertex_count() + 1;
}

auto vertex_degree(const Multigraph & g, VertexId v) -> int
{
    int degree = 0;
    for (auto e : g.incident(v))
        degree += g.edge(e).is_loop() ? 2 : 1;
    return degree;
}

auto side_subgraph(const Multigraph & g, VertexId v, VertexId u) -> Subgraph
{
    if (! g.is_valid_vertex(v) || ! g.is_valid_vertex(u))
        throw InvalidInput("side_subgraph: invalid vertex id");
    if (u == v)
        throw InvalidInput("side_subgraph: anchor and direction vertex coincide");
    auto keep = reachable(g, u, v);
    keep[static_cast<std::size_t>(v)] = true;
    return induced(g, keep);
}

auto between_subgraph(const Multigraph & g, VertexId u, VertexId v) -> Subgraph
{
    auto outer = side_subgraph(g, u, v);
    auto inner = side_subgraph(outer.graph, *outer.local(v), *outer.local(u));
    for (auto & x : inner.to_original)
        x = outer.to_original[static_cast<std::size_t>(x)];
    for (auto & e : inner.to_original_edge)
        e = outer.to_original_edge[static_cast<std::size_t>(e)];
    return inner;
}

auto stable_reduce(const Multigraph & g) -> ReductionReport
{
    if (g.vertex_count() < 1)
        throw InvalidInput("stable_reduce: empty graph");

    auto n = static_cast<std::size_t>(g.vertex_count());
    vector<Edge> edges = g.edges();
    vector<bool> edge_alive(edges.size(), true);
    vector<bool> vertex_alive(n, true);
    vector<set<EdgeId>> incident(n);
    vector<set<VertexId>> trace(n);
    for (std::size_t v = 0; v < n; ++v)
        trace[v].insert(static_cast<VertexId>(v));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        incident[static_cast<std::size_t>(edges[e].u)].insert(static_cast<EdgeId>(e));
        incident[static_cast<std::size_t>(edges[e].v)].insert(static_cast<EdgeId>(e));
    }

    auto degree = [&](std::size_t v) {
        int d = 0;
        for (auto e : incident[v])
            d += edges[static_cast<std::size_t>(e)].is_loop() ? 2 : 1;
        return d;
    };
    auto kill_edge = [&](EdgeId e) {
        edge_alive[static_cast<std::size_t>(e)] = false;
        incident[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].u)].erase(e);
        incident[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].v)].erase(e);
    };

    auto alive_count = n;
    bool changed = true;
    while (changed && alive_count > 1) {
        changed = false;
        for (std::size_t v = 0; v < n && alive_count > 1; ++v) {
            if (! vertex_alive[v])
                continue;
            auto d = degree(v);
            if (d == 1) {
                auto e = *incident[v].begin();
                auto x = static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].other(static_cast<VertexId>(v)));
                kill_edge(e);
                trace[x].insert(trace[v].begin(), trace[v].end());
            }
            else if (d == 2 && incident[v].size() == 2) {
                auto first = *incident[v].begin();
                auto second = *std::next(incident[v].begin());
                auto x = edges[static_cast<std::size_t>(first)].other(static_cast<VertexId>(v));
                auto y = edges[static_cast<std::size_t>(second)].other(static_cast<VertexId>(v));
                kill_edge(first);
                kill_edge(second);
                auto fresh = static_cast<EdgeId>(edges.size());
                edges.push_back(Edge{x, y});
                edge_alive.push_back(true);
                incident[static_cast<std::size_t>(x)].insert(fresh);
                incident[static_cast<std::size_t>(y)].insert(fresh);
                trace[static_cast<std::size_t>(x)].insert(trace[v].begin(), trace[v].end());
            }
            else
                continue;

            vertex_alive[v] = false;
            --alive_count;
            changed = true;
        }
    }

    ReductionReport report;
    vector<VertexId> local(n, -1);
    for (std::size_t v = 0; v < n; ++v)
        if (vertex_alive[v]) {
            local[v] = report.reduced.add_vertex();
            report.vertex_trace.push_back(trace[v]);
        }
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edge_alive[e])
            report.reduced.add_edge(local[static_cast<std::size_t>(edges[e].u)], local[static_cast<std::size_t>(edges[e].v)]);

    report.betti = betti(report.reduced);
    if (report.betti == 0)
        report.fast_answer = 1;
    else if (report.betti == 1)
        report.fast_answer = 2;
    return report;
}

} // namespace sgon
