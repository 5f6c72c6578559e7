#ifndef SGON_MULTIGRAPH_HH
#define SGON_MULTIGRAPH_HH

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgon {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u;
    VertexId v;

    auto is_loop() const -> bool { return u == v; }
    auto other(VertexId x) const -> VertexId { return x == u ? v : u; }
    auto operator==(const Edge &) const -> bool = default;
};

/**
 * Finite undirected multigraph. Vertex ids are dense in [0, vertex_count()),
 * edge ids are list positions and never change. Loops and parallel edges are
 * allowed. Connectivity is not enforced here.
 */
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertex_count);
    Multigraph(int vertex_count, std::vector<Edge> edges);

    auto add_vertex() -> VertexId;
    auto add_edge(VertexId u, VertexId v) -> EdgeId;

    auto vertex_count() const -> int { return static_cast<int>(_incident.size()); }
    auto edge_count() const -> int { return static_cast<int>(_edges.size()); }
    auto edges() const -> const std::vector<Edge> & { return _edges; }
    auto edge(EdgeId e) const -> const Edge & { return _edges.at(static_cast<std::size_t>(e)); }

    // A loop appears once in the incidence list of its vertex.
    auto incident(VertexId v) const -> std::span<const EdgeId>;

    auto is_valid_vertex(VertexId v) const -> bool { return v >= 0 && v < vertex_count(); }

    // Same vertex count and identical edge list (including order).
    auto operator==(const Multigraph & other) const -> bool
    {
        return vertex_count() == other.vertex_count() && _edges == other._edges;
    }

private:
    std::vector<Edge> _edges;
    std::vector<std::vector<EdgeId>> _incident;
};

/// Induced subgraph together with the ids it had in its parent graph.
struct Subgraph {
    Multigraph graph;
    std::vector<VertexId> to_original;
    std::vector<EdgeId> to_original_edge;

    auto local(VertexId original) const -> std::optional<VertexId>;
};

struct ReductionReport {
    Multigraph reduced;
    int betti = 0;
    std::optional<int> fast_answer;
    // For each reduced vertex, the original vertices folded into it.
    std::vector<std::set<VertexId>> vertex_trace;
};

auto parse_mgf(std::string_view text) -> Multigraph;
auto write_mgf(const Multigraph & g) -> std::string;

auto is_connected(const Multigraph & g) -> bool;

/// First Betti number m - n + 1. Only meaningful for connected graphs.
auto betti(const Multigraph & g) -> int;

/// Number of edge endpoints at v; a loop counts twice.
auto vertex_degree(const Multigraph & g, VertexId v) -> int;

/// G_v(u): the subgraph induced on v together with the component of G - v containing u.
auto side_subgraph(const Multigraph & g, VertexId v, VertexId u) -> Subgraph;

/// G_uv = (G_u(v))_v(u), the part of g between u and v.
auto between_subgraph(const Multigraph & g, VertexId u, VertexId v) -> Subgraph;

/**
 * Repeatedly deletes degree-1 vertices and suppresses degree-2 vertices that
 * carry no loop, until no vertex qualifies or a single vertex remains.
 * Surviving vertices keep their relative order; surviving edges keep theirs
 * and edges created by suppression follow in creation order.
 */
auto stable_reduce(const Multigraph & g) -> ReductionReport;

} // namespace sgon

#endif
