#include <sgon/errors.hh>
#include <sgon/tree.hh>

#include <algorithm>
#include <deque>

using std::optional;
using std::vector;

namespace sgon {

auto is_tree(const Multigraph & g) -> bool
{
    if (g.vertex_count() < 1 || g.edge_count() != g.vertex_count() - 1)
        return false;
    for (auto & e : g.edges())
        if (e.is_loop())
            return false;
    return is_connected(g);
}

TreeGraph::TreeGraph(Multigraph g) :
    _graph(std::move(g))
{
    if (! is_tree(_graph))
        throw InvalidInput("graph is not a tree");
}

auto TreeGraph::edge_between(VertexId a, VertexId b) const -> optional<EdgeId>
{
    if (! _graph.is_valid_vertex(a) || ! _graph.is_valid_vertex(b))
        return std::nullopt;
    for (auto e : _graph.incident(a))
        if (_graph.edge(e).other(a) == b)
            return e;
    return std::nullopt;
}

auto TreeGraph::path(VertexId a, VertexId b) const -> vector<VertexId>
{
    if (! _graph.is_valid_vertex(a) || ! _graph.is_valid_vertex(b))
        throw InvalidInput("tree path: invalid vertex id");
    vector<VertexId> parent(static_cast<std::size_t>(vertex_count()), -1);
    std::deque<VertexId> queue{b};
    parent[static_cast<std::size_t>(b)] = b;
    while (! queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        if (x == a)
            break;
        for (auto e : _graph.incident(x)) {
            auto y = _graph.edge(e).other(x);
            if (parent[static_cast<std::size_t>(y)] == -1) {
                parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            }
        }
    }
    vector<VertexId> result{a};
    while (result.back() != b)
        result.push_back(parent[static_cast<std::size_t>(result.back())]);
    return result;
}

} // namespace sgon
