#ifndef SGON_TREE_HH
#define SGON_TREE_HH

#include <sgon/multigraph.hh>

#include <optional>
#include <vector>

namespace sgon {

auto is_tree(const Multigraph & g) -> bool;

/**
 * A Multigraph known to be a tree: connected, loop-free, m = n - 1, n >= 1.
 * Construction validates; afterwards the value is immutable.
 */
class TreeGraph {
public:
    TreeGraph() : TreeGraph(Multigraph(1)) {}
    explicit TreeGraph(Multigraph g);

    auto graph() const -> const Multigraph & { return _graph; }
    auto vertex_count() const -> int { return _graph.vertex_count(); }
    auto edge_count() const -> int { return _graph.edge_count(); }

    auto edge_between(VertexId a, VertexId b) const -> std::optional<EdgeId>;

    /// Vertices on the unique a-b path, a first and b last.
    auto path(VertexId a, VertexId b) const -> std::vector<VertexId>;

    auto operator==(const TreeGraph & other) const -> bool { return _graph == other._graph; }

private:
    Multigraph _graph;
};

} // namespace sgon

#endif
