#ifndef SGON_TESTS_SUPPORT_HH
#define SGON_TESTS_SUPPORT_HH

#include <sgon/enumerate.hh>
#include <sgon/multigraph.hh>
#include <sgon/tree.hh>

#include <algorithm>
#include <random>
#include <vector>

namespace sgon::test {

inline auto cycle(int k) -> Multigraph
{
    Multigraph g(k);
    for (int i = 0; i < k; ++i)
        g.add_edge(i, (i + 1) % k);
    return g;
}

inline auto banana(int m) -> Multigraph
{
    Multigraph g(2);
    for (int i = 0; i < m; ++i)
        g.add_edge(0, 1);
    return g;
}

inline auto complete(int n) -> Multigraph
{
    Multigraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline auto path(int n) -> Multigraph
{
    Multigraph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

inline auto star(int leaves) -> Multigraph
{
    Multigraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

/// Uniform random labelled tree on [0, n) via a random Prüfer code.
inline auto random_tree(int n, std::mt19937_64 & rng) -> Multigraph
{
    if (n == 1)
        return Multigraph(1);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<VertexId> code(static_cast<std::size_t>(n - 2));
    for (auto & c : code)
        c = pick(rng);
    return prufer_decode(code, n).graph();
}

/// Random connected multigraph: a random spanning tree plus `extra` edges,
/// which may be parallel edges or, when allowed, loops.
inline auto random_connected(int n, int extra, std::mt19937_64 & rng, bool loops = true) -> Multigraph
{
    auto g = random_tree(n, rng);
    if (n == 1 && ! loops)
        return g;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < extra;) {
        int u = pick(rng), v = pick(rng);
        if (u == v && ! loops)
            continue;
        g.add_edge(u, v);
        ++i;
    }
    return g;
}

/// Random valid tuple for g: a random tree on k <= n vertices, a random surjection, random indices.
inline auto random_tuple(const Multigraph & g, int i_max, std::mt19937_64 & rng) -> TupleAlpha
{
    int n = g.vertex_count();
    int k = std::uniform_int_distribution<int>(1, n)(rng);
    auto tree = random_tree(k, rng);

    std::vector<VertexId> f(static_cast<std::size_t>(n));
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<int> block(0, k - 1);
    for (int i = 0; i < n; ++i)
        f[order[i]] = i < k ? i : block(rng);

    std::vector<int> r(static_cast<std::size_t>(g.edge_count()));
    std::uniform_int_distribution<int> index(1, i_max);
    for (auto & x : r)
        x = index(rng);
    return TupleAlpha{TreeGraph(tree), f, r};
}

} // namespace sgon::test

#endif
