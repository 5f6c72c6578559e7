#include <sgon/bounds.hh>
#include <sgon/construct.hh>
#include <sgon/errors.hh>

#include <algorithm>

using std::optional;
using std::span;
using std::vector;

namespace sgon {

void validate_tuple(const Multigraph & g, const TupleAlpha & alpha, int i_max)
{
    auto k = alpha.tree.vertex_count();
    if (alpha.f.size() != static_cast<std::size_t>(g.vertex_count()))
        throw InvalidInput("tuple: f must have one entry per vertex");
    if (alpha.r.size() != static_cast<std::size_t>(g.edge_count()))
        throw InvalidInput("tuple: r must have one entry per edge");
    vector<bool> hit(static_cast<std::size_t>(k), false);
    for (auto x : alpha.f) {
        if (x < 0 || x >= k)
            throw InvalidInput("tuple: f maps outside the tree");
        hit[static_cast<std::size_t>(x)] = true;
    }
    if (std::count(hit.begin(), hit.end(), false) != 0)
        throw InvalidInput("tuple: f is not surjective");
    for (auto x : alpha.r)
        if (x < 1 || x > i_max)
            throw InvalidInput("tuple: index " + std::to_string(x) + " outside [1, " + std::to_string(i_max) + "]");
}

auto build_phi_alpha(const Multigraph & g, const TupleAlpha & alpha, optional<int> i_max) -> ConstructionResult
{
    validate_tuple(g, alpha, i_max.value_or(upper_bound(g)));

    auto n = g.vertex_count();
    Multigraph tree = alpha.tree.graph();
    Multigraph host(n);
    vector<RefinementVertex> tags;
    vector<VertexId> image(alpha.f.begin(), alpha.f.end());
    vector<int> index;
    vector<EdgeId> edge_image;
    for (VertexId v = 0; v < n; ++v)
        tags.push_back({Provenance::Original, v});

    auto add_vertex = [&](Provenance kind, VertexId to) {
        tags.push_back({kind, -1});
        image.push_back(to);
        return host.add_vertex();
    };
    auto add_edge = [&](VertexId a, VertexId b, int r, EdgeId to) {
        host.add_edge(a, b);
        index.push_back(r);
        edge_image.push_back(to);
    };
    auto f = [&](VertexId v) { return alpha.f[static_cast<std::size_t>(v)]; };

    // same-image edges: one subdivision vertex each, mapped to a new leaf
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (f(u) != f(v))
            continue;
        auto leaf = tree.add_vertex();
        auto leaf_edge = tree.add_edge(f(u), leaf);
        auto middle = add_vertex(Provenance::Internal, leaf);
        add_edge(u, middle, 1, leaf_edge);
        add_edge(middle, v, 1, leaf_edge);
    }

    TreeGraph tree_prime(tree);

    // cross edges: subdivided along the tree path
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (f(u) == f(v))
            continue;
        auto r = alpha.r[static_cast<std::size_t>(e)];
        auto path = tree_prime.path(f(u), f(v));
        auto previous = u;
        for (std::size_t i = 1; i < path.size(); ++i) {
            auto step = *tree_prime.edge_between(path[i - 1], path[i]);
            auto next = i + 1 == path.size() ? v : add_vertex(Provenance::Internal, path[i]);
            add_edge(previous, next, r, step);
            previous = next;
        }
    }

    // harmonization
    auto pre_harmonization = host.vertex_count();
    vector<int> sums(static_cast<std::size_t>(tree.edge_count()), 0);
    for (VertexId w = 0; w < pre_harmonization; ++w) {
        auto t = image[static_cast<std::size_t>(w)];
        auto directions = tree.incident(t);
        for (auto d : host.incident(w))
            sums[static_cast<std::size_t>(edge_image[static_cast<std::size_t>(d)])] += index[static_cast<std::size_t>(d)];

        int best = 0;
        for (auto e : directions)
            best = std::max(best, sums[static_cast<std::size_t>(e)]);

        vector<std::pair<EdgeId, int>> shortfalls;
        for (auto e : directions)
            if (sums[static_cast<std::size_t>(e)] < best)
                shortfalls.emplace_back(e, best - sums[static_cast<std::size_t>(e)]);
        for (auto d : host.incident(w))
            sums[static_cast<std::size_t>(edge_image[static_cast<std::size_t>(d)])] = 0;

        for (auto [direction, deficit] : shortfalls) {
            auto branch = side_subgraph(tree, t, tree.edge(direction).other(t));
            vector<VertexId> copy(branch.to_original.size(), -1);
            for (std::size_t i = 0; i < branch.to_original.size(); ++i)
                copy[i] = branch.to_original[i] == t ? w : add_vertex(Provenance::External, branch.to_original[i]);
            for (EdgeId be = 0; be < branch.graph.edge_count(); ++be) {
                auto [a, b] = branch.graph.edge(be);
                add_edge(copy[static_cast<std::size_t>(a)], copy[static_cast<std::size_t>(b)], deficit,
                    branch.to_original_edge[static_cast<std::size_t>(be)]);
            }
        }
    }

    ConstructionResult result{Refinement{host, tags}, tree_prime,
        FiniteMorphism{Refinement{std::move(host), std::move(tags)}, std::move(tree), std::move(image), std::move(index), std::move(edge_image)}, 0};
    result.degree = morphism_degree(result.morphism);
    return result;
}

auto degree_of_alpha(const Multigraph & g, const TupleAlpha & alpha, optional<int> i_max) -> int
{
    return build_phi_alpha(g, alpha, i_max).degree;
}

DegreeModel::DegreeModel(const Multigraph & g, const TreeGraph & tree, span<const VertexId> f)
{
    auto n = g.vertex_count();
    auto k = tree.vertex_count();
    if (f.size() != static_cast<std::size_t>(n))
        throw InvalidInput("degree model: f must have one entry per vertex");
    vector<bool> hit(static_cast<std::size_t>(k), false);
    for (auto x : f) {
        if (x < 0 || x >= k)
            throw InvalidInput("degree model: f maps outside the tree");
        hit[static_cast<std::size_t>(x)] = true;
    }
    if (std::count(hit.begin(), hit.end(), false) != 0)
        throw InvalidInput("degree model: f is not surjective");

    auto fv = [&](VertexId v) { return f[static_cast<std::size_t>(v)]; };

    // T' with the same edge numbering as build_phi_alpha
    Multigraph prime = tree.graph();
    _is_cross.assign(static_cast<std::size_t>(g.edge_count()), false);
    vector<EdgeId> leaf_of(static_cast<std::size_t>(g.edge_count()), -1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (fv(u) == fv(v))
            leaf_of[static_cast<std::size_t>(e)] = prime.add_edge(fv(u), prime.add_vertex());
        else {
            _is_cross[static_cast<std::size_t>(e)] = true;
            _cross.push_back(e);
        }
    }
    _tree_edges = prime.edge_count();
    if (_tree_edges == 0) {
        _single_vertex_degree = n;
        return;
    }
    TreeGraph prime_tree(prime);

    // toward[t][e*]: position in incident(t) of the edge leading to e*
    auto prime_vertices = prime.vertex_count();
    vector<vector<int>> toward(static_cast<std::size_t>(prime_vertices), vector<int>(static_cast<std::size_t>(_tree_edges), -1));
    for (VertexId t = 0; t < prime_vertices; ++t) {
        auto inc = prime.incident(t);
        for (std::size_t s = 0; s < inc.size(); ++s) {
            auto branch = side_subgraph(prime, t, prime.edge(inc[s]).other(t));
            for (auto e : branch.to_original_edge)
                toward[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] = static_cast<int>(s);
        }
    }
    auto slot_at = [&](VertexId t, EdgeId e) {
        auto inc = prime.incident(t);
        return static_cast<std::size_t>(std::find(inc.begin(), inc.end(), e) - inc.begin());
    };

    _vertices.resize(static_cast<std::size_t>(n));
    for (VertexId w = 0; w < n; ++w) {
        auto & vertex = _vertices[static_cast<std::size_t>(w)];
        vertex.slots.resize(prime.incident(fv(w)).size());
        vertex.toward = toward[static_cast<std::size_t>(fv(w))];
    }

    _base.assign(static_cast<std::size_t>(_tree_edges), 0);
    _path_edges.resize(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (! _is_cross[static_cast<std::size_t>(e)]) {
            auto leaf = leaf_of[static_cast<std::size_t>(e)];
            _base[static_cast<std::size_t>(leaf)] = 2;
            auto slot = slot_at(fv(u), leaf);
            if (u == v)
                _vertices[static_cast<std::size_t>(u)].slots[slot].constant += 2;
            else {
                _vertices[static_cast<std::size_t>(u)].slots[slot].constant += 1;
                _vertices[static_cast<std::size_t>(v)].slots[slot].constant += 1;
            }
            continue;
        }

        auto path = prime_tree.path(fv(u), fv(v));
        vector<bool> on_path_edge(static_cast<std::size_t>(_tree_edges), false);
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (i + 1 < path.size()) {
                auto step = *prime_tree.edge_between(path[i], path[i + 1]);
                on_path_edge[static_cast<std::size_t>(step)] = true;
                _path_edges[static_cast<std::size_t>(e)].push_back(step);
            }
        }
        auto first = _path_edges[static_cast<std::size_t>(e)].front();
        auto last = _path_edges[static_cast<std::size_t>(e)].back();
        _vertices[static_cast<std::size_t>(u)].slots[slot_at(fv(u), first)].terms.push_back(e);
        _vertices[static_cast<std::size_t>(v)].slots[slot_at(fv(v), last)].terms.push_back(e);

        // An interior path vertex falls short by r(e) in every off-path
        // direction, so it adds r(e) to the fiber of each tree edge whose
        // nearest path vertex it is.
        vector<VertexId> nearest(static_cast<std::size_t>(prime_vertices), -1);
        vector<bool> interior(static_cast<std::size_t>(prime_vertices), false);
        vector<VertexId> queue(path.begin(), path.end());
        for (auto p : path)
            nearest[static_cast<std::size_t>(p)] = p;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            interior[static_cast<std::size_t>(path[i])] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto x = queue[head];
            for (auto te : prime.incident(x)) {
                auto y = prime.edge(te).other(x);
                if (nearest[static_cast<std::size_t>(y)] == -1) {
                    nearest[static_cast<std::size_t>(y)] = nearest[static_cast<std::size_t>(x)];
                    queue.push_back(y);
                }
            }
        }
        for (EdgeId t = 0; t < _tree_edges; ++t) {
            if (on_path_edge[static_cast<std::size_t>(t)])
                _coefficients.push_back({e, t});
            else if (auto p = nearest[static_cast<std::size_t>(prime.edge(t).u)]; interior[static_cast<std::size_t>(p)])
                _coefficients.push_back({e, t});
        }
    }
}

auto DegreeModel::evaluate(span<const int> lo, span<const int> hi, bool single_edge) const -> int
{
    if (_tree_edges == 0)
        return _single_vertex_degree;

    auto edges = single_edge ? 1 : _tree_edges;
    vector<int> fiber(_base.begin(), _base.begin() + edges);
    for (auto & c : _coefficients)
        if (c.tree_edge < edges)
            fiber[static_cast<std::size_t>(c.tree_edge)] += lo[static_cast<std::size_t>(c.edge)];

    vector<int> low, high;
    for (auto & vertex : _vertices) {
        auto slots = vertex.slots.size();
        if (slots < 2)
            continue;
        low.assign(slots, 0);
        high.assign(slots, 0);
        int best = -1, second = -1;
        std::size_t best_at = 0;
        for (std::size_t s = 0; s < slots; ++s) {
            auto & slot = vertex.slots[s];
            int a = slot.constant, b = slot.constant;
            for (auto e : slot.terms) {
                a += lo[static_cast<std::size_t>(e)];
                b += hi[static_cast<std::size_t>(e)];
            }
            low[s] = a;
            high[s] = b;
            if (a > best) {
                second = best;
                best = a;
                best_at = s;
            }
            else if (a > second)
                second = a;
        }
        for (int t = 0; t < edges; ++t) {
            auto target = static_cast<std::size_t>(vertex.toward[static_cast<std::size_t>(t)]);
            auto others = target == best_at ? second : best;
            if (others > high[target])
                fiber[static_cast<std::size_t>(t)] += others - high[target];
        }
    }
    return *std::max_element(fiber.begin(), fiber.end());
}

auto DegreeModel::degree(span<const int> r) const -> int
{
    return evaluate(r, r, true);
}

auto DegreeModel::lower_bound(span<const int> lo, span<const int> hi) const -> int
{
    return evaluate(lo, hi, false);
}

auto DegreeModel::base_load(span<const int> r) const -> int
{
    if (_tree_edges == 0)
        return _single_vertex_degree;
    vector<int> load(_base);
    for (auto e : _cross)
        for (auto t : _path_edges[static_cast<std::size_t>(e)])
            load[static_cast<std::size_t>(t)] += r[static_cast<std::size_t>(e)];
    return *std::max_element(load.begin(), load.end());
}

} // namespace sgon
