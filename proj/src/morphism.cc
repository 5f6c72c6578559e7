#include <sgon/errors.hh>
#include <sgon/morphism.hh>

#include <algorithm>
#include <utility>

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace sgon {

namespace {
    auto at(const vector<int> & v, int i) -> int { return v[static_cast<std::size_t>(i)]; }
}

auto check_structure(const FiniteMorphism & phi) -> optional<string>
{
    auto & host = phi.domain.host;
    auto & tree = phi.codomain;

    if (! is_tree(tree))
        return "codomain is not a tree";
    if (phi.domain.provenance.size() != static_cast<std::size_t>(host.vertex_count())
        || phi.vertex_image.size() != static_cast<std::size_t>(host.vertex_count()))
        return "vertex table size mismatch";
    if (phi.edge_index.size() != static_cast<std::size_t>(host.edge_count())
        || phi.edge_image.size() != static_cast<std::size_t>(host.edge_count()))
        return "edge table size mismatch";

    for (auto image : phi.vertex_image)
        if (! tree.is_valid_vertex(image))
            return "vertex image out of range";

    for (auto index : phi.edge_index)
        if (index < 1)
            return "index must be ≥ 1";

    for (EdgeId e = 0; e < host.edge_count(); ++e) {
        auto [u, v] = host.edge(e);
        auto image = phi.edge_image[static_cast<std::size_t>(e)];
        if (image < 0 || image >= tree.edge_count())
            return "edge " + std::to_string(e) + " has no tree edge as image";
        auto a = at(phi.vertex_image, u), b = at(phi.vertex_image, v);
        auto target = tree.edge(image);
        if (a == b || ! ((target.u == a && target.v == b) || (target.u == b && target.v == a)))
            return "edge " + std::to_string(e) + " is not mapped onto the edge joining its endpoint images";
    }
    return std::nullopt;
}

auto direction_index(const FiniteMorphism & phi, VertexId v, EdgeId tree_edge) -> int
{
    auto & host = phi.domain.host;
    if (! host.is_valid_vertex(v))
        throw InvalidInput("direction_index: invalid vertex");
    if (tree_edge < 0 || tree_edge >= phi.codomain.edge_count())
        throw InvalidInput("direction_index: invalid tree edge");
    auto image = at(phi.vertex_image, v);
    auto target = phi.codomain.edge(tree_edge);
    if (target.u != image && target.v != image)
        throw InvalidInput("direction_index: tree edge is not incident to the image vertex");

    int sum = 0;
    for (auto d : host.incident(v))
        if (phi.edge_image[static_cast<std::size_t>(d)] == tree_edge)
            sum += phi.edge_index[static_cast<std::size_t>(d)];
    return sum;
}

auto is_harmonic(const FiniteMorphism & phi) -> HarmonicityReport
{
    if (auto problem = check_structure(phi))
        throw InvalidInput("is_harmonic: " + *problem);

    auto & host = phi.domain.host;
    auto & tree = phi.codomain;
    HarmonicityReport report;
    report.vertex_index.assign(static_cast<std::size_t>(host.vertex_count()), 0);

    vector<int> sums(static_cast<std::size_t>(tree.edge_count()), 0);
    for (VertexId v = 0; v < host.vertex_count(); ++v) {
        for (auto d : host.incident(v))
            sums[static_cast<std::size_t>(phi.edge_image[static_cast<std::size_t>(d)])] += phi.edge_index[static_cast<std::size_t>(d)];

        auto directions = tree.incident(at(phi.vertex_image, v));
        if (directions.empty())
            report.vertex_index[static_cast<std::size_t>(v)] = 1;
        else {
            auto first = directions.front();
            auto value = sums[static_cast<std::size_t>(first)];
            for (auto e : directions)
                if (sums[static_cast<std::size_t>(e)] != value && ! report.violation)
                    report.violation = HarmonicViolation{v, first, value, e, sums[static_cast<std::size_t>(e)]};
            report.vertex_index[static_cast<std::size_t>(v)] = value;
        }

        for (auto d : host.incident(v))
            sums[static_cast<std::size_t>(phi.edge_image[static_cast<std::size_t>(d)])] = 0;
        if (report.violation)
            break;
    }

    report.harmonic = ! report.violation;
    if (! report.harmonic)
        report.vertex_index.clear();
    return report;
}

auto morphism_degree(const FiniteMorphism & phi) -> int
{
    auto report = is_harmonic(phi);
    if (! report.harmonic)
        throw InvalidInput("morphism_degree: morphism is not harmonic");

    auto & host = phi.domain.host;
    auto & tree = phi.codomain;
    if (tree.edge_count() == 0) {
        if (host.edge_count() != 0)
            throw InvalidInput("morphism_degree: edges cannot map to a single-vertex tree");
        return host.vertex_count();
    }

    vector<int> fiber(static_cast<std::size_t>(tree.edge_count()), 0);
    for (EdgeId e = 0; e < host.edge_count(); ++e)
        fiber[static_cast<std::size_t>(phi.edge_image[static_cast<std::size_t>(e)])] += phi.edge_index[static_cast<std::size_t>(e)];
    auto degree = fiber.front();
    if (std::any_of(fiber.begin(), fiber.end(), [&](int x) { return x != degree; }))
        throw InternalError("morphism_degree: fiber sums differ across tree edges");

    vector<int> vertex_sum(static_cast<std::size_t>(tree.vertex_count()), 0);
    for (VertexId v = 0; v < host.vertex_count(); ++v)
        vertex_sum[static_cast<std::size_t>(at(phi.vertex_image, v))] += report.vertex_index[static_cast<std::size_t>(v)];
    if (std::any_of(vertex_sum.begin(), vertex_sum.end(), [&](int x) { return x != degree; }))
        throw InternalError("morphism_degree: vertex fiber sums differ from the edge fiber sum");

    return degree;
}

auto check_refinement(const Multigraph & base, const Refinement & refinement) -> optional<string>
{
    const string failure = "refinement does not restore base graph";
    auto & host = refinement.host;
    auto & tags = refinement.provenance;
    if (tags.size() != static_cast<std::size_t>(host.vertex_count()))
        return failure;

    vector<VertexId> host_of_base(static_cast<std::size_t>(base.vertex_count()), -1);
    for (VertexId v = 0; v < host.vertex_count(); ++v) {
        auto & tag = tags[static_cast<std::size_t>(v)];
        if (tag.kind != Provenance::Original)
            continue;
        if (! base.is_valid_vertex(tag.base) || host_of_base[static_cast<std::size_t>(tag.base)] != -1)
            return failure;
        host_of_base[static_cast<std::size_t>(tag.base)] = v;
    }
    if (std::count(host_of_base.begin(), host_of_base.end(), -1) != 0)
        return failure;
    if (! is_connected(host))
        return failure;

    // Strip external vertices. What is left must be connected and the stripped
    // part must be a forest hanging off it by single edges (same m - n).
    vector<bool> keep(static_cast<std::size_t>(host.vertex_count()));
    for (VertexId v = 0; v < host.vertex_count(); ++v)
        keep[static_cast<std::size_t>(v)] = tags[static_cast<std::size_t>(v)].kind != Provenance::External;
    Multigraph core(0);
    vector<VertexId> core_of(static_cast<std::size_t>(host.vertex_count()), -1);
    vector<VertexId> host_of_core;
    for (VertexId v = 0; v < host.vertex_count(); ++v)
        if (keep[static_cast<std::size_t>(v)]) {
            core_of[static_cast<std::size_t>(v)] = core.add_vertex();
            host_of_core.push_back(v);
        }
    for (auto & e : host.edges())
        if (keep[static_cast<std::size_t>(e.u)] && keep[static_cast<std::size_t>(e.v)])
            core.add_edge(core_of[static_cast<std::size_t>(e.u)], core_of[static_cast<std::size_t>(e.v)]);

    if (! is_connected(core))
        return failure;
    if (core.edge_count() - core.vertex_count() != host.edge_count() - host.vertex_count())
        return failure;

    auto kind_of_core = [&](VertexId c) { return tags[static_cast<std::size_t>(host_of_core[static_cast<std::size_t>(c)])].kind; };
    for (VertexId c = 0; c < core.vertex_count(); ++c)
        if (kind_of_core(c) == Provenance::Internal) {
            auto inc = core.incident(c);
            if (inc.size() != 2 || core.edge(inc[0]).is_loop() || core.edge(inc[1]).is_loop())
                return failure;
        }

    // Suppress internal chains; every core edge must lie on exactly one chain
    // between two original vertices.
    vector<bool> used(static_cast<std::size_t>(core.edge_count()), false);
    vector<pair<VertexId, VertexId>> restored;
    for (VertexId c = 0; c < core.vertex_count(); ++c) {
        if (kind_of_core(c) != Provenance::Original)
            continue;
        for (auto first : core.incident(c)) {
            if (used[static_cast<std::size_t>(first)])
                continue;
            auto edge = first;
            auto at_vertex = c;
            while (true) {
                used[static_cast<std::size_t>(edge)] = true;
                at_vertex = core.edge(edge).other(at_vertex);
                if (kind_of_core(at_vertex) == Provenance::Original)
                    break;
                auto inc = core.incident(at_vertex);
                edge = inc[0] == edge ? inc[1] : inc[0];
                if (used[static_cast<std::size_t>(edge)])
                    return failure;
            }
            auto a = tags[static_cast<std::size_t>(host_of_core[static_cast<std::size_t>(c)])].base;
            auto b = tags[static_cast<std::size_t>(host_of_core[static_cast<std::size_t>(at_vertex)])].base;
            restored.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    if (std::count(used.begin(), used.end(), false) != 0)
        return failure;

    vector<pair<VertexId, VertexId>> expected;
    for (auto & e : base.edges())
        expected.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(restored.begin(), restored.end());
    std::sort(expected.begin(), expected.end());
    if (restored != expected)
        return failure;
    return std::nullopt;
}

auto verify_certificate(const Multigraph & g, const Certificate & cert) -> Verdict
{
    auto reject = [](string reason, optional<int> degree = std::nullopt) {
        return Verdict{false, degree, std::move(reason)};
    };

    const Multigraph * base = &g;
    if (cert.reduced_graph && ! (g == *cert.reduced_graph)) {
        if (g.vertex_count() < 1 || ! (stable_reduce(g).reduced == *cert.reduced_graph))
            return reject("certificate graph does not match input");
        base = &*cert.reduced_graph;
    }

    if (cert.claimed_degree < 1)
        return reject("claimed degree must be positive");
    if (auto problem = check_refinement(*base, cert.refinement()))
        return reject(*problem);
    if (! is_tree(cert.tree()))
        return reject("codomain is not a tree");
    if (auto problem = check_structure(cert.morphism))
        return reject(*problem);

    auto harmonic = is_harmonic(cert.morphism);
    if (! harmonic.harmonic)
        return reject("morphism is not harmonic at vertex " + std::to_string(harmonic.violation->vertex));
    if (cert.tree().edge_count() == 0 && cert.refinement().host.edge_count() != 0)
        return reject("edges cannot map to a single-vertex tree");

    auto degree = morphism_degree(cert.morphism);
    if (degree > cert.claimed_degree)
        return reject("degree exceeds claim", degree);
    return Verdict{true, degree, std::nullopt};
}

} // namespace sgon
