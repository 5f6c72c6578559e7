#include "support.hh"

#include <sgon/errors.hh>
#include <sgon/morphism.hh>

#include <gtest/gtest.h>

using namespace sgon;
using namespace sgon::test;

namespace {

auto originals(int n) -> std::vector<RefinementVertex>
{
    std::vector<RefinementVertex> tags;
    for (int v = 0; v < n; ++v)
        tags.push_back({Provenance::Original, v});
    return tags;
}

// The six-vertex graph mapped onto the path p1..p5: v1 v2 joined twice,
// v2 to v3 and v4, v3 and v4 to v5, v5 to v6. Ids are v_i = i - 1, p_j = j - 1.
auto path_example_graph() -> Multigraph
{
    return Multigraph(6, {{0, 1}, {0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}});
}

auto path_example() -> FiniteMorphism
{
    auto g = path_example_graph();
    return FiniteMorphism{
        Refinement{g, originals(6)},
        path(5),
        {0, 1, 2, 2, 3, 4},
        {1, 1, 1, 1, 1, 1, 2},
        {0, 0, 1, 1, 2, 2, 3},
    };
}

// B_3 with every edge subdivided, onto a star with three leaves.
auto banana_example() -> FiniteMorphism
{
    Multigraph h(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    auto tags = originals(2);
    for (int i = 0; i < 3; ++i)
        tags.push_back({Provenance::Internal, -1});
    return FiniteMorphism{
        Refinement{h, tags},
        star(3),
        {0, 0, 1, 2, 3},
        {1, 1, 1, 1, 1, 1},
        {0, 0, 1, 1, 2, 2},
    };
}

auto identity_tree(const Multigraph & t) -> FiniteMorphism
{
    std::vector<VertexId> images;
    for (int v = 0; v < t.vertex_count(); ++v)
        images.push_back(v);
    std::vector<EdgeId> edge_images;
    for (int e = 0; e < t.edge_count(); ++e)
        edge_images.push_back(e);
    return FiniteMorphism{Refinement{t, originals(t.vertex_count())}, t, images, std::vector<int>(static_cast<std::size_t>(t.edge_count()), 1), edge_images};
}

} // namespace

TEST(DirectionIndex, PathExample)
{
    auto phi = path_example();
    EXPECT_EQ(direction_index(phi, 4, 2), 2);
    EXPECT_EQ(direction_index(phi, 4, 3), 2);
    EXPECT_EQ(direction_index(phi, 2, 2), 1);
    EXPECT_EQ(direction_index(phi, 2, 1), 1);
    EXPECT_THROW(direction_index(phi, 4, 0), InvalidInput);
}

TEST(DirectionIndex, EmptyDirectionIsZero)
{
    auto phi = path_example();
    phi.domain.host = Multigraph(6, {{0, 1}, {0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
    phi.edge_index.pop_back();
    phi.edge_image.pop_back();
    EXPECT_EQ(direction_index(phi, 4, 3), 0);
}

TEST(Harmonic, PathExample)
{
    auto report = is_harmonic(path_example());
    ASSERT_TRUE(report.harmonic);
    EXPECT_EQ(report.vertex_index, (std::vector<int>{2, 2, 1, 1, 2, 2}));
    EXPECT_EQ(morphism_degree(path_example()), 2);
}

TEST(Harmonic, PathExampleBrokenIndex)
{
    auto phi = path_example();
    phi.edge_index[6] = 1;
    auto report = is_harmonic(phi);
    EXPECT_FALSE(report.harmonic);
    ASSERT_TRUE(report.violation);
    EXPECT_EQ(report.violation->vertex, 4);
    EXPECT_EQ(std::min(report.violation->index_a, report.violation->index_b), 1);
    EXPECT_EQ(std::max(report.violation->index_a, report.violation->index_b), 2);
}

TEST(Harmonic, IdentityTree)
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        auto t = random_tree(2 + static_cast<int>(rng() % 6), rng);
        auto report = is_harmonic(identity_tree(t));
        ASSERT_TRUE(report.harmonic);
        for (auto m : report.vertex_index)
            EXPECT_EQ(m, 1);
        EXPECT_EQ(morphism_degree(identity_tree(t)), 1);
    }
}

TEST(Harmonic, StructuralProblemsThrow)
{
    auto phi = path_example();
    phi.vertex_image[0] = 9;
    EXPECT_THROW(is_harmonic(phi), InvalidInput);
}

TEST(Degree, Banana)
{
    EXPECT_TRUE(is_harmonic(banana_example()).harmonic);
    EXPECT_EQ(morphism_degree(banana_example()), 2);
}

TEST(Degree, SingleVertexCodomain)
{
    FiniteMorphism phi{Refinement{Multigraph(1), originals(1)}, Multigraph(1), {0}, {}, {}};
    EXPECT_EQ(morphism_degree(phi), 1);
    EXPECT_EQ(is_harmonic(phi).vertex_index, (std::vector<int>{1}));
}

TEST(Structure, Reasons)
{
    auto phi = path_example();
    EXPECT_FALSE(check_structure(phi));

    auto zero = phi;
    zero.edge_index[3] = 0;
    EXPECT_EQ(check_structure(zero), "index must be ≥ 1");

    auto cyclic = phi;
    cyclic.codomain = cycle(5);
    EXPECT_EQ(check_structure(cyclic), "codomain is not a tree");

    auto wrong_edge = phi;
    wrong_edge.edge_image[6] = 0;
    EXPECT_TRUE(check_structure(wrong_edge));
}

TEST(Refinement, AcceptsValid)
{
    EXPECT_FALSE(check_refinement(path_example_graph(), path_example().domain));
    EXPECT_FALSE(check_refinement(banana(3), banana_example().domain));
}

TEST(Refinement, RejectsMismatches)
{
    auto r = banana_example().domain;
    EXPECT_TRUE(check_refinement(banana(2), r));
    EXPECT_TRUE(check_refinement(banana(4), r));

    auto dropped = r;
    dropped.provenance[1] = {Provenance::External, -1};
    EXPECT_TRUE(check_refinement(banana(3), dropped));

    auto dangling = r;
    dangling.provenance[2] = {Provenance::External, -1};
    EXPECT_TRUE(check_refinement(banana(3), dangling));
}

TEST(Verify, AcceptsAndRejects)
{
    auto g = path_example_graph();
    Certificate cert{path_example(), 2, std::nullopt};
    auto verdict = verify_certificate(g, cert);
    EXPECT_TRUE(verdict.accepted);
    EXPECT_EQ(verdict.computed_degree, 2);

    auto low = cert;
    low.claimed_degree = 1;
    EXPECT_EQ(verify_certificate(g, low).failure_reason, "degree exceeds claim");

    auto deleted = cert;
    deleted.morphism.domain.provenance[5] = {Provenance::External, -1};
    EXPECT_EQ(verify_certificate(g, deleted).failure_reason, "refinement does not restore base graph");

    auto zero = cert;
    zero.morphism.edge_index[2] = 0;
    EXPECT_EQ(verify_certificate(g, zero).failure_reason, "index must be ≥ 1");

    auto broken = cert;
    broken.morphism.edge_index[6] = 1;
    EXPECT_EQ(verify_certificate(g, broken).failure_reason, "morphism is not harmonic at vertex 4");

    EXPECT_EQ(verify_certificate(cycle(6), cert).failure_reason, "refinement does not restore base graph");
}

TEST(Verify, ReducedGraphBlock)
{
    auto g = banana(3);
    Certificate cert{banana_example(), 2, banana(3)};
    EXPECT_TRUE(verify_certificate(g, cert).accepted);

    Multigraph with_tail(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}});
    EXPECT_TRUE(verify_certificate(with_tail, cert).accepted);
    EXPECT_EQ(verify_certificate(banana(4), cert).failure_reason, "certificate graph does not match input");
}

TEST(CertificateIo, RoundTrip)
{
    for (auto cert : {Certificate{path_example(), 2, std::nullopt}, Certificate{banana_example(), 3, banana(3)}}) {
        auto text = write_certificate(cert);
        auto back = parse_certificate(text);
        EXPECT_EQ(write_certificate(back), text);
        EXPECT_EQ(back.claimed_degree, cert.claimed_degree);
        EXPECT_EQ(back.morphism.vertex_image, cert.morphism.vertex_image);
        EXPECT_EQ(back.morphism.edge_index, cert.morphism.edge_index);
        EXPECT_EQ(back.morphism.edge_image, cert.morphism.edge_image);
        EXPECT_EQ(back.refinement().provenance, cert.refinement().provenance);
        EXPECT_EQ(back.reduced_graph.has_value(), cert.reduced_graph.has_value());
    }
}

TEST(CertificateIo, ToleratesComments)
{
    auto text = "# witness\n" + write_certificate(Certificate{banana_example(), 2, std::nullopt});
    EXPECT_NO_THROW(parse_certificate(text));
}

TEST(CertificateIo, RejectsMalformed)
{
    auto text = write_certificate(Certificate{banana_example(), 2, std::nullopt});
    EXPECT_THROW(parse_certificate(""), ParseError);
    EXPECT_THROW(parse_certificate("cert 2\n"), ParseError);
    EXPECT_THROW(parse_certificate(text.substr(0, text.size() - 4)), ParseError);
    EXPECT_THROW(parse_certificate(text + "degree 2\n"), ParseError);
}
