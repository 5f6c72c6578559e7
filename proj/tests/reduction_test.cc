#include <sgon/errors.hh>
#include <sgon/reduction.hh>
#include <sgon/solver.hh>

#include <gtest/gtest.h>

#include <random>

using namespace sgon;

namespace {

auto yes_instance() -> ThreeDMInstance
{
    return {2, {{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}}};
}

auto no_instance() -> ThreeDMInstance
{
    return {2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
}

auto containing(const ThreeDMInstance & inst, int set, int a) -> int
{
    int c = 0;
    for (auto & t : inst.triples)
        c += t[set] == a;
    return c;
}

} // namespace

TEST(Instance, Validation)
{
    EXPECT_FALSE(check_instance(yes_instance()));
    EXPECT_FALSE(check_instance(no_instance()));

    auto duplicate = yes_instance();
    duplicate.triples.push_back({0, 0, 0});
    EXPECT_TRUE(check_instance(duplicate));

    ThreeDMInstance sparse{2, {{0, 0, 0}, {1, 1, 1}}};
    EXPECT_TRUE(check_instance(sparse));

    ThreeDMInstance k1{1, {{0, 0, 0}}};
    EXPECT_TRUE(check_instance(k1));

    ThreeDMInstance out_of_range{2, {{0, 0, 2}}};
    EXPECT_TRUE(check_instance(out_of_range));

    EXPECT_THROW(build_gadget(sparse), InvalidInput);
}

TEST(Gadget, YesInstanceShape)
{
    auto gadget = build_gadget(yes_instance());
    EXPECT_EQ(gadget.graph.vertex_count(), 16);
    EXPECT_EQ(gadget.tree.vertex_count(), 7);
    EXPECT_EQ(gadget.target, 6);
    EXPECT_TRUE(is_connected(gadget.graph));
}

TEST(Gadget, ClosedFormSizes)
{
    for (auto inst : {yes_instance(), no_instance()}) {
        auto gadget = build_gadget(inst);
        int k = inst.k, s = static_cast<int>(inst.triples.size());
        EXPECT_EQ(gadget.graph.vertex_count(), 6 * k + s);

        int u_v_edges = 0;
        for (int i = 0; i < 3; ++i)
            for (int a = 0; a < k; ++a)
                u_v_edges += 1 + containing(inst, i, a);
        EXPECT_EQ(gadget.graph.edge_count(), u_v_edges + 3 * s);
        EXPECT_EQ(gadget.graph.edge_count(), 3 * k + 6 * s);
    }
}

TEST(Gadget, VertexRolesAndDegrees)
{
    auto inst = yes_instance();
    auto gadget = build_gadget(inst);
    for (int v = 0; v < gadget.graph.vertex_count(); ++v) {
        auto & label = gadget.labels[v];
        switch (label.role) {
            case Role::U:
                EXPECT_EQ(gadget.f[v], 4 + label.coordinate);
                EXPECT_EQ(vertex_degree(gadget.graph, v), 1 + containing(inst, label.coordinate, label.index));
                break;
            case Role::V: {
                int c = containing(inst, label.coordinate, label.index);
                EXPECT_EQ(gadget.f[v], 1 + label.coordinate);
                EXPECT_EQ(vertex_degree(gadget.graph, v), (1 + c) + c);
                break;
            }
            case Role::W:
                EXPECT_EQ(gadget.f[v], 0);
                EXPECT_EQ(vertex_degree(gadget.graph, v), 3);
                break;
        }
    }
    auto & tree = gadget.tree;
    for (int i = 0; i < 3; ++i) {
        EXPECT_TRUE(tree.edge_between(4 + i, 1 + i));
        EXPECT_TRUE(tree.edge_between(1 + i, 0));
    }
}

TEST(Oracle, BruteForce)
{
    auto yes = brute_force_3dm(yes_instance());
    EXPECT_TRUE(yes.has_matching);
    ASSERT_TRUE(yes.matching);
    EXPECT_TRUE(is_matching(yes_instance(), *yes.matching));
    EXPECT_EQ(yes.matching->size(), 2u);

    EXPECT_FALSE(brute_force_3dm(no_instance()).has_matching);
}

TEST(Equivalence, HandBuilt)
{
    auto yes = build_gadget(yes_instance());
    auto fixed = solve_fixed_tf(yes.graph, yes.tree, yes.f, yes.target);
    EXPECT_TRUE(fixed.exists);
    EXPECT_EQ(fixed.best_degree, yes.target);
    auto matching = matching_from_indices(yes, *fixed.witness_r);
    EXPECT_EQ(matching.size(), 2u);
    EXPECT_TRUE(is_matching(yes_instance(), matching));

    auto no = build_gadget(no_instance());
    auto missing = solve_fixed_tf(no.graph, no.tree, no.f, no.target);
    EXPECT_FALSE(missing.exists);
    EXPECT_GT(missing.best_degree, no.target);

    EXPECT_TRUE(check_equivalence(yes_instance()));
    EXPECT_TRUE(check_equivalence(no_instance()));
}

TEST(Equivalence, WitnessStructure)
{
    auto gadget = build_gadget(yes_instance());
    auto fixed = solve_fixed_tf(gadget.graph, gadget.tree, gadget.f, gadget.target);
    ASSERT_TRUE(fixed.witness_r);
    int twos = 0;
    for (auto & edges : gadget.triple_edges) {
        auto value = (*fixed.witness_r)[edges[0]];
        EXPECT_TRUE(value == 1 || value == 2);
        for (auto e : edges)
            EXPECT_EQ((*fixed.witness_r)[e], value);
        twos += value == 2;
    }
    EXPECT_EQ(twos, yes_instance().k);
}

TEST(Equivalence, RandomInstances)
{
    std::mt19937_64 rng(2);
    int checked = 0;
    while (checked < 20) {
        ThreeDMInstance inst{2, {}};
        int s = 3 + static_cast<int>(rng() % 4);
        std::set<Triple> chosen;
        while (static_cast<int>(chosen.size()) < s)
            chosen.insert({static_cast<int>(rng() % 2), static_cast<int>(rng() % 2), static_cast<int>(rng() % 2)});
        inst.triples.assign(chosen.begin(), chosen.end());
        if (check_instance(inst))
            continue;
        EXPECT_TRUE(check_equivalence(inst)) << write_3dm(inst);
        ++checked;
    }
}

TEST(Formats, ThreeDmRoundTrip)
{
    auto text = write_3dm(yes_instance());
    EXPECT_EQ(text, "3dm 2\ns 0 0 0\ns 0 0 1\ns 1 1 0\ns 1 1 1\n");
    auto back = parse_3dm("# instance\n" + text);
    EXPECT_EQ(back.k, 2);
    EXPECT_EQ(back.triples, yes_instance().triples);
    EXPECT_THROW(parse_3dm("3dm 2\ns 0 0 5"), ParseError);
    EXPECT_THROW(parse_3dm("s 0 0 0"), ParseError);
    EXPECT_THROW(parse_3dm("3dm 2\nt 0 0 0"), ParseError);
}

TEST(Formats, TreeMapRoundTrip)
{
    auto gadget = build_gadget(no_instance());
    auto text = write_tree_map(gadget.tree, gadget.f, gadget.target);
    auto map = parse_tree_map(text);
    EXPECT_EQ(map.tree, gadget.tree);
    EXPECT_EQ(map.f, gadget.f);
    EXPECT_EQ(map.target, gadget.target);
    EXPECT_THROW(parse_tree_map("tree 2\nt 0 1\nf 0 0\n"), ParseError);
    EXPECT_THROW(parse_tree_map("tree 3\nt 0 1\nf 0 0\ntarget 1\n"), ParseError);
    EXPECT_THROW(parse_tree_map("tree 2\nt 0 1\nf 1 0\ntarget 1\n"), ParseError);
}
