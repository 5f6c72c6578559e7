#include <sgon/errors.hh>
#include <sgon/reduction.hh>
#include <sgon/solver.hh>

#include "text_util.hh"

#include <set>
#include <sstream>

using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace sgon {

auto check_instance(const ThreeDMInstance & inst) -> optional<string>
{
    if (inst.k < 1)
        return "k must be positive";
    std::set<Triple> seen;
    vector<vector<int>> containing(3, vector<int>(static_cast<std::size_t>(inst.k), 0));
    for (auto & t : inst.triples) {
        for (int i = 0; i < 3; ++i)
            if (t[i] < 0 || t[i] >= inst.k)
                return "coordinate " + std::to_string(t[i]) + " out of range";
        if (! seen.insert(t).second)
            return "duplicate triple (" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) + ")";
        for (int i = 0; i < 3; ++i)
            ++containing[i][t[i]];
    }
    for (int i = 0; i < 3; ++i)
        for (int a = 0; a < inst.k; ++a)
            if (containing[i][a] < 2)
                return "element " + std::to_string(a) + " of set " + std::to_string(i + 1) + " lies in fewer than two triples";
    return std::nullopt;
}

auto build_gadget(const ThreeDMInstance & inst) -> GadgetInstance
{
    if (auto reason = check_instance(inst))
        throw InvalidInput("invalid 3DM instance: " + *reason);

    int k = inst.k;
    int s_count = static_cast<int>(inst.triples.size());
    auto u_of = [k](int i, int a) { return i * k + a; };
    auto v_of = [k](int i, int a) { return 3 * k + i * k + a; };
    auto w_of = [k](int s) { return 6 * k + s; };

    GadgetInstance gadget;
    gadget.graph = Multigraph(6 * k + s_count);
    gadget.labels.resize(static_cast<std::size_t>(6 * k + s_count));
    gadget.f.resize(gadget.labels.size());
    for (int i = 0; i < 3; ++i)
        for (int a = 0; a < k; ++a) {
            gadget.labels[u_of(i, a)] = {Role::U, i, a};
            gadget.labels[v_of(i, a)] = {Role::V, i, a};
            gadget.f[u_of(i, a)] = 4 + i;
            gadget.f[v_of(i, a)] = 1 + i;
            gadget.graph.add_edge(u_of(i, a), v_of(i, a));
        }
    for (int s = 0; s < s_count; ++s) {
        gadget.labels[w_of(s)] = {Role::W, -1, s};
        gadget.f[w_of(s)] = 0;
        auto & t = inst.triples[s];
        std::array<EdgeId, 3> edges{};
        for (int i = 0; i < 3; ++i)
            edges[i] = gadget.graph.add_edge(v_of(i, t[i]), w_of(s));
        for (int i = 0; i < 3; ++i)
            gadget.graph.add_edge(u_of(i, t[i]), v_of(i, t[i]));
        gadget.triple_edges.push_back(edges);
    }

    Multigraph tree(7);
    for (int i = 0; i < 3; ++i) {
        tree.add_edge(1 + i, 0);
        tree.add_edge(4 + i, 1 + i);
    }
    gadget.tree = TreeGraph(tree);
    gadget.target = s_count + k;
    return gadget;
}

namespace {
    auto extend(const ThreeDMInstance & inst, std::size_t next, vector<int> & chosen, vector<vector<bool>> & used) -> bool
    {
        if (static_cast<int>(chosen.size()) == inst.k)
            return true;
        for (auto s = next; s < inst.triples.size(); ++s) {
            auto & t = inst.triples[s];
            if (used[0][t[0]] || used[1][t[1]] || used[2][t[2]])
                continue;
            for (int i = 0; i < 3; ++i)
                used[i][t[i]] = true;
            chosen.push_back(static_cast<int>(s));
            if (extend(inst, s + 1, chosen, used))
                return true;
            chosen.pop_back();
            for (int i = 0; i < 3; ++i)
                used[i][t[i]] = false;
        }
        return false;
    }
}

auto brute_force_3dm(const ThreeDMInstance & inst) -> MatchingResult
{
    vector<int> chosen;
    vector<vector<bool>> used(3, vector<bool>(static_cast<std::size_t>(std::max(inst.k, 0)), false));
    if (! extend(inst, 0, chosen, used))
        return {};
    return {true, chosen};
}

auto matching_from_indices(const GadgetInstance & gadget, span<const int> r) -> vector<int>
{
    if (r.size() != static_cast<std::size_t>(gadget.graph.edge_count()))
        throw InvalidInput("index map has the wrong length");
    vector<int> matching;
    for (std::size_t s = 0; s < gadget.triple_edges.size(); ++s) {
        auto & edges = gadget.triple_edges[s];
        bool all_two = true;
        for (auto e : edges)
            all_two = all_two && r[static_cast<std::size_t>(e)] == 2;
        if (all_two)
            matching.push_back(static_cast<int>(s));
    }
    return matching;
}

auto is_matching(const ThreeDMInstance & inst, span<const int> chosen) -> bool
{
    std::set<int> elements[3];
    std::set<int> distinct;
    for (auto s : chosen) {
        if (s < 0 || s >= static_cast<int>(inst.triples.size()) || ! distinct.insert(s).second)
            return false;
        for (int i = 0; i < 3; ++i)
            if (! elements[i].insert(inst.triples[s][i]).second)
                return false;
    }
    return true;
}

auto check_equivalence(const ThreeDMInstance & inst) -> bool
{
    auto gadget = build_gadget(inst);
    auto fixed = solve_fixed_tf(gadget.graph, gadget.tree, gadget.f, gadget.target);
    auto oracle = brute_force_3dm(inst);
    if (fixed.exists != oracle.has_matching)
        return false;
    if (! fixed.exists)
        return true;
    auto matching = matching_from_indices(gadget, *fixed.witness_r);
    return static_cast<int>(matching.size()) == inst.k && is_matching(inst, matching);
}

auto parse_3dm(string_view text) -> ThreeDMInstance
{
    auto lines = detail::content_lines(text);
    if (lines.empty() || lines.front().tokens.front() != "3dm")
        throw ParseError(lines.empty() ? 0 : lines.front().number, "expected '3dm <k>' header");
    detail::expect_arity(lines.front(), 2);

    ThreeDMInstance inst;
    inst.k = detail::parse_count(lines.front().tokens[1], lines.front().number);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto & line = lines[i];
        if (line.tokens.front() != "s")
            throw ParseError(line.number, "unknown directive '" + string(line.tokens.front()) + "'");
        detail::expect_arity(line, 4);
        Triple t{};
        for (int c = 0; c < 3; ++c) {
            auto value = detail::parse_int(line.tokens[c + 1], line.number);
            if (value < 0 || value >= inst.k)
                throw ParseError(line.number, "coordinate " + std::to_string(value) + " out of range");
            t[c] = static_cast<int>(value);
        }
        inst.triples.push_back(t);
    }
    return inst;
}

auto write_3dm(const ThreeDMInstance & inst) -> string
{
    std::ostringstream out;
    out << "3dm " << inst.k << '\n';
    for (auto & t : inst.triples)
        out << "s " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return out.str();
}

auto write_tree_map(const TreeGraph & tree, span<const VertexId> f, int target) -> string
{
    std::ostringstream out;
    out << "tree " << tree.vertex_count() << '\n';
    for (auto & e : tree.graph().edges())
        out << "t " << e.u << ' ' << e.v << '\n';
    for (std::size_t v = 0; v < f.size(); ++v)
        out << "f " << v << ' ' << f[v] << '\n';
    out << "target " << target << '\n';
    return out.str();
}

auto parse_tree_map(string_view text) -> TreeMap
{
    auto lines = detail::content_lines(text);
    if (lines.empty() || lines.front().tokens.front() != "tree")
        throw ParseError(lines.empty() ? 0 : lines.front().number, "expected 'tree <k>' header");
    detail::expect_arity(lines.front(), 2);
    int k = detail::parse_count(lines.front().tokens[1], lines.front().number);
    if (k < 1)
        throw ParseError(lines.front().number, "tree needs at least one vertex");

    Multigraph tree(k);
    vector<optional<VertexId>> f;
    optional<int> target;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto & line = lines[i];
        auto directive = line.tokens.front();
        if (directive == "t") {
            detail::expect_arity(line, 3);
            auto a = detail::parse_int(line.tokens[1], line.number);
            auto b = detail::parse_int(line.tokens[2], line.number);
            for (auto x : {a, b})
                if (x < 0 || x >= k)
                    throw ParseError(line.number, "tree vertex " + std::to_string(x) + " out of range");
            tree.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
        }
        else if (directive == "f") {
            detail::expect_arity(line, 3);
            auto v = detail::parse_count(line.tokens[1], line.number);
            auto t = detail::parse_int(line.tokens[2], line.number);
            if (t < 0 || t >= k)
                throw ParseError(line.number, "tree vertex " + std::to_string(t) + " out of range");
            if (static_cast<std::size_t>(v) >= f.size())
                f.resize(static_cast<std::size_t>(v) + 1);
            if (f[v])
                throw ParseError(line.number, "vertex " + std::to_string(v) + " mapped twice");
            f[v] = static_cast<VertexId>(t);
        }
        else if (directive == "target") {
            detail::expect_arity(line, 2);
            if (target)
                throw ParseError(line.number, "duplicate target");
            target = detail::parse_count(line.tokens[1], line.number);
        }
        else
            throw ParseError(line.number, "unknown directive '" + string(directive) + "'");
    }
    if (! is_tree(tree))
        throw ParseError(0, "tree lines do not describe a tree");
    if (! target)
        throw ParseError(0, "missing target line");

    TreeMap map{TreeGraph(tree), {}, *target};
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (! f[v])
            throw ParseError(0, "vertex " + std::to_string(v) + " has no image");
        map.f.push_back(*f[v]);
    }
    return map;
}

} // namespace sgon
