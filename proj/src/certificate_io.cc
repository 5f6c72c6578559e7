#include <sgon/errors.hh>
#include <sgon/morphism.hh>

#include "text_util.hh"

#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace sgon {

namespace {
    auto narrow(long long value, int line) -> int
    {
        if (value < -1'000'000'000LL || value > 1'000'000'000LL)
            throw ParseError(line, "integer out of range");
        return static_cast<int>(value);
    }

    auto kind_name(Provenance kind) -> string_view
    {
        switch (kind) {
            case Provenance::Original: return "orig";
            case Provenance::Internal: return "int";
            case Provenance::External: return "ext";
        }
        return "?";
    }
}

auto parse_certificate(string_view text) -> Certificate
{
    auto lines = detail::content_lines(text);
    std::size_t pos = 0;
    auto next = [&](string_view keyword) -> const detail::Line & {
        if (pos >= lines.size())
            throw ParseError(0, "unexpected end of certificate, expected '" + string(keyword) + "'");
        auto & line = lines[pos++];
        if (line.tokens.front() != keyword)
            throw ParseError(line.number, "expected '" + string(keyword) + "', got '" + string(line.tokens.front()) + "'");
        return line;
    };
    auto peek_is = [&](string_view keyword) { return pos < lines.size() && lines[pos].tokens.front() == keyword; };

    Certificate cert;

    auto & header = next("cert");
    detail::expect_arity(header, 2);
    if (header.tokens[1] != "1")
        throw ParseError(header.number, "unsupported certificate version");

    auto & degree = next("degree");
    detail::expect_arity(degree, 2);
    cert.claimed_degree = narrow(detail::parse_int(degree.tokens[1], degree.number), degree.number);

    if (peek_is("graph")) {
        auto & label = next("graph");
        detail::expect_arity(label, 2);
        if (label.tokens[1] != "reduced")
            throw ParseError(label.number, "unknown graph label");
        auto & mgf = next("mgf");
        detail::expect_arity(mgf, 2);
        Multigraph reduced(detail::parse_count(mgf.tokens[1], mgf.number));
        while (peek_is("e")) {
            auto & line = next("e");
            detail::expect_arity(line, 3);
            auto u = detail::parse_int(line.tokens[1], line.number), v = detail::parse_int(line.tokens[2], line.number);
            if (u < 0 || v < 0 || u >= reduced.vertex_count() || v >= reduced.vertex_count())
                throw ParseError(line.number, "vertex id out of range");
            reduced.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        }
        cert.reduced_graph = std::move(reduced);
    }

    auto & tree_line = next("tree");
    detail::expect_arity(tree_line, 2);
    auto k = detail::parse_count(tree_line.tokens[1], tree_line.number);
    if (k < 1)
        throw ParseError(tree_line.number, "tree must have at least one vertex");
    Multigraph tree(k);
    for (int i = 0; i + 1 < k; ++i) {
        auto & line = next("t");
        detail::expect_arity(line, 3);
        auto a = detail::parse_int(line.tokens[1], line.number), b = detail::parse_int(line.tokens[2], line.number);
        if (a < 0 || b < 0 || a >= k || b >= k)
            throw ParseError(line.number, "tree vertex id out of range");
        tree.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }

    auto & refinement_line = next("refinement");
    detail::expect_arity(refinement_line, 2);
    auto h = detail::parse_count(refinement_line.tokens[1], refinement_line.number);
    Multigraph host(h);
    vector<RefinementVertex> tags(static_cast<std::size_t>(h));
    vector<VertexId> image(static_cast<std::size_t>(h), -1);
    vector<bool> seen(static_cast<std::size_t>(h), false);
    for (int i = 0; i < h; ++i) {
        auto & line = next("hv");
        if (line.tokens.size() < 4)
            throw ParseError(line.number, "truncated 'hv' line");
        auto id = detail::parse_int(line.tokens[1], line.number);
        if (id < 0 || id >= h || seen[static_cast<std::size_t>(id)])
            throw ParseError(line.number, "refinement vertex id missing, duplicated or out of range");
        seen[static_cast<std::size_t>(id)] = true;
        auto & tag = tags[static_cast<std::size_t>(id)];
        auto kind = line.tokens[2];
        if (kind == "orig") {
            detail::expect_arity(line, 5);
            tag = {Provenance::Original, narrow(detail::parse_int(line.tokens[3], line.number), line.number)};
        }
        else if (kind == "int" || kind == "ext") {
            detail::expect_arity(line, 4);
            tag = {kind == "int" ? Provenance::Internal : Provenance::External, -1};
        }
        else
            throw ParseError(line.number, "unknown provenance '" + string(kind) + "'");
        image[static_cast<std::size_t>(id)] = narrow(detail::parse_int(line.tokens.back(), line.number), line.number);
    }

    vector<int> index;
    vector<EdgeId> edge_image;
    TreeGraph lookup;
    bool tree_ok = is_tree(tree);
    if (tree_ok)
        lookup = TreeGraph(tree);
    while (peek_is("he")) {
        auto & line = next("he");
        detail::expect_arity(line, 6);
        long long values[5];
        for (int i = 0; i < 5; ++i)
            values[i] = detail::parse_int(line.tokens[static_cast<std::size_t>(i) + 1], line.number);
        if (values[0] < 0 || values[1] < 0 || values[0] >= h || values[1] >= h)
            throw ParseError(line.number, "refinement vertex id out of range");
        host.add_edge(static_cast<VertexId>(values[0]), static_cast<VertexId>(values[1]));
        index.push_back(narrow(values[2], line.number));
        EdgeId resolved = -1;
        if (tree_ok)
            if (auto e = lookup.edge_between(narrow(values[3], line.number), narrow(values[4], line.number)))
                resolved = *e;
        edge_image.push_back(resolved);
    }

    next("end");
    if (pos != lines.size())
        throw ParseError(lines[pos].number, "content after 'end'");

    cert.morphism = FiniteMorphism{Refinement{std::move(host), std::move(tags)}, std::move(tree), std::move(image), std::move(index), std::move(edge_image)};
    return cert;
}

auto write_certificate(const Certificate & cert) -> string
{
    auto & phi = cert.morphism;
    auto & host = phi.domain.host;
    std::ostringstream out;
    out << "cert 1\n";
    out << "degree " << cert.claimed_degree << '\n';
    if (cert.reduced_graph) {
        out << "graph reduced\n";
        out << write_mgf(*cert.reduced_graph);
    }
    out << "tree " << phi.codomain.vertex_count() << '\n';
    for (auto & e : phi.codomain.edges())
        out << "t " << e.u << ' ' << e.v << '\n';
    out << "refinement " << host.vertex_count() << '\n';
    for (VertexId v = 0; v < host.vertex_count(); ++v) {
        auto & tag = phi.domain.provenance[static_cast<std::size_t>(v)];
        out << "hv " << v << ' ' << kind_name(tag.kind);
        if (tag.kind == Provenance::Original)
            out << ' ' << tag.base;
        out << ' ' << phi.vertex_image[static_cast<std::size_t>(v)] << '\n';
    }
    for (EdgeId e = 0; e < host.edge_count(); ++e) {
        auto [u, v] = host.edge(e);
        auto image = phi.codomain.edge(phi.edge_image[static_cast<std::size_t>(e)]);
        auto a = image.u, b = image.v;
        if (a != phi.vertex_image[static_cast<std::size_t>(u)])
            std::swap(a, b);
        out << "he " << u << ' ' << v << ' ' << phi.edge_index[static_cast<std::size_t>(e)] << ' ' << a << ' ' << b << '\n';
    }
    out << "end\n";
    return out.str();
}

} // namespace sgon
