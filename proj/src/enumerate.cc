#include <sgon/enumerate.hh>
#include <sgon/errors.hh>

#include <algorithm>
#include <queue>

using std::span;
using std::vector;

namespace sgon {

auto prufer_decode(span<const VertexId> code, int k) -> TreeGraph
{
    if (k < 2)
        throw InvalidInput("prufer_decode: tree size must be at least 2");
    if (code.size() != static_cast<std::size_t>(k - 2))
        throw InvalidInput("prufer_decode: code length must be k - 2");

    vector<int> degree(static_cast<std::size_t>(k), 1);
    for (auto x : code) {
        if (x < 0 || x >= k)
            throw InvalidInput("prufer_decode: entry out of range");
        ++degree[static_cast<std::size_t>(x)];
    }

    std::priority_queue<VertexId, vector<VertexId>, std::greater<>> leaves;
    for (VertexId v = 0; v < k; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1)
            leaves.push(v);

    Multigraph g(k);
    for (auto x : code) {
        auto leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, x);
        if (--degree[static_cast<std::size_t>(x)] == 1)
            leaves.push(x);
    }
    auto a = leaves.top();
    leaves.pop();
    g.add_edge(a, leaves.top());
    return TreeGraph(std::move(g));
}

auto prufer_encode(const TreeGraph & tree) -> PruferCode
{
    auto k = tree.vertex_count();
    if (k < 2)
        throw InvalidInput("prufer_encode: tree size must be at least 2");
    auto & g = tree.graph();

    vector<int> degree(static_cast<std::size_t>(k));
    vector<bool> removed(static_cast<std::size_t>(k), false);
    std::priority_queue<VertexId, vector<VertexId>, std::greater<>> leaves;
    for (VertexId v = 0; v < k; ++v) {
        degree[static_cast<std::size_t>(v)] = vertex_degree(g, v);
        if (degree[static_cast<std::size_t>(v)] == 1)
            leaves.push(v);
    }

    PruferCode code;
    while (static_cast<int>(code.size()) < k - 2) {
        auto leaf = leaves.top();
        leaves.pop();
        removed[static_cast<std::size_t>(leaf)] = true;
        for (auto e : g.incident(leaf)) {
            auto x = g.edge(e).other(leaf);
            if (removed[static_cast<std::size_t>(x)])
                continue;
            code.push_back(x);
            if (--degree[static_cast<std::size_t>(x)] == 1)
                leaves.push(x);
        }
    }
    return code;
}

PartitionStream::PartitionStream(int n, int k) :
    _n(n), _k(k)
{
    if (k < 1 || k > n)
        throw InvalidInput("enumerate_partitions: need 1 <= k <= n");
}

void PartitionStream::reset()
{
    _started = false;
    _blocks.clear();
}

auto PartitionStream::next() -> bool
{
    auto fill_suffix = [&](int from, VertexId current_max) {
        // lexicographically smallest completion that still reaches k blocks
        auto need = _k - 1 - current_max;
        auto length = _n - from;
        for (int j = from; j < _n; ++j) {
            auto slot = j - from;
            _blocks[static_cast<std::size_t>(j)] = slot < length - need ? 0 : current_max + 1 + (slot - (length - need));
        }
    };

    if (! _started) {
        _started = true;
        _blocks.assign(static_cast<std::size_t>(_n), 0);
        fill_suffix(1, 0);
        return true;
    }

    vector<VertexId> prefix_max(static_cast<std::size_t>(_n));
    prefix_max[0] = _blocks[0];
    for (int i = 1; i < _n; ++i)
        prefix_max[static_cast<std::size_t>(i)] = std::max(prefix_max[static_cast<std::size_t>(i - 1)], _blocks[static_cast<std::size_t>(i)]);

    for (int i = _n - 1; i >= 1; --i) {
        auto candidate = _blocks[static_cast<std::size_t>(i)] + 1;
        auto before = prefix_max[static_cast<std::size_t>(i - 1)];
        if (candidate > std::min(_k - 1, before + 1))
            continue;
        auto new_max = std::max(before, candidate);
        if (_k - 1 - new_max > _n - 1 - i)
            continue;
        _blocks[static_cast<std::size_t>(i)] = candidate;
        fill_suffix(i + 1, new_max);
        return true;
    }
    return false;
}

IndexStream::IndexStream(int m, int i_max) :
    _m(m), _i_max(i_max)
{
    if (m < 0 || i_max < 1)
        throw InvalidInput("enumerate_indices: need m >= 0 and i_max >= 1");
}

void IndexStream::reset()
{
    _started = _done = false;
    _indices.clear();
}

auto IndexStream::next() -> bool
{
    if (_done)
        return false;
    if (! _started) {
        _started = true;
        _indices.assign(static_cast<std::size_t>(_m), 1);
        return true;
    }
    for (int i = _m - 1; i >= 0; --i) {
        auto & x = _indices[static_cast<std::size_t>(i)];
        if (x < _i_max) {
            ++x;
            return true;
        }
        x = 1;
    }
    _done = true;
    return false;
}

LabelledTreeStream::LabelledTreeStream(int k) :
    _k(k)
{
    if (k < 1)
        throw InvalidInput("tree stream: k must be positive");
}

void LabelledTreeStream::reset()
{
    _started = _done = false;
}

auto LabelledTreeStream::next() -> bool
{
    if (_done)
        return false;
    if (! _started) {
        _started = true;
        if (_k == 1) {
            _tree = TreeGraph(Multigraph(1));
            return true;
        }
        _code.assign(static_cast<std::size_t>(_k - 2), 0);
        _tree = prufer_decode(_code, _k);
        return true;
    }
    for (int i = _k - 3; i >= 0; --i) {
        auto & x = _code[static_cast<std::size_t>(i)];
        if (x < _k - 1) {
            ++x;
            _tree = prufer_decode(_code, _k);
            return true;
        }
        x = 0;
    }
    _done = true;
    return false;
}

PairStream::PairStream(int n) :
    _n(n)
{
    if (n < 1)
        throw InvalidInput("pair stream: need at least one vertex");
}

void PairStream::reset()
{
    _k = 0;
    _fresh = true;
    _partitions.reset();
    _trees.reset();
    _count = 0;
}

auto PairStream::advance_partition() -> bool
{
    while (true) {
        if (_partitions && _partitions->next())
            return true;
        if (_k == _n)
            return false;
        ++_k;
        _partitions.emplace(_n, _k);
        _trees.emplace(_k);
    }
}

auto PairStream::next() -> bool
{
    if (_fresh) {
        _fresh = false;
        if (! advance_partition())
            return false;
    }
    if (! _trees->next()) {
        if (! advance_partition())
            return false;
        _trees->reset();
        _trees->next();
    }
    _current.sequence = _count++;
    _current.tree = _trees->tree();
    _current.f = _partitions->blocks();
    return true;
}

TupleStream::TupleStream(const Multigraph & g, int i_max) :
    _m(g.edge_count()), _i_max(i_max), _pairs(std::max(g.vertex_count(), 1)), _indices(g.edge_count(), i_max)
{
    if (g.vertex_count() < 1)
        throw InvalidInput("tuple stream: empty graph");
    if (! is_connected(g))
        throw InvalidInput("tuple stream: graph is disconnected");
}

void TupleStream::reset()
{
    _pairs.reset();
    _indices.reset();
    _have_pair = false;
}

auto TupleStream::next() -> bool
{
    while (true) {
        if (_have_pair && _indices.next()) {
            _current.r = _indices.indices();
            return true;
        }
        if (! _pairs.next())
            return false;
        _have_pair = true;
        _current.tree = _pairs.current().tree;
        _current.f = _pairs.current().f;
        _indices.reset();
    }
}

auto stirling2(int n, int k) -> std::uint64_t
{
    if (n < 0 || k < 0)
        return 0;
    vector<vector<std::uint64_t>> s(static_cast<std::size_t>(n) + 1, vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<std::uint64_t>(j) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]
                + s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

auto cayley_count(int k) -> std::uint64_t
{
    if (k < 1)
        return 0;
    if (k <= 2)
        return 1;
    std::uint64_t result = 1;
    for (int i = 0; i < k - 2; ++i)
        result *= static_cast<std::uint64_t>(k);
    return result;
}

} // namespace sgon
