#ifndef SGON_ENUMERATE_HH
#define SGON_ENUMERATE_HH

#include <sgon/multigraph.hh>
#include <sgon/tree.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sgon {

using PruferCode = std::vector<VertexId>;

/// Labelled tree on [0, k) with the given Prüfer code (length k - 2, k >= 2).
auto prufer_decode(std::span<const VertexId> code, int k) -> TreeGraph;
auto prufer_encode(const TreeGraph & tree) -> PruferCode;

/// A candidate (T, f, r): tree on [0, k), surjection V(G) -> [0, k), index per edge of G.
struct TupleAlpha {
    TreeGraph tree;
    std::vector<VertexId> f;
    std::vector<int> r;
};

/*
 * The streams below are cursors: construct, then call next() until it
 * returns false; the current value is valid after each successful next().
 * All are deterministic and restart from the beginning on reset().
 */

/// Set partitions of [0, n) into exactly k nonempty blocks, as restricted
/// growth strings (blocks numbered by their smallest element), in lex order.
class PartitionStream {
public:
    PartitionStream(int n, int k);

    auto next() -> bool;
    void reset();
    auto blocks() const -> const std::vector<VertexId> & { return _blocks; }

private:
    int _n, _k;
    bool _started = false;
    std::vector<VertexId> _blocks;
};

/// All maps [0, m) -> [1, i_max] in lexicographic order.
class IndexStream {
public:
    IndexStream(int m, int i_max);

    auto next() -> bool;
    void reset();
    auto indices() const -> const std::vector<int> & { return _indices; }

private:
    int _m, _i_max;
    bool _started = false, _done = false;
    std::vector<int> _indices;
};

/// All labelled trees on [0, k), ordered by Prüfer code; k = 1 yields the single vertex.
class LabelledTreeStream {
public:
    explicit LabelledTreeStream(int k);

    auto next() -> bool;
    void reset();
    auto tree() const -> const TreeGraph & { return _tree; }

private:
    int _k;
    bool _started = false, _done = false;
    PruferCode _code;
    TreeGraph _tree;
};

/// A (T, f) pair together with its position in the stream.
struct TreeFunctionPair {
    std::uint64_t sequence = 0;
    TreeGraph tree;
    std::vector<VertexId> f;
};

/// For k = 1..n: every partition into k blocks times every labelled tree on the block labels.
class PairStream {
public:
    explicit PairStream(int n);

    auto next() -> bool;
    void reset();
    auto current() const -> const TreeFunctionPair & { return _current; }

private:
    auto advance_partition() -> bool;

    int _n;
    int _k = 0;
    bool _fresh = true;
    std::optional<PartitionStream> _partitions;
    std::optional<LabelledTreeStream> _trees;
    std::uint64_t _count = 0;
    TreeFunctionPair _current;
};

/// PairStream x IndexStream over the edges of g. Rejects disconnected or empty graphs.
class TupleStream {
public:
    TupleStream(const Multigraph & g, int i_max);

    auto next() -> bool;
    void reset();
    auto current() const -> const TupleAlpha & { return _current; }

private:
    int _m, _i_max;
    PairStream _pairs;
    IndexStream _indices;
    bool _have_pair = false;
    TupleAlpha _current;
};

auto stirling2(int n, int k) -> std::uint64_t;
auto cayley_count(int k) -> std::uint64_t; // k^(k-2), 1 for k = 1

} // namespace sgon

#endif
