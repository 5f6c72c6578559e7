#ifndef SGON_SOLVER_HH
#define SGON_SOLVER_HH

#include <sgon/bounds.hh>
#include <sgon/construct.hh>
#include <sgon/enumerate.hh>
#include <sgon/morphism.hh>
#include <sgon/multigraph.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sgon {

struct SolveOptions {
    bool use_reduction = true;
    std::optional<int> max_index_override;
    int parallelism = 1;
    bool prune = true;
    std::optional<std::uint64_t> budget; // stop after this many evaluated tuples
};

struct SolveResult {
    int sgon = 0;
    Certificate certificate;
    std::uint64_t tuples_examined = 0;
    std::uint64_t pruned = 0;
    std::chrono::nanoseconds wall_time{0};

    Multigraph searched_graph;          // the graph the certificate witnesses
    bool reduced = false;               // searched_graph is the stable reduction of the input
    std::optional<TupleAlpha> best_tuple; // absent for the closed-form answers
    bool complete = true;               // false when the budget cut the search short
};

/**
 * Stable gonality of a connected multigraph by exhaustive search over tuples
 * (T, f, r). The result, including the certificate, does not depend on
 * parallelism or pruning.
 */
auto sgon(const Multigraph & g, const SolveOptions & opts = {}) -> SolveResult;

struct Decision {
    bool yes = false;
    std::optional<Certificate> certificate;
    std::uint64_t tuples_examined = 0;
    std::uint64_t pruned = 0;
};

/// Is sgon(g) <= k? Stops at the first tuple of degree at most k.
auto decide(const Multigraph & g, int k, const SolveOptions & opts = {}) -> Decision;

struct FixedPairResult {
    bool exists = false;
    int best_degree = 0;
    std::optional<std::vector<int>> witness_r; // an index map attaining best_degree, when exists
    std::uint64_t tuples_examined = 0;
};

/**
 * With (T, f) fixed, minimizes the degree of phi_(T,f,r) over
 * r: E(g) -> [1, i_max] and reports whether the minimum is at most k.
 * i_max defaults to upper_bound(g). Indices of edges inside a block do not
 * affect the degree and are reported as 1.
 */
auto solve_fixed_tf(const Multigraph & g, const TreeGraph & tree, std::span<const VertexId> f, int k,
    std::optional<int> i_max = std::nullopt) -> FixedPairResult;

} // namespace sgon

#endif
