#ifndef SGON_CONSTRUCT_HH
#define SGON_CONSTRUCT_HH

#include <sgon/enumerate.hh>
#include <sgon/morphism.hh>
#include <sgon/multigraph.hh>
#include <sgon/tree.hh>

#include <optional>
#include <span>
#include <vector>

namespace sgon {

struct ConstructionResult {
    Refinement refinement;    // H_alpha
    TreeGraph tree_prime;     // T' = T plus one leaf per same-image edge
    FiniteMorphism morphism;  // phi_alpha
    int degree = 0;
};

/// Throws InvalidInput unless alpha is a well-formed tuple for g with indices in [1, i_max].
void validate_tuple(const Multigraph & g, const TupleAlpha & alpha, int i_max);

/**
 * Builds the refinement H_alpha, the tree T' and the harmonic morphism
 * phi_alpha for a tuple alpha = (T, f, r):
 *
 *  1. every vertex v of g maps to f(v);
 *  2. an edge uv with f(u) = f(v) (loops included) is subdivided once, and the
 *     new vertex maps to a fresh leaf of T' hanging at f(u); both halves get
 *     index 1;
 *  3. an edge uv with f(u) != f(v) is subdivided along the tree path from
 *     f(u) to f(v), every piece with index r(uv);
 *  4. each vertex built so far (original or path-internal), in id order, is
 *     made harmonic by hanging a copy of the tree branch in every direction
 *     whose index falls short of the maximum, with the shortfall as index.
 *
 * i_max defaults to upper_bound(g).
 */
auto build_phi_alpha(const Multigraph & g, const TupleAlpha & alpha, std::optional<int> i_max = std::nullopt) -> ConstructionResult;

auto degree_of_alpha(const Multigraph & g, const TupleAlpha & alpha, std::optional<int> i_max = std::nullopt) -> int;

/**
 * Degree of phi_(T,f,r) as a function of r for fixed (T, f), without building
 * the refinement. Every fiber of phi_alpha over a tree edge e* decomposes as
 *
 *   fiber(e*) = base(e*) + sum_c coef(c, e*) r(c) + sum_w shortfall_w(e*)
 *
 * where c ranges over edges of g joining different blocks, w over original
 * and path-internal vertices, and shortfall_w(e*) is the gap between the
 * largest direction index at w and the one in the direction of e*. Evaluating
 * this with interval bounds on unassigned indices gives a lower bound that is
 * exact once all indices are fixed.
 */
class DegreeModel {
public:
    DegreeModel(const Multigraph & g, const TreeGraph & tree, std::span<const VertexId> f);

    /// Exact degree of phi_(T,f,r).
    auto degree(std::span<const int> r) const -> int;

    /**
     * Lower bound on the degree over all r with lo[e] <= r[e] <= hi[e].
     * Only entries for cross edges are read.
     */
    auto lower_bound(std::span<const int> lo, std::span<const int> hi) const -> int;

    /// Pre-harmonization load: max over tree edges of the indices mapped onto it.
    auto base_load(std::span<const int> r) const -> int;

    /// Edges of g whose endpoints lie in different blocks, ascending.
    auto cross_edges() const -> const std::vector<EdgeId> & { return _cross; }
    auto is_cross(EdgeId e) const -> bool { return _is_cross[static_cast<std::size_t>(e)]; }
    auto tree_prime_edge_count() const -> int { return _tree_edges; }

private:
    struct Slot {
        int constant = 0;
        std::vector<EdgeId> terms;
    };
    struct Vertex {
        std::vector<Slot> slots;
        std::vector<int> toward; // per tree' edge: slot index leading towards it
    };
    struct Coefficient {
        EdgeId edge;
        int tree_edge;
    };

    auto evaluate(std::span<const int> lo, std::span<const int> hi, bool single_edge) const -> int;

    int _tree_edges = 0;
    std::vector<EdgeId> _cross;
    std::vector<bool> _is_cross;
    std::vector<Vertex> _vertices;
    std::vector<int> _base;                     // per tree' edge
    std::vector<Coefficient> _coefficients;     // coef(c, e*) = 1 entries
    std::vector<std::vector<int>> _path_edges;  // per g edge: tree edges on its image path
    int _single_vertex_degree = 0;
};

} // namespace sgon

#endif
