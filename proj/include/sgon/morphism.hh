#ifndef SGON_MORPHISM_HH
#define SGON_MORPHISM_HH

#include <sgon/multigraph.hh>
#include <sgon/tree.hh>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sgon {

enum class Provenance : unsigned char
{
    Original,
    Internal,
    External
};

struct RefinementVertex {
    Provenance kind = Provenance::Original;
    VertexId base = -1; // vertex of the base graph; -1 unless kind is Original

    auto operator==(const RefinementVertex &) const -> bool = default;
};

/// A host graph H whose vertices are tagged relative to a base graph G.
struct Refinement {
    Multigraph host;
    std::vector<RefinementVertex> provenance;
};

/**
 * A finite morphism from a refinement to a tree. The codomain is kept as a
 * plain Multigraph so that untrusted certificates can be represented; use
 * check_structure() before relying on any of the invariants.
 */
struct FiniteMorphism {
    Refinement domain;
    Multigraph codomain;
    std::vector<VertexId> vertex_image; // V(H) -> V(T')
    std::vector<int> edge_index;        // E(H) -> index, r_phi(e)
    std::vector<EdgeId> edge_image;     // E(H) -> E(T'), -1 when unresolved
};

/// Reason the morphism is not a structurally valid finite morphism to a tree, if any.
auto check_structure(const FiniteMorphism & phi) -> std::optional<std::string>;

/// m_{phi,e}(v): sum of indices of edges at v mapped onto tree edge e.
auto direction_index(const FiniteMorphism & phi, VertexId v, EdgeId tree_edge) -> int;

struct HarmonicViolation {
    VertexId vertex;
    EdgeId direction_a;
    int index_a;
    EdgeId direction_b;
    int index_b;
};

struct HarmonicityReport {
    bool harmonic = false;
    std::vector<int> vertex_index; // m_phi(v); filled only when harmonic
    std::optional<HarmonicViolation> violation;
};

/**
 * Checks harmonicity at every vertex of the domain over every edge at its
 * image. Throws InvalidInput if the morphism is structurally invalid. Vertices
 * mapped to an isolated codomain vertex get m_phi = 1.
 */
auto is_harmonic(const FiniteMorphism & phi) -> HarmonicityReport;

/**
 * Degree of a harmonic morphism. Recomputes the fiber sum for every codomain
 * edge and the index sum for every codomain vertex and throws InternalError
 * if they disagree. A single-vertex codomain has degree |V(H)|.
 */
auto morphism_degree(const FiniteMorphism & phi) -> int;

/// Reason `refinement` is not a refinement of `base` with consistent tags, if any.
auto check_refinement(const Multigraph & base, const Refinement & refinement) -> std::optional<std::string>;

struct Certificate {
    FiniteMorphism morphism;
    int claimed_degree = 0;
    // When present, the certificate witnesses this graph (the stable reduction
    // of the graph it was computed for) rather than the input graph itself.
    std::optional<Multigraph> reduced_graph;

    auto tree() const -> const Multigraph & { return morphism.codomain; }
    auto refinement() const -> const Refinement & { return morphism.domain; }
};

struct Verdict {
    bool accepted = false;
    std::optional<int> computed_degree;
    std::optional<std::string> failure_reason;
};

/// Total check that `cert` witnesses sgon(g) <= cert.claimed_degree.
auto verify_certificate(const Multigraph & g, const Certificate & cert) -> Verdict;

auto parse_certificate(std::string_view text) -> Certificate;
auto write_certificate(const Certificate & cert) -> std::string;

} // namespace sgon

#endif
