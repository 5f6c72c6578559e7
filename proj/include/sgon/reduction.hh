#ifndef SGON_REDUCTION_HH
#define SGON_REDUCTION_HH

#include <sgon/multigraph.hh>
#include <sgon/tree.hh>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgon {

using Triple = std::array<int, 3>;

/// Three coordinate sets of size k, each element in at least two triples.
struct ThreeDMInstance {
    int k = 0;
    std::vector<Triple> triples;
};

/// Reason the instance is not valid, if any.
auto check_instance(const ThreeDMInstance & inst) -> std::optional<std::string>;

enum class Role { U, V, W };

struct VertexRole {
    Role role;
    int coordinate = -1; // 0..2 for u and v vertices
    int index = 0;       // element within its coordinate set, or triple index for w
};

/**
 * Gadget vertices: u for element a of set i is i*k + a, v is 3k + i*k + a,
 * w for triple s is 6k + s. Tree vertices: w = 0, v_i = 1 + i, u_i = 4 + i.
 */
struct GadgetInstance {
    Multigraph graph;
    TreeGraph tree;
    std::vector<VertexId> f;
    int target = 0;
    std::vector<VertexRole> labels;
    std::vector<std::array<EdgeId, 3>> triple_edges; // the v-w edges of each triple
};

auto build_gadget(const ThreeDMInstance & inst) -> GadgetInstance;

struct MatchingResult {
    bool has_matching = false;
    std::optional<std::vector<int>> matching; // triple indices
};

/// Exhaustive search for k pairwise disjoint triples.
auto brute_force_3dm(const ThreeDMInstance & inst) -> MatchingResult;

/// Triples whose three v-w edges all carry index 2.
auto matching_from_indices(const GadgetInstance & gadget, std::span<const int> r) -> std::vector<int>;

auto is_matching(const ThreeDMInstance & inst, std::span<const int> chosen) -> bool;

/// Does solve_fixed_tf on the gadget agree with brute_force_3dm?
auto check_equivalence(const ThreeDMInstance & inst) -> bool;

auto parse_3dm(std::string_view text) -> ThreeDMInstance;
auto write_3dm(const ThreeDMInstance & inst) -> std::string;

struct TreeMap {
    TreeGraph tree;
    std::vector<VertexId> f;
    int target = 0;
};

/// Sidecar format: `tree k`, `t a b` per tree edge, `f v t` per vertex, `target t`.
auto write_tree_map(const TreeGraph & tree, std::span<const VertexId> f, int target) -> std::string;
auto parse_tree_map(std::string_view text) -> TreeMap;

} // namespace sgon

#endif
