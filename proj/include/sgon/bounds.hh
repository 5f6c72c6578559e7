#ifndef SGON_BOUNDS_HH
#define SGON_BOUNDS_HH

#include <sgon/multigraph.hh>

namespace sgon {

/// floor((m - n + 4) / 2); also the largest index worth assigning to an edge.
auto upper_bound(const Multigraph & g) -> int;

/// 1 for trees, 2 otherwise (refinements preserve the Betti number).
auto lower_bound(const Multigraph & g) -> int;

} // namespace sgon

#endif
