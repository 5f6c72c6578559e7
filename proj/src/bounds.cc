#include <sgon/bounds.hh>

namespace sgon {

auto upper_bound(const Multigraph & g) -> int
{
    return (g.edge_count() - g.vertex_count() + 4) / 2;
}

auto lower_bound(const Multigraph & g) -> int
{
    return betti(g) == 0 ? 1 : 2;
}

} // namespace sgon
