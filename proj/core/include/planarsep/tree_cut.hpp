#pragma once

#include <array>
#include <vector>

#include "planarsep/errors.hpp"

namespace planarsep {

/// Unrooted tree on dense node ids 0..m-1 with bounded degree.
struct FreeTree {
    int m = 0;
    std::vector<std::array<int, 2>> edges;  // m-1 entries
    std::vector<int> adj_offset;            // CSR over nodes
    std::vector<int> adj_node;
    std::vector<int> adj_edge;              // edge id parallel to adj_node
    int max_degree = 2;                     // actual max degree, clamped to >= 2
};

/// Builds and validates (connected, acyclic) a FreeTree from an edge list.
FreeTree make_free_tree(int m, std::vector<std::array<int, 2>> edges);

struct EdgeCut {
    int u = -1, v = -1;       // cut edge; u is on the smaller-or-root side walk
    int edge_id = -1;
    long long side_v = 0;     // nodes in v's component after removal
    long long side_u = 0;     // m - side_v
};

/// Balanced edge separator: removing the returned edge leaves components of
/// size at most ceil((1 - 1/d) * m), d = max_degree.  Root the tree at node
/// 0, precompute subtree sizes iteratively, then walk from the root to the
/// heaviest child (ties toward the smaller id) until the child's subtree
/// fits the bound.  Linear time.  Throws errc::single_node for m = 1.
EdgeCut balanced_edge_cut(const FreeTree& t);

/// ceil((1 - 1/d) * m)
inline long long tree_cut_bound(long long m, long long d) {
    return ((d - 1) * m + d - 1) / d;
}

} // namespace planarsep
