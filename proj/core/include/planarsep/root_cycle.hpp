#pragma once

#include <vector>

#include "planarsep/bfs.hpp"
#include "planarsep/cycle.hpp"
#include "planarsep/faces.hpp"
#include "planarsep/tree_cut.hpp"

namespace planarsep {

/// Spanning tree of the dual graph: one node per face, one edge per primal
/// non-tree edge.  primal_edge[i] is the primal edge id behind tree edge i.
struct DualTree {
    FreeTree tree;
    std::vector<int> primal_edge;
};

/// Duals of the edges not in the primal spanning tree t.  Always a spanning
/// tree of the dual with maximum degree <= 3 for a triangulation.
DualTree dual_spanning_tree(const PlanarEmbedding& g, const FaceTable& ft, const BfsTree& t);

/// The possibly long fundamental-cycle separator together with everything
/// later phases need: the re-rooted BFS tree, its two shortest-path sides,
/// and the per-face inside/outside labels.
struct FundamentalCycle {
    BfsTree tree;             // re-rooted at the LCA r of (u, v)
    int u = -1, v = -1;       // the non-tree edge closing the cycle
    std::vector<int> path_u;  // r .. u, one vertex per depth
    std::vector<int> path_v;  // r .. v, one vertex per depth
    Cycle s;                  // path_u, edge uv, reverse(path_v)
    std::vector<char> inside_s;       // per face; outer face is outside
    long long faces_inside_s = 0;
    long long faces_outside_s = 0;
    int h_t = 0;              // max(depth(u), depth(v))
    int deep = -1;            // endpoint at depth h_t (u on ties)

    int root() const { return tree.root; }
    const std::vector<int>& deep_path() const { return deep == u ? path_u : path_v; }
    const std::vector<int>& other_path() const { return deep == u ? path_v : path_u; }
    int other_end() const { return deep == u ? v : u; }
};

/// Phase 1: BFS from vertex 0, balanced edge cut in the dual spanning tree,
/// fundamental cycle of the cut edge, re-rooted BFS at the cycle's apex.
/// Both face sides of the cycle are at most ceil(2F/3).
FundamentalCycle find_root_cycle(const PlanarEmbedding& g, const FaceTable& ft);

} // namespace planarsep
