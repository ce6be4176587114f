#pragma once

#include <vector>

#include "planarsep/embedding.hpp"

namespace planarsep {

/// Rooted shortest-path tree.  parent[root] = -1; rdist holds graph
/// distances from the root.
struct BfsTree {
    int root = -1;
    std::vector<int> parent;
    std::vector<int> rdist;

    int depth(int v) const { return rdist[v]; }
};

/// Breadth-first tree from `root`.  Each seed path must be a shortest path
/// starting at the root; its edges are forced into the tree and depths are
/// preseeded along it, after which a plain BFS fills in the rest.  Depths
/// still equal true graph distances.  Throws errc::bad_seed_path when a
/// seed is not a path from the root or its depths are inconsistent.
BfsTree bfs_tree(const PlanarEmbedding& g, int root,
                 const std::vector<std::vector<int>>& seed_paths = {});

/// Tree path root -> v.
std::vector<int> tree_path_from_root(const BfsTree& t, int v);

} // namespace planarsep
