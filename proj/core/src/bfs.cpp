#include "planarsep/bfs.hpp"

#include <algorithm>
#include <string>

namespace planarsep {

BfsTree bfs_tree(const PlanarEmbedding& g, int root,
                 const std::vector<std::vector<int>>& seed_paths) {
    require(root >= 0 && root < g.n, errc::bad_seed_path, "root out of range");

    BfsTree t;
    t.root = root;
    t.parent.assign(g.n, -1);
    t.rdist.assign(g.n, -1);
    t.rdist[root] = 0;

    // Preseed depths/parents along the given shortest paths.
    std::vector<int> seeded;  // all seeded vertices except the root
    for (const auto& path : seed_paths) {
        if (path.empty()) continue;
        require(path.front() == root, errc::bad_seed_path, "seed path does not start at the root");
        for (std::size_t i = 1; i < path.size(); ++i) {
            int v = path[i], prev = path[i - 1];
            require(v >= 0 && v < g.n && g.has_edge(prev, v), errc::bad_seed_path,
                    "seed path uses non-edge (" + std::to_string(prev) + "," + std::to_string(v) + ")");
            int depth = static_cast<int>(i);
            if (t.rdist[v] < 0) {
                t.rdist[v] = depth;
                t.parent[v] = prev;
                seeded.push_back(v);
            } else {
                require(t.rdist[v] == depth, errc::bad_seed_path,
                        "seed paths assign conflicting depths to vertex " + std::to_string(v));
            }
        }
    }

    // Initial queue must be depth-sorted for the BFS invariant to hold.
    std::vector<int> queue;
    queue.reserve(g.n);
    queue.push_back(root);
    std::stable_sort(seeded.begin(), seeded.end(),
                     [&](int a, int b) { return t.rdist[a] < t.rdist[b]; });
    queue.insert(queue.end(), seeded.begin(), seeded.end());

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        int dv = t.rdist[v];
        for (int d = g.rot_offset[v]; d < g.rot_offset[v + 1]; ++d) {
            int w = g.neighbors[d];
            if (t.rdist[w] < 0) {
                t.rdist[w] = dv + 1;
                t.parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    require(static_cast<int>(queue.size()) == g.n, errc::internal_error,
            "BFS did not reach every vertex of a connected graph");

    // A non-shortest seed path would leave an edge spanning >= 2 levels.
    for (std::size_t d2 = 0; d2 < g.neighbors.size(); ++d2) {
        int a = g.dart_tail[d2], b = g.neighbors[d2];
        if (t.rdist[a] - t.rdist[b] > 1)
            raise(errc::bad_seed_path, "seed depths contradict an already-shorter distance at vertex " +
                                           std::to_string(a));
    }
    return t;
}

std::vector<int> tree_path_from_root(const BfsTree& t, int v) {
    std::vector<int> path;
    for (int x = v; x >= 0; x = t.parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace planarsep
