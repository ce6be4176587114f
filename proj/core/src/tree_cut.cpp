#include "planarsep/tree_cut.hpp"

#include <algorithm>
#include <string>

namespace planarsep {

FreeTree make_free_tree(int m, std::vector<std::array<int, 2>> edges) {
    require(m >= 1, errc::internal_error, "tree needs at least one node");
    require(static_cast<int>(edges.size()) == m - 1, errc::internal_error,
            "tree on " + std::to_string(m) + " nodes needs " + std::to_string(m - 1) + " edges, got " +
                std::to_string(edges.size()));
    FreeTree t;
    t.m = m;
    t.edges = std::move(edges);

    std::vector<int> deg(m, 0);
    for (const auto& e : t.edges) {
        require(e[0] >= 0 && e[0] < m && e[1] >= 0 && e[1] < m && e[0] != e[1], errc::internal_error,
                "bad tree edge");
        deg[e[0]]++;
        deg[e[1]]++;
    }
    t.adj_offset.assign(m + 1, 0);
    for (int v = 0; v < m; ++v) t.adj_offset[v + 1] = t.adj_offset[v] + deg[v];
    t.adj_node.assign(t.edges.size() * 2, -1);
    t.adj_edge.assign(t.edges.size() * 2, -1);
    std::vector<int> fill(t.adj_offset.begin(), t.adj_offset.end() - 1);
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        auto [a, b] = t.edges[e];
        t.adj_node[fill[a]] = b;
        t.adj_edge[fill[a]++] = static_cast<int>(e);
        t.adj_node[fill[b]] = a;
        t.adj_edge[fill[b]++] = static_cast<int>(e);
    }
    t.max_degree = std::max(2, *std::max_element(deg.begin(), deg.end()));

    // m-1 edges + connectivity <=> tree
    std::vector<int> stack{0};
    std::vector<char> seen(m, 0);
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int i = t.adj_offset[v]; i < t.adj_offset[v + 1]; ++i) {
            int w = t.adj_node[i];
            if (!seen[w]) {
                seen[w] = 1;
                reached++;
                stack.push_back(w);
            }
        }
    }
    require(reached == m, errc::internal_error, "edge set does not form a tree (disconnected)");
    return t;
}

EdgeCut balanced_edge_cut(const FreeTree& t) {
    require(t.m >= 2, errc::single_node, "no edge to cut in a single-node tree");

    // Root at node 0; compute a BFS order, then subtree sizes by scanning
    // it backwards.  No recursion: dual trees of large instances are deep.
    std::vector<int> parent(t.m, -1), order;
    order.reserve(t.m);
    order.push_back(0);
    parent[0] = 0;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        for (int i = t.adj_offset[v]; i < t.adj_offset[v + 1]; ++i) {
            int w = t.adj_node[i];
            if (parent[w] < 0) {
                parent[w] = v;
                order.push_back(w);
            }
        }
    }
    parent[0] = -1;

    std::vector<long long> size(t.m, 1);
    for (std::size_t i = order.size(); i-- > 1;) {
        int v = order[i];
        size[parent[v]] += size[v];
    }

    const long long bound = tree_cut_bound(t.m, t.max_degree);
    int v = 0;
    for (;;) {
        int best = -1, best_edge = -1;
        long long best_size = -1;
        for (int i = t.adj_offset[v]; i < t.adj_offset[v + 1]; ++i) {
            int w = t.adj_node[i];
            if (parent[w] != v) continue;
            if (size[w] > best_size || (size[w] == best_size && w < best)) {
                best = w;
                best_size = size[w];
                best_edge = t.adj_edge[i];
            }
        }
        require(best >= 0, errc::internal_error, "walk fell off the tree before meeting the bound");
        if (best_size <= bound) {
            EdgeCut cut;
            cut.u = v;
            cut.v = best;
            cut.edge_id = best_edge;
            cut.side_v = best_size;
            cut.side_u = t.m - best_size;
            return cut;
        }
        v = best;
    }
}

} // namespace planarsep
