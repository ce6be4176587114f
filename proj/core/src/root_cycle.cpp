#include "planarsep/root_cycle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace planarsep {

namespace {

bool is_tree_edge(const BfsTree& t, int a, int b) {
    return t.parent[a] == b || t.parent[b] == a;
}

int lowest_common_ancestor(const BfsTree& t, int a, int b) {
    while (t.rdist[a] > t.rdist[b]) a = t.parent[a];
    while (t.rdist[b] > t.rdist[a]) b = t.parent[b];
    while (a != b) {
        a = t.parent[a];
        b = t.parent[b];
    }
    return a;
}

} // namespace

DualTree dual_spanning_tree(const PlanarEmbedding& g, const FaceTable& ft, const BfsTree& t) {
    DualTree dt;
    std::vector<std::array<int, 2>> edges;
    edges.reserve(ft.faces.size() - 1);
    dt.primal_edge.reserve(ft.faces.size() - 1);

    for (long long e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge_ends[e];
        if (is_tree_edge(t, a, b)) continue;
        int d = g.edge_dart[e];
        edges.push_back({ft.left_face[d], ft.left_face[g.twin(d)]});
        dt.primal_edge.push_back(static_cast<int>(e));
    }
    require(edges.size() == ft.faces.size() - 1, errc::internal_error,
            "dual edge set has wrong size for a spanning tree");
    dt.tree = make_free_tree(static_cast<int>(ft.faces.size()), std::move(edges));
    require(dt.tree.max_degree <= 3, errc::internal_error, "dual spanning tree has degree > 3");
    return dt;
}

FundamentalCycle find_root_cycle(const PlanarEmbedding& g, const FaceTable& ft) {
    // First BFS from an arbitrary vertex; its non-tree edges induce the
    // dual spanning tree in which we cut.
    BfsTree t0 = bfs_tree(g, 0);
    DualTree dt = dual_spanning_tree(g, ft, t0);
    EdgeCut cut = balanced_edge_cut(dt.tree);

    FundamentalCycle fc;
    int pe = dt.primal_edge[cut.edge_id];
    fc.u = g.edge_ends[pe][0];
    fc.v = g.edge_ends[pe][1];

    // Fundamental cycle of uv in t0: apex at the LCA.
    int r = lowest_common_ancestor(t0, fc.u, fc.v);
    {
        std::vector<int> pu, pv;
        for (int x = fc.u; x != r; x = t0.parent[x]) pu.push_back(x);
        pu.push_back(r);
        std::reverse(pu.begin(), pu.end());
        for (int x = fc.v; x != r; x = t0.parent[x]) pv.push_back(x);
        pv.push_back(r);
        std::reverse(pv.begin(), pv.end());
        fc.path_u = std::move(pu);
        fc.path_v = std::move(pv);
    }

    // Re-rooted BFS from r keeps both cycle sides as tree paths; they are
    // shortest paths because r is an ancestor of u and v in a BFS tree.
    fc.tree = bfs_tree(g, r, {fc.path_u, fc.path_v});

    // Cycle orientation: r .. u, then uv, then v .. back to r.
    fc.s.verts.reserve(fc.path_u.size() + fc.path_v.size() - 1);
    fc.s.verts.insert(fc.s.verts.end(), fc.path_u.begin(), fc.path_u.end());
    for (std::size_t i = fc.path_v.size(); i-- > 1;) fc.s.verts.push_back(fc.path_v[i]);

    int du = fc.tree.rdist[fc.u], dv = fc.tree.rdist[fc.v];
    require(std::abs(du - dv) <= 1, errc::internal_error, "non-tree edge spans two BFS levels");
    fc.h_t = std::max(du, dv);
    fc.deep = (du >= dv) ? fc.u : fc.v;

    // Face sides: the dual-tree component of the cut that contains the
    // outer face is the outside of the cycle.
    fc.inside_s.assign(ft.faces.size(), 0);
    {
        std::vector<int> stack{ft.outer_face_id};
        std::vector<char> outside(ft.faces.size(), 0);
        outside[ft.outer_face_id] = 1;
        long long count = 1;
        const FreeTree& dtree = dt.tree;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int i = dtree.adj_offset[f]; i < dtree.adj_offset[f + 1]; ++i) {
                if (dtree.adj_edge[i] == cut.edge_id) continue;
                int nf = dtree.adj_node[i];
                if (!outside[nf]) {
                    outside[nf] = 1;
                    count++;
                    stack.push_back(nf);
                }
            }
        }
        fc.faces_outside_s = count;
        fc.faces_inside_s = static_cast<long long>(ft.faces.size()) - count;
        for (std::size_t f = 0; f < ft.faces.size(); ++f) fc.inside_s[f] = !outside[f];
    }
    require(fc.faces_inside_s == std::min(cut.side_u, cut.side_v) ||
                fc.faces_inside_s == std::max(cut.side_u, cut.side_v),
            errc::internal_error, "cut component sizes disagree with face labeling");

    const long long bound = tree_cut_bound(static_cast<long long>(ft.faces.size()), 3);
    require(fc.faces_inside_s <= bound && fc.faces_outside_s <= bound, errc::internal_error,
            "fundamental cycle misses the 2/3 face bound");
    return fc;
}

} // namespace planarsep
