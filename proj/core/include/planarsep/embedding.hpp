#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "planarsep/errors.hpp"

namespace planarsep {

/// Combinatorial embedding of a maximal planar graph, given as a rotation
/// system: for every vertex the cyclic counterclockwise order of its
/// neighbors.  Vertices are dense ids 0..n-1.
///
/// Directed edges ("darts") are indexed by their position in the flattened
/// rotation array: dart d is the j-th outgoing edge of vertex `dart_tail[d]`
/// where j = d - rot_offset[tail].  Every dart knows its reversal (`twin`)
/// and an undirected edge id.  Face walks use the rule: from dart (u -> v)
/// the next dart is (v -> w) with w the predecessor of u in v's rotation,
/// which traverses every face once, keeping it on the left.
///
/// Immutable after construction; safe to share across threads.
struct PlanarEmbedding {
    int n = 0;
    std::vector<int> rot_offset;   // size n+1, CSR offsets into `neighbors`
    std::vector<int> neighbors;    // size 2E, CCW rotations flattened
    std::array<int, 3> outer{};    // designated outer face, in face-walk order

    std::vector<int> dart_tail;    // size 2E
    std::vector<int> dart_twin;    // size 2E
    std::vector<int> dart_edge;    // size 2E, undirected edge ids 0..E-1
    std::vector<std::array<int, 2>> edge_ends;  // size E, {lo, hi}
    std::vector<int> edge_dart;    // size E, one representative dart per edge

    int degree(int v) const { return rot_offset[v + 1] - rot_offset[v]; }
    int dart(int v, int j) const { return rot_offset[v] + j; }
    int head(int d) const { return neighbors[d]; }
    int tail(int d) const { return dart_tail[d]; }
    int twin(int d) const { return dart_twin[d]; }
    int edge_of(int d) const { return dart_edge[d]; }
    long long edge_count() const { return static_cast<long long>(edge_ends.size()); }
    long long dart_count() const { return static_cast<long long>(neighbors.size()); }
    long long face_count() const { return 2LL * n - 4; }

    int next_ccw(int d) const {
        int v = dart_tail[d], base = rot_offset[v];
        int j = d - base + 1;
        return base + (j == degree(v) ? 0 : j);
    }
    int prev_ccw(int d) const {
        int v = dart_tail[d], base = rot_offset[v];
        int j = d - base;
        return base + (j == 0 ? degree(v) - 1 : j - 1);
    }
    /// Next dart of the face on the left of d.
    int face_next(int d) const { return prev_ccw(dart_twin[d]); }

    /// Dart (u -> v), or -1 if v is not a neighbor of u.  O(deg(u)).
    int find_dart(int u, int v) const {
        for (int d = rot_offset[u]; d < rot_offset[u + 1]; ++d)
            if (neighbors[d] == v) return d;
        return -1;
    }
    bool has_edge(int u, int v) const { return find_dart(u, v) >= 0; }
};

/// Validates and indexes a rotation system.  Checks, in order: n >= 4,
/// symmetric simple adjacency, connectivity, E = 3n-6, all face walks of
/// length 3, dual connectivity, and that `outer` (when given) is a traced
/// face.  When `outer` is absent the face left of vertex 0's first dart is
/// designated.
PlanarEmbedding build_embedding(int n, const std::vector<std::vector<int>>& rotations,
                                std::optional<std::array<int, 3>> outer = std::nullopt);

} // namespace planarsep
