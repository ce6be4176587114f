#pragma once

#include <string>
#include <vector>

#include "planarsep/embedding.hpp"

namespace planarsep {

/// Simple closed vertex sequence; the edge back to the first vertex is
/// implicit.  Length (edge count) equals the vertex count.
struct Cycle {
    std::vector<int> verts;

    long long length() const { return static_cast<long long>(verts.size()); }
    bool empty() const { return verts.empty(); }
    int at(std::size_t i) const { return verts[i % verts.size()]; }
};

/// Checks simplicity and that consecutive pairs (including the wrap-around)
/// are graph edges.  Throws errc::not_simple otherwise.
inline void validate_cycle(const PlanarEmbedding& g, const Cycle& c) {
    require(c.verts.size() >= 3, errc::not_simple, "cycle has fewer than 3 vertices");
    std::vector<char> seen(g.n, 0);
    for (std::size_t i = 0; i < c.verts.size(); ++i) {
        int v = c.verts[i];
        require(v >= 0 && v < g.n, errc::not_simple, "cycle vertex out of range");
        require(!seen[v], errc::not_simple, "cycle repeats vertex " + std::to_string(v));
        seen[v] = 1;
        require(g.has_edge(v, c.at(i + 1)), errc::not_simple,
                "cycle uses non-edge (" + std::to_string(v) + "," + std::to_string(c.at(i + 1)) + ")");
    }
}

} // namespace planarsep
