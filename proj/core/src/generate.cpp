#include "planarsep/generate.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "planarsep/rng.hpp"

namespace planarsep {

namespace {

// Mutable rotation system used only while generating.  Faces are kept as
// triples in walk order; `bounded` lists every face except the outer one.
struct Builder {
    std::vector<std::vector<int>> rot;
    std::vector<std::array<int, 3>> bounded;  // walk order (a, b, c)
    std::array<int, 3> outer{};

    int pos_of(int v, int w) const {
        const auto& r = rot[v];
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j] == w) return static_cast<int>(j);
        return -1;
    }
    int pred(int v, int w) const {
        const auto& r = rot[v];
        int j = pos_of(v, w);
        return r[(j + r.size() - 1) % r.size()];
    }
    bool adjacent(int v, int w) const {
        return rot[v].size() <= rot[w].size() ? pos_of(v, w) >= 0 : pos_of(w, v) >= 0;
    }
    // Insert w into rot[v] immediately after `after`.
    void insert_after(int v, int after, int w) {
        auto& r = rot[v];
        r.insert(r.begin() + pos_of(v, after) + 1, w);
    }
    // Insert w into rot[v] immediately before `before`.
    void insert_before(int v, int before, int w) {
        auto& r = rot[v];
        r.insert(r.begin() + pos_of(v, before), w);
    }
    void remove_neighbor(int v, int w) {
        auto& r = rot[v];
        r.erase(r.begin() + pos_of(v, w));
    }
};

Builder k4_builder() {
    Builder b;
    b.rot = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}};
    b.outer = {0, 2, 1};  // walk order of the unbounded face
    b.bounded = {{0, 1, 3}, {0, 3, 2}, {1, 2, 3}};
    return b;
}

// Stack a new vertex inside bounded face index fi, replacing it by three
// faces.  Face walk (a, b, c) keeps its interior on the left, so the new
// rotation of w is (a, b, c) as well.
void stack_vertex(Builder& b, int fi, int w) {
    auto [a, bb, c] = b.bounded[fi];
    b.rot.push_back({a, bb, c});
    // At each corner the new spoke goes between the walk-out and walk-in
    // neighbors: rot(a): ..., b, w, c(=old succ of b), ...
    b.insert_after(a, bb, w);
    b.insert_after(bb, c, w);
    b.insert_after(c, a, w);
    b.bounded[fi] = {a, bb, w};
    b.bounded.push_back({bb, c, w});
    b.bounded.push_back({c, a, w});
}

PlanarEmbedding finish(Builder&& b) {
    int n = static_cast<int>(b.rot.size());
    return build_embedding(n, b.rot, b.outer);
}

Builder random_apollonian(int n, std::uint64_t seed) {
    require(n >= 4, errc::too_small, "need n >= 4, got n = " + std::to_string(n));
    Builder b = k4_builder();
    Rng rng(seed);
    for (int w = 4; w < n; ++w) {
        int fi = static_cast<int>(rng.below(b.bounded.size()));
        stack_vertex(b, fi, w);
    }
    return b;
}

// One diagonal flip attempt on edge (a, b); returns false when infeasible.
// With faces (a,b,c) left of a->b and (b,a,d) left of b->a, the flip
// replaces ab by cd.  Infeasible when a face at the edge is the outer face
// or cd is already present (the latter also covers degree-3 endpoints,
// whose link is a triangle).
bool try_flip(Builder& b, int a, int bb) {
    int c = b.pred(bb, a);  // third vertex of the face left of a->b
    int d = b.pred(a, bb);  // third vertex of the face left of b->a
    auto is_outer = [&](int x, int y, int z) {
        const auto& o = b.outer;
        auto in = [&](int v) { return o[0] == v || o[1] == v || o[2] == v; };
        return in(x) && in(y) && in(z);
    };
    if (is_outer(a, bb, c) || is_outer(bb, a, d)) return false;
    if (c == d || b.adjacent(c, d)) return false;

    // New faces: (c, a, d) and (d, b, c); the walk constraints pin the
    // insertion slots to "d right before b at c" and "c right before a at d".
    b.insert_before(c, bb, d);
    b.insert_before(d, a, c);
    b.remove_neighbor(a, bb);
    b.remove_neighbor(bb, a);
    return true;
}

} // namespace

PlanarEmbedding make_k4() { return finish(k4_builder()); }

PlanarEmbedding gen_apollonian(int n, std::uint64_t seed) {
    return finish(random_apollonian(n, seed));
}

PlanarEmbedding gen_flipped(int n, int flips, std::uint64_t seed) {
    Builder b = random_apollonian(n, seed);
    Rng rng(seed ^ 0xf11d5eedULL);

    // Each attempt draws a random dart; infeasible picks are skipped but
    // still consume the attempt, so the procedure always terminates.
    for (int t = 0; t < flips; ++t) {
        int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int bb = b.rot[a][rng.below(b.rot[a].size())];
        try_flip(b, a, bb);
    }
    return finish(std::move(b));
}

} // namespace planarsep
