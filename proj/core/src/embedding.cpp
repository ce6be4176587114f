#include "planarsep/embedding.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace planarsep {

namespace {

// Pair reverse darts by sorting dart ids on (min endpoint, max endpoint)
// with two stable counting passes.  Also assigns undirected edge ids in
// sorted order, so edge ids are deterministic for a given rotation system.
void pair_twins(PlanarEmbedding& g) {
    const std::size_t m2 = g.neighbors.size();
    std::vector<int> order(m2), tmp(m2);
    for (std::size_t d = 0; d < m2; ++d) order[d] = static_cast<int>(d);

    auto lo_of = [&](int d) { return std::min(g.dart_tail[d], g.neighbors[d]); };
    auto hi_of = [&](int d) { return std::max(g.dart_tail[d], g.neighbors[d]); };

    std::vector<int> count(static_cast<std::size_t>(g.n) + 1, 0);
    auto counting_pass = [&](auto key) {
        std::fill(count.begin(), count.end(), 0);
        for (int d : order) count[key(d)]++;
        int acc = 0;
        for (int v = 0; v <= g.n; ++v) {
            int c = count[v];
            count[v] = acc;
            acc += c;
        }
        for (int d : order) tmp[count[key(d)]++] = d;
        order.swap(tmp);
    };
    counting_pass(hi_of);
    counting_pass(lo_of);

    g.dart_twin.assign(m2, -1);
    g.dart_edge.assign(m2, -1);
    g.edge_ends.clear();
    g.edge_ends.reserve(m2 / 2);
    g.edge_dart.clear();
    g.edge_dart.reserve(m2 / 2);

    for (std::size_t i = 0; i < m2;) {
        std::size_t j = i;
        while (j < m2 && lo_of(order[j]) == lo_of(order[i]) && hi_of(order[j]) == hi_of(order[i]))
            ++j;
        if (j - i != 2)
            raise(errc::not_symmetric,
                  "edge {" + std::to_string(lo_of(order[i])) + "," + std::to_string(hi_of(order[i])) +
                      "} appears in " + std::to_string(j - i) + " rotation slots, expected 2");
        int d1 = order[i], d2 = order[i + 1];
        if (g.dart_tail[d1] == g.dart_tail[d2])
            raise(errc::not_symmetric,
                  "edge {" + std::to_string(lo_of(d1)) + "," + std::to_string(hi_of(d1)) +
                      "} listed twice on the same side");
        int e = static_cast<int>(g.edge_ends.size());
        g.edge_ends.push_back({lo_of(d1), hi_of(d1)});
        g.edge_dart.push_back(d1);
        g.dart_twin[d1] = d2;
        g.dart_twin[d2] = d1;
        g.dart_edge[d1] = e;
        g.dart_edge[d2] = e;
        i = j;
    }
}

void check_connected(const PlanarEmbedding& g) {
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d = g.rot_offset[v]; d < g.rot_offset[v + 1]; ++d) {
            int w = g.neighbors[d];
            if (!seen[w]) {
                seen[w] = 1;
                reached++;
                q.push(w);
            }
        }
    }
    require(reached == g.n, errc::disconnected,
            "only " + std::to_string(reached) + " of " + std::to_string(g.n) + " vertices reachable");
}

// Walk every face once; every walk must close after exactly 3 darts.
// Returns per-dart face ids (trace order) and the face triples.
void trace_faces(const PlanarEmbedding& g, std::vector<int>& left_face,
                 std::vector<std::array<int, 3>>& faces) {
    const std::size_t m2 = g.neighbors.size();
    left_face.assign(m2, -1);
    faces.clear();
    faces.reserve(m2 / 3);
    for (std::size_t start = 0; start < m2; ++start) {
        if (left_face[start] >= 0) continue;
        int f = static_cast<int>(faces.size());
        int d = static_cast<int>(start);
        std::array<int, 3> tri{};
        for (int step = 0; step < 3; ++step) {
            tri[step] = g.tail(d);
            left_face[d] = f;
            d = g.face_next(d);
        }
        require(d == static_cast<int>(start), errc::not_triangulated,
                "face walk from dart " + std::to_string(start) + " does not close after 3 edges");
        faces.push_back(tri);
    }
}

void check_dual_connected(const PlanarEmbedding& g, const std::vector<int>& left_face,
                          std::size_t num_faces) {
    std::vector<int> first_dart(num_faces, -1);
    for (std::size_t d = 0; d < left_face.size(); ++d)
        if (first_dart[left_face[d]] < 0) first_dart[left_face[d]] = static_cast<int>(d);
    std::vector<char> seen(num_faces, 0);
    std::queue<int> fq;
    fq.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!fq.empty()) {
        int f = fq.front();
        fq.pop();
        int d = first_dart[f];
        for (int step = 0; step < 3; ++step) {
            int nf = left_face[g.twin(d)];
            if (!seen[nf]) {
                seen[nf] = 1;
                reached++;
                fq.push(nf);
            }
            d = g.face_next(d);
        }
    }
    require(reached == num_faces, errc::internal_error, "dual graph is disconnected");
}

} // namespace

PlanarEmbedding build_embedding(int n, const std::vector<std::vector<int>>& rotations,
                                std::optional<std::array<int, 3>> outer) {
    require(n >= 4, errc::too_small, "need n >= 4, got n = " + std::to_string(n));
    require(static_cast<int>(rotations.size()) == n, errc::not_symmetric,
            "expected " + std::to_string(n) + " rotations, got " + std::to_string(rotations.size()));

    PlanarEmbedding g;
    g.n = n;
    g.rot_offset.assign(n + 1, 0);
    std::size_t total = 0;
    for (int v = 0; v < n; ++v) {
        g.rot_offset[v] = static_cast<int>(total);
        total += rotations[v].size();
    }
    g.rot_offset[n] = static_cast<int>(total);
    g.neighbors.reserve(total);
    g.dart_tail.reserve(total);

    std::vector<int> stamp(n, -1);
    for (int v = 0; v < n; ++v) {
        for (int w : rotations[v]) {
            require(w >= 0 && w < n, errc::not_symmetric,
                    "vertex " + std::to_string(v) + " lists out-of-range neighbor " + std::to_string(w));
            require(w != v, errc::not_symmetric, "self-loop at vertex " + std::to_string(v));
            require(stamp[w] != v, errc::not_symmetric,
                    "vertex " + std::to_string(v) + " repeats neighbor " + std::to_string(w));
            stamp[w] = v;
            g.neighbors.push_back(w);
            g.dart_tail.push_back(v);
        }
    }

    pair_twins(g);  // also detects missing reverse entries
    check_connected(g);

    const long long e = g.edge_count();
    require(e == 3LL * n - 6, errc::euler_violation,
            "E = " + std::to_string(e) + ", a triangulation on " + std::to_string(n) +
                " vertices needs " + std::to_string(3LL * n - 6));

    std::vector<int> left_face;
    std::vector<std::array<int, 3>> faces;
    trace_faces(g, left_face, faces);
    check_dual_connected(g, left_face, faces.size());

    auto canonical = [&](int f) {
        // face triple rotated so the smallest vertex comes first
        std::array<int, 3> t = faces[f];
        int k = static_cast<int>(std::min_element(t.begin(), t.end()) - t.begin());
        return std::array<int, 3>{t[k], t[(k + 1) % 3], t[(k + 2) % 3]};
    };

    if (outer) {
        auto [a, b, c] = *outer;
        require(a >= 0 && a < n && b >= 0 && b < n && c >= 0 && c < n && a != b && b != c && a != c,
                errc::bad_outer_face, "outer triple has invalid vertex ids");
        int dab = g.find_dart(a, b);
        require(dab >= 0, errc::bad_outer_face, "outer triple is not a face: missing edge");
        int f1 = left_face[dab], f2 = left_face[g.twin(dab)];
        auto matches = [&](int f) {
            std::array<int, 3> t = faces[f];
            return (t[0] == a || t[1] == a || t[2] == a) && (t[0] == b || t[1] == b || t[2] == b) &&
                   (t[0] == c || t[1] == c || t[2] == c);
        };
        if (matches(f1))
            g.outer = canonical(f1);
        else if (matches(f2))
            g.outer = canonical(f2);
        else
            raise(errc::bad_outer_face, "outer triple does not bound a face");
    } else {
        g.outer = canonical(left_face[g.rot_offset[0]]);
    }
    return g;
}

} // namespace planarsep
