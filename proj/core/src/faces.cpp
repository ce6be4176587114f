#include "planarsep/faces.hpp"

#include <string>

namespace planarsep {

FaceTable enumerate_faces(const PlanarEmbedding& g) {
    FaceTable ft;
    const std::size_t m2 = g.neighbors.size();
    ft.left_face.assign(m2, -1);
    ft.faces.reserve(m2 / 3);

    for (std::size_t start = 0; start < m2; ++start) {
        if (ft.left_face[start] >= 0) continue;
        int f = static_cast<int>(ft.faces.size());
        int d = static_cast<int>(start);
        std::array<int, 3> tri{};
        for (int step = 0; step < 3; ++step) {
            tri[step] = g.tail(d);
            ft.left_face[d] = f;
            d = g.face_next(d);
        }
        require(d == static_cast<int>(start), errc::not_triangulated,
                "face walk from dart " + std::to_string(start) + " does not close after 3 edges");
        ft.faces.push_back(tri);
    }

    // Dual adjacency: neighbor across the walk edge (tri[i] -> tri[i+1]).
    ft.dual_adjacency.assign(ft.faces.size(), {-1, -1, -1});
    ft.first_dart.assign(ft.faces.size(), -1);
    for (std::size_t d = 0; d < m2; ++d)
        if (ft.first_dart[ft.left_face[d]] < 0) ft.first_dart[ft.left_face[d]] = static_cast<int>(d);
    for (std::size_t f = 0; f < ft.faces.size(); ++f) {
        int d = ft.first_dart[f];
        // first_dart is the lowest dart of the face, which is where the
        // stored walk started, so slots line up with the triple.
        for (int i = 0; i < 3; ++i) {
            ft.dual_adjacency[f][i] = ft.left_face[g.twin(d)];
            d = g.face_next(d);
        }
    }

    // Locate the designated outer face.
    const auto& o = g.outer;
    int dab = g.find_dart(o[0], o[1]);
    require(dab >= 0, errc::bad_outer_face, "stored outer triple lost its edge");
    int f1 = ft.left_face[dab];
    auto holds = [&](int f, int v) {
        const auto& t = ft.faces[f];
        return t[0] == v || t[1] == v || t[2] == v;
    };
    if (holds(f1, o[2]))
        ft.outer_face_id = f1;
    else {
        int f2 = ft.left_face[g.twin(dab)];
        require(holds(f2, o[2]), errc::bad_outer_face, "stored outer triple does not bound a face");
        ft.outer_face_id = f2;
    }
    return ft;
}

} // namespace planarsep
