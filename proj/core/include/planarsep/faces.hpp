#pragma once

#include <array>
#include <vector>

#include "planarsep/embedding.hpp"

namespace planarsep {

/// Enumerated triangular faces of an embedding, the left-face map per dart,
/// and face adjacency in the dual graph.  Face ids follow trace order
/// (ascending first dart), so they are reproducible for a given input.
struct FaceTable {
    std::vector<std::array<int, 3>> faces;           // vertex triple in walk order
    std::vector<int> left_face;                      // per dart
    std::vector<int> first_dart;                     // per face, the dart its walk starts at
    std::vector<std::array<int, 3>> dual_adjacency;  // per face, neighbor across walk edge 0,1,2
    int outer_face_id = -1;

    long long num_faces() const { return static_cast<long long>(faces.size()); }
    int face_of_dart(int d) const { return left_face[d]; }
};

FaceTable enumerate_faces(const PlanarEmbedding& g);

} // namespace planarsep
