#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "planarsep/embedding.hpp"

namespace planarsep {

/// Contents of a `planar-rot v1` file:
///
///   planar-rot 1
///   n <n>
///   outer <a> <b> <c>
///   v <id>: <nbr> <nbr> ...     one line per vertex, CCW order
///   coords <id> <x> <y>         optional, rendering only
///
/// `#` starts a comment line; parsing is whitespace tolerant.
struct RotFile {
    int n = 0;
    std::vector<std::vector<int>> rotations;
    std::optional<std::array<int, 3>> outer;
    std::vector<std::array<double, 2>> coords;  // empty or size n
    bool has_coords = false;
};

RotFile parse_rot(std::istream& in);
RotFile parse_rot_file(const std::string& path);

PlanarEmbedding embedding_from(const RotFile& f);
PlanarEmbedding load_embedding(const std::string& path);

void write_rot(std::ostream& out, const PlanarEmbedding& g,
               const std::vector<std::array<double, 2>>* coords = nullptr);
void write_rot_file(const std::string& path, const PlanarEmbedding& g,
                    const std::vector<std::array<double, 2>>* coords = nullptr);

} // namespace planarsep
