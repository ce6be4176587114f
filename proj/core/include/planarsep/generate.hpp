#pragma once

#include <cstdint>

#include "planarsep/embedding.hpp"

namespace planarsep {

/// K4 with a fixed rotation system; outer face (0,1,2).
PlanarEmbedding make_k4();

/// Random stacked triangulation: start from K4 and repeatedly insert a new
/// degree-3 vertex into a uniformly random bounded face.  Deterministic for
/// a given (n, seed).
PlanarEmbedding gen_apollonian(int n, std::uint64_t seed);

/// gen_apollonian followed by `flips` random diagonal-flip attempts.  An
/// attempt picks a uniform edge; it is skipped when the edge lies on the
/// outer face or the opposite diagonal already exists.
PlanarEmbedding gen_flipped(int n, int flips, std::uint64_t seed);

} // namespace planarsep
