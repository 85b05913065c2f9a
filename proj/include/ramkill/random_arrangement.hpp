#pragma once

#include <cstdint>

#include "ramkill/snc_complex.hpp"

namespace ramkill {

struct RandomArrangementParams {
    int dimension = 3;
    int vertex_count = 8;
    // Probability of including a 2-subset as a face; s-subsets for s > 2 use
    // edge_density * higher_density^(s-2).
    double edge_density = 0.35;
    double higher_density = 0.3;
};

// Seeded Erdos-Renyi style sampling over vertex subsets of size 2..n,
// followed by downward closure. Oversized subsets are never drawn, so the
// face-size bound holds by construction; the result is validated anyway and
// resampled in the (unreachable) case of a violation.
SncComplex random_arrangement(const RandomArrangementParams& params, std::uint64_t seed);

}  // namespace ramkill
