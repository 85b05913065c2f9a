#include "ramkill/random_arrangement.hpp"

#include <random>
#include <stdexcept>

#include "ramkill/errors.hpp"

namespace ramkill {

namespace {

// Visit all size-s subsets of {0..m-1} in lexicographic order.
template <class Fn>
void for_each_subset(int m, int s, Fn&& fn) {
    if (s > m) return;
    std::vector<int> comb(static_cast<size_t>(s));
    for (int k = 0; k < s; ++k) comb[static_cast<size_t>(k)] = k;
    for (;;) {
        fn(comb);
        int i = s - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == m - s + i) --i;
        if (i < 0) return;
        ++comb[static_cast<size_t>(i)];
        for (int k = i + 1; k < s; ++k)
            comb[static_cast<size_t>(k)] = comb[static_cast<size_t>(k - 1)] + 1;
    }
}

}  // namespace

SncComplex random_arrangement(const RandomArrangementParams& params, std::uint64_t seed) {
    if (params.dimension < 1)
        throw std::invalid_argument("random_arrangement: dimension must be >= 1");
    if (params.vertex_count < 0)
        throw std::invalid_argument("random_arrangement: negative vertex count");

    for (int attempt = 0; attempt < 16; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt));
        std::uniform_real_distribution<double> coin(0.0, 1.0);

        std::vector<Vertex> vertices;
        for (int v = 0; v < params.vertex_count; ++v)
            vertices.push_back(Vertex{"v" + std::to_string(v + 1), VertexKind::original, {}});

        std::vector<Face> generators;
        double p = params.edge_density;
        for (int s = 2; s <= params.dimension && s <= params.vertex_count; ++s) {
            for_each_subset(params.vertex_count, s, [&](const std::vector<int>& subset) {
                if (coin(rng) < p) generators.push_back(subset);
            });
            p *= params.higher_density;
        }

        SncComplex out = SncComplex::closed(params.dimension, vertices, generators);
        if (validate(out).empty()) return out;
    }
    throw internal_error("random_arrangement: sampling kept producing invalid complexes");
}

}  // namespace ramkill
