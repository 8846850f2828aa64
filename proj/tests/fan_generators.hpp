#pragma once

// Test-only generators: random complete simplicial fans by repeated stellar
// subdivision of seed fans (fan refinement is deliberately not part of the
// library).

#include <random>
#include <vector>

#include "torica/builtin_examples.hpp"
#include "torica/fan.hpp"

namespace torica::testing {

// Stellar subdivision of a complete simplicial fan at a point interior to the
// chosen maximal cone: the cone is replaced by the cones over its facets.
inline Fan star_subdivide(const Fan& f, int cone_index, const std::vector<long>& weights) {
    const Cone& sigma = f.max_cones[cone_index];
    IntVec v(f.dim, Int(0));
    for (size_t k = 0; k < sigma.ray_indices.size(); ++k)
        for (int j = 0; j < f.dim; ++j) v[j] += Int(weights[k]) * f.rays[sigma.ray_indices[k]][j];
    v = primitive(v);

    std::vector<IntVec> rays = f.rays;
    int vi = static_cast<int>(rays.size());
    rays.push_back(v);
    std::vector<std::vector<int>> cones;
    for (size_t k = 0; k < f.max_cones.size(); ++k) {
        if (static_cast<int>(k) != cone_index) {
            cones.push_back(f.max_cones[k].ray_indices);
            continue;
        }
        for (size_t drop = 0; drop < sigma.ray_indices.size(); ++drop) {
            std::vector<int> c;
            for (size_t i = 0; i < sigma.ray_indices.size(); ++i)
                if (i != drop) c.push_back(sigma.ray_indices[i]);
            c.push_back(vi);
            cones.push_back(std::move(c));
        }
    }
    return make_fan(f.dim, std::move(rays), std::move(cones));
}

// Random complete simplicial fan of the requested dimension (2 or 3); ray
// count stays <= max_rays so partition enumerations remain desk-sized.
inline Fan random_complete_fan(std::mt19937_64& rng, int dim, int max_rays = 7) {
    std::uniform_int_distribution<int> seed_pick(0, 2);
    Fan f = dim == 2 ? (seed_pick(rng) == 0 ? fan_p2()
                                            : seed_pick(rng) == 1 ? fan_p1xp1() : fan_hirzebruch(2))
                     : (seed_pick(rng) == 0 ? fan_p3() : fan_p1xp2());
    std::uniform_int_distribution<long> weight(1, 3);
    while (static_cast<int>(f.rays.size()) < max_rays) {
        std::uniform_int_distribution<int> flip(0, 1);
        if (flip(rng) == 0) break;
        std::uniform_int_distribution<int> cone_pick(0, static_cast<int>(f.max_cones.size()) - 1);
        int k = cone_pick(rng);
        std::vector<long> w(f.max_cones[k].ray_indices.size());
        for (long& x : w) x = weight(rng);
        f = star_subdivide(f, k, w);
    }
    return f;
}

}  // namespace torica::testing
