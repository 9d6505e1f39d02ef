#pragma once

#include <cstdint>
#include <vector>

#include "signet/types.hpp"

namespace signet {

struct KmeansConfig {
    int k = 2;
    int restarts = 10;
    int max_iter = 300;
    double tol = 1e-9; // stop when no center moves further than this
    std::uint64_t seed = 0;
};

struct KmeansResult {
    std::vector<int> labels;
    double inertia = 0.0;
    int best_restart = 0;
    std::vector<double> inertia_history; // per Lloyd iteration of the best restart
};

// D^2-weighted seeding then Lloyd iterations, best of restarts by inertia.
// The seeding stream is keyed by point content, so reordering the rows of
// `points` reorders the labels without changing the partition.
KmeansResult kmeanspp(const Matrix& points, const KmeansConfig& cfg);

} // namespace signet
