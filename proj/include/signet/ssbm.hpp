#pragma once

#include <cstdint>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

enum class ClusterSizes { Equal, UnevenRandom };

struct SsbmParams {
    Index n = 0;
    int k = 2;
    double p = 0.5;
    double eta = 0.0; // sign-flip probability, in [0, 0.5)
    std::uint64_t seed = 0;
    ClusterSizes sizes = ClusterSizes::Equal;
};

struct SsbmInstance {
    SignedGraph graph;
    std::vector<int> labels;
    SsbmParams params;
};

// Each unordered pair is present independently with probability p, signed +1
// inside a cluster and -1 across, then flipped with probability eta. One RNG
// stream per pair index, so the draw is reproducible and order-free.
SsbmInstance generate(const SsbmParams& params);

// equal-size blocks, interleaved ceil/floor when k does not divide n
std::vector<int> equal_size_labels(Index n, int k);

struct SsbmEdgeStats {
    double pairs_intra;
    double pairs_inter;
    double mean_edges;
    double sd_edges;
    double mean_positive;
    double mean_negative;
    double mean_positive_intra;
    double mean_negative_intra;
    double mean_positive_inter;
    double mean_negative_inter;
    double mean_flipped; // edges whose sign disagrees with their block
};
// closed-form moments of the pair-outcome table (EqualSizes only)
SsbmEdgeStats expected_edge_statistics(const SsbmParams& params);

} // namespace signet
