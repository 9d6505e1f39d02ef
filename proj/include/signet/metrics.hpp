#pragma once

#include <vector>

#include "signet/types.hpp"

namespace signet {

// Hubert-Arabie adjusted Rand index in [-1, 1]. When max RI equals the
// expected RI (e.g. both partitions all singletons) the quotient is 0/0;
// returns 1 for identical partitions, 0 otherwise.
double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b);

// plain pair-counting Rand index in [0, 1]
double rand_index(const std::vector<int>& a, const std::vector<int>& b);

// largest principal-angle sine between the column spans: ||(I - U U^T) V||_2.
// Both inputs must have orthonormal columns (checked to 1e-8).
double sin_theta_distance(const Matrix& u, const Matrix& v);

} // namespace signet
