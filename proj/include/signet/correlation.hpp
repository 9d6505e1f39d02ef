#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

// strictly positive prices, one row per instrument, one column per day
struct PricePanel {
    Matrix prices;
    std::vector<std::string> ids;

    Index num_instruments() const { return prices.rows(); }
    Index num_days() const { return prices.cols(); }
    std::optional<Index> find(const std::string& id) const;
};

// CSV with a header of instrument ids and one row per day; any missing or
// non-numeric cell rejects the file
PricePanel read_price_csv(const std::string& path);

// R[i,t] = log(P[i,t+1] / P[i,t]); instruments x (days-1)
Matrix log_returns(const PricePanel& panel);

// subtract the benchmark row from every row and drop it from the output
Matrix excess_returns(const Matrix& returns, Index benchmark_row);

// complete signed graph of pairwise Pearson correlations; edges with
// |corr| < threshold are dropped when a threshold is given
SignedGraph correlation_network(const Matrix& returns,
                                std::optional<double> threshold = std::nullopt);

} // namespace signet
