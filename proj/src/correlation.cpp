#include "signet/correlation.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "signet/error.hpp"

namespace signet {

std::optional<Index> PricePanel::find(const std::string& id) const {
    for (size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return static_cast<Index>(i);
    return std::nullopt;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) {
        // trim spaces and a stray \r
        const auto a = field.find_first_not_of(" \t\r");
        const auto b = field.find_last_not_of(" \t\r");
        out.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
    }
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

} // namespace

PricePanel read_price_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw Error(Errc::parse_error, path + ": empty file");
    PricePanel panel;
    panel.ids = split_csv(line);
    if (panel.ids.empty()) throw Error(Errc::parse_error, path + ": empty header");
    std::vector<std::vector<double>> days;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = split_csv(line);
        if (fields.size() != panel.ids.size())
            throw Error(Errc::parse_error, path + ":" + std::to_string(lineno) + ": expected " +
                                               std::to_string(panel.ids.size()) + " fields");
        std::vector<double> row(fields.size());
        for (size_t c = 0; c < fields.size(); ++c) {
            if (fields[c].empty())
                throw Error(Errc::parse_error,
                            path + ":" + std::to_string(lineno) + ": missing value");
            char* end = nullptr;
            row[c] = std::strtod(fields[c].c_str(), &end);
            if (end == fields[c].c_str() || *end != '\0' || !std::isfinite(row[c]))
                throw Error(Errc::parse_error, path + ":" + std::to_string(lineno) +
                                                   ": bad number '" + fields[c] + "'");
        }
        days.push_back(std::move(row));
    }
    if (days.empty()) throw Error(Errc::parse_error, path + ": no data rows");
    panel.prices.resize(static_cast<Index>(panel.ids.size()), static_cast<Index>(days.size()));
    for (size_t d = 0; d < days.size(); ++d)
        for (size_t i = 0; i < panel.ids.size(); ++i) panel.prices(i, d) = days[d][i];
    return panel;
}

Matrix log_returns(const PricePanel& panel) {
    if (panel.num_days() < 2) throw Error(Errc::invalid_params, "need at least 2 days");
    for (Index i = 0; i < panel.prices.rows(); ++i)
        for (Index t = 0; t < panel.prices.cols(); ++t)
            if (!(panel.prices(i, t) > 0))
                throw Error(Errc::non_positive_price,
                            panel.ids[i] + " at day " + std::to_string(t));
    const Index n = panel.num_instruments();
    const Index d = panel.num_days();
    Matrix r(n, d - 1);
    for (Index i = 0; i < n; ++i)
        for (Index t = 0; t + 1 < d; ++t)
            r(i, t) = std::log(panel.prices(i, t + 1) / panel.prices(i, t));
    return r;
}

Matrix excess_returns(const Matrix& returns, Index benchmark_row) {
    if (benchmark_row < 0 || benchmark_row >= returns.rows())
        throw Error(Errc::missing_benchmark, "row " + std::to_string(benchmark_row));
    Matrix out(returns.rows() - 1, returns.cols());
    const Eigen::RowVectorXd bench = returns.row(benchmark_row);
    Index r = 0;
    for (Index i = 0; i < returns.rows(); ++i) {
        if (i == benchmark_row) continue;
        out.row(r++) = returns.row(i) - bench;
    }
    return out;
}

SignedGraph correlation_network(const Matrix& returns, std::optional<double> threshold) {
    const Index n = returns.rows();
    const Index t = returns.cols();
    if (t < 2) throw Error(Errc::invalid_params, "need at least 2 observations");
    // each row is a series; center by the row mean
    Matrix centered = returns.colwise() - returns.rowwise().mean();
    Vector norms(n);
    for (Index i = 0; i < n; ++i) {
        norms(i) = centered.row(i).norm();
        if (norms(i) == 0)
            throw Error(Errc::zero_variance_series, "series " + std::to_string(i));
    }
    std::vector<EdgeTriple> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            double c = centered.row(i).dot(centered.row(j)) / (norms(i) * norms(j));
            c = std::clamp(c, -1.0, 1.0);
            if (threshold && std::abs(c) < *threshold) continue;
            if (c != 0.0) edges.push_back({i, j, c});
        }
    }
    return SignedGraph::from_edges(n, edges);
}

} // namespace signet
