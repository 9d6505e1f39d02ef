#include "signet/metrics.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <unordered_map>

#include "signet/error.hpp"

namespace signet {

namespace {

std::vector<int> compact(const std::vector<int>& labels, int& k_out) {
    std::unordered_map<int, int> remap;
    std::vector<int> out(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = remap.try_emplace(labels[i], static_cast<int>(remap.size()));
        out[i] = it->second;
    }
    k_out = static_cast<int>(remap.size());
    return out;
}

double choose2(double x) { return x * (x - 1.0) / 2.0; }

struct PairCounts {
    double sum_cells;  // sum over contingency cells of C(n_ij, 2)
    double sum_a;      // sum over clusters of a of C(n_i., 2)
    double sum_b;
    double total;      // C(n, 2)
    bool identical;    // same partition
};

PairCounts contingency(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
        throw Error(Errc::length_mismatch, std::to_string(a.size()) + " vs " +
                                               std::to_string(b.size()) + " labels");
    if (a.size() < 2) throw Error(Errc::length_mismatch, "need at least 2 points");
    int ka = 0, kb = 0;
    const std::vector<int> ca = compact(a, ka);
    const std::vector<int> cb = compact(b, kb);
    std::vector<double> cells(static_cast<size_t>(ka) * kb, 0.0);
    std::vector<double> rows(ka, 0.0), cols(kb, 0.0);
    for (size_t i = 0; i < ca.size(); ++i) {
        cells[static_cast<size_t>(ca[i]) * kb + cb[i]] += 1.0;
        rows[ca[i]] += 1.0;
        cols[cb[i]] += 1.0;
    }
    PairCounts pc{};
    for (double c : cells) pc.sum_cells += choose2(c);
    for (double r : rows) pc.sum_a += choose2(r);
    for (double c : cols) pc.sum_b += choose2(c);
    pc.total = choose2(static_cast<double>(ca.size()));
    pc.identical = (ka == kb);
    if (pc.identical) {
        // identical as partitions iff the compacted labelings coincide
        for (size_t i = 0; i < ca.size() && pc.identical; ++i)
            pc.identical = (ca[i] == cb[i]);
    }
    return pc;
}

} // namespace

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
    const PairCounts pc = contingency(a, b);
    const double expected = pc.sum_a * pc.sum_b / pc.total;
    const double maximum = 0.5 * (pc.sum_a + pc.sum_b);
    const double denom = maximum - expected;
    if (std::abs(denom) < 1e-12 * std::max(1.0, maximum))
        return pc.identical ? 1.0 : 0.0;
    return (pc.sum_cells - expected) / denom;
}

double rand_index(const std::vector<int>& a, const std::vector<int>& b) {
    const PairCounts pc = contingency(a, b);
    // agreements = both-same + both-different pairs
    const double both_same = pc.sum_cells;
    const double both_diff = pc.total - pc.sum_a - pc.sum_b + pc.sum_cells;
    return (both_same + both_diff) / pc.total;
}

double sin_theta_distance(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows())
        throw Error(Errc::length_mismatch, "subspace ambient dimensions differ");
    const auto check = [](const Matrix& m, const char* name) {
        const Matrix gram = m.transpose() * m;
        const double err =
            (gram - Matrix::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff();
        if (err > 1e-8)
            throw Error(Errc::not_orthonormal,
                        std::string(name) + " deviates by " + std::to_string(err));
    };
    check(u, "U");
    check(v, "V");
    if (v.cols() == 0) return 0.0;
    const Matrix residual = v - u * (u.transpose() * v);
    const double s = Eigen::JacobiSVD<Matrix>(residual).singularValues()(0);
    return std::min(s, 1.0);
}

} // namespace signet
