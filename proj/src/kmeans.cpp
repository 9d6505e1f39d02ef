#include "signet/kmeans.hpp"

#include <cmath>
#include <cstring>
#include <limits>

#include "signet/error.hpp"
#include "signet/rng.hpp"

namespace signet {

namespace {

std::uint64_t point_key(const Matrix& points, Index row) {
    std::uint64_t h = 0x243F6A8885A308D3ull;
    for (Index c = 0; c < points.cols(); ++c) {
        double v = points(row, c);
        if (v == 0.0) v = 0.0; // collapse -0.0
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof(bits));
        h = rng::mix64(h ^ bits);
    }
    return h;
}

// Gumbel-max draw from weights: argmax(log w_i + G_i) realizes the
// w-proportional distribution. Noise is keyed per point content, which is
// what makes the choice independent of row order.
Index weighted_pick(const Vector& weights, const std::vector<std::uint64_t>& keys,
                    std::uint64_t seed, std::uint64_t stream) {
    Index best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    bool any_positive = false;
    for (Index i = 0; i < weights.size(); ++i) {
        const double u = rng::random_unit(seed, stream, keys[i]);
        const double gumbel = -std::log(-std::log(std::max(u, 1e-300)));
        double score;
        if (weights(i) > 0) {
            any_positive = true;
            score = std::log(weights(i)) + gumbel;
        } else {
            score = -1e300 + gumbel; // only competes when every weight is zero
        }
        if (score > best_score) {
            best_score = score;
            best = i;
        }
    }
    (void)any_positive;
    return best;
}

struct LloydOutcome {
    std::vector<int> labels;
    double inertia;
    std::vector<double> inertia_history;
};

LloydOutcome run_restart(const Matrix& points, const KmeansConfig& cfg,
                         const std::vector<std::uint64_t>& keys, int restart) {
    const Index n = points.rows();
    const Index d = points.cols();
    const int k = cfg.k;

    Matrix centers(k, d);
    Vector dist2 = Vector::Constant(n, 1.0); // uniform first pick
    for (int c = 0; c < k; ++c) {
        const std::uint64_t stream = rng::mix64(rng::mix64(0x55EED, restart), c);
        const Index pick = weighted_pick(dist2, keys, cfg.seed, stream);
        centers.row(c) = points.row(pick);
        if (c + 1 == k) break;
        for (Index i = 0; i < n; ++i) {
            const double dd = (points.row(i) - centers.row(c)).squaredNorm();
            dist2(i) = c == 0 ? dd : std::min(dist2(i), dd);
        }
    }

    std::vector<int> labels(n, 0);
    std::vector<double> history;
    Vector point_dist2(n);
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        bool changed = false;
        for (Index i = 0; i < n; ++i) {
            int best = 0;
            double best_d = (points.row(i) - centers.row(0)).squaredNorm();
            for (int c = 1; c < k; ++c) {
                const double dd = (points.row(i) - centers.row(c)).squaredNorm();
                if (dd < best_d) {
                    best_d = dd;
                    best = c;
                }
            }
            point_dist2(i) = best_d;
            if (labels[i] != best) {
                labels[i] = best;
                changed = true;
            }
        }
        history.push_back(point_dist2.sum());

        Matrix sums = Matrix::Zero(k, d);
        std::vector<Index> sizes(k, 0);
        for (Index i = 0; i < n; ++i) {
            sums.row(labels[i]) += points.row(i);
            ++sizes[labels[i]];
        }
        for (int c = 0; c < k; ++c) {
            if (sizes[c] > 0) continue;
            // empty cluster: restart it at the point farthest from its center
            Index far = 0;
            double far_d = -1;
            for (Index i = 0; i < n; ++i) {
                if (sizes[labels[i]] <= 1) continue; // do not orphan another cluster
                if (point_dist2(i) > far_d) {
                    far_d = point_dist2(i);
                    far = i;
                }
            }
            sums.row(labels[far]) -= points.row(far);
            --sizes[labels[far]];
            labels[far] = c;
            sums.row(c) = points.row(far);
            sizes[c] = 1;
            point_dist2(far) = 0;
            changed = true;
        }

        double max_move2 = 0;
        for (int c = 0; c < k; ++c) {
            const Eigen::RowVectorXd next = sums.row(c) / static_cast<double>(sizes[c]);
            max_move2 = std::max(max_move2, (next - centers.row(c)).squaredNorm());
            centers.row(c) = next;
        }
        if (!changed || max_move2 <= cfg.tol * cfg.tol) break;
    }

    double inertia = 0;
    for (Index i = 0; i < n; ++i)
        inertia += (points.row(i) - centers.row(labels[i])).squaredNorm();
    return {std::move(labels), inertia, std::move(history)};
}

} // namespace

KmeansResult kmeanspp(const Matrix& points, const KmeansConfig& cfg) {
    if (cfg.k < 1) throw Error(Errc::invalid_params, "k must be >= 1");
    if (cfg.restarts < 1) throw Error(Errc::invalid_params, "restarts must be >= 1");
    if (points.rows() < cfg.k)
        throw Error(Errc::too_few_points, std::to_string(points.rows()) + " points for k=" +
                                              std::to_string(cfg.k));
    std::vector<std::uint64_t> keys(points.rows());
    for (Index i = 0; i < points.rows(); ++i) keys[i] = point_key(points, i);

    KmeansResult best;
    best.inertia = std::numeric_limits<double>::infinity();
    for (int r = 0; r < cfg.restarts; ++r) {
        LloydOutcome out = run_restart(points, cfg, keys, r);
        if (out.inertia < best.inertia) {
            best.inertia = out.inertia;
            best.labels = std::move(out.labels);
            best.best_restart = r;
            best.inertia_history = std::move(out.inertia_history);
        }
    }
    return best;
}

} // namespace signet
