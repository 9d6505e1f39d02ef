#include "signet/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "signet/error.hpp"
#include "signet/metrics.hpp"
#include "signet/rng.hpp"
#include "signet/theory.hpp"

namespace signet {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Cell {
    int index;
    double value;  // eta, p or tau+
    double value2; // tau-
};

std::vector<Cell> cells_of(const ExperimentGrid& grid) {
    std::vector<Cell> cells;
    if (grid.axis == SweepAxis::TauGrid) {
        int idx = 0;
        for (double tp : grid.tau_plus_grid)
            for (double tm : grid.tau_minus_grid) cells.push_back({idx++, tp, tm});
    } else {
        int idx = 0;
        for (double v : grid.values) cells.push_back({idx++, v, 0.0});
    }
    return cells;
}

SsbmParams params_for(const ExperimentGrid& grid, const Cell& cell, std::uint64_t seed) {
    SsbmParams p;
    p.n = grid.n;
    p.k = grid.k;
    p.sizes = grid.sizes;
    p.seed = seed;
    p.p = grid.axis == SweepAxis::P ? cell.value : grid.p;
    p.eta = grid.axis == SweepAxis::Eta ? cell.value : grid.eta;
    return p;
}

} // namespace

void validate_grid(const ExperimentGrid& grid) {
    if (grid.methods.empty()) throw Error(Errc::invalid_params, "no methods selected");
    if (grid.trials < 1) throw Error(Errc::invalid_params, "trials must be >= 1");
    if (grid.k < 2) throw Error(Errc::invalid_params, "k must be >= 2");
    if (grid.axis == SweepAxis::TauGrid) {
        if (grid.tau_plus_grid.empty() || grid.tau_minus_grid.empty())
            throw Error(Errc::invalid_params, "empty tau grid");
    } else if (grid.values.empty()) {
        throw Error(Errc::invalid_params, "empty sweep grid");
    }
    if (grid.dims == DimsPolicy::KMinusOne && grid.k < 2)
        throw Error(Errc::invalid_params, "k-1 dims need k >= 2");
}

int thread_budget(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SIGNET_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

SweepResult run_sweep(const ExperimentGrid& grid, int threads) {
    validate_grid(grid);
    const std::vector<Cell> cells = cells_of(grid);

    struct Job {
        Cell cell;
        Method method;
        int trial;
    };
    std::vector<Job> jobs;
    for (const Cell& c : cells)
        for (Method m : grid.methods)
            for (int t = 0; t < grid.trials; ++t) jobs.push_back({c, m, t});

    SweepResult result;
    result.trials.resize(jobs.size());

    const auto run_one = [&](const Job& job, TrialResult& out) {
        const std::uint64_t seed =
            rng::mix64(rng::mix64(grid.base_seed, job.cell.index), job.trial);
        out.cell = job.cell.index;
        out.value = job.cell.value;
        out.value2 = job.cell.value2;
        out.method = job.method;
        out.seed = seed;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const SsbmParams params = params_for(grid, job.cell, seed);
            const SsbmInstance inst = generate(params);

            MethodSpec spec;
            spec.method = job.method;
            spec.dims = grid.dims == DimsPolicy::K ? grid.k : grid.k - 1;
            if (grid.axis == SweepAxis::TauGrid) {
                spec.tau_plus = job.cell.value;
                spec.tau_minus = job.cell.value2;
            } else {
                spec.tau_plus = grid.tau_plus;
                spec.tau_minus = grid.tau_minus;
            }
            SolverOptions sopts;
            sopts.seed = rng::mix64(seed, 0xE16);
            const Embedding emb = compute_embedding(inst.graph, spec, sopts);

            KmeansConfig kcfg;
            kcfg.k = grid.k;
            kcfg.restarts = grid.restarts;
            kcfg.seed = rng::mix64(seed, 0x31A);
            const KmeansResult km = kmeanspp(emb.coords, kcfg);

            out.ari = adjusted_rand_index(km.labels, inst.labels);
            out.eigenvalues = emb.eigenvalues;
        } catch (const std::exception& e) {
            out.failed = true;
            out.error = e.what();
            out.ari = std::nan("");
        }
        out.secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    const int pool = std::max(1, std::min<int>(thread_budget(threads),
                                               static_cast<int>(jobs.size())));
    if (pool == 1) {
        for (size_t i = 0; i < jobs.size(); ++i) run_one(jobs[i], result.trials[i]);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(pool);
        for (int w = 0; w < pool; ++w)
            workers.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
                    run_one(jobs[i], result.trials[i]);
            });
        for (auto& t : workers) t.join();
    }

    // aggregate in deterministic (cell, method) order
    for (const Cell& c : cells) {
        for (Method m : grid.methods) {
            CellAggregate agg;
            agg.cell = c.index;
            agg.value = c.value;
            agg.value2 = c.value2;
            agg.method = m;
            double sum = 0, sum2 = 0;
            int count = 0;
            for (const TrialResult& t : result.trials) {
                if (t.cell != c.index || t.method != m || t.failed) continue;
                sum += t.ari;
                sum2 += t.ari * t.ari;
                ++count;
            }
            agg.trials = count;
            if (count > 0) {
                agg.mean_ari = sum / count;
                const double var =
                    count > 1 ? std::max(0.0, (sum2 - sum * sum / count) / (count - 1)) : 0.0;
                agg.stderr_ari = std::sqrt(var / count);
            }
            result.aggregates.push_back(agg);
        }
    }
    return result;
}

namespace {

const char* axis_name(SweepAxis a) {
    switch (a) {
    case SweepAxis::Eta: return "eta";
    case SweepAxis::P: return "p";
    case SweepAxis::TauGrid: return "tau";
    }
    return "?";
}

std::string cell_header(const ExperimentGrid& grid) {
    return grid.axis == SweepAxis::TauGrid ? "tau_plus,tau_minus" : std::string(axis_name(grid.axis));
}

std::string cell_fields(const ExperimentGrid& grid, double value, double value2) {
    if (grid.axis == SweepAxis::TauGrid) return fmt(value) + "," + fmt(value2);
    return fmt(value);
}

std::string tau_flags(const ExperimentGrid& grid, double tp, double tm) {
    if (grid.k != 2) return ",,";
    const bool b1 = theory::tau_admissible(grid.n, grid.eta, tp, tm, theory::TauMode::BottomOne);
    const bool b2 = theory::tau_admissible(grid.n, grid.eta, tp, tm, theory::TauMode::BottomTwo);
    return std::string(b1 ? ",1" : ",0") + (b2 ? ",1" : ",0");
}

} // namespace

void write_results_csv(const ExperimentGrid& grid, const SweepResult& res,
                       const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io_error, "cannot open " + path);
    out << cell_header(grid) << ",method,seed,ari";
    if (grid.axis == SweepAxis::TauGrid) out << ",adm_bottom1,adm_bottom2";
    out << '\n';
    for (const TrialResult& t : res.trials) {
        out << cell_fields(grid, t.value, t.value2) << ',' << method_name(t.method) << ','
            << t.seed << ',' << (t.failed ? "error" : fmt(t.ari));
        if (grid.axis == SweepAxis::TauGrid) out << tau_flags(grid, t.value, t.value2);
        out << '\n';
    }
}

void write_aggregates_csv(const ExperimentGrid& grid, const SweepResult& res,
                          const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io_error, "cannot open " + path);
    out << cell_header(grid) << ",method,trials,mean_ari,stderr_ari\n";
    for (const CellAggregate& a : res.aggregates)
        out << cell_fields(grid, a.value, a.value2) << ',' << method_name(a.method) << ','
            << a.trials << ',' << fmt(a.mean_ari) << ',' << fmt(a.stderr_ari) << '\n';
}

void write_timings_csv(const ExperimentGrid& grid, const SweepResult& res,
                       const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io_error, "cannot open " + path);
    out << cell_header(grid) << ",method,seed,secs\n";
    for (const TrialResult& t : res.trials)
        out << cell_fields(grid, t.value, t.value2) << ',' << method_name(t.method) << ','
            << t.seed << ',' << fmt(t.secs) << '\n';
}

void write_config_json(const ExperimentGrid& grid, const std::string& path) {
    nlohmann::json j;
    j["axis"] = axis_name(grid.axis);
    j["n"] = grid.n;
    j["k"] = grid.k;
    j["p"] = grid.p;
    j["eta"] = grid.eta;
    j["values"] = grid.values;
    j["tau_plus_grid"] = grid.tau_plus_grid;
    j["tau_minus_grid"] = grid.tau_minus_grid;
    j["tau_plus"] = grid.tau_plus;
    j["tau_minus"] = grid.tau_minus;
    std::vector<std::string> names;
    for (Method m : grid.methods) names.emplace_back(method_name(m));
    j["methods"] = names;
    j["dims"] = grid.dims == DimsPolicy::K ? "k" : "k-1";
    j["sizes"] = grid.sizes == ClusterSizes::Equal ? "equal" : "uneven";
    j["trials"] = grid.trials;
    j["seed"] = grid.base_seed;
    j["restarts"] = grid.restarts;
    j["version"] = "0.1.0";
    std::ofstream out(path);
    if (!out) throw Error(Errc::io_error, "cannot open " + path);
    out << j.dump(2) << '\n';
}

ClusterFileReport cluster_graph(const SignedGraph& g, const MethodSpec& spec, int k,
                                const KmeansConfig& kcfg, const SolverOptions& opts) {
    const Embedding emb = compute_embedding(g, spec, opts);
    KmeansConfig cfg = kcfg;
    cfg.k = k;
    const KmeansResult km = kmeanspp(emb.coords, cfg);

    ClusterFileReport rep;
    rep.labels = km.labels;
    rep.inertia = km.inertia;
    rep.cluster_sizes.assign(k, 0);
    for (int l : km.labels) ++rep.cluster_sizes[l];
    rep.internal_positive.assign(k, 0.0);
    rep.internal_negative.assign(k, 0.0);

    std::vector<ClusterBlockStats> blocks(static_cast<size_t>(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            blocks[static_cast<size_t>(a) * k + b].ci = a;
            blocks[static_cast<size_t>(a) * k + b].cj = b;
        }
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            auto& blk = blocks[static_cast<size_t>(a) * k + b];
            blk.pairs = a == b
                            ? rep.cluster_sizes[a] * (rep.cluster_sizes[a] - 1.0) / 2.0
                            : static_cast<double>(rep.cluster_sizes[a]) * rep.cluster_sizes[b];
        }

    const SpMat& adj = g.adjacency();
    for (int col = 0; col < adj.outerSize(); ++col) {
        for (SpMat::InnerIterator it(adj, col); it; ++it) {
            if (it.row() >= it.col()) continue;
            const int a = km.labels[it.row()];
            const int b = km.labels[it.col()];
            const double w = it.value();
            auto& blk = blocks[static_cast<size_t>(std::min(a, b)) * k + std::max(a, b)];
            if (w > 0)
                blk.positive_weight += w;
            else
                blk.negative_weight -= w;
            if (a == b) {
                if (w > 0)
                    rep.internal_positive[a] += w;
                else
                    rep.internal_negative[a] -= w;
            }
        }
    }
    rep.graph_positive = g.positive_weight();
    rep.graph_negative = g.negative_weight();
    // keep only the upper block triangle plus diagonal
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b)
            rep.blocks.push_back(blocks[static_cast<size_t>(a) * k + b]);

    rep.permutation.resize(g.num_vertices());
    for (Index i = 0; i < g.num_vertices(); ++i) rep.permutation[i] = i;
    std::stable_sort(rep.permutation.begin(), rep.permutation.end(),
                     [&](Index a, Index b) { return km.labels[a] < km.labels[b]; });
    return rep;
}

} // namespace signet
