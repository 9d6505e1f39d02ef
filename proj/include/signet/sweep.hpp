#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signet/embedding.hpp"
#include "signet/kmeans.hpp"
#include "signet/ssbm.hpp"

namespace signet {

enum class SweepAxis { Eta, P, TauGrid };
enum class DimsPolicy { KMinusOne, K };

struct ExperimentGrid {
    SweepAxis axis = SweepAxis::Eta;
    Index n = 200;
    int k = 2;
    double p = 0.1;    // fixed when the axis is Eta or TauGrid
    double eta = 0.0;  // fixed when the axis is P or TauGrid
    std::vector<double> values;         // axis values for Eta/P sweeps
    std::vector<double> tau_plus_grid;  // TauGrid only
    std::vector<double> tau_minus_grid; // TauGrid only
    std::vector<Method> methods;
    double tau_plus = 1.0;
    double tau_minus = 1.0;
    DimsPolicy dims = DimsPolicy::KMinusOne;
    ClusterSizes sizes = ClusterSizes::Equal;
    int trials = 20;
    std::uint64_t base_seed = 1;
    int restarts = 10; // k-means restarts
};

struct TrialResult {
    int cell = 0;
    double value = 0;  // eta, p, or tau+
    double value2 = 0; // tau- on tau grids
    Method method = Method::SpongeSym;
    std::uint64_t seed = 0;
    double ari = 0;
    double secs = 0;
    Vector eigenvalues;
    std::optional<double> subspace_distance;
    bool failed = false;
    std::string error;
};

struct CellAggregate {
    int cell = 0;
    double value = 0;
    double value2 = 0;
    Method method = Method::SpongeSym;
    int trials = 0;
    double mean_ari = 0;
    double stderr_ari = 0;
};

struct SweepResult {
    std::vector<TrialResult> trials;
    std::vector<CellAggregate> aggregates;
};

void validate_grid(const ExperimentGrid& grid);

// one trial per (cell, method, seed); jobs run on a bounded pool and land in
// deterministic order regardless of scheduling
SweepResult run_sweep(const ExperimentGrid& grid, int threads = 0);

int thread_budget(int requested); // SIGNET_THREADS-aware

void write_results_csv(const ExperimentGrid& grid, const SweepResult& res,
                       const std::string& path);
void write_aggregates_csv(const ExperimentGrid& grid, const SweepResult& res,
                          const std::string& path);
void write_timings_csv(const ExperimentGrid& grid, const SweepResult& res,
                       const std::string& path);
void write_config_json(const ExperimentGrid& grid, const std::string& path);

// single-shot clustering of an edge-list file
struct ClusterBlockStats {
    int ci = 0;
    int cj = 0;
    double pairs = 0;
    double positive_weight = 0;
    double negative_weight = 0;
};

struct ClusterFileReport {
    std::vector<int> labels;
    std::vector<Index> cluster_sizes;
    std::vector<double> internal_positive; // per cluster
    std::vector<double> internal_negative;
    double graph_positive = 0;
    double graph_negative = 0;
    std::vector<ClusterBlockStats> blocks;
    std::vector<Index> permutation; // vertices sorted by (label, index)
    double inertia = 0;
};

ClusterFileReport cluster_graph(const SignedGraph& g, const MethodSpec& spec, int k,
                                const KmeansConfig& kcfg, const SolverOptions& opts = {});

} // namespace signet
