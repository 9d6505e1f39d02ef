#pragma once

#include <array>
#include <utility>

#include "signet/types.hpp"

// Closed-form reference quantities for the two-block signed model: expected
// operator spectra, the eigenvalue groups of the expected SPONGE operator,
// tau admissibility windows, spectral-gap and concentration budgets, and the
// resulting perturbation bound. Everything here is evaluable arithmetic; the
// matching dense constructions live alongside for cross-checks.
namespace signet::theory {

// w = (1,...,1,-1,...,-1)^T / sqrt(n), the two planted blocks
Vector informative_vector(Index n);
Vector constant_vector(Index n); // 1/sqrt(n) * ones

struct ExpectedGraphSpectra {
    double d_plus;      // E D+ = d+ I
    double d_minus;     // E D- = d- I
    double lplus_zero;  // smallest eigenvalue of E L+ (vector 1/sqrt(n) 1)
    double lplus_info;  // next one (vector w) = p n eta
    double lplus_bulk;  // multiplicity n-2
    double lminus_zero; // smallest of E L- (vector 1/sqrt(n) 1)
    double lminus_info; // largest (vector w) = p n (1-eta)
    double lminus_bulk; // multiplicity n-2
};
ExpectedGraphSpectra expected_spectra(Index n, double p, double eta);

struct ExpectedSpongeSpectrum {
    double lambda_const; // eigenvector 1/sqrt(n) 1
    double lambda_info;  // eigenvector w
    double lambda_bulk;  // multiplicity n-2
    bool const_below_bulk;
    bool info_below_bulk;
};
// p-independent eigenvalue groups of the expected SPONGE operator
ExpectedSpongeSpectrum sponge_expected_spectrum(Index n, double eta, double tau_plus,
                                                double tau_minus);

enum class TauMode { BottomTwo, BottomOne };

struct TauBounds {
    double bottom_two_max_tau_minus; // admissible iff tau- strictly below
    double bottom_one_min_tau_minus; // admissible iff tau- strictly above
};
TauBounds tau_bounds(Index n, double eta, double tau_plus);

bool tau_admissible(Index n, double eta, double tau_plus, double tau_minus, TauMode mode);

// lower bound on the gap separating the informative group from the bulk,
// under the eps_tau-strengthened admissibility condition of the given mode
double spectral_gap_lower_bound(Index n, double eta, double tau_plus, double tau_minus,
                                double eps_tau, TauMode mode);

// exact gap from the closed-form groups, for comparison with the bound
double sponge_exact_gap(const ExpectedSpongeSpectrum& s, TauMode mode);

struct ConcentrationBudget {
    double eps_conc;
    double delta_a;        // ((1+eps) 2 sqrt(2) + 1) sqrt(n p)
    double delta_d;        // sqrt(3 p n log n)
    double delta_ad_plus;  // delta_a + delta_d (1 + tau+)
    double delta_ad_minus; // delta_a + delta_d (1 + tau-)
    bool chernoff_ok;      // p above the degree-concentration threshold
    double chernoff_min_p; // 6 log n / (n/2 - 1)
};
ConcentrationBudget concentration_budget(Index n, double p, double eps_conc,
                                         double tau_plus, double tau_minus);

struct PerturbationReport {
    bool plus_ok;  // delta_ad_plus  <= (tau+ p / 2)(n/2 - 1 + eta)
    bool minus_ok; // delta_ad_minus <= (tau- p / 2)(n/2 - eta)
    double plus_threshold;
    double minus_threshold;
    std::array<double, 5> terms; // valid only when both hypotheses hold
    double bound;                // sum of terms; NaN when hypotheses fail
};
PerturbationReport perturbation_report(const ConcentrationBudget& budget, Index n, double p,
                                       double eta, double tau_plus, double tau_minus);
// throws HypothesisViolated (message names the failing inequality) otherwise
double perturbation_bound(const ConcentrationBudget& budget, Index n, double p, double eta,
                          double tau_plus, double tau_minus);

struct SignedLbarExpectedSpectrum {
    double lambda_min;  // 2 eta (n-1) p, eigenvector w
    double lambda_bulk; // (n - 2 eta) p, multiplicity n-1
};
SignedLbarExpectedSpectrum signed_laplacian_expected_spectrum(Index n, double p, double eta);

// smallest p for which the signed-Laplacian alignment guarantee is non-vacuous
double min_p_for_lbar_recovery(Index n, double eta, double eps_conc, double eps_acc);

std::pair<double, double> weyl_interval(double lambda_bar, double w_norm);

// P(|X - mu| >= delta mu) <= 2 exp(-mu delta^2 / 3)
double chernoff_tail(double mu, double delta);

// success-probability lower bounds, parameterized by the caller's c_eps (the
// universal constant of the random-matrix bound has no published value)
double sponge_success_probability(Index n, double p, double c_eps);
double lbar_success_probability(Index n, double p, double c_eps);

// coefficient of (log n / (n p))^{1/4} in the operator perturbation bound
double cbar_coefficient(double eps_conc, double tau_plus, double tau_minus);

// --- dense expected matrices (k = 2 block structure), used by cross-checks ---
Matrix expected_adjacency_plus(Index n, double p, double eta);
Matrix expected_adjacency_minus(Index n, double p, double eta);
Matrix expected_laplacian_plus(Index n, double p, double eta);
Matrix expected_laplacian_minus(Index n, double p, double eta);
Matrix expected_sponge_operator(Index n, double p, double eta, double tau_plus,
                                double tau_minus);
Matrix expected_signed_laplacian(Index n, double p, double eta);

} // namespace signet::theory
