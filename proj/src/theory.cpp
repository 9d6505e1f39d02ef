#include "signet/theory.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <string>

#include "signet/error.hpp"

namespace signet::theory {

namespace {

void require_even(Index n) {
    if (n < 2 || n % 2 != 0)
        throw Error(Errc::odd_vertex_count, "two-block closed forms need even n >= 2, got " +
                                                std::to_string(n));
}

void require_model(double p, double eta) {
    if (p < 0 || p > 1) throw Error(Errc::invalid_params, "p outside [0,1]");
    if (eta < 0 || eta >= 0.5) throw Error(Errc::invalid_params, "eta outside [0,0.5)");
}

void require_taus(double tau_plus, double tau_minus) {
    if (tau_plus <= 0 || tau_minus <= 0)
        throw Error(Errc::invalid_params, "tau+ and tau- must be positive");
}

} // namespace

Vector informative_vector(Index n) {
    require_even(n);
    Vector w(n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    w.head(n / 2).setConstant(s);
    w.tail(n / 2).setConstant(-s);
    return w;
}

Vector constant_vector(Index n) {
    return Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
}

ExpectedGraphSpectra expected_spectra(Index n, double p, double eta) {
    require_even(n);
    require_model(p, eta);
    const double half = n / 2.0;
    ExpectedGraphSpectra s{};
    s.d_plus = p * (half - 1.0 + eta);
    s.d_minus = p * (half - eta);
    s.lplus_zero = 0.0;
    s.lplus_info = p * n * eta;
    s.lplus_bulk = p * half;
    s.lminus_zero = 0.0;
    s.lminus_info = p * n * (1.0 - eta);
    s.lminus_bulk = p * half;
    return s;
}

ExpectedSpongeSpectrum sponge_expected_spectrum(Index n, double eta, double tau_plus,
                                                double tau_minus) {
    require_even(n);
    require_taus(tau_plus, tau_minus);
    if (eta < 0 || eta >= 0.5) throw Error(Errc::invalid_params, "eta outside [0,0.5)");
    const double half = n / 2.0;
    const double dp = half - 1.0 + eta; // d+/p
    const double dm = half - eta;       // d-/p
    ExpectedSpongeSpectrum s{};
    s.lambda_const = tau_minus * dm / (tau_plus * dp);
    s.lambda_info = (n * eta + tau_minus * dm) / (n * (1.0 - eta) + tau_plus * dp);
    s.lambda_bulk = (n + 2.0 * tau_minus * dm) / (n + 2.0 * tau_plus * dp);
    s.const_below_bulk = s.lambda_const < s.lambda_bulk;
    s.info_below_bulk = s.lambda_info < s.lambda_bulk;
    return s;
}

TauBounds tau_bounds(Index n, double eta, double tau_plus) {
    require_even(n);
    const double half = n / 2.0;
    const double ratio = (half - 1.0 + eta) / (half - eta);
    TauBounds b{};
    b.bottom_two_max_tau_minus = tau_plus * ratio;
    b.bottom_one_min_tau_minus = tau_plus * ratio * eta / (1.0 - eta);
    return b;
}

bool tau_admissible(Index n, double eta, double tau_plus, double tau_minus, TauMode mode) {
    require_taus(tau_plus, tau_minus);
    const TauBounds b = tau_bounds(n, eta, tau_plus);
    return mode == TauMode::BottomTwo ? tau_minus < b.bottom_two_max_tau_minus
                                      : tau_minus > b.bottom_one_min_tau_minus;
}

double spectral_gap_lower_bound(Index n, double eta, double tau_plus, double tau_minus,
                                double eps_tau, TauMode mode) {
    require_taus(tau_plus, tau_minus);
    if (eps_tau <= 0 || eps_tau >= 1)
        throw Error(Errc::invalid_params, "eps_tau outside (0,1)");
    if (n < 6) throw Error(Errc::condition_violated, "gap bound needs n >= 6");
    const TauBounds b = tau_bounds(n, eta, tau_plus);
    const double bulk_term =
        (1.0 - 2.0 * eta) / 3.0 * (3.0 + tau_plus + tau_minus) / ((1.0 + tau_plus) * (1.0 + tau_plus));
    if (mode == TauMode::BottomTwo) {
        if (!(tau_minus <= eps_tau * b.bottom_two_max_tau_minus))
            throw Error(Errc::condition_violated,
                        "tau- exceeds eps_tau-strengthened bottom-two bound");
        const double const_term = 2.0 * (1.0 - eps_tau) / (3.0 * (1.0 + tau_plus));
        return std::min(const_term, bulk_term);
    }
    if (!(tau_minus >= b.bottom_one_min_tau_minus / eps_tau))
        throw Error(Errc::condition_violated,
                    "tau- below eps_tau-strengthened bottom-one bound");
    const double const_term = eta * (1.0 / eps_tau - 1.0) / (1.0 - eta + tau_plus);
    return std::min(const_term, bulk_term);
}

double sponge_exact_gap(const ExpectedSpongeSpectrum& s, TauMode mode) {
    if (mode == TauMode::BottomTwo)
        return s.lambda_bulk - std::max(s.lambda_const, s.lambda_info);
    return std::min(s.lambda_const, s.lambda_bulk) - s.lambda_info;
}

ConcentrationBudget concentration_budget(Index n, double p, double eps_conc,
                                         double tau_plus, double tau_minus) {
    require_taus(tau_plus, tau_minus);
    if (eps_conc <= 0 || eps_conc > 0.5)
        throw Error(Errc::invalid_params, "eps_conc outside (0,0.5]");
    if (n < 3) throw Error(Errc::invalid_params, "n too small");
    if (!(p > 0)) throw Error(Errc::p_too_small_for_chernoff, "p must be positive");
    ConcentrationBudget b{};
    b.eps_conc = eps_conc;
    const double np = static_cast<double>(n) * p;
    b.delta_a = ((1.0 + eps_conc) * 2.0 * std::sqrt(2.0) + 1.0) * std::sqrt(np);
    b.delta_d = std::sqrt(3.0 * np * std::log(static_cast<double>(n)));
    b.delta_ad_plus = b.delta_a + b.delta_d * (1.0 + tau_plus);
    b.delta_ad_minus = b.delta_a + b.delta_d * (1.0 + tau_minus);
    b.chernoff_min_p = 6.0 * std::log(static_cast<double>(n)) / (n / 2.0 - 1.0);
    b.chernoff_ok = p > b.chernoff_min_p;
    return b;
}

PerturbationReport perturbation_report(const ConcentrationBudget& budget, Index n, double p,
                                       double eta, double tau_plus, double tau_minus) {
    require_taus(tau_plus, tau_minus);
    require_model(p, eta);
    const double half = n / 2.0;
    PerturbationReport r{};
    r.plus_threshold = tau_plus * p / 2.0 * (half - 1.0 + eta);
    r.minus_threshold = tau_minus * p / 2.0 * (half - eta);
    r.plus_ok = budget.delta_ad_plus <= r.plus_threshold;
    r.minus_ok = budget.delta_ad_minus <= r.minus_threshold;
    r.terms = {0, 0, 0, 0, 0};
    r.bound = std::numeric_limits<double>::quiet_NaN();
    if (!r.plus_ok || !r.minus_ok) return r;

    const double dplus = budget.delta_ad_plus;
    const double dminus = budget.delta_ad_minus;
    const double denom = tau_plus * p * (half - 1.0 + eta); // smallest eigenvalue of the mass side
    const double qnorm = half * p + tau_minus * p * (half - eta);
    const double denom32 = std::pow(denom, 1.5);
    r.terms[0] = 2.0 * std::sqrt(2.0) * std::sqrt(dplus) / denom32 * qnorm;
    r.terms[1] = dminus / denom;
    r.terms[2] = 2.0 * std::sqrt(2.0) * dminus * std::sqrt(dplus) / denom32;
    r.terms[3] = 2.0 * dplus * dminus / (denom * denom);
    r.terms[4] = 2.0 * dplus / (denom * denom) * qnorm;
    r.bound = r.terms[0] + r.terms[1] + r.terms[2] + r.terms[3] + r.terms[4];
    return r;
}

double perturbation_bound(const ConcentrationBudget& budget, Index n, double p, double eta,
                          double tau_plus, double tau_minus) {
    const PerturbationReport r =
        perturbation_report(budget, n, p, eta, tau_plus, tau_minus);
    if (!r.plus_ok)
        throw Error(Errc::hypothesis_violated,
                    "delta_AD+ = " + std::to_string(budget.delta_ad_plus) +
                        " exceeds (tau+ p/2)(n/2-1+eta) = " + std::to_string(r.plus_threshold));
    if (!r.minus_ok)
        throw Error(Errc::hypothesis_violated,
                    "delta_AD- = " + std::to_string(budget.delta_ad_minus) +
                        " exceeds (tau- p/2)(n/2-eta) = " + std::to_string(r.minus_threshold));
    return r.bound;
}

SignedLbarExpectedSpectrum signed_laplacian_expected_spectrum(Index n, double p, double eta) {
    require_even(n);
    require_model(p, eta);
    SignedLbarExpectedSpectrum s{};
    s.lambda_min = 2.0 * eta * (n - 1.0) * p;
    s.lambda_bulk = (n - 2.0 * eta) * p;
    return s;
}

double min_p_for_lbar_recovery(Index n, double eta, double eps_conc, double eps_acc) {
    if (eps_conc <= 0 || eps_conc > 0.5)
        throw Error(Errc::invalid_params, "eps_conc outside (0,0.5]");
    if (eps_acc <= 0 || eps_acc >= 1) throw Error(Errc::invalid_params, "eps_acc outside (0,1)");
    if (eta < 0 || eta >= 0.5) throw Error(Errc::invalid_params, "eta outside [0,0.5)");
    const double c = (1.0 + eps_conc) * 2.0 * std::sqrt(2.0) + 1.0;
    return 4.0 * c * c / (eps_acc * eps_acc * (1.0 - 2.0 * eta) * (1.0 - 2.0 * eta)) *
           std::log(static_cast<double>(n)) / static_cast<double>(n);
}

std::pair<double, double> weyl_interval(double lambda_bar, double w_norm) {
    if (w_norm < 0) throw Error(Errc::invalid_params, "perturbation norm must be >= 0");
    return {lambda_bar - w_norm, lambda_bar + w_norm};
}

double chernoff_tail(double mu, double delta) {
    if (mu <= 0) throw Error(Errc::invalid_params, "mu must be positive");
    if (delta < 0 || delta >= 1) throw Error(Errc::invalid_params, "delta outside [0,1)");
    return 2.0 * std::exp(-mu * delta * delta / 3.0);
}

double sponge_success_probability(Index n, double p, double c_eps) {
    if (c_eps <= 0) throw Error(Errc::invalid_params, "c_eps must be positive");
    const double nn = static_cast<double>(n);
    return 1.0 - 4.0 / nn - 2.0 * nn * std::exp(-p * nn / c_eps);
}

double lbar_success_probability(Index n, double p, double c_eps) {
    if (c_eps <= 0) throw Error(Errc::invalid_params, "c_eps must be positive");
    const double nn = static_cast<double>(n);
    return 1.0 - 2.0 / nn - nn * std::exp(-p * nn / (4.0 * c_eps));
}

double cbar_coefficient(double eps_conc, double tau_plus, double tau_minus) {
    if (eps_conc <= 0 || eps_conc > 0.5)
        throw Error(Errc::invalid_params, "eps_conc outside (0,0.5]");
    require_taus(tau_plus, tau_minus);
    const double ce = (1.0 + eps_conc) * 2.0 * std::sqrt(2.0) + 1.0 + std::sqrt(3.0);
    const double tp32 = std::pow(tau_plus, 1.5);
    return std::pow(3.0, 1.5) * std::sqrt(2.0) * std::sqrt(ce) * (1.0 + tau_minus) / tp32 +
           3.0 * ce / tau_plus + std::pow(6.0, 1.5) * std::pow(ce, 1.5) / tp32 +
           18.0 * ce * ce / (tau_plus * tau_plus) +
           9.0 * ce * (1.0 + tau_minus) / (tau_plus * tau_plus);
}

namespace {

// two-block structure: entry value chosen by same/different cluster membership
Matrix two_block(Index n, double same, double diff) {
    require_even(n);
    Matrix m(n, n);
    const Index h = n / 2;
    m.topLeftCorner(h, h).setConstant(same);
    m.bottomRightCorner(h, h).setConstant(same);
    m.topRightCorner(h, h).setConstant(diff);
    m.bottomLeftCorner(h, h).setConstant(diff);
    m.diagonal().setZero();
    return m;
}

} // namespace

Matrix expected_adjacency_plus(Index n, double p, double eta) {
    require_model(p, eta);
    return two_block(n, p * (1.0 - eta), p * eta);
}

Matrix expected_adjacency_minus(Index n, double p, double eta) {
    require_model(p, eta);
    return two_block(n, p * eta, p * (1.0 - eta));
}

Matrix expected_laplacian_plus(Index n, double p, double eta) {
    const Matrix a = expected_adjacency_plus(n, p, eta);
    return Matrix(a.rowwise().sum().asDiagonal()) - a;
}

Matrix expected_laplacian_minus(Index n, double p, double eta) {
    const Matrix a = expected_adjacency_minus(n, p, eta);
    return Matrix(a.rowwise().sum().asDiagonal()) - a;
}

Matrix expected_sponge_operator(Index n, double p, double eta, double tau_plus,
                                double tau_minus) {
    require_taus(tau_plus, tau_minus);
    const ExpectedGraphSpectra s = expected_spectra(n, p, eta);
    const Matrix stiffness =
        expected_laplacian_plus(n, p, eta) + tau_minus * s.d_minus * Matrix::Identity(n, n);
    const Matrix mass =
        expected_laplacian_minus(n, p, eta) + tau_plus * s.d_plus * Matrix::Identity(n, n);
    Eigen::SelfAdjointEigenSolver<Matrix> es(mass);
    if (es.eigenvalues()(0) <= 0)
        throw Error(Errc::singular_pencil, "expected mass side not positive definite");
    const Matrix inv_sqrt = es.operatorInverseSqrt();
    return inv_sqrt * stiffness * inv_sqrt;
}

Matrix expected_signed_laplacian(Index n, double p, double eta) {
    require_model(p, eta);
    const Matrix a = two_block(n, p * (1.0 - 2.0 * eta), -p * (1.0 - 2.0 * eta));
    return (n - 1.0) * p * Matrix::Identity(n, n) - a;
}

} // namespace signet::theory
