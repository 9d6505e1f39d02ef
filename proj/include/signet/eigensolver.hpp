#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "signet/types.hpp"

namespace signet {

// symmetric-definite problem: stiffness x = lambda mass x, mass SPD
struct Pencil {
    SpMat stiffness;
    SpMat mass;
    bool identity_mass = false;

    static Pencil standard(SpMat b) {
        Pencil p;
        p.mass = sparse_identity(b.rows());
        p.stiffness = std::move(b);
        p.identity_mass = true;
        return p;
    }
    static Pencil generalized(SpMat b, SpMat a) {
        Pencil p;
        p.stiffness = std::move(b);
        p.mass = std::move(a);
        return p;
    }
};

struct SolverOptions {
    double tol = 1e-8;          // residual tolerance relative to ||B|| estimate
    int max_iter = 500;
    Index dense_threshold = 512; // full dense eigendecomposition at or below
    std::uint64_t seed = 0;
    bool track_ritz = false;    // record per-iteration Ritz values of the wanted pairs
};

struct EigResult {
    Vector eigenvalues;  // ascending, length m
    Matrix eigenvectors; // n x m, mass-orthonormal columns
    Vector residuals;    // ||B x - lambda A x||_2 per pair
    int iterations = 0;
    bool converged = true;
    std::vector<bool> pair_converged;
    std::vector<Vector> ritz_history; // one length-m snapshot per iteration
};

// m algebraically smallest generalized eigenpairs of (stiffness, mass).
// LOBPCG with a Jacobi preconditioner; below dense_threshold (or when the
// block cannot fit three times into n) a dense congruence solve is used.
// Never converging within max_iter leaves the best Ritz pairs flagged.
EigResult smallest_generalized(const Pencil& pencil, Index m,
                               const SolverOptions& opts = {});

// carries a unit eigenpair (lambda, v) of mass^{-1/2} stiffness mass^{-1/2}
// to the generalized eigenpair (lambda, mass^{-1/2} v) of the pencil
std::pair<double, Vector> eigenpair_transport(const Pencil& pencil, double lambda,
                                              const Vector& v);

// infinity-norm estimate used to scale residual tolerances
double matrix_norm_estimate(const SpMat& m);

} // namespace signet
