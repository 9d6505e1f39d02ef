#pragma once

#include <string>

#include "signet/eigensolver.hpp"
#include "signet/graph.hpp"

namespace signet {

enum class Method {
    Sponge,        // smallest gen. eigvecs of (L+ + tau- D-, L- + tau+ D+)
    SpongeSym,     // smallest gen. eigvecs of (L+sym + tau- I, L-sym + tau+ I)
    SignedLbar,    // smallest eigvecs of Dbar - A
    SignedLbarSym, // smallest eigvecs of I - Dbar^{-1/2} A Dbar^{-1/2}
    SignedLbarRw,  // Lbar_sym eigvecs transported by Dbar^{-1/2}
    Adjacency,     // largest eigvecs of A
    BNC,           // smallest gen. eigvecs of (D+ - A, Dbar)
    BRC,           // smallest eigvecs of D+ - A
};

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct MethodSpec {
    Method method = Method::SpongeSym;
    double tau_plus = 1.0;
    double tau_minus = 1.0;
    Index dims = 1;
    ZeroDegreePolicy policy = ZeroDegreePolicy::Regularize;
};

struct Embedding {
    Matrix coords;      // n x dims
    Vector eigenvalues; // ascending for smallest-side methods
    MethodSpec spec;
    bool solver_converged = true;
    bool tie_at_cutoff = false; // eigenvalue tie broken by solver order
};

// the SPONGE matrix pencil assembled from explicit operator pieces
Pencil sponge_pencil(const SpMat& l_plus, const Vector& d_minus, const SpMat& l_minus,
                     const Vector& d_plus, double tau_plus, double tau_minus);

Embedding compute_embedding(const SignedGraph& g, const MethodSpec& spec,
                            const SolverOptions& opts = {});

// convenience entry points for the three method families
Embedding sponge_embedding(const SignedGraph& g, const MethodSpec& spec,
                           const SolverOptions& opts = {});
Embedding sponge_sym_embedding(const SignedGraph& g, const MethodSpec& spec,
                               const SolverOptions& opts = {});
Embedding baseline_embedding(const SignedGraph& g, const MethodSpec& spec,
                             const SolverOptions& opts = {});

} // namespace signet
