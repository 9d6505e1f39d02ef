#include "signet/embedding.hpp"

#include <cmath>

#include "signet/error.hpp"

namespace signet {

const char* method_name(Method m) {
    switch (m) {
    case Method::Sponge: return "sponge";
    case Method::SpongeSym: return "sponge-sym";
    case Method::SignedLbar: return "lbar";
    case Method::SignedLbarSym: return "lbar-sym";
    case Method::SignedLbarRw: return "lbar-rw";
    case Method::Adjacency: return "adjacency";
    case Method::BNC: return "bnc";
    case Method::BRC: return "brc";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    for (Method m : {Method::Sponge, Method::SpongeSym, Method::SignedLbar,
                     Method::SignedLbarSym, Method::SignedLbarRw, Method::Adjacency,
                     Method::BNC, Method::BRC})
        if (name == method_name(m)) return m;
    throw Error(Errc::invalid_params, "unknown method '" + name + "'");
}

namespace {

SpMat diag_sparse(const Vector& d) {
    SpMat m(d.size(), d.size());
    std::vector<Triplet> trips;
    for (Index i = 0; i < d.size(); ++i)
        if (d[i] != 0.0) trips.emplace_back(i, i, d[i]);
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

// a vertex with no edges at all leaves a zero row on both pencil sides;
// regularization pins it to the eigenvalue tau-/tau+ exactly as the
// normalized variant does
void regularize_isolated(SpMat& stiffness, SpMat& mass, const Vector& d_abs,
                         double tau_plus, double tau_minus, ZeroDegreePolicy policy) {
    std::vector<Triplet> bump_b, bump_a;
    for (Index i = 0; i < d_abs.size(); ++i) {
        if (d_abs[i] > 0) continue;
        if (policy == ZeroDegreePolicy::Reject)
            throw Error(Errc::zero_degree_vertex, "isolated vertex " + std::to_string(i));
        bump_b.emplace_back(i, i, tau_minus);
        bump_a.emplace_back(i, i, tau_plus);
    }
    if (bump_b.empty()) return;
    SpMat db(stiffness.rows(), stiffness.cols()), da(mass.rows(), mass.cols());
    db.setFromTriplets(bump_b.begin(), bump_b.end());
    da.setFromTriplets(bump_a.begin(), bump_a.end());
    stiffness += db;
    mass += da;
}

struct SolveSpec {
    Pencil pencil;
    bool flip = false; // solve on -B to reach the largest end
};

SolveSpec assemble(const SignedGraph& g, const MethodSpec& spec) {
    SolveSpec s;
    switch (spec.method) {
    case Method::Sponge: {
        if (spec.tau_plus <= 0 || spec.tau_minus <= 0)
            throw Error(Errc::invalid_params, "sponge needs tau+ > 0 and tau- > 0");
        SpMat b = laplacian(g, LaplacianKind::Lplus) +
                  SpMat(spec.tau_minus * diag_sparse(g.degrees_negative()));
        SpMat a = laplacian(g, LaplacianKind::Lminus) +
                  SpMat(spec.tau_plus * diag_sparse(g.degrees_positive()));
        regularize_isolated(b, a, g.degrees_abs(), spec.tau_plus, spec.tau_minus,
                            spec.policy);
        s.pencil = Pencil::generalized(std::move(b), std::move(a));
        return s;
    }
    case Method::SpongeSym: {
        if (spec.tau_plus <= 0 || spec.tau_minus <= 0)
            throw Error(Errc::invalid_params, "sponge-sym needs tau+ > 0 and tau- > 0");
        const Index n = g.num_vertices();
        SpMat b = laplacian(g, LaplacianKind::LplusSym, spec.policy) +
                  SpMat(spec.tau_minus * sparse_identity(n));
        SpMat a = laplacian(g, LaplacianKind::LminusSym, spec.policy) +
                  SpMat(spec.tau_plus * sparse_identity(n));
        s.pencil = Pencil::generalized(std::move(b), std::move(a));
        return s;
    }
    case Method::SignedLbar:
        s.pencil = Pencil::standard(laplacian(g, LaplacianKind::SignedLbar));
        return s;
    case Method::SignedLbarSym:
    case Method::SignedLbarRw:
        s.pencil =
            Pencil::standard(laplacian(g, LaplacianKind::SignedLbarSym, spec.policy));
        return s;
    case Method::Adjacency:
        s.pencil = Pencil::standard(SpMat(-g.adjacency()));
        s.flip = true;
        return s;
    case Method::BNC: {
        SpMat b = SpMat(diag_sparse(g.degrees_positive())) - g.adjacency();
        Vector dbar = g.degrees_abs();
        for (Index i = 0; i < dbar.size(); ++i) {
            if (dbar[i] > 0) continue;
            if (spec.policy == ZeroDegreePolicy::Reject)
                throw Error(Errc::zero_degree_vertex,
                            "isolated vertex " + std::to_string(i));
            dbar[i] = 1.0; // unit mass keeps the pencil definite
        }
        s.pencil = Pencil::generalized(std::move(b), diag_sparse(dbar));
        return s;
    }
    case Method::BRC:
        s.pencil =
            Pencil::standard(SpMat(diag_sparse(g.degrees_positive())) - g.adjacency());
        return s;
    }
    throw Error(Errc::invalid_params, "unknown method");
}

} // namespace

Pencil sponge_pencil(const SpMat& l_plus, const Vector& d_minus, const SpMat& l_minus,
                     const Vector& d_plus, double tau_plus, double tau_minus) {
    if (tau_plus <= 0 || tau_minus <= 0)
        throw Error(Errc::invalid_params, "tau+ and tau- must be positive");
    SpMat b = l_plus + SpMat(tau_minus * diag_sparse(d_minus));
    SpMat a = l_minus + SpMat(tau_plus * diag_sparse(d_plus));
    return Pencil::generalized(std::move(b), std::move(a));
}

Embedding compute_embedding(const SignedGraph& g, const MethodSpec& spec,
                            const SolverOptions& opts) {
    if (spec.dims < 1) throw Error(Errc::invalid_params, "dims must be >= 1");
    if (spec.dims > g.num_vertices())
        throw Error(Errc::invalid_params, "dims exceeds vertex count");
    SolveSpec solve = assemble(g, spec);

    // one spare pair detects a tie at the cut-off
    const Index want = std::min<Index>(spec.dims + 1, g.num_vertices());
    EigResult eig;
    try {
        eig = smallest_generalized(solve.pencil, want, opts);
    } catch (const Error& e) {
        if (e.code() == Errc::indefinite_mass_matrix)
            throw Error(Errc::singular_pencil, e.what());
        throw;
    }

    Embedding emb;
    emb.spec = spec;
    emb.solver_converged = eig.converged;
    emb.coords = eig.eigenvectors.leftCols(spec.dims);
    emb.eigenvalues = eig.eigenvalues.head(spec.dims);
    if (want > spec.dims) {
        const double a = eig.eigenvalues(spec.dims - 1);
        const double b = eig.eigenvalues(spec.dims);
        emb.tie_at_cutoff = std::abs(b - a) <= 1e-10 * std::max(1.0, std::abs(a));
    }
    if (solve.flip) {
        // solved on the negated matrix: undo the sign and restore ascending order
        emb.eigenvalues = -emb.eigenvalues;
        emb.eigenvalues.reverseInPlace();
        emb.coords = emb.coords.rowwise().reverse().eval();
    }

    if (spec.method == Method::SignedLbarRw) {
        // transport symmetric eigenvectors; spectra agree, vectors differ by scaling
        const Vector& dbar = g.degrees_abs();
        for (Index i = 0; i < g.num_vertices(); ++i) {
            const double f = dbar[i] > 0 ? 1.0 / std::sqrt(dbar[i]) : 0.0;
            emb.coords.row(i) *= f;
        }
    }
    return emb;
}

Embedding sponge_embedding(const SignedGraph& g, const MethodSpec& spec,
                           const SolverOptions& opts) {
    MethodSpec s = spec;
    s.method = Method::Sponge;
    return compute_embedding(g, s, opts);
}

Embedding sponge_sym_embedding(const SignedGraph& g, const MethodSpec& spec,
                               const SolverOptions& opts) {
    MethodSpec s = spec;
    s.method = Method::SpongeSym;
    return compute_embedding(g, s, opts);
}

Embedding baseline_embedding(const SignedGraph& g, const MethodSpec& spec,
                             const SolverOptions& opts) {
    switch (spec.method) {
    case Method::Sponge:
    case Method::SpongeSym:
        throw Error(Errc::invalid_params, "not a baseline method");
    default:
        return compute_embedding(g, spec, opts);
    }
}

} // namespace signet
