#include "signet/eigensolver.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "signet/error.hpp"
#include "signet/rng.hpp"

namespace signet {

namespace {

constexpr int kGuardVectors = 3; // extra block columns to stabilize clustered pairs

Matrix mass_apply(const Pencil& p, const Matrix& x) {
    return p.identity_mass ? x : Matrix(p.mass * x);
}

// in-place SVQB: make the columns of s orthonormal in the mass inner product,
// dropping directions whose Gram eigenvalue collapses. Returns kept count.
Index mass_orthonormalize(const Pencil& p, Matrix& s, Matrix* s_mass = nullptr) {
    if (s.cols() == 0) return 0;
    Matrix ms = mass_apply(p, s);
    Matrix gram = s.transpose() * ms;
    gram = 0.5 * (gram + gram.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
    const Vector& ev = es.eigenvalues();
    const double lead = ev(ev.size() - 1);
    if (!(lead > 0))
        throw Error(Errc::indefinite_mass_matrix, "mass Gram matrix is not positive");
    const double cutoff = lead * 1e-10;
    Index keep = 0;
    for (Index i = 0; i < ev.size(); ++i)
        if (ev(i) > cutoff) ++keep;
    Matrix scale(ev.size(), keep);
    scale.setZero();
    for (Index i = 0; i < keep; ++i) {
        const Index src = ev.size() - keep + i; // keep the dominant directions
        scale.col(i) = es.eigenvectors().col(src) / std::sqrt(ev(src));
    }
    s = s * scale;
    if (s_mass) *s_mass = ms * scale;
    return keep;
}

EigResult dense_solve(const Pencil& p, Index m, const SolverOptions& opts) {
    const Index n = p.stiffness.rows();
    const Matrix b = Matrix(p.stiffness);
    Matrix t;
    Matrix inv_sqrt;
    if (p.identity_mass) {
        t = b;
    } else {
        Eigen::SelfAdjointEigenSolver<Matrix> esa(Matrix(p.mass));
        const double lo = esa.eigenvalues()(0);
        const double hi = esa.eigenvalues()(n - 1);
        if (!(lo > hi * 1e-12) || !(hi > 0))
            throw Error(Errc::indefinite_mass_matrix,
                        "smallest mass eigenvalue " + std::to_string(lo));
        inv_sqrt = esa.operatorInverseSqrt();
        t = inv_sqrt * b * inv_sqrt;
        t = 0.5 * (t + t.transpose());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> est(t);
    EigResult r;
    r.eigenvalues = est.eigenvalues().head(m);
    r.eigenvectors = p.identity_mass
                         ? Matrix(est.eigenvectors().leftCols(m))
                         : Matrix(inv_sqrt * est.eigenvectors().leftCols(m));
    const Matrix bx = p.stiffness * r.eigenvectors;
    const Matrix ax = mass_apply(p, r.eigenvectors);
    r.residuals.resize(m);
    const double scale = std::max(matrix_norm_estimate(p.stiffness), 1e-300);
    r.pair_converged.assign(m, true);
    for (Index i = 0; i < m; ++i) {
        r.residuals(i) = (bx.col(i) - r.eigenvalues(i) * ax.col(i)).norm();
        r.pair_converged[i] = r.residuals(i) <= 100 * opts.tol * scale;
    }
    r.iterations = 0;
    r.converged = true;
    return r;
}

Vector jacobi_diagonal(const SpMat& b) {
    Vector d = b.diagonal();
    double top = 0;
    for (Index i = 0; i < d.size(); ++i) top = std::max(top, std::abs(d(i)));
    if (top == 0) return Vector::Ones(d.size());
    const double floor = 1e-10 * top;
    for (Index i = 0; i < d.size(); ++i) d(i) = std::max(d(i), floor);
    return d;
}

} // namespace

double matrix_norm_estimate(const SpMat& m) {
    Vector row_abs = Vector::Zero(m.rows());
    for (int col = 0; col < m.outerSize(); ++col)
        for (SpMat::InnerIterator it(m, col); it; ++it)
            row_abs(it.row()) += std::abs(it.value());
    return row_abs.size() ? row_abs.maxCoeff() : 0.0;
}

EigResult smallest_generalized(const Pencil& pencil, Index m, const SolverOptions& opts) {
    const Index n = pencil.stiffness.rows();
    if (pencil.stiffness.cols() != n || pencil.mass.rows() != n || pencil.mass.cols() != n)
        throw Error(Errc::invalid_params, "pencil matrices must be square and same size");
    if (m < 1 || m > n)
        throw Error(Errc::invalid_params, "requested " + std::to_string(m) +
                                              " pairs from dimension " + std::to_string(n));

    const Index block = std::min<Index>(m + kGuardVectors, n);
    if (n <= opts.dense_threshold || 3 * block > n) return dense_solve(pencil, m, opts);

    const double bnorm = std::max(matrix_norm_estimate(pencil.stiffness), 1e-300);
    const double res_tol = opts.tol * bnorm;
    const Vector precond = jacobi_diagonal(pencil.stiffness);

    rng::Stream init(opts.seed, rng::mix64(0x10b9c6, n));
    Matrix x(n, block);
    for (Index j = 0; j < block; ++j)
        for (Index i = 0; i < n; ++i) x(i, j) = init.next_gauss();
    if (mass_orthonormalize(pencil, x) < block)
        throw Error(Errc::indefinite_mass_matrix, "mass-orthonormalization lost rank at init");

    Matrix p_dir(n, 0); // conjugate directions from the previous step
    EigResult result;
    Vector theta = Vector::Zero(block);
    Matrix bx, ax, residual;
    int it = 0;
    for (; it < opts.max_iter; ++it) {
        // Rayleigh-Ritz on the current mass-orthonormal block
        bx = pencil.stiffness * x;
        Matrix xtbx = x.transpose() * bx;
        xtbx = 0.5 * (xtbx + xtbx.transpose());
        Eigen::SelfAdjointEigenSolver<Matrix> small(xtbx);
        x = x * small.eigenvectors();
        bx = bx * small.eigenvectors();
        theta = small.eigenvalues();
        ax = mass_apply(pencil, x);
        residual = bx - ax * theta.asDiagonal();

        if (opts.track_ritz) result.ritz_history.push_back(theta.head(m));

        bool all_done = true;
        for (Index j = 0; j < m; ++j)
            if (residual.col(j).norm() > res_tol) {
                all_done = false;
                break;
            }
        if (all_done) break;

        // preconditioned residuals, mass-orthogonal to the current block
        Matrix w = residual.array().colwise() / precond.array();
        w -= x * (ax.transpose() * w);
        const Index kept_w = mass_orthonormalize(pencil, w);
        w.conservativeResize(n, kept_w);

        Matrix basis(n, x.cols() + w.cols() + p_dir.cols());
        basis.leftCols(x.cols()) = x;
        basis.middleCols(x.cols(), w.cols()) = w;
        if (p_dir.cols() > 0) {
            Matrix pd = p_dir;
            pd -= x * (ax.transpose() * pd);
            pd -= w * (mass_apply(pencil, w).transpose() * pd);
            const Index kept_p = mass_orthonormalize(pencil, pd);
            basis.conservativeResize(n, x.cols() + w.cols() + kept_p);
            if (kept_p > 0) basis.rightCols(kept_p) = pd.leftCols(kept_p);
        }

        Matrix bs = pencil.stiffness * basis;
        Matrix gram = basis.transpose() * bs;
        gram = 0.5 * (gram + gram.transpose());
        Eigen::SelfAdjointEigenSolver<Matrix> proj(gram);
        const Matrix c = proj.eigenvectors().leftCols(block);

        x = basis * c;
        // next conjugate directions: the part of the update outside the old block
        const Matrix c_tail = c.bottomRows(basis.cols() - block);
        p_dir = basis.rightCols(basis.cols() - block) * c_tail;

        // guard against drift in the mass geometry
        if (mass_orthonormalize(pencil, x) < block)
            throw Error(Errc::indefinite_mass_matrix, "block lost rank during iteration");
    }

    bx = pencil.stiffness * x;
    ax = mass_apply(pencil, x);
    Matrix xtbx = x.transpose() * bx;
    xtbx = 0.5 * (xtbx + xtbx.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> final_rr(xtbx);
    x = x * final_rr.eigenvectors();
    bx = bx * final_rr.eigenvectors();
    ax = ax * final_rr.eigenvectors();
    theta = final_rr.eigenvalues();

    result.eigenvalues = theta.head(m);
    result.eigenvectors = x.leftCols(m);
    result.residuals.resize(m);
    result.pair_converged.assign(m, false);
    result.converged = true;
    for (Index j = 0; j < m; ++j) {
        result.residuals(j) = (bx.col(j) - theta(j) * ax.col(j)).norm();
        result.pair_converged[j] = result.residuals(j) <= res_tol;
        if (!result.pair_converged[j]) result.converged = false;
    }
    result.iterations = it;
    return result;
}

std::pair<double, Vector> eigenpair_transport(const Pencil& pencil, double lambda,
                                              const Vector& v) {
    if (pencil.identity_mass) return {lambda, v};
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(pencil.mass));
    if (es.eigenvalues()(0) <= 0)
        throw Error(Errc::indefinite_mass_matrix, "mass matrix not positive definite");
    return {lambda, es.operatorInverseSqrt() * v};
}

} // namespace signet
