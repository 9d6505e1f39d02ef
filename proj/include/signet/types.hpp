#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace signet {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

inline SpMat sparse_identity(Index n) {
    SpMat id(n, n);
    id.setIdentity();
    return id;
}

} // namespace signet
