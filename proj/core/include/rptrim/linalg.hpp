#pragma once

#include <Eigen/Dense>

namespace rptrim {

struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;  // nonincreasing
    Eigen::MatrixXd eigenvectors; // columns, orthonormal
};

/// Eigendecomposition of a symmetric matrix. Eigenvalues descending;
/// each eigenvector's largest-magnitude entry is made nonnegative.
EigenDecomposition symmetric_eigendecomposition(const Eigen::MatrixXd& M);

/// Lower-triangular L with L L^T = M. If the factorization fails, a
/// diagonal jitter of 1e-10 * trace(M)/d is added once before failing.
Eigen::MatrixXd cholesky(const Eigen::MatrixXd& M);

}  // namespace rptrim
