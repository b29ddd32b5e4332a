#include "rptrim/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace rptrim {

namespace {

void check_symmetric(const Eigen::MatrixXd& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("matrix must be square");
    if (!M.allFinite())
        throw std::invalid_argument("matrix has non-finite entries");
    const double scale = 1.0 + M.cwiseAbs().maxCoeff();
    if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
        throw std::invalid_argument("matrix is not symmetric");
}

}  // namespace

EigenDecomposition symmetric_eigendecomposition(const Eigen::MatrixXd& M) {
    check_symmetric(M);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        (M + M.transpose()) / 2.0);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed to converge");

    const int d = static_cast<int>(M.rows());
    EigenDecomposition out;
    out.eigenvalues.resize(d);
    out.eigenvectors.resize(d, d);
    // Eigen returns ascending order
    for (int j = 0; j < d; ++j) {
        out.eigenvalues[j] = solver.eigenvalues()[d - 1 - j];
        Eigen::VectorXd v = solver.eigenvectors().col(d - 1 - j);
        int imax = 0;
        for (int i = 1; i < d; ++i)
            if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
        if (v[imax] < 0.0) v = -v;
        out.eigenvectors.col(j) = v;
    }
    return out;
}

Eigen::MatrixXd cholesky(const Eigen::MatrixXd& M) {
    check_symmetric(M);
    const Eigen::MatrixXd S = (M + M.transpose()) / 2.0;
    Eigen::LLT<Eigen::MatrixXd> llt(S);
    if (llt.info() == Eigen::Success)
        return llt.matrixL();
    const double jitter = 1e-10 * S.trace() / static_cast<double>(S.rows());
    Eigen::MatrixXd Sj =
        S + jitter * Eigen::MatrixXd::Identity(S.rows(), S.cols());
    llt.compute(Sj);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("cholesky: matrix is not positive definite");
    return llt.matrixL();
}

}  // namespace rptrim
