#include "rptrim/estimators.hpp"

#include <cmath>
#include <stdexcept>

namespace rptrim {

namespace {

int check_weights(const ObservationSet& data, std::span<const int> weights,
                  int min_kept) {
    if (static_cast<int>(weights.size()) != data.n())
        throw std::invalid_argument("weights length != n");
    int kept = 0;
    for (int w : weights) {
        if (w != 0 && w != 1)
            throw std::invalid_argument("weights must be binary");
        kept += w;
    }
    if (kept < min_kept)
        throw std::invalid_argument("too few kept observations");
    return kept;
}

}  // namespace

Eigen::VectorXd weighted_mean(const ObservationSet& data,
                              std::span<const int> weights) {
    const int kept = check_weights(data, weights, 1);
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(data.d());
    for (int i = 0; i < data.n(); ++i)
        if (weights[i]) mu += data.values.row(i).transpose();
    return mu / kept;
}

Eigen::MatrixXd weighted_covariance(const ObservationSet& data,
                                    std::span<const int> weights) {
    const int kept = check_weights(data, weights, 2);
    const Eigen::VectorXd mu = weighted_mean(data, weights);
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(data.d(), data.d());
    for (int i = 0; i < data.n(); ++i) {
        if (!weights[i]) continue;
        const Eigen::VectorXd c = data.values.row(i).transpose() - mu;
        S.selfadjointView<Eigen::Lower>().rankUpdate(c);
    }
    S = S.selfadjointView<Eigen::Lower>();
    S /= kept;
    return (S + S.transpose()) / 2.0;
}

Eigen::MatrixXd correlation_from_covariance(const Eigen::MatrixXd& S) {
    const int d = static_cast<int>(S.rows());
    if (S.cols() != d) throw std::invalid_argument("covariance must be square");
    Eigen::VectorXd inv_sd(d);
    for (int i = 0; i < d; ++i) {
        if (!(S(i, i) > 0.0))
            throw std::invalid_argument("correlation: nonpositive diagonal entry");
        inv_sd[i] = 1.0 / std::sqrt(S(i, i));
    }
    Eigen::MatrixXd R = inv_sd.asDiagonal() * S * inv_sd.asDiagonal();
    for (int i = 0; i < d; ++i) R(i, i) = 1.0;
    return R;
}

PCAResult trimmed_pca(const ObservationSet& data, std::span<const int> weights,
                      int q) {
    if (q < 1 || q > data.d())
        throw std::invalid_argument("trimmed_pca: q must be in [1, d]");
    const Eigen::MatrixXd S = weighted_covariance(data, weights);
    const EigenDecomposition eig = symmetric_eigendecomposition(S);
    PCAResult out;
    out.eigenvalues = eig.eigenvalues.head(q);
    out.components = eig.eigenvectors.leftCols(q);
    return out;
}

double l2_error_mean(const Eigen::VectorXd& est, const Eigen::VectorXd& truth) {
    if (est.size() != truth.size())
        throw std::invalid_argument("l2_error_mean: length mismatch");
    if (est.size() == 0) throw std::invalid_argument("l2_error_mean: empty");
    return std::sqrt((est - truth).squaredNorm() / est.size());
}

double l2_error_cov(const Eigen::MatrixXd& est, const Eigen::MatrixXd& truth) {
    if (est.rows() != truth.rows() || est.cols() != truth.cols() ||
        est.rows() != est.cols())
        throw std::invalid_argument("l2_error_cov: shape mismatch");
    return (est - truth).norm() / est.rows();
}

EstimateBundle estimate_bundle(const ObservationSet& data,
                               std::span<const int> weights,
                               std::optional<int> pca_components) {
    EstimateBundle b;
    b.mean = weighted_mean(data, weights);
    b.covariance = weighted_covariance(data, weights);
    b.correlation = correlation_from_covariance(b.covariance);
    if (pca_components) b.pca = trimmed_pca(data, weights, *pca_components);
    return b;
}

}  // namespace rptrim
