#pragma once

#include <optional>
#include <span>

#include "rptrim/linalg.hpp"
#include "rptrim/types.hpp"

namespace rptrim {

struct PCAResult {
    Eigen::VectorXd eigenvalues;  // descending, length q
    Eigen::MatrixXd components;   // d x q, orthonormal columns
};

struct EstimateBundle {
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;
    Eigen::MatrixXd correlation;
    std::optional<PCAResult> pca;
};

/// Coordinatewise weighted average over kept rows (binary weights).
Eigen::VectorXd weighted_mean(const ObservationSet& data,
                              std::span<const int> weights);

/// sum w_i (x_i - mu)(x_i - mu)^T / sum w_i. The divisor is sum w_i,
/// with no small-sample correction.
Eigen::MatrixXd weighted_covariance(const ObservationSet& data,
                                    std::span<const int> weights);

/// R_ij = S_ij / sqrt(S_ii S_jj). Throws on a nonpositive diagonal.
Eigen::MatrixXd correlation_from_covariance(const Eigen::MatrixXd& S);

/// Top-q eigenpairs of the weighted covariance.
PCAResult trimmed_pca(const ObservationSet& data, std::span<const int> weights,
                      int q);

/// sqrt( (1/N) sum_i (est_i - truth_i)^2 ) -- uniform grid weights.
double l2_error_mean(const Eigen::VectorXd& est, const Eigen::VectorXd& truth);

/// Frobenius norm of the difference divided by N.
double l2_error_cov(const Eigen::MatrixXd& est, const Eigen::MatrixXd& truth);

/// Mean, covariance, correlation, optional top-q PCA in one pass.
EstimateBundle estimate_bundle(const ObservationSet& data,
                               std::span<const int> weights,
                               std::optional<int> pca_components = {});

}  // namespace rptrim
