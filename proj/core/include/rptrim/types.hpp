#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace rptrim {

/// Sampling grid for curves observed at discrete points. Carries the
/// trapezoidal quadrature weights used by the L2 inner product.
class Grid {
public:
    explicit Grid(std::vector<double> points);

    /// Equispaced grid on [a, b] with `count` points.
    static Grid equispaced(double a, double b, int count);

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<double>& points() const { return points_; }
    const Eigen::VectorXd& weights() const { return weights_; }

private:
    std::vector<double> points_;
    Eigen::VectorXd weights_;
};

enum class Label { core, outlier };

/// n observations of dimension d; rows are observations. In functional
/// mode the optional grid gives the abscissae of the d coordinates.
struct ObservationSet {
    Eigen::MatrixXd values;
    std::optional<Grid> grid;
    std::optional<std::vector<Label>> labels;

    int n() const { return static_cast<int>(values.rows()); }
    int d() const { return static_cast<int>(values.cols()); }

    /// Throws std::invalid_argument on shape or finiteness violations.
    void validate() const;
};

/// Norm-1 direction in the geometry implied by the optional grid
/// (Euclidean without a grid, trapezoidal L2 with one).
struct UnitDirection {
    Eigen::VectorXd coords;
};

}  // namespace rptrim
