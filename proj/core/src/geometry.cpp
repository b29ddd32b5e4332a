#include "rptrim/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace rptrim {

Grid::Grid(std::vector<double> points) : points_(std::move(points)) {
    const int d = static_cast<int>(points_.size());
    if (d < 2) throw std::invalid_argument("Grid: needs at least 2 points");
    for (int i = 1; i < d; ++i) {
        if (!(points_[i] > points_[i - 1]))
            throw std::invalid_argument("Grid: points must be strictly increasing");
    }
    weights_.resize(d);
    weights_[0] = (points_[1] - points_[0]) / 2.0;
    for (int i = 1; i < d - 1; ++i)
        weights_[i] = (points_[i + 1] - points_[i - 1]) / 2.0;
    weights_[d - 1] = (points_[d - 1] - points_[d - 2]) / 2.0;
}

Grid Grid::equispaced(double a, double b, int count) {
    std::vector<double> pts(count);
    for (int i = 0; i < count; ++i)
        pts[i] = a + (b - a) * static_cast<double>(i) / (count - 1);
    return Grid(std::move(pts));
}

void ObservationSet::validate() const {
    if (values.rows() < 1 || values.cols() < 1)
        throw std::invalid_argument("ObservationSet: n >= 1 and d >= 1 required");
    if (!values.allFinite())
        throw std::invalid_argument("ObservationSet: non-finite entry");
    if (grid && grid->size() != values.cols())
        throw std::invalid_argument("ObservationSet: grid length != d");
    if (labels && static_cast<int>(labels->size()) != values.rows())
        throw std::invalid_argument("ObservationSet: labels length != n");
}

double inner_product(const Eigen::VectorXd& x, const Eigen::VectorXd& h,
                     const Grid* grid) {
    if (x.size() != h.size())
        throw std::invalid_argument("inner_product: dimension mismatch");
    if (grid) {
        if (grid->size() != x.size())
            throw std::invalid_argument("inner_product: grid length mismatch");
        return (x.array() * h.array() * grid->weights().array()).sum();
    }
    return x.dot(h);
}

double norm(const Eigen::VectorXd& x, const Grid* grid) {
    return std::sqrt(inner_product(x, x, grid));
}

UnitDirection random_unit_direction(RngStream& rng, int d, DirectionLaw law,
                                    const Grid* grid) {
    if (d < 1) throw std::invalid_argument("random_unit_direction: d >= 1 required");
    if (grid && grid->size() != d)
        throw std::invalid_argument("random_unit_direction: grid length mismatch");
    Eigen::VectorXd z(d);
    for (int i = 0; i < d; ++i) z[i] = rng.next_normal();
    if (law == DirectionLaw::brownian) {
        Eigen::VectorXd b(d);
        double acc = 0.0;
        for (int i = 0; i < d; ++i) {
            const double dt =
                grid ? (i == 0 ? grid->points()[1] - grid->points()[0]
                               : grid->points()[i] - grid->points()[i - 1])
                     : 1.0;
            acc += z[i] * std::sqrt(dt);
            b[i] = acc;
        }
        z = b;
    }
    double nrm = norm(z, grid);
    if (nrm == 0.0) {
        // all-zero draw is essentially impossible; fall back to e1
        z.setZero();
        z[0] = 1.0;
        nrm = norm(z, grid);
    }
    return UnitDirection{z / nrm};
}

}  // namespace rptrim
