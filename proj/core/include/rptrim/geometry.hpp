#pragma once

#include "rptrim/rng.hpp"
#include "rptrim/types.hpp"

namespace rptrim {

enum class DirectionLaw { white, brownian };

/// <x, h>: Euclidean dot product, or the trapezoidal Riemann sum
/// sum_i x(t_i) h(t_i) w_i when a grid is given.
double inner_product(const Eigen::VectorXd& x, const Eigen::VectorXd& h,
                     const Grid* grid = nullptr);

double norm(const Eigen::VectorXd& x, const Grid* grid = nullptr);

/// Draws a direction and normalizes it to unit norm in the geometry of
/// `grid`. `white` normalizes d i.i.d. standard normals (uniform on the
/// sphere in vector mode); `brownian` normalizes a scaled cumulative sum,
/// giving smoother curves in functional mode.
UnitDirection random_unit_direction(RngStream& rng, int d, DirectionLaw law,
                                    const Grid* grid = nullptr);

}  // namespace rptrim
