#pragma once

#include <vector>

#include "rptrim/estimators.hpp"
#include "rptrim/trimmer.hpp"
#include "rptrim/types.hpp"

namespace rptrim {

/// Inter-distance trimming configuration (alpha-radius rank, trim fraction).
struct ITConfig {
    double alpha_radius = 0.5;  // ball content fraction in (0, 1)
    double beta = 0.1;          // trimming fraction in [0, 0.5]

    void validate() const;
};

/// Oracle benchmark: classical estimates on the rows labeled core.
EstimateBundle trick_estimate(const ObservationSet& data);

/// r_i = radius of the smallest ball centered on x_i containing
/// ceil(alpha * n) of the observations (the center counts).
std::vector<double> it_alpha_radii(const ObservationSet& data,
                                   double alpha_radius);

/// Trims exactly floor(beta * n) rows with the largest radii (ties toward
/// the smaller row id). Audit records carry the radius in place of the
/// gap; threshold is the smallest trimmed radius.
TrimResult it_trim(const ObservationSet& data, const ITConfig& cfg);

}  // namespace rptrim
