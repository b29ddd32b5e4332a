#include "rptrim/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rptrim/geometry.hpp"

namespace rptrim {

void ITConfig::validate() const {
    if (!(alpha_radius > 0.0 && alpha_radius < 1.0))
        throw std::invalid_argument("ITConfig: alpha_radius must be in (0, 1)");
    if (!(beta >= 0.0 && beta <= 0.5))
        throw std::invalid_argument("ITConfig: beta must be in [0, 0.5]");
}

EstimateBundle trick_estimate(const ObservationSet& data) {
    data.validate();
    if (!data.labels)
        throw std::invalid_argument("trick_estimate: labels required");
    std::vector<int> weights(data.n());
    for (int i = 0; i < data.n(); ++i)
        weights[i] = (*data.labels)[i] == Label::core ? 1 : 0;
    return estimate_bundle(data, weights);
}

std::vector<double> it_alpha_radii(const ObservationSet& data,
                                   double alpha_radius) {
    data.validate();
    const int n = data.n();
    if (n < 2) throw std::invalid_argument("it_alpha_radii: n >= 2 required");
    const Grid* grid = data.grid ? &*data.grid : nullptr;
    const int count =
        static_cast<int>(std::ceil(alpha_radius * static_cast<double>(n)));
    std::vector<double> radii(n);
    std::vector<double> dist(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Eigen::VectorXd diff =
                (data.values.row(i) - data.values.row(j)).transpose();
            dist[j] = norm(diff, grid);
        }
        const int k = std::max(0, count - 1);  // k-th smallest, 0-based
        std::nth_element(dist.begin(), dist.begin() + k, dist.end());
        radii[i] = dist[k];
    }
    return radii;
}

TrimResult it_trim(const ObservationSet& data, const ITConfig& cfg) {
    cfg.validate();
    const int n = data.n();
    const std::vector<double> radii = it_alpha_radii(data, cfg.alpha_radius);
    const int trim_count = static_cast<int>(std::floor(cfg.beta * n));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return radii[a] > radii[b];  // descending; stable keeps smaller id first
    });

    TrimResult result;
    result.weights.assign(n, 1);
    const double cut = trim_count > 0 ? radii[order[trim_count - 1]] : 0.0;
    for (int t = 0; t < trim_count; ++t) {
        const int row = order[t];
        result.weights[row] = 0;
        result.trimmed.push_back(
            TrimRecord{0, row, radii[row], cut, radii[row]});
    }
    for (int i = 0; i < n; ++i)
        if (result.weights[i]) result.kept.push_back(i);
    result.gamma = static_cast<double>(trim_count) / n;
    return result;
}

}  // namespace rptrim
