#include "rptrim/trimmer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "rptrim/rng.hpp"

namespace rptrim {

void RTConfig::validate() const {
    if (!(alpha >= 0.0 && alpha <= 0.5))
        throw std::invalid_argument("RTConfig: alpha must be in [0, 0.5]");
    if (maxiter < 1)
        throw std::invalid_argument("RTConfig: maxiter must be >= 1");
    if (!(k > 0.0)) throw std::invalid_argument("RTConfig: k must be > 0");
    if (!(f0 > 0.0)) throw std::invalid_argument("RTConfig: f0 must be > 0");
    if (!(quantile > 0.0 && quantile < 1.0))
        throw std::invalid_argument("RTConfig: quantile must be in (0, 1)");
    if (null_reps < 20)
        throw std::invalid_argument("RTConfig: null_reps must be >= 20");
}

MaxGap max_gap(std::span<const double> sorted_projections) {
    const int m = static_cast<int>(sorted_projections.size());
    if (m < 2) throw std::invalid_argument("max_gap: needs at least 2 values");
    MaxGap best{sorted_projections[1] - sorted_projections[0], 0};
    for (int i = 1; i < m - 1; ++i) {
        const double g = sorted_projections[i + 1] - sorted_projections[i];
        if (g > best.gap) best = {g, i};
    }
    return best;
}

double deheuvels_threshold(int m, double k, double f0) {
    if (m < 3) throw std::invalid_argument("deheuvels_threshold: m >= 3 required");
    if (!(k > 0.0 && f0 > 0.0))
        throw std::invalid_argument("deheuvels_threshold: k, f0 must be > 0");
    const double lm = std::log(static_cast<double>(m));
    return k * (lm - std::log(lm)) / (m * f0);
}

double median(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("median: empty input");
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size();
    if (m % 2 == 1) return v[m / 2];
    return (v[m / 2 - 1] + v[m / 2]) / 2.0;
}

double robust_scale(std::span<const double> values) {
    const double med = median(values);
    std::vector<double> dev(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        dev[i] = std::abs(values[i] - med);
    return 1.4826 * median(dev);
}

namespace {

// Sorted null ratios max_gap/sigma_hat for samples of m standard normals,
// cached per (m, null_reps). Seeded from (m, null_reps) only so the table
// is identical across runs and thread counts.
const std::vector<double>& null_ratio_table(int m, int null_reps) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({m, null_reps});
    if (it != cache.end()) return it->second;

    RngStream rng(RngStream::mix(static_cast<std::uint64_t>(m),
                                 static_cast<std::uint64_t>(null_reps)),
                  "calibration");
    std::vector<double> ratios(null_reps);
    std::vector<double> sample(m);
    for (int r = 0; r < null_reps; ++r) {
        for (int i = 0; i < m; ++i) sample[i] = rng.next_normal();
        const double s = robust_scale(sample);
        std::sort(sample.begin(), sample.end());
        const double g = max_gap(sample).gap;
        ratios[r] = s > 0.0 ? g / s : 0.0;
    }
    std::sort(ratios.begin(), ratios.end());
    return cache.emplace(std::make_pair(m, null_reps), std::move(ratios))
        .first->second;
}

double empirical_quantile(const std::vector<double>& sorted, double q) {
    const std::size_t n = sorted.size();
    const double pos = q * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= n) return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

}  // namespace

double null_gap_quantile(int m, double quantile, int null_reps, int maxiter) {
    if (m < 3) throw std::invalid_argument("null_gap_quantile: m >= 3 required");
    const auto& ratios = null_ratio_table(m, null_reps);
    const double q_dir = std::pow(quantile, 1.0 / maxiter);
    const double p = 1.0 - q_dir;
    const int n = static_cast<int>(ratios.size());
    const int tail_count = std::max(10, n / 10);
    const double p_tail = static_cast<double>(tail_count) / n;
    if (p >= p_tail) return empirical_quantile(ratios, q_dir);
    // exponential tail extrapolation over the top decile
    const double u = ratios[n - tail_count];
    double beta = 0.0;
    for (int i = n - tail_count; i < n; ++i) beta += ratios[i] - u;
    beta /= tail_count;
    return u + beta * std::log(p_tail / p);
}

std::optional<double> effective_threshold(std::span<const double> projections,
                                          const RTConfig& cfg) {
    const int m = static_cast<int>(projections.size());
    if (m < 3)
        throw std::invalid_argument("effective_threshold: needs >= 3 projections");
    if (cfg.threshold_mode == ThresholdMode::paper_fixed)
        return deheuvels_threshold(m, cfg.k, cfg.f0);

    const double sigma = robust_scale(projections);
    if (sigma == 0.0) return std::nullopt;  // degenerate direction

    if (cfg.threshold_mode == ThresholdMode::scale_adaptive) {
        // f(x0) tracks the projected scale: phi(3)/sigma
        static const double phi3 =
            std::exp(-4.5) / std::sqrt(2.0 * 3.14159265358979323846);
        return deheuvels_threshold(m, cfg.k, phi3 / sigma);
    }
    return sigma * null_gap_quantile(m, cfg.quantile, cfg.null_reps, cfg.maxiter);
}

namespace {

struct ProjectedTrim {
    int active_pos;  // position within the active list
    double gap;
    double distance_from_median;
};

// Shared by trim_step and select_subsample: decide which active row (by
// position) to trim given the projections of the active rows on h.
std::optional<ProjectedTrim> decide_trim(std::span<const double> projections,
                                         double c_d) {
    std::vector<double> sorted(projections.begin(), projections.end());
    std::sort(sorted.begin(), sorted.end());
    const MaxGap g = max_gap(sorted);
    if (g.gap < c_d) return std::nullopt;
    const double med = (sorted.size() % 2 == 1)
                           ? sorted[sorted.size() / 2]
                           : (sorted[sorted.size() / 2 - 1] +
                              sorted[sorted.size() / 2]) / 2.0;
    int best = 0;
    double best_dist = std::abs(projections[0] - med);
    for (std::size_t i = 1; i < projections.size(); ++i) {
        const double dist = std::abs(projections[i] - med);
        if (dist > best_dist) {
            best = static_cast<int>(i);
            best_dist = dist;
        }
    }
    return ProjectedTrim{best, g.gap, best_dist};
}

}  // namespace

std::optional<int> trim_step(const ObservationSet& data,
                             std::span<const int> active,
                             const UnitDirection& h, double c_d) {
    if (active.size() < 3)
        throw std::invalid_argument("trim_step: needs >= 3 active observations");
    const Grid* grid = data.grid ? &*data.grid : nullptr;
    std::vector<double> proj(active.size());
    for (std::size_t i = 0; i < active.size(); ++i)
        proj[i] = inner_product(data.values.row(active[i]), h.coords, grid);
    const auto t = decide_trim(proj, c_d);
    if (!t) return std::nullopt;
    return active[t->active_pos];
}

TrimResult select_subsample(const ObservationSet& data, const RTConfig& cfg) {
    const Grid* grid = data.grid ? &*data.grid : nullptr;
    const int d = data.d();
    auto rng = std::make_shared<RngStream>(cfg.seed, "directions");
    const DirectionLaw law = cfg.direction_law;
    return select_subsample(data, cfg, [rng, d, law, grid](int) {
        return random_unit_direction(*rng, d, law, grid);
    });
}

TrimResult select_subsample(const ObservationSet& data, const RTConfig& cfg,
                            const DirectionSource& directions) {
    data.validate();
    cfg.validate();
    const int n = data.n();
    if (n < 3)
        throw std::invalid_argument("select_subsample: needs >= 3 observations");
    const Grid* grid = data.grid ? &*data.grid : nullptr;

    const int budget = static_cast<int>(std::floor(n * cfg.alpha));
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;

    TrimResult result;
    result.weights.assign(n, 1);

    int unproductive = 0;
    std::vector<double> proj;
    while (static_cast<int>(result.trimmed.size()) < budget &&
           unproductive < cfg.maxiter &&
           static_cast<int>(active.size()) >= 3) {
        ++result.directions_consumed;
        const UnitDirection h = directions(result.directions_consumed);
        if (h.coords.size() != data.d())
            throw std::invalid_argument("select_subsample: direction dimension mismatch");

        proj.resize(active.size());
        for (std::size_t i = 0; i < active.size(); ++i)
            proj[i] = inner_product(data.values.row(active[i]), h.coords, grid);

        const auto c_d = effective_threshold(proj, cfg);
        if (!c_d) {  // degenerate direction: skipped, counted as unproductive
            ++unproductive;
            continue;
        }
        const auto t = decide_trim(proj, *c_d);
        if (t) {
            const int row = active[t->active_pos];
            result.trimmed.push_back(TrimRecord{result.directions_consumed, row,
                                                t->gap, *c_d,
                                                t->distance_from_median});
            result.weights[row] = 0;
            active.erase(active.begin() + t->active_pos);
            if (cfg.counter_mode == CounterMode::reset_on_trim) unproductive = 0;
        } else {
            ++unproductive;
        }
    }

    result.kept = active;
    result.gamma = static_cast<double>(result.trimmed.size()) / n;
    return result;
}

}  // namespace rptrim
