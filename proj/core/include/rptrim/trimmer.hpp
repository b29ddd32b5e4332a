#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rptrim/geometry.hpp"
#include "rptrim/types.hpp"

namespace rptrim {

enum class ThresholdMode { paper_fixed, scale_adaptive, null_quantile };
enum class CounterMode { cumulative, reset_on_trim };

struct RTConfig {
    double alpha = 0.3;          // trimming bound in [0, 0.5]
    int maxiter = 100;           // unproductive-direction budget
    double k = 3.0;              // spacing threshold multiplier
    double f0 = 0.0044;          // density floor f(x0)
    ThresholdMode threshold_mode = ThresholdMode::null_quantile;
    double quantile = 0.999;     // run-level confidence in null_quantile mode
    int null_reps = 200;         // null-calibration sample count
    CounterMode counter_mode = CounterMode::cumulative;
    DirectionLaw direction_law = DirectionLaw::white;
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

struct TrimRecord {
    int direction_ordinal = 0;   // 1-based count of directions drawn so far
    int trimmed_index = -1;      // original row id
    double gap = 0.0;            // max projected spacing at the trimming direction
    double threshold = 0.0;      // c_d in force
    double distance_from_median = 0.0;
};

struct TrimResult {
    std::vector<int> weights;        // n entries in {0,1}
    std::vector<int> kept;           // ascending row ids
    std::vector<TrimRecord> trimmed; // in trim order
    int directions_consumed = 0;
    double gamma = 0.0;              // |trimmed| / n
};

struct MaxGap {
    double gap = 0.0;
    int left_index = 0;  // position of the left endpoint of the widest interval
};

/// Largest adjacent difference of a nondecreasing list; ties break toward
/// the smallest left index. Throws on fewer than 2 values.
MaxGap max_gap(std::span<const double> sorted_projections);

/// k * (ln m - ln ln m) / (m * f0). Throws for m < 3.
double deheuvels_threshold(int m, double k, double f0);

/// Median of an unsorted list (midpoint of the central order statistics
/// for even length).
double median(std::span<const double> values);

/// 1.4826 * median(|y - median(y)|).
double robust_scale(std::span<const double> values);

/// Quantile of the null distribution of max_gap/sigma_hat for samples of
/// m standard normals, at the per-direction level q^(1/maxiter) (the
/// configured quantile is the run-level confidence over maxiter tests).
/// Deep-tail values come from an exponential fit over the top decile of
/// the simulated ratios. Calibration is seeded from (m, null_reps) only,
/// so the table is cached process-wide.
double null_gap_quantile(int m, double quantile, int null_reps, int maxiter);

/// Threshold c_d for one direction's projections under cfg's mode.
/// Returns nullopt when the direction is degenerate for adaptive modes
/// (zero robust scale); the caller skips it as unproductive.
std::optional<double> effective_threshold(std::span<const double> projections,
                                          const RTConfig& cfg);

/// Projects the active rows on h; if the max gap is at least c_d, returns
/// the active row whose projection is farthest from the median (ties to
/// the smallest row id), else nullopt. Throws if fewer than 3 active rows.
std::optional<int> trim_step(const ObservationSet& data,
                             std::span<const int> active,
                             const UnitDirection& h, double c_d);

/// Supplies the l-th direction (1-based ordinal). Used to replay a fixed
/// or transformed direction sequence.
using DirectionSource = std::function<UnitDirection(int ordinal)>;

/// The subsample selection loop: draw directions, trim the farthest
/// observation when the projected max gap clears the threshold, stop at
/// the trimming budget or after maxiter unproductive directions.
TrimResult select_subsample(const ObservationSet& data, const RTConfig& cfg);
TrimResult select_subsample(const ObservationSet& data, const RTConfig& cfg,
                            const DirectionSource& directions);

}  // namespace rptrim
