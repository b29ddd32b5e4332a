#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rptrim/baselines.hpp"
#include "rptrim/estimators.hpp"
#include "rptrim/rng.hpp"
#include "rptrim/trimmer.hpp"
#include "rptrim/types.hpp"

namespace rptrim {

enum class Family { multivariate, functional };
enum class ContaminationCase { A, B, C };

struct ScenarioSpec {
    Family family = Family::multivariate;
    int n = 100;
    int p = 10;                // dimension (multivariate) / grid size (functional)
    double eps = 0.1;          // contamination fraction, in [0, 0.5)
    double x0 = 7.0;           // outlier magnitude (multivariate)
    ContaminationCase ccase = ContaminationCase::B;

    void validate() const;
};

/// The 101-point equispaced grid on [0, 1].
Grid functional_grid(int points = 101);

/// Central model mean 30 t (1-t)^{3/2} on the grid.
Eigen::VectorXd central_mean_curve(const Grid& grid);

/// Mean curve of the contamination model for the given case.
Eigen::VectorXd case_mean_curve(ContaminationCase c, const Grid& grid);

/// K(s,t) = 0.3 exp(-|s-t| / 0.3).
Eigen::MatrixXd ou_covariance(const Grid& grid);

/// True correlation of the core process, exp(-|s-t| / 0.3).
Eigen::MatrixXd ou_correlation(const Grid& grid);

/// n - floor(eps n) standard-normal rows plus floor(eps n) point-mass
/// outliers at (x0, 0, ..., 0), labeled and deterministically shuffled.
ObservationSet gen_multivariate(const ScenarioSpec& spec, RngStream& rng);

/// Core curves from the central model, outliers from the case model,
/// both with Ornstein-Uhlenbeck noise (Cholesky sampler).
ObservationSet gen_functional(const ScenarioSpec& spec, RngStream& rng);

struct DetectionMetrics {
    int outliers_pruned = 0;
    int core_pruned = 0;
    double gamma = 0.0;
};

DetectionMetrics detection_metrics(const TrimResult& result,
                                   const ObservationSet& data);

struct EstimatorRow {
    std::string estimator;       // "trick", "rt", "it"
    double bound = 0.0;          // trimming bound (0 for trick)
    double location_error = 0.0; // mean over replicates
    double correlation_error = 0.0;
    double outliers_pruned = 0.0;
    double core_pruned = 0.0;
    double gamma = 0.0;
    int failures = 0;
};

struct MonteCarloReport {
    ScenarioSpec spec;
    int replicates = 0;
    std::uint64_t master_seed = 0;
    std::vector<EstimatorRow> rows;
    std::vector<std::string> failures;  // "r=<i> <estimator>: <message>"
    double wall_seconds = 0.0;
};

struct MonteCarloOptions {
    std::vector<double> bounds{0.2, 0.3, 0.4};  // RT alpha / IT beta
    bool run_rt = true;
    bool run_it = true;
    bool run_trick = true;
    double it_alpha_radius = 0.5;
    RTConfig rt_base;   // seed field is overridden per replicate
    int threads = 1;
};

/// Replicate seed derivation, shared with the CLI's --emit-data path.
RngStream replicate_data_stream(std::uint64_t master_seed, int replicate);
std::uint64_t replicate_rt_seed(std::uint64_t master_seed, int replicate);

/// Runs R replicates (optionally in parallel); aggregation order is fixed
/// by replicate index, so the report is identical at any thread count.
MonteCarloReport run_monte_carlo(const ScenarioSpec& spec,
                                 const MonteCarloOptions& options, int R,
                                 std::uint64_t master_seed);

std::string report_to_csv(const MonteCarloReport& report);

}  // namespace rptrim
