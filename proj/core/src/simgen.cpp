#include "rptrim/simgen.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rptrim/linalg.hpp"

namespace rptrim {

void ScenarioSpec::validate() const {
    if (n < 1) throw std::invalid_argument("ScenarioSpec: n >= 1 required");
    if (p < 1) throw std::invalid_argument("ScenarioSpec: p >= 1 required");
    if (!(eps >= 0.0 && eps < 0.5))
        throw std::invalid_argument("ScenarioSpec: eps must be in [0, 0.5)");
}

Grid functional_grid(int points) { return Grid::equispaced(0.0, 1.0, points); }

Eigen::VectorXd central_mean_curve(const Grid& grid) {
    const int d = grid.size();
    Eigen::VectorXd mu(d);
    for (int i = 0; i < d; ++i) {
        const double t = grid.points()[i];
        mu[i] = 30.0 * t * std::pow(1.0 - t, 1.5);
    }
    return mu;
}

Eigen::VectorXd case_mean_curve(ContaminationCase c, const Grid& grid) {
    const int d = grid.size();
    Eigen::VectorXd mu = central_mean_curve(grid);
    for (int i = 0; i < d; ++i) {
        const double t = grid.points()[i];
        switch (c) {
            case ContaminationCase::A:
                mu[i] = 30.0 * (1.0 - t) * std::pow(t, 1.5);
                break;
            case ContaminationCase::B:
                mu[i] += 2.0;
                break;
            case ContaminationCase::C:
                if (t >= 0.4 && t <= 0.6) mu[i] += 2.0;
                break;
        }
    }
    return mu;
}

Eigen::MatrixXd ou_covariance(const Grid& grid) {
    const int d = grid.size();
    Eigen::MatrixXd K(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= i; ++j) {
            const double v =
                0.3 * std::exp(-std::abs(grid.points()[i] - grid.points()[j]) / 0.3);
            K(i, j) = v;
            K(j, i) = v;
        }
    return K;
}

Eigen::MatrixXd ou_correlation(const Grid& grid) {
    return ou_covariance(grid) / 0.3;
}

namespace {

void shuffle_rows(ObservationSet& data, RngStream& rng) {
    const int n = data.n();
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.next_u64() % (i + 1));
        data.values.row(i).swap(data.values.row(j));
        std::swap((*data.labels)[i], (*data.labels)[j]);
    }
}

// Cholesky factor of the OU covariance, cached per grid size.
const Eigen::MatrixXd& ou_cholesky(const Grid& grid) {
    static std::mutex mu;
    static std::map<int, Eigen::MatrixXd> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(grid.size());
    if (it != cache.end()) return it->second;
    return cache.emplace(grid.size(), cholesky(ou_covariance(grid)))
        .first->second;
}

}  // namespace

ObservationSet gen_multivariate(const ScenarioSpec& spec, RngStream& rng) {
    spec.validate();
    if (spec.family != Family::multivariate)
        throw std::invalid_argument("gen_multivariate: wrong family");
    const int n = spec.n;
    const int n_out = static_cast<int>(std::floor(spec.eps * n));
    ObservationSet data;
    data.values.resize(n, spec.p);
    data.labels = std::vector<Label>(n, Label::core);
    for (int i = 0; i < n - n_out; ++i)
        for (int j = 0; j < spec.p; ++j) data.values(i, j) = rng.next_normal();
    for (int i = n - n_out; i < n; ++i) {
        data.values.row(i).setZero();
        data.values(i, 0) = spec.x0;
        (*data.labels)[i] = Label::outlier;
    }
    shuffle_rows(data, rng);
    return data;
}

ObservationSet gen_functional(const ScenarioSpec& spec, RngStream& rng) {
    spec.validate();
    if (spec.family != Family::functional)
        throw std::invalid_argument("gen_functional: wrong family");
    const Grid grid = functional_grid(spec.p);
    const Eigen::MatrixXd& L = ou_cholesky(grid);
    const Eigen::VectorXd core_mean = central_mean_curve(grid);
    const Eigen::VectorXd out_mean = case_mean_curve(spec.ccase, grid);

    const int n = spec.n;
    const int d = grid.size();
    const int n_out = static_cast<int>(std::floor(spec.eps * n));
    ObservationSet data;
    data.values.resize(n, d);
    data.labels = std::vector<Label>(n, Label::core);
    Eigen::VectorXd z(d);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) z[j] = rng.next_normal();
        const bool outlier = i >= n - n_out;
        data.values.row(i) =
            ((outlier ? out_mean : core_mean) + L * z).transpose();
        if (outlier) (*data.labels)[i] = Label::outlier;
    }
    shuffle_rows(data, rng);
    data.grid = grid;
    return data;
}

DetectionMetrics detection_metrics(const TrimResult& result,
                                   const ObservationSet& data) {
    if (!data.labels)
        throw std::invalid_argument("detection_metrics: labels required");
    DetectionMetrics m;
    for (const TrimRecord& rec : result.trimmed) {
        if ((*data.labels)[rec.trimmed_index] == Label::outlier)
            ++m.outliers_pruned;
        else
            ++m.core_pruned;
    }
    m.gamma = result.gamma;
    return m;
}

RngStream replicate_data_stream(std::uint64_t master_seed, int replicate) {
    return RngStream(master_seed, "replicates")
        .derive(static_cast<std::uint64_t>(replicate))
        .derive("data");
}

std::uint64_t replicate_rt_seed(std::uint64_t master_seed, int replicate) {
    return RngStream(master_seed, "replicates")
        .derive(static_cast<std::uint64_t>(replicate))
        .derive("rt")
        .key();
}

namespace {

struct ReplicateCell {
    double location_error = 0.0;
    double correlation_error = 0.0;
    double outliers_pruned = 0.0;
    double core_pruned = 0.0;
    double gamma = 0.0;
    bool failed = false;
    std::string error;
};

struct TruthRef {
    Eigen::VectorXd mean;
    Eigen::MatrixXd correlation;  // empty for multivariate (identity implied)
};

void score(const ScenarioSpec& spec, const TruthRef& truth,
           const EstimateBundle& est, ReplicateCell& cell) {
    if (spec.family == Family::multivariate) {
        cell.location_error = est.mean.squaredNorm();
        const Eigen::MatrixXd I =
            Eigen::MatrixXd::Identity(spec.p, spec.p);
        cell.correlation_error = (est.correlation - I).norm() / spec.p;
    } else {
        cell.location_error = l2_error_mean(est.mean, truth.mean);
        cell.correlation_error = l2_error_cov(est.correlation, truth.correlation);
    }
}

}  // namespace

MonteCarloReport run_monte_carlo(const ScenarioSpec& spec,
                                 const MonteCarloOptions& options, int R,
                                 std::uint64_t master_seed) {
    spec.validate();
    if (R < 1) throw std::invalid_argument("run_monte_carlo: R >= 1 required");
    const auto start = std::chrono::steady_clock::now();

    // column layout: [trick][rt@b...][it@b...]
    std::vector<std::pair<std::string, double>> columns;
    if (options.run_trick) columns.emplace_back("trick", 0.0);
    if (options.run_rt)
        for (double b : options.bounds) columns.emplace_back("rt", b);
    if (options.run_it)
        for (double b : options.bounds) columns.emplace_back("it", b);
    const int C = static_cast<int>(columns.size());

    TruthRef truth;
    if (spec.family == Family::functional) {
        const Grid grid = functional_grid(spec.p);
        truth.mean = central_mean_curve(grid);
        truth.correlation = ou_correlation(grid);
    }

    std::vector<std::vector<ReplicateCell>> cells(
        R, std::vector<ReplicateCell>(C));

    auto run_replicate = [&](int r) {
        RngStream data_rng = replicate_data_stream(master_seed, r);
        const ObservationSet data = spec.family == Family::multivariate
                                        ? gen_multivariate(spec, data_rng)
                                        : gen_functional(spec, data_rng);
        for (int c = 0; c < C; ++c) {
            ReplicateCell& cell = cells[r][c];
            const auto& [name, bound] = columns[c];
            try {
                if (name == "trick") {
                    const EstimateBundle est = trick_estimate(data);
                    score(spec, truth, est, cell);
                    const int n_out = static_cast<int>(std::floor(spec.eps * spec.n));
                    cell.outliers_pruned = n_out;
                    cell.gamma = static_cast<double>(n_out) / spec.n;
                } else if (name == "rt") {
                    RTConfig cfg = options.rt_base;
                    cfg.alpha = bound;
                    cfg.seed = replicate_rt_seed(master_seed, r);
                    const TrimResult trim = select_subsample(data, cfg);
                    const DetectionMetrics det = detection_metrics(trim, data);
                    const EstimateBundle est = estimate_bundle(data, trim.weights);
                    score(spec, truth, est, cell);
                    cell.outliers_pruned = det.outliers_pruned;
                    cell.core_pruned = det.core_pruned;
                    cell.gamma = det.gamma;
                } else {
                    ITConfig cfg{options.it_alpha_radius, bound};
                    const TrimResult trim = it_trim(data, cfg);
                    const DetectionMetrics det = detection_metrics(trim, data);
                    const EstimateBundle est = estimate_bundle(data, trim.weights);
                    score(spec, truth, est, cell);
                    cell.outliers_pruned = det.outliers_pruned;
                    cell.core_pruned = det.core_pruned;
                    cell.gamma = det.gamma;
                }
            } catch (const std::exception& e) {
                cell.failed = true;
                cell.error = e.what();
            }
        }
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1 || R == 1) {
        for (int r = 0; r < R; ++r) run_replicate(r);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        const int T = std::min(threads, R);
        pool.reserve(T);
        for (int t = 0; t < T; ++t)
            pool.emplace_back([&] {
                for (int r = next.fetch_add(1); r < R; r = next.fetch_add(1))
                    run_replicate(r);
            });
        for (auto& th : pool) th.join();
    }

    MonteCarloReport report;
    report.spec = spec;
    report.replicates = R;
    report.master_seed = master_seed;
    report.rows.resize(C);
    for (int c = 0; c < C; ++c) {
        EstimatorRow& row = report.rows[c];
        row.estimator = columns[c].first;
        row.bound = columns[c].second;
        int ok = 0;
        for (int r = 0; r < R; ++r) {  // fixed order: thread-count independent
            const ReplicateCell& cell = cells[r][c];
            if (cell.failed) {
                ++row.failures;
                std::ostringstream msg;
                msg << "r=" << r << " " << row.estimator << "@" << row.bound
                    << ": " << cell.error;
                report.failures.push_back(msg.str());
                continue;
            }
            ++ok;
            row.location_error += cell.location_error;
            row.correlation_error += cell.correlation_error;
            row.outliers_pruned += cell.outliers_pruned;
            row.core_pruned += cell.core_pruned;
            row.gamma += cell.gamma;
        }
        if (ok > 0) {
            row.location_error /= ok;
            row.correlation_error /= ok;
            row.outliers_pruned /= ok;
            row.core_pruned /= ok;
            row.gamma /= ok;
        }
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

std::string report_to_csv(const MonteCarloReport& report) {
    std::ostringstream out;
    out.precision(17);
    out << "family,case,n,p,eps,x0,estimator,bound,location_error,"
           "correlation_error,outliers_pruned,core_pruned,gamma,failures\n";
    const char* family =
        report.spec.family == Family::multivariate ? "multivariate" : "functional";
    const char* ccase = report.spec.ccase == ContaminationCase::A   ? "A"
                        : report.spec.ccase == ContaminationCase::B ? "B"
                                                                    : "C";
    for (const EstimatorRow& row : report.rows) {
        out << family << ','
            << (report.spec.family == Family::functional ? ccase : "") << ','
            << report.spec.n << ',' << report.spec.p << ',' << report.spec.eps
            << ',' << report.spec.x0 << ',' << row.estimator << ',' << row.bound
            << ',' << row.location_error << ',' << row.correlation_error << ','
            << row.outliers_pruned << ',' << row.core_pruned << ',' << row.gamma
            << ',' << row.failures << '\n';
    }
    return out.str();
}

}  // namespace rptrim
