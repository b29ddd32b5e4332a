// Acceptance gate: one criterion per invocation, selected by argv[1].
// Prints "CRITERION <n>: PASS|FAIL ..." and exits 0 on pass, 1 on fail.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rptrim/baselines.hpp"
#include "rptrim/estimators.hpp"
#include "rptrim/simgen.hpp"
#include "rptrim/trimmer.hpp"

using namespace rptrim;
namespace fs = std::filesystem;

namespace {

struct Gate {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) ok = false;
        detail << (cond ? "  [ok]   " : "  [FAIL] ") << what << "\n";
    }
};

MonteCarloOptions calibrated_options(std::vector<double> bounds) {
    MonteCarloOptions options;
    options.bounds = std::move(bounds);
    options.rt_base.threshold_mode = ThresholdMode::null_quantile;
    options.rt_base.quantile = 0.999;
    options.threads =
        std::max(1u, std::thread::hardware_concurrency());
    return options;
}

MonteCarloReport functional_report(ContaminationCase c, int reps,
                                   std::uint64_t seed,
                                   std::vector<double> bounds) {
    ScenarioSpec spec;
    spec.family = Family::functional;
    spec.n = 100;
    spec.p = 101;
    spec.eps = 0.1;
    spec.ccase = c;
    return run_monte_carlo(spec, calibrated_options(std::move(bounds)), reps,
                           seed);
}

double rt_metric(const MonteCarloReport& report, double bound,
                 double EstimatorRow::*field) {
    for (const auto& row : report.rows)
        if (row.estimator == "rt" && std::abs(row.bound - bound) < 1e-12)
            return row.*field;
    std::cerr << "missing rt row at bound " << bound << "\n";
    std::exit(1);
}

const EstimatorRow& find_row(const MonteCarloReport& report,
                             const std::string& estimator, double bound) {
    for (const auto& row : report.rows)
        if (row.estimator == estimator && std::abs(row.bound - bound) < 1e-12)
            return row;
    std::cerr << "missing report row " << estimator << "@" << bound << "\n";
    std::exit(1);
}

std::string fmt(double x) {
    std::ostringstream ss;
    ss.precision(4);
    ss << x;
    return ss.str();
}

// --- criterion bodies ------------------------------------------------------

// Functional detection rates per contamination case.
Gate criterion_1() {
    Gate g;
    const std::vector<double> bounds{0.2, 0.3, 0.4};
    const int reps = 200;
    const MonteCarloReport a = functional_report(ContaminationCase::A, reps, 101, bounds);
    const MonteCarloReport b = functional_report(ContaminationCase::B, reps, 102, bounds);
    const MonteCarloReport c = functional_report(ContaminationCase::C, reps, 103, bounds);
    double b_mean = 0.0, c_mean = 0.0;
    for (double bound : bounds) {
        const double pa = rt_metric(a, bound, &EstimatorRow::outliers_pruned);
        const double pb = rt_metric(b, bound, &EstimatorRow::outliers_pruned);
        const double pc = rt_metric(c, bound, &EstimatorRow::outliers_pruned);
        b_mean += pb / 3.0;
        c_mean += pc / 3.0;
        g.expect(pb >= 9.5, "case B mean outliers pruned >= 9.5 at bound " +
                                fmt(bound) + " (got " + fmt(pb) + ")");
        g.expect(pa >= 7.0 && pa <= 9.5,
                 "case A mean outliers pruned in [7.0, 9.5] at bound " +
                     fmt(bound) + " (got " + fmt(pa) + ")");
        g.expect(pc >= 5.0 && pc <= 8.0,
                 "case C mean outliers pruned in [5.0, 8.0] at bound " +
                     fmt(bound) + " (got " + fmt(pc) + ")");
    }
    g.expect(c_mean < b_mean, "case C detection strictly below case B (" +
                                  fmt(c_mean) + " vs " + fmt(b_mean) + ")");
    return g;
}

// Effective trimming rate and error insensitivity to the trimming bound.
Gate criterion_2() {
    Gate g;
    const std::vector<double> fbounds{0.2, 0.3, 0.4};
    const int reps = 200;
    for (ContaminationCase c :
         {ContaminationCase::A, ContaminationCase::B, ContaminationCase::C}) {
        const MonteCarloReport report =
            functional_report(c, reps, 200 + static_cast<int>(c), fbounds);
        std::vector<double> gammas;
        for (double bound : fbounds)
            gammas.push_back(rt_metric(report, bound, &EstimatorRow::gamma));
        double max_diff = 0.0;
        for (std::size_t i = 0; i < gammas.size(); ++i)
            for (std::size_t j = i + 1; j < gammas.size(); ++j)
                max_diff = std::max(max_diff, std::abs(gammas[i] - gammas[j]));
        const char* name = c == ContaminationCase::A   ? "A"
                           : c == ContaminationCase::B ? "B"
                                                       : "C";
        g.expect(max_diff < 0.01,
                 std::string("functional case ") + name +
                     ": gamma pairwise spread < 1pp (got " + fmt(max_diff) + ")");
    }

    const std::vector<double> mbounds{0.1, 0.3, 0.5};
    for (double x0 : {3.0, 7.0, 11.0}) {
        ScenarioSpec spec;
        spec.family = Family::multivariate;
        spec.n = 100;
        spec.p = 10;
        spec.eps = 0.1;
        spec.x0 = x0;
        const MonteCarloReport report =
            run_monte_carlo(spec, calibrated_options(mbounds), reps,
                            300 + static_cast<std::uint64_t>(x0));
        std::vector<double> errs;
        for (double bound : mbounds)
            errs.push_back(rt_metric(report, bound, &EstimatorRow::location_error));
        const double lo = *std::min_element(errs.begin(), errs.end());
        const double hi = *std::max_element(errs.begin(), errs.end());
        const double spread = (hi - lo) / std::max(hi, 1e-300);
        g.expect(spread < 0.05, "multivariate x0=" + fmt(x0) +
                                    ": RT location-error relative spread < 5% "
                                    "(got " + fmt(spread) + ")");
    }
    return g;
}

// Functional L2 error levels and RT-to-oracle ratios, Case B.
Gate criterion_3() {
    Gate g;
    const MonteCarloReport report =
        functional_report(ContaminationCase::B, 200, 400, {0.3});
    const EstimatorRow& trick = find_row(report, "trick", 0.0);
    const EstimatorRow& rt = find_row(report, "rt", 0.3);
    g.expect(std::abs(trick.location_error - 0.0513) <= 0.006,
             "trick location L2E = 0.0513 +/- 0.006 (got " +
                 fmt(trick.location_error) + ")");
    g.expect(rt.location_error <= 1.35 * trick.location_error,
             "RT location L2E <= 1.35 x trick (got ratio " +
                 fmt(rt.location_error / trick.location_error) + ")");
    g.expect(rt.correlation_error <= 1.45 * trick.correlation_error,
             "RT correlation L2E <= 1.45 x trick (got ratio " +
                 fmt(rt.correlation_error / trick.correlation_error) + ")");
    return g;
}

// Null behavior: clean data should almost never be trimmed.
Gate criterion_4() {
    Gate g;
    int clean = 0;
    const int seeds = 200;
    for (int s = 0; s < seeds; ++s) {
        RngStream rng(5000 + s, "data");
        ObservationSet data;
        data.values.resize(100, 10);
        for (int i = 0; i < 100; ++i)
            for (int j = 0; j < 10; ++j) data.values(i, j) = rng.next_normal();
        RTConfig cfg;
        cfg.seed = static_cast<std::uint64_t>(s);
        if (select_subsample(data, cfg).trimmed.empty()) ++clean;
    }
    g.expect(clean >= 190, "zero rows trimmed in >= 95% of 200 clean seeds "
                           "(got " + std::to_string(clean) + "/200)");
    return g;
}

// Full efficiency: well-separated outliers are removed exactly.
Gate criterion_5() {
    Gate g;
    int exact = 0;
    const int seeds = 200;
    ScenarioSpec spec;
    spec.family = Family::multivariate;
    spec.n = 100;
    spec.p = 10;
    spec.eps = 0.1;
    spec.x0 = 20.0;
    for (int s = 0; s < seeds; ++s) {
        RngStream rng(6000 + s, "data");
        const ObservationSet data = gen_multivariate(spec, rng);
        RTConfig cfg;
        cfg.alpha = 0.3;
        cfg.seed = static_cast<std::uint64_t>(s);
        const TrimResult r = select_subsample(data, cfg);
        const DetectionMetrics m = detection_metrics(r, data);
        if (m.outliers_pruned == 10 && m.core_pruned == 0) ++exact;
    }
    g.expect(exact >= 180,
             "all 10 outliers and no core rows trimmed in >= 90% of 200 "
             "seeds (got " + std::to_string(exact) + "/200)");
    return g;
}

// Estimator kernels vs independent brute-force recomputation.
Gate criterion_6() {
    Gate g;
    RngStream rng(7000, "test");
    int mean_ok = 0, cov_ok = 0, radii_ok = 0, gap_ok = 0;
    const int instances = 100;
    for (int rep = 0; rep < instances; ++rep) {
        const int n = 5 + static_cast<int>(rng.next_u64() % 46);
        const int d = 1 + static_cast<int>(rng.next_u64() % 8);
        ObservationSet data;
        data.values.resize(n, d);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < d; ++j) data.values(i, j) = rng.next_normal();

        std::vector<int> w(n, 0);
        int kept = 0;
        while (kept < 2) {
            kept = 0;
            for (int i = 0; i < n; ++i) {
                w[i] = static_cast<int>(rng.next_u64() % 2);
                kept += w[i];
            }
        }

        // brute-force weighted mean / covariance over the kept submatrix
        Eigen::VectorXd mu = Eigen::VectorXd::Zero(d);
        for (int i = 0; i < n; ++i)
            if (w[i]) mu += data.values.row(i).transpose();
        mu /= kept;
        Eigen::MatrixXd S = Eigen::MatrixXd::Zero(d, d);
        for (int i = 0; i < n; ++i)
            if (w[i]) {
                const Eigen::VectorXd c = data.values.row(i).transpose() - mu;
                S += c * c.transpose();
            }
        S /= kept;
        if ((weighted_mean(data, w) - mu).norm() <= 1e-12 * (1.0 + mu.norm()))
            ++mean_ok;
        if ((weighted_covariance(data, w) - S).norm() <=
            1e-12 * (1.0 + S.norm()))
            ++cov_ok;

        // brute-force IT radii by full sort
        const double alpha = 0.1 + 0.8 * rng.next_double();
        const int kth = static_cast<int>(std::ceil(alpha * n));
        bool radii_match = true;
        const auto fast = it_alpha_radii(data, alpha);
        for (int i = 0; i < n; ++i) {
            std::vector<double> dist(n);
            for (int j = 0; j < n; ++j)
                dist[j] = (data.values.row(i) - data.values.row(j)).norm();
            std::sort(dist.begin(), dist.end());
            if (std::abs(fast[i] - dist[kth - 1]) >
                1e-12 * (1.0 + dist[kth - 1]))
                radii_match = false;
        }
        if (radii_match) ++radii_ok;

        // brute-force max gap
        std::vector<double> proj(n);
        for (int i = 0; i < n; ++i) proj[i] = data.values(i, 0);
        std::sort(proj.begin(), proj.end());
        double best = -1.0;
        for (int i = 0; i + 1 < n; ++i)
            best = std::max(best, proj[i + 1] - proj[i]);
        if (n >= 2 &&
            std::abs(max_gap(proj).gap - best) <= 1e-12 * (1.0 + best))
            ++gap_ok;
    }
    g.expect(mean_ok == instances, "weighted mean matches the oracle on all " +
                                       std::to_string(instances) + " instances");
    g.expect(cov_ok == instances, "weighted covariance matches the oracle");
    g.expect(radii_ok == instances, "IT radii match the O(n^2) oracle");
    g.expect(gap_ok == instances, "max gap matches the brute-force scan");
    return g;
}

// Invariance suite across geometry, trimming, and estimators.
Gate criterion_7() {
    Gate g;
    RngStream rng(8000, "test");

    // projection contraction on 10^4 random triples
    {
        const Grid grid = Grid::equispaced(0.0, 1.0, 12);
        bool all_ok = true;
        for (int rep = 0; rep < 10000; ++rep) {
            const Grid* geo = rep % 2 ? &grid : nullptr;
            Eigen::VectorXd x(12), y(12);
            for (int i = 0; i < 12; ++i) {
                x[i] = 5.0 * rng.next_normal();
                y[i] = 5.0 * rng.next_normal();
            }
            const UnitDirection h =
                random_unit_direction(rng, 12, DirectionLaw::white, geo);
            const double lhs = std::abs(inner_product(x, h.coords, geo) -
                                        inner_product(y, h.coords, geo));
            if (lhs > norm(x - y, geo) + 1e-10) all_ok = false;
        }
        g.expect(all_ok, "projection contraction on 10^4 triples to 1e-10");
    }

    // path-wise trimming invariances on a contaminated sample
    {
        ObservationSet data;
        data.values.resize(60, 5);
        for (int i = 0; i < 60; ++i)
            for (int j = 0; j < 5; ++j) data.values(i, j) = rng.next_normal();
        for (int i = 0; i < 6; ++i) data.values(i, 0) += 40.0;

        std::vector<UnitDirection> seq;
        RngStream dir_rng(8001, "directions");
        for (int i = 0; i < 500; ++i)
            seq.push_back(random_unit_direction(dir_rng, 5, DirectionLaw::white));
        const DirectionSource replay = [&seq](int ordinal) {
            return seq.at(ordinal - 1);
        };

        RTConfig cfg;
        const TrimResult base = select_subsample(data, cfg, replay);

        ObservationSet shifted = data;
        shifted.values.rowwise() +=
            Eigen::RowVectorXd::Constant(5, -17.25).eval();
        g.expect(select_subsample(shifted, cfg, replay).kept == base.kept,
                 "translation leaves the kept set unchanged");

        Eigen::MatrixXd A(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) A(i, j) = rng.next_normal();
        const Eigen::MatrixXd T =
            Eigen::HouseholderQR<Eigen::MatrixXd>(A).householderQ();
        ObservationSet rotated = data;
        rotated.values = (T * data.values.transpose()).transpose();
        std::vector<UnitDirection> tseq = seq;
        for (auto& h : tseq) h.coords = T * h.coords;
        const DirectionSource treplay = [&tseq](int ordinal) {
            return tseq.at(ordinal - 1);
        };
        g.expect(select_subsample(rotated, cfg, treplay).kept == base.kept,
                 "orthogonal map with transformed directions preserves the "
                 "kept set");

        ObservationSet scaled = data;
        scaled.values *= 123.5;
        bool scale_ok = true;
        for (ThresholdMode mode :
             {ThresholdMode::scale_adaptive, ThresholdMode::null_quantile}) {
            RTConfig scfg;
            scfg.threshold_mode = mode;
            if (select_subsample(scaled, scfg, replay).kept !=
                select_subsample(data, scfg, replay).kept)
                scale_ok = false;
        }
        g.expect(scale_ok, "scale invariance in both adaptive modes");
    }

    // estimator-side invariants
    {
        ObservationSet data;
        data.values.resize(80, 6);
        for (int i = 0; i < 80; ++i)
            for (int j = 0; j < 6; ++j) data.values(i, j) = rng.next_normal();
        std::vector<int> w(80, 1);
        for (int i = 0; i < 20; ++i) w[i * 3] = 0;
        const Eigen::MatrixXd S = weighted_covariance(data, w);

        bool psd = true;
        for (int rep = 0; rep < 1000; ++rep) {
            Eigen::VectorXd v(6);
            for (int j = 0; j < 6; ++j) v[j] = rng.next_normal();
            if (v.dot(S * v) < -1e-9) psd = false;
        }
        g.expect(psd, "covariance PSD on 10^3 random quadratic forms");

        const Eigen::MatrixXd R = correlation_from_covariance(S);
        bool corr_ok = true;
        for (int i = 0; i < 6; ++i) {
            if (std::abs(R(i, i) - 1.0) > 1e-12) corr_ok = false;
            for (int j = 0; j < 6; ++j)
                if (R(i, j) < -1.0 - 1e-12 || R(i, j) > 1.0 + 1e-12)
                    corr_ok = false;
        }
        g.expect(corr_ok, "correlation unit diagonal and entries in [-1, 1]");

        const PCAResult pca = trimmed_pca(data, w, 6);
        g.expect((pca.components.transpose() * pca.components -
                  Eigen::MatrixXd::Identity(6, 6))
                         .norm() < 1e-9,
                 "PCA components orthonormal");
        const Eigen::MatrixXd recon = pca.components *
                                      pca.eigenvalues.asDiagonal() *
                                      pca.components.transpose();
        g.expect((S - recon).norm() <= 1e-8 * (1.0 + S.norm()),
                 "full PCA reconstructs the covariance");
    }
    return g;
}

// Byte-identical outputs from manifests and across thread counts.
Gate criterion_8() {
    Gate g;
#ifndef RPTRIM_BIN
    g.expect(false, "CLI binary path not wired into the build");
#else
    const fs::path dir = fs::temp_directory_path() / "rptrim_acceptance_8";
    fs::remove_all(dir);
    fs::create_directories(dir);

    auto shell = [](const std::string& cmd) {
        return std::system((cmd + " > /dev/null 2>&1").c_str());
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string bin = RPTRIM_BIN;

    // fixture dataset through the simulator
    g.expect(shell(bin + " simulate --family multivariate --n 60 --p 6 --x0 20"
                         " --reps 1 --seed 3 --emit-data " +
                   (dir / "data").string() + " --output " +
                   (dir / "seed3").string()) == 0,
             "simulate --emit-data succeeds");
    const std::string input = (dir / "data" / "rep0.csv").string();

    // detect expects a grid header, so give it a functional emission
    g.expect(shell(bin + " simulate --family functional --case B --n 40"
                         " --reps 1 --seed 4 --emit-data " +
                   (dir / "fdata").string() + " --output " +
                   (dir / "seed4").string()) == 0,
             "functional simulate --emit-data succeeds");
    const std::string finput = (dir / "fdata" / "rep0.csv").string();

    // every command, run twice from the same manifest
    const struct {
        const char* name;
        std::string args;
    } commands[] = {
        {"trim", "trim --input " + input + " --seed 11 --output "},
        {"estimate", "estimate --input " + input + " --pca 2 --seed 11 --output "},
        {"detect", "detect --input " + finput + " --seed 11 --output "},
        {"simulate",
         "simulate --family functional --case B --n 40 --reps 3 --seed 11 "
         "--output "},
    };
    for (const auto& c : commands) {
        const fs::path first = dir / (std::string(c.name) + "_a");
        g.expect(shell(bin + " " + c.args + first.string()) == 0,
                 std::string(c.name) + " first run succeeds");
        std::vector<std::pair<fs::path, std::string>> outputs;
        for (const auto& entry : fs::directory_iterator(dir)) {
            const std::string stem = entry.path().filename().string();
            if (stem.rfind(std::string(c.name) + "_a", 0) == 0 &&
                stem.find("manifest") == std::string::npos)
                outputs.emplace_back(entry.path(), slurp(entry.path()));
        }
        g.expect(!outputs.empty(), std::string(c.name) + " produced outputs");
        g.expect(shell(bin + " replay " +
                       (first.string() + ".manifest.json")) == 0,
                 std::string(c.name) + " manifest replays");
        bool identical = true;
        for (const auto& [path, before] : outputs)
            if (slurp(path) != before) identical = false;
        g.expect(identical,
                 std::string(c.name) + " replay is byte-identical");
    }

    // thread-count invariance of the runner
    {
        ScenarioSpec spec;
        spec.family = Family::functional;
        spec.n = 100;
        spec.p = 101;
        spec.eps = 0.1;
        spec.ccase = ContaminationCase::B;
        MonteCarloOptions serial = calibrated_options({0.2, 0.3});
        serial.threads = 1;
        MonteCarloOptions parallel = serial;
        parallel.threads = 8;
        const std::string a =
            report_to_csv(run_monte_carlo(spec, serial, 24, 77));
        const std::string b =
            report_to_csv(run_monte_carlo(spec, parallel, 24, 77));
        g.expect(a == b, "Monte Carlo report identical at 1 and 8 threads");
    }
#endif
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <criterion 1-8>\n";
        return 2;
    }
    const int n = std::atoi(argv[1]);
    Gate g;
    switch (n) {
        case 1: g = criterion_1(); break;
        case 2: g = criterion_2(); break;
        case 3: g = criterion_3(); break;
        case 4: g = criterion_4(); break;
        case 5: g = criterion_5(); break;
        case 6: g = criterion_6(); break;
        case 7: g = criterion_7(); break;
        case 8: g = criterion_8(); break;
        default:
            std::cerr << "unknown criterion " << n << "\n";
            return 2;
    }
    std::cout << "CRITERION " << n << ": " << (g.ok ? "PASS" : "FAIL") << "\n"
              << g.detail.str();
    return g.ok ? 0 : 1;
}
