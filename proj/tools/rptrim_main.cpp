// rptrim: random-projection trimming and robust estimation on CSV data.
//
// Subcommands: trim, estimate, simulate, detect, replay.
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rptrim/baselines.hpp"
#include "rptrim/csv.hpp"
#include "rptrim/estimators.hpp"
#include "rptrim/simgen.hpp"
#include "rptrim/trimmer.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
        if (!in) break;
    }
    return h;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path);
    out << content;
}

// ---- flag <-> enum maps -------------------------------------------------

const std::map<std::string, rptrim::ThresholdMode> kThresholdModes = {
    {"paper_fixed", rptrim::ThresholdMode::paper_fixed},
    {"scale_adaptive", rptrim::ThresholdMode::scale_adaptive},
    {"null_quantile", rptrim::ThresholdMode::null_quantile}};
const std::map<std::string, rptrim::CounterMode> kCounterModes = {
    {"cumulative", rptrim::CounterMode::cumulative},
    {"reset_on_trim", rptrim::CounterMode::reset_on_trim}};
const std::map<std::string, rptrim::DirectionLaw> kDirectionLaws = {
    {"white", rptrim::DirectionLaw::white},
    {"brownian", rptrim::DirectionLaw::brownian}};

template <typename T>
std::string enum_name(const std::map<std::string, T>& table, T value) {
    for (const auto& [name, v] : table)
        if (v == value) return name;
    return "?";
}

// Shared RT flag block; every subcommand that trims uses the same names.
struct RTFlags {
    double alpha = 0.3;
    int maxiter = 100;
    double k = 3.0;
    double f0 = 0.0044;
    std::string threshold_mode = "null_quantile";
    double quantile = 0.999;
    int null_reps = 200;
    std::string counter_mode = "cumulative";
    std::string direction_law = "white";
    std::uint64_t seed = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "Trimming bound in [0, 0.5]");
        cmd->add_option("--maxiter", maxiter, "Unproductive-direction budget");
        cmd->add_option("--k", k, "Spacing threshold multiplier");
        cmd->add_option("--f0", f0, "Density floor f(x0)");
        cmd->add_option("--threshold-mode", threshold_mode,
                        "paper_fixed | scale_adaptive | null_quantile");
        cmd->add_option("--quantile", quantile,
                        "Run-level confidence for null_quantile mode");
        cmd->add_option("--null-reps", null_reps, "Null calibration samples");
        cmd->add_option("--counter-mode", counter_mode,
                        "cumulative | reset_on_trim");
        cmd->add_option("--direction-law", direction_law, "white | brownian");
        cmd->add_option("--seed", seed, "RNG seed (PROJGATE_SEED overrides)");
    }

    rptrim::RTConfig to_config() const {
        rptrim::RTConfig cfg;
        cfg.alpha = alpha;
        cfg.maxiter = maxiter;
        cfg.k = k;
        cfg.f0 = f0;
        if (!kThresholdModes.count(threshold_mode))
            throw UsageError("unknown threshold mode: " + threshold_mode);
        cfg.threshold_mode = kThresholdModes.at(threshold_mode);
        cfg.quantile = quantile;
        cfg.null_reps = null_reps;
        if (!kCounterModes.count(counter_mode))
            throw UsageError("unknown counter mode: " + counter_mode);
        cfg.counter_mode = kCounterModes.at(counter_mode);
        if (!kDirectionLaws.count(direction_law))
            throw UsageError("unknown direction law: " + direction_law);
        cfg.direction_law = kDirectionLaws.at(direction_law);
        cfg.seed = seed;
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return cfg;
    }

    json to_json() const {
        return json{{"alpha", alpha},
                    {"maxiter", maxiter},
                    {"k", k},
                    {"f0", f0},
                    {"threshold_mode", threshold_mode},
                    {"quantile", quantile},
                    {"null_reps", null_reps},
                    {"counter_mode", counter_mode},
                    {"direction_law", direction_law},
                    {"seed", seed}};
    }

    void from_json(const json& j) {
        alpha = j.at("alpha");
        maxiter = j.at("maxiter");
        k = j.at("k");
        f0 = j.at("f0");
        threshold_mode = j.at("threshold_mode");
        quantile = j.at("quantile");
        null_reps = j.at("null_reps");
        counter_mode = j.at("counter_mode");
        direction_law = j.at("direction_law");
        seed = j.at("seed");
    }
};

void apply_seed_env(std::uint64_t& seed) {
    if (const char* env = std::getenv("PROJGATE_SEED")) {
        seed = std::strtoull(env, nullptr, 10);
    }
}

void write_manifest(const std::string& path, const std::string& command,
                    const json& args, std::uint64_t seed,
                    const json& input_digests,
                    const std::vector<std::string>& outputs) {
    json m{{"schema_version", 1},
           {"tool_version", kToolVersion},
           {"command", command},
           {"args", args},
           {"seed", seed},
           {"input_digest", input_digests},
           {"outputs", outputs}};
    write_file(path, m.dump(2) + "\n");
}

json trim_result_to_json(const rptrim::TrimResult& result) {
    json trimmed = json::array();
    for (const auto& rec : result.trimmed)
        trimmed.push_back(json{{"direction_ordinal", rec.direction_ordinal},
                               {"trimmed_index", rec.trimmed_index},
                               {"gap", rec.gap},
                               {"threshold", rec.threshold},
                               {"distance_from_median", rec.distance_from_median}});
    return json{{"schema_version", 1},
                {"n", result.weights.size()},
                {"gamma", result.gamma},
                {"directions_consumed", result.directions_consumed},
                {"trimmed", trimmed},
                {"kept", result.kept}};
}

std::string weights_to_csv(const std::vector<int>& weights) {
    std::ostringstream out;
    for (int w : weights) out << w << '\n';
    return out.str();
}

std::vector<int> read_weights_csv(const std::string& path, int expected_n) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open weights file: " + path);
    std::vector<int> weights;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line != "0" && line != "1")
            throw DataError("weights row " + std::to_string(line_no) +
                            ": expected 0 or 1, got '" + line + "'");
        weights.push_back(line == "1" ? 1 : 0);
    }
    if (static_cast<int>(weights.size()) != expected_n)
        throw DataError("weights length " + std::to_string(weights.size()) +
                        " != data rows " + std::to_string(expected_n));
    return weights;
}

// ---- trim ---------------------------------------------------------------

struct TrimArgs {
    std::string input;
    std::string output = "trim_out";
    bool grid_header = false;
    RTFlags rt;
};

int run_trim(const TrimArgs& args) {
    const rptrim::RTConfig cfg = args.rt.to_config();
    const rptrim::CsvMatrix csv =
        rptrim::read_csv_matrix_file(args.input, args.grid_header);
    const rptrim::ObservationSet data = csv.to_observations();
    if (data.n() < 3) throw DataError("need at least 3 data rows");

    const rptrim::TrimResult result = rptrim::select_subsample(data, cfg);

    const std::string weights_path = args.output + ".weights.csv";
    const std::string audit_path = args.output + ".audit.json";
    const std::string manifest_path = args.output + ".manifest.json";
    write_file(weights_path, weights_to_csv(result.weights));
    write_file(audit_path, trim_result_to_json(result).dump(2) + "\n");

    json cmd_args = args.rt.to_json();
    cmd_args["input"] = args.input;
    cmd_args["output"] = args.output;
    cmd_args["grid_header"] = args.grid_header;
    write_manifest(manifest_path, "trim", cmd_args, cfg.seed,
                   json{{args.input, fnv1a_file(args.input)}},
                   {weights_path, audit_path});

    std::cout << "trimmed " << result.trimmed.size() << " of " << data.n()
              << " rows (gamma=" << result.gamma << ", directions="
              << result.directions_consumed << ")\n";
    return 0;
}

// ---- estimate -----------------------------------------------------------

struct EstimateArgs {
    std::string input;
    std::string weights;
    std::string output = "estimate_out";
    bool grid_header = false;
    int pca = 0;
    RTFlags rt;
};

int run_estimate(const EstimateArgs& args) {
    const rptrim::CsvMatrix csv =
        rptrim::read_csv_matrix_file(args.input, args.grid_header);
    const rptrim::ObservationSet data = csv.to_observations();

    std::vector<int> weights;
    if (!args.weights.empty()) {
        weights = read_weights_csv(args.weights, data.n());
    } else {
        const rptrim::RTConfig cfg = args.rt.to_config();
        if (data.n() < 3) throw DataError("need at least 3 data rows");
        weights = rptrim::select_subsample(data, cfg).weights;
    }
    int kept = 0;
    for (int w : weights) kept += w;
    if (kept == 0) throw DataError("empty subsample: zero kept rows");
    if (args.pca < 0 || args.pca > data.d())
        throw UsageError("--pca must be in [0, d]");

    std::optional<int> q;
    if (args.pca > 0) q = args.pca;
    rptrim::EstimateBundle est;
    try {
        est = rptrim::estimate_bundle(data, weights, q);
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }

    json out{{"schema_version", 1},
             {"n", data.n()},
             {"d", data.d()},
             {"kept", kept},
             {"mean", std::vector<double>(est.mean.data(),
                                          est.mean.data() + est.mean.size())}};
    auto matrix_to_json = [](const Eigen::MatrixXd& M) {
        json rows = json::array();
        for (Eigen::Index i = 0; i < M.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
            rows.push_back(row);
        }
        return rows;
    };
    out["covariance"] = matrix_to_json(est.covariance);
    out["correlation"] = matrix_to_json(est.correlation);
    if (est.pca) {
        out["pca"] = json{
            {"eigenvalues",
             std::vector<double>(est.pca->eigenvalues.data(),
                                 est.pca->eigenvalues.data() +
                                     est.pca->eigenvalues.size())},
            {"components", matrix_to_json(est.pca->components)}};
    }

    const std::string est_path = args.output + ".estimates.json";
    const std::string mean_path = args.output + ".mean.csv";
    const std::string manifest_path = args.output + ".manifest.json";
    write_file(est_path, out.dump(2) + "\n");
    {
        std::ostringstream mean_csv;
        mean_csv.precision(17);
        for (Eigen::Index j = 0; j < est.mean.size(); ++j)
            mean_csv << est.mean[j] << '\n';
        write_file(mean_path, mean_csv.str());
    }

    json cmd_args = args.rt.to_json();
    cmd_args["input"] = args.input;
    cmd_args["weights"] = args.weights;
    cmd_args["output"] = args.output;
    cmd_args["grid_header"] = args.grid_header;
    cmd_args["pca"] = args.pca;
    json digests{{args.input, fnv1a_file(args.input)}};
    if (!args.weights.empty()) digests[args.weights] = fnv1a_file(args.weights);
    write_manifest(manifest_path, "estimate", cmd_args, args.rt.seed, digests,
                   {est_path, mean_path});

    std::cout << "estimates written to " << est_path << " (kept " << kept
              << "/" << data.n() << ")\n";
    return 0;
}

// ---- simulate -----------------------------------------------------------

struct SimulateArgs {
    std::string family = "multivariate";
    std::string ccase = "B";
    int n = 100;
    int p = 10;
    double eps = 0.1;
    double x0 = 7.0;
    std::vector<double> bounds{0.2, 0.3, 0.4};
    int reps = 100;
    int threads = 1;
    double it_alpha = 0.5;
    std::string output = "simulate_out";
    std::string emit_data;
    RTFlags rt;
};

int run_simulate(const SimulateArgs& args) {
    rptrim::ScenarioSpec spec;
    if (args.family == "multivariate")
        spec.family = rptrim::Family::multivariate;
    else if (args.family == "functional")
        spec.family = rptrim::Family::functional;
    else
        throw UsageError("unknown family: " + args.family);
    spec.n = args.n;
    spec.p = spec.family == rptrim::Family::functional && args.p == 10
                 ? 101  // default grid size in functional mode
                 : args.p;
    spec.eps = args.eps;
    spec.x0 = args.x0;
    if (args.ccase == "A") spec.ccase = rptrim::ContaminationCase::A;
    else if (args.ccase == "B") spec.ccase = rptrim::ContaminationCase::B;
    else if (args.ccase == "C") spec.ccase = rptrim::ContaminationCase::C;
    else throw UsageError("unknown case: " + args.ccase);
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (args.reps < 1) throw UsageError("--reps must be >= 1");
    if (args.bounds.empty()) throw UsageError("--bounds must be nonempty");

    rptrim::MonteCarloOptions options;
    options.bounds = args.bounds;
    options.it_alpha_radius = args.it_alpha;
    options.rt_base = args.rt.to_config();
    options.threads = args.threads;

    const rptrim::MonteCarloReport report =
        rptrim::run_monte_carlo(spec, options, args.reps, args.rt.seed);

    const std::string csv_path = args.output + ".report.csv";
    const std::string json_path = args.output + ".report.json";
    const std::string manifest_path = args.output + ".manifest.json";
    write_file(csv_path, rptrim::report_to_csv(report));

    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back(json{{"estimator", row.estimator},
                            {"bound", row.bound},
                            {"location_error", row.location_error},
                            {"correlation_error", row.correlation_error},
                            {"outliers_pruned", row.outliers_pruned},
                            {"core_pruned", row.core_pruned},
                            {"gamma", row.gamma},
                            {"failures", row.failures}});
    json jreport{{"schema_version", 1},
                 {"family", args.family},
                 {"case", args.ccase},
                 {"n", spec.n},
                 {"p", spec.p},
                 {"eps", spec.eps},
                 {"x0", spec.x0},
                 {"replicates", args.reps},
                 {"master_seed", args.rt.seed},
                 {"rows", rows},
                 {"failures", report.failures}};

    std::vector<std::string> outputs{csv_path, json_path};
    if (!args.emit_data.empty()) {
        fs::create_directories(args.emit_data);
        json emitted = json::array();
        for (int r = 0; r < args.reps; ++r) {
            rptrim::RngStream data_rng =
                rptrim::replicate_data_stream(args.rt.seed, r);
            const rptrim::ObservationSet data =
                spec.family == rptrim::Family::multivariate
                    ? rptrim::gen_multivariate(spec, data_rng)
                    : rptrim::gen_functional(spec, data_rng);
            std::ostringstream name;
            name << args.emit_data << "/rep" << r << ".csv";
            std::ostringstream body;
            rptrim::write_csv_matrix(body, data.values,
                                     data.grid ? &*data.grid : nullptr);
            write_file(name.str(), body.str());
            emitted.push_back(
                json{{"replicate", r},
                     {"path", name.str()},
                     {"rt_seed", rptrim::replicate_rt_seed(args.rt.seed, r)}});
            outputs.push_back(name.str());
        }
        jreport["emitted_data"] = emitted;
    }
    write_file(json_path, jreport.dump(2) + "\n");

    json cmd_args = args.rt.to_json();
    cmd_args["family"] = args.family;
    cmd_args["case"] = args.ccase;
    cmd_args["n"] = args.n;
    cmd_args["p"] = args.p;
    cmd_args["eps"] = args.eps;
    cmd_args["x0"] = args.x0;
    cmd_args["bounds"] = args.bounds;
    cmd_args["reps"] = args.reps;
    cmd_args["it_alpha"] = args.it_alpha;
    cmd_args["output"] = args.output;
    cmd_args["emit_data"] = args.emit_data;
    write_manifest(manifest_path, "simulate", cmd_args, args.rt.seed,
                   json::object(), outputs);

    std::cout << rptrim::report_to_csv(report);
    return 0;
}

// ---- detect -------------------------------------------------------------

struct DetectArgs {
    std::string input;
    std::string output = "detect_out";
    RTFlags rt;
};

int run_detect(const DetectArgs& args) {
    const rptrim::RTConfig cfg = args.rt.to_config();
    // curve matrix: first row is a header (hours / abscissae)
    const rptrim::CsvMatrix csv = rptrim::read_csv_matrix_file(args.input, true);
    const rptrim::ObservationSet data = csv.to_observations();
    if (data.n() < 3) throw DataError("need at least 3 data rows");

    const rptrim::TrimResult result = rptrim::select_subsample(data, cfg);

    json detections = json::array();
    for (const auto& rec : result.trimmed) {
        json d{{"row", rec.trimmed_index + 1},
               {"gap", rec.gap},
               {"threshold", rec.threshold},
               {"direction_ordinal", rec.direction_ordinal}};
        if (csv.row_names) d["name"] = (*csv.row_names)[rec.trimmed_index];
        detections.push_back(d);
        std::cout << "row " << (rec.trimmed_index + 1);
        if (csv.row_names)
            std::cout << " (" << (*csv.row_names)[rec.trimmed_index] << ")";
        std::cout << ": gap=" << rec.gap << " threshold=" << rec.threshold
                  << " direction=" << rec.direction_ordinal << "\n";
    }
    if (result.trimmed.empty()) std::cout << "no outliers detected\n";

    const std::string det_path = args.output + ".detections.json";
    const std::string manifest_path = args.output + ".manifest.json";
    write_file(det_path, json{{"schema_version", 1},
                              {"detections", detections},
                              {"gamma", result.gamma},
                              {"directions_consumed",
                               result.directions_consumed}}
                                 .dump(2) +
                             "\n");
    json cmd_args = args.rt.to_json();
    cmd_args["input"] = args.input;
    cmd_args["output"] = args.output;
    write_manifest(manifest_path, "detect", cmd_args, cfg.seed,
                   json{{args.input, fnv1a_file(args.input)}}, {det_path});
    return 0;
}

// ---- replay -------------------------------------------------------------

int dispatch_manifest(const std::string& path);

int run_replay(const std::string& manifest_path) {
    return dispatch_manifest(manifest_path);
}

int dispatch_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open manifest: " + path);
    json m = json::parse(in, nullptr, false);
    if (m.is_discarded()) throw DataError("malformed manifest JSON: " + path);
    const std::string command = m.at("command");
    const json& a = m.at("args");
    if (command == "trim") {
        TrimArgs args;
        args.rt.from_json(a);
        args.input = a.at("input");
        args.output = a.at("output");
        args.grid_header = a.at("grid_header");
        return run_trim(args);
    }
    if (command == "estimate") {
        EstimateArgs args;
        args.rt.from_json(a);
        args.input = a.at("input");
        args.weights = a.at("weights");
        args.output = a.at("output");
        args.grid_header = a.at("grid_header");
        args.pca = a.at("pca");
        return run_estimate(args);
    }
    if (command == "simulate") {
        SimulateArgs args;
        args.rt.from_json(a);
        args.family = a.at("family");
        args.ccase = a.at("case");
        args.n = a.at("n");
        args.p = a.at("p");
        args.eps = a.at("eps");
        args.x0 = a.at("x0");
        args.bounds = a.at("bounds").get<std::vector<double>>();
        args.reps = a.at("reps");
        args.it_alpha = a.at("it_alpha");
        args.output = a.at("output");
        args.emit_data = a.at("emit_data");
        return run_simulate(args);
    }
    if (command == "detect") {
        DetectArgs args;
        args.rt.from_json(a);
        args.input = a.at("input");
        args.output = a.at("output");
        return run_detect(args);
    }
    throw DataError("unknown command in manifest: " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random-projection trimming and robust estimation"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    TrimArgs trim_args;
    auto* trim_cmd = app.add_subcommand("trim", "Trim outliers from a CSV matrix");
    trim_cmd->add_option("--input", trim_args.input, "Input CSV")->required();
    trim_cmd->add_option("--output", trim_args.output, "Output path prefix");
    trim_cmd->add_flag("--grid-header", trim_args.grid_header,
                       "First row is the sampling grid (functional mode)");
    trim_args.rt.attach(trim_cmd);

    EstimateArgs est_args;
    auto* est_cmd =
        app.add_subcommand("estimate", "Robust mean/covariance/correlation/PCA");
    est_cmd->add_option("--input", est_args.input, "Input CSV")->required();
    est_cmd->add_option("--weights", est_args.weights,
                        "Weights CSV (one 0/1 per row); trims internally if absent");
    est_cmd->add_option("--output", est_args.output, "Output path prefix");
    est_cmd->add_flag("--grid-header", est_args.grid_header,
                      "First row is the sampling grid (functional mode)");
    est_cmd->add_option("--pca", est_args.pca, "Number of principal components");
    est_args.rt.attach(est_cmd);

    SimulateArgs sim_args;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo scenario study");
    sim_cmd->add_option("--family", sim_args.family, "multivariate | functional");
    sim_cmd->add_option("--case", sim_args.ccase, "A | B | C (functional)");
    sim_cmd->add_option("--n", sim_args.n, "Sample size");
    sim_cmd->add_option("--p", sim_args.p, "Dimension / grid size");
    sim_cmd->add_option("--eps", sim_args.eps, "Contamination fraction");
    sim_cmd->add_option("--x0", sim_args.x0, "Outlier magnitude (multivariate)");
    sim_cmd->add_option("--bounds", sim_args.bounds, "Trimming bounds");
    sim_cmd->add_option("--reps", sim_args.reps, "Replicates");
    sim_cmd->add_option("--threads", sim_args.threads, "Runner parallelism");
    sim_cmd->add_option("--it-alpha", sim_args.it_alpha, "IT ball fraction");
    sim_cmd->add_option("--output", sim_args.output, "Output path prefix");
    sim_cmd->add_option("--emit-data", sim_args.emit_data,
                        "Directory for per-replicate dataset CSVs");
    sim_args.rt.attach(sim_cmd);

    DetectArgs det_args;
    auto* det_cmd =
        app.add_subcommand("detect", "Detect outlying curves in a CSV file");
    det_cmd->add_option("--input", det_args.input, "Curve CSV with header row")
        ->required();
    det_cmd->add_option("--output", det_args.output, "Output path prefix");
    det_args.rt.attach(det_cmd);

    std::string replay_path;
    auto* replay_cmd =
        app.add_subcommand("replay", "Re-run a command from its manifest");
    replay_cmd->add_option("manifest", replay_path, "Manifest JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        apply_seed_env(trim_args.rt.seed);
        apply_seed_env(est_args.rt.seed);
        apply_seed_env(sim_args.rt.seed);
        apply_seed_env(det_args.rt.seed);
        if (trim_cmd->parsed()) return run_trim(trim_args);
        if (est_cmd->parsed()) return run_estimate(est_args);
        if (sim_cmd->parsed()) return run_simulate(sim_args);
        if (det_cmd->parsed()) return run_detect(det_args);
        if (replay_cmd->parsed()) return run_replay(replay_path);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rptrim::CsvError& e) {
        std::cerr << "data error: " << e.what() << " (row " << e.row << ", col "
                  << e.col << ")\n";
        return kExitData;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    }
}
