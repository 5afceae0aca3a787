// Command-line front end: dataset generation, projected-feature transform,
// window scoring, and evaluation over CSV/JSON files.
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 numeric failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcpd/csv_io.hpp"
#include "qcpd/datagen.hpp"
#include "qcpd/detection.hpp"
#include "qcpd/errors.hpp"
#include "qcpd/evaluation.hpp"
#include "qcpd/features.hpp"
#include "qcpd/svg.hpp"
#include "qcpd/ulsif.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string sidecar_path(const std::string& csv_path) {
    if (csv_path.size() > 4 && csv_path.substr(csv_path.size() - 4) == ".csv")
        return csv_path.substr(0, csv_path.size() - 4) + ".json";
    return csv_path + ".json";
}

void write_json(const json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return json::parse(in);
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        if (field.empty()) continue;
        values.push_back(std::stod(field));
    }
    return values;
}

qcpd::UlsifConfig make_ulsif_config(double l, double lambda, const std::string& num_basis) {
    qcpd::UlsifConfig cfg;
    cfg.scale = l;
    cfg.regularization = lambda;
    if (num_basis == "all")
        cfg.num_basis = -1;
    else
        cfg.num_basis = std::stoll(num_basis);
    return cfg;
}

// --- gen ---------------------------------------------------------------

struct GenSyntheticArgs {
    int segments = 10;
    std::int64_t segment_len = 100;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen_synthetic(const GenSyntheticArgs& a) {
    qcpd::SyntheticSpec spec{a.segments, a.segment_len, a.seed};
    const qcpd::SyntheticData data = qcpd::generate_synthetic(spec);
    qcpd::write_series_csv(data.series, a.out);

    json truth;
    truth["kind"] = "synthetic";
    truth["spec"] = {{"segments", a.segments}, {"segment_len", a.segment_len}, {"seed", a.seed}};
    json cps = json::array();
    for (const auto& cp : data.change_points) cps.push_back(cp.to_string());
    truth["change_points"] = cps;
    write_json(truth, sidecar_path(a.out));
    return 0;
}

struct GenFailureArgs {
    std::int64_t dim = 13;
    std::int64_t normal_len = 60;
    std::int64_t pre_len = 40;
    std::int64_t anomaly_len = 60;
    std::string shift;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen_failure(const GenFailureArgs& a) {
    qcpd::FailureSpec spec;
    spec.dim = a.dim;
    spec.normal_len = a.normal_len;
    spec.pre_anomaly_len = a.pre_len;
    spec.anomaly_len = a.anomaly_len;
    spec.noise_seed = a.seed;
    if (!a.shift.empty()) {
        const std::vector<double> v = parse_double_list(a.shift);
        spec.shift = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
    }
    const qcpd::FailureData data = qcpd::generate_failure_sequence(spec);
    qcpd::write_series_csv(data.series, a.out);

    json truth;
    truth["kind"] = "failure";
    truth["spec"] = {{"dim", a.dim},
                     {"normal_len", a.normal_len},
                     {"pre_anomaly_len", a.pre_len},
                     {"anomaly_len", a.anomaly_len},
                     {"shift", a.shift},
                     {"seed", a.seed}};
    truth["normal_period"] = {{"start", data.normal_period.start.to_string()},
                              {"end", data.normal_period.end.to_string()}};
    truth["anomaly_interval"] = {{"start", data.anomaly_start.to_string()},
                                 {"end", data.anomaly_end.to_string()}};
    write_json(truth, sidecar_path(a.out));
    return 0;
}

// --- transform ----------------------------------------------------------

struct TransformArgs {
    std::string input;
    std::string output;
    std::string circuit = "heisenberg";
    double t = 0.5;
    int p = 1;
    std::uint64_t init_seed = 0;
    std::string backend = "exact";
    std::int64_t shots = 8192;
    std::uint64_t shot_seed = 0;
};

int run_transform(const TransformArgs& a) {
    const qcpd::TimeSeries series = qcpd::read_series_csv(a.input);

    qcpd::EncodingConfig cfg;
    cfg.circuit_family = a.circuit == "twolocal" ? qcpd::CircuitFamily::TwoLocal
                                                 : qcpd::CircuitFamily::Heisenberg;
    cfg.t = a.t;
    cfg.p = a.p;
    cfg.init_seed = a.init_seed;

    const qcpd::FeatureBackend backend = a.backend == "shots"
                                             ? qcpd::FeatureBackend::with_shots(a.shots, a.shot_seed)
                                             : qcpd::FeatureBackend::exact();
    const qcpd::TimeSeries projected = qcpd::transform_series(series, cfg, backend);
    qcpd::write_series_csv(projected, a.output);

    json meta;
    meta["kind"] = "projected_features";
    meta["input"] = a.input;
    meta["circuit"] = a.circuit;
    meta["t"] = a.t;
    meta["p"] = a.p;
    meta["init_seed"] = a.init_seed;
    meta["backend"] = a.backend;
    if (a.backend == "shots") {
        meta["shots"] = a.shots;
        meta["shot_seed"] = a.shot_seed;
    }
    write_json(meta, sidecar_path(a.output));
    return 0;
}

// --- score --------------------------------------------------------------

struct ScoreArgs {
    std::string input;
    std::string output;
    std::string mode;
    std::string normal_start, normal_end;
    std::int64_t window_length = 0;
    std::int64_t slide = 1;
    double l = 1.0;
    double lambda = 0.1;
    std::string num_basis = "all";
    bool normalize = false;
    std::string sweep_l;
    std::string calm_start, calm_end;
    std::string svg;
};

qcpd::ScoreSeries score_once(const qcpd::TimeSeries& series, const ScoreArgs& a, double l) {
    const qcpd::UlsifConfig cfg = make_ulsif_config(l, a.lambda, a.num_basis);
    if (a.mode == "anomaly") {
        if (a.normal_start.empty() || a.normal_end.empty())
            throw CLI::ValidationError("anomaly mode requires --normal-start and --normal-end");
        qcpd::NormalPeriod normal{qcpd::Timestamp::parse(a.normal_start),
                                  qcpd::Timestamp::parse(a.normal_end)};
        return qcpd::anomaly_scores(series, normal, {a.window_length, a.slide}, cfg);
    }
    return qcpd::change_scores(series, a.window_length, cfg);
}

double stddev_over_interval(const qcpd::ScoreSeries& s, const ScoreArgs& a) {
    std::vector<double> vals;
    std::optional<qcpd::Timestamp> calm_lo, calm_hi;
    if (!a.calm_start.empty()) calm_lo = qcpd::Timestamp::parse(a.calm_start);
    if (!a.calm_end.empty()) calm_hi = qcpd::Timestamp::parse(a.calm_end);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (calm_lo && s.timestamps[i] < *calm_lo) continue;
        if (calm_hi && *calm_hi < s.timestamps[i]) continue;
        vals.push_back(s.scores[i]);
    }
    if (vals.size() < 2) return 0.0;
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= static_cast<double>(vals.size());
    double var = 0.0;
    for (double v : vals) var += (v - mean) * (v - mean);
    return std::sqrt(var / static_cast<double>(vals.size() - 1));
}

int run_score(const ScoreArgs& a) {
    const qcpd::TimeSeries series = qcpd::read_series_csv(a.input);
    if (a.window_length < 1) throw CLI::ValidationError("--window-length must be >= 1");

    json meta;
    meta["kind"] = "scores";
    meta["input"] = a.input;
    meta["mode"] = a.mode;
    meta["window_length"] = a.window_length;
    meta["slide"] = a.mode == "change" ? 1 : a.slide;
    meta["lambda"] = a.lambda;
    meta["num_basis"] = a.num_basis;
    meta["normalize"] = a.normalize;
    if (a.mode == "anomaly") {
        meta["normal_start"] = a.normal_start;
        meta["normal_end"] = a.normal_end;
    }

    if (!a.sweep_l.empty()) {
        const std::vector<double> grid = parse_double_list(a.sweep_l);
        if (grid.empty()) throw CLI::ValidationError("--sweep-l list is empty");
        std::vector<qcpd::ScoreSeries> per_l;
        json summary = json::array();
        for (double l : grid) {
            qcpd::ScoreSeries s = score_once(series, a, l);
            if (a.normalize) s = s.normalize();
            summary.push_back({{"l", l}, {"calm_score_stddev", stddev_over_interval(s, a)}});
            per_l.push_back(std::move(s));
        }
        std::ofstream out(a.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + a.output);
        out << "window_end";
        for (double l : grid) out << ",score_l" << l;
        out << "\n";
        for (std::size_t i = 0; i < per_l.front().size(); ++i) {
            out << per_l.front().timestamps[i].to_string();
            for (const auto& s : per_l) out << ',' << qcpd::format_double(s.scores[i]);
            out << "\n";
        }
        meta["sweep_l"] = summary;
        write_json(meta, sidecar_path(a.output));
        std::cout << summary.dump(2) << "\n";
        return 0;
    }

    qcpd::ScoreSeries scores = score_once(series, a, a.l);
    if (a.normalize) scores = scores.normalize();
    meta["l"] = a.l;
    qcpd::write_scores_csv(scores, a.output);
    write_json(meta, sidecar_path(a.output));

    if (!a.svg.empty()) {
        qcpd::SvgOptions opts;
        opts.title = a.mode + " scores (l=" + std::to_string(a.l) + ")";
        qcpd::write_score_svg(scores, a.svg, opts);
    }
    return 0;
}

// --- eval ---------------------------------------------------------------

struct EvalArgs {
    std::string scores;
    std::string truth;
    std::size_t k = 7;
    double multiplier = 3.0;
    std::string output;
};

int run_eval(const EvalArgs& a) {
    const qcpd::ScoreSeries all_scores = qcpd::read_scores_csv(a.scores);
    const json truth = read_json(a.truth);
    if (!truth.contains("anomaly_interval"))
        throw std::runtime_error(a.truth + ": missing anomaly_interval");

    qcpd::LabeledScores labeled;
    labeled.anomaly_start = qcpd::Timestamp::parse(truth["anomaly_interval"]["start"]);
    labeled.anomaly_end = qcpd::Timestamp::parse(truth["anomaly_interval"]["end"]);

    // Only windows ending strictly after the normal period count; the first
    // k of them form the warm-up used for the threshold.
    std::optional<qcpd::Timestamp> normal_end;
    if (truth.contains("normal_period"))
        normal_end = qcpd::Timestamp::parse(truth["normal_period"]["end"]);
    for (std::size_t i = 0; i < all_scores.size(); ++i) {
        if (normal_end && !(all_scores.timestamps[i] > *normal_end)) continue;
        labeled.scores.timestamps.push_back(all_scores.timestamps[i]);
        labeled.scores.scores.push_back(all_scores.scores[i]);
    }

    const double threshold = qcpd::threshold_from_warmup(labeled.scores, a.k, a.multiplier);
    qcpd::EvalReport report;
    report.auc = qcpd::roc_auc(labeled);
    report.false_alerts = qcpd::count_false_alerts(labeled, threshold);
    report.detection_time = qcpd::detection_time(labeled, threshold);
    report.threshold = threshold;

    json j;
    j["auc"] = report.auc;
    j["false_alerts"] = report.false_alerts;
    j["detection_time"] =
        report.detection_time ? json(report.detection_time->to_string()) : json("not_detected");
    j["threshold"] = report.threshold;
    j["warmup_k"] = a.k;
    j["multiplier"] = a.multiplier;
    if (a.output.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json(j, a.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Change-point and machine-failure detection with projected quantum features "
                 "and uLSIF density-ratio scoring"};
    app.require_subcommand(1);
    app.set_config("--config");

    GenSyntheticArgs gs;
    GenFailureArgs gf;
    TransformArgs tr;
    ScoreArgs sc;
    EvalArgs ev;

    CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic dataset with ground truth");
    gen->require_subcommand(1);
    CLI::App* gen_syn = gen->add_subcommand("synthetic", "Covariance-switching 2-d benchmark");
    gen_syn->add_option("--segments", gs.segments)->check(CLI::Range(2, 1000000));
    gen_syn->add_option("--segment-len", gs.segment_len)->check(CLI::PositiveNumber);
    gen_syn->add_option("--seed", gs.seed);
    gen_syn->add_option("--out", gs.out)->required();

    CLI::App* gen_fail = gen->add_subcommand("failure", "Failure fixture with persistent shift");
    gen_fail->add_option("--dim", gf.dim)->check(CLI::PositiveNumber);
    gen_fail->add_option("--normal-len", gf.normal_len)->check(CLI::PositiveNumber);
    gen_fail->add_option("--pre-len", gf.pre_len)->check(CLI::PositiveNumber);
    gen_fail->add_option("--anomaly-len", gf.anomaly_len)->check(CLI::PositiveNumber);
    gen_fail->add_option("--shift", gf.shift, "Comma-separated shift vector (dim entries)");
    gen_fail->add_option("--seed", gf.seed);
    gen_fail->add_option("--out", gf.out)->required();

    CLI::App* transform = app.add_subcommand("transform", "Project a series to quantum features");
    transform->add_option("--input", tr.input)->required();
    transform->add_option("--output", tr.output)->required();
    transform->add_option("--circuit", tr.circuit)->check(CLI::IsMember({"heisenberg", "twolocal"}));
    transform->add_option("--t", tr.t);
    transform->add_option("--p", tr.p)->check(CLI::PositiveNumber);
    transform->add_option("--init-seed", tr.init_seed);
    transform->add_option("--backend", tr.backend)->check(CLI::IsMember({"exact", "shots"}));
    transform->add_option("--shots", tr.shots)->check(CLI::PositiveNumber);
    transform->add_option("--seed", tr.shot_seed, "Shot-sampling seed");

    CLI::App* score = app.add_subcommand("score", "Score sliding windows with uLSIF");
    score->add_option("--input", sc.input)->required();
    score->add_option("--output", sc.output)->required();
    score->add_option("--mode", sc.mode)->required()->check(CLI::IsMember({"anomaly", "change"}));
    score->add_option("--normal-start", sc.normal_start);
    score->add_option("--normal-end", sc.normal_end);
    score->add_option("--window-length", sc.window_length)->required();
    score->add_option("--slide", sc.slide)->check(CLI::PositiveNumber);
    score->add_option("--l", sc.l);
    score->add_option("--lambda", sc.lambda);
    score->add_option("--num-basis", sc.num_basis, "Center count m, or 'all'");
    score->add_flag("--normalize", sc.normalize, "Divide scores by the maximum");
    score->add_option("--sweep-l", sc.sweep_l, "Comma-separated l grid; one column per l");
    score->add_option("--calm-start", sc.calm_start, "Calm interval for the sweep summary");
    score->add_option("--calm-end", sc.calm_end);
    score->add_option("--svg", sc.svg, "Optional SVG line chart path");

    CLI::App* eval = app.add_subcommand("eval", "Evaluate scores against ground truth");
    eval->add_option("--scores", ev.scores)->required();
    eval->add_option("--truth", ev.truth)->required();
    eval->add_option("--k", ev.k, "Warm-up score count")->check(CLI::PositiveNumber);
    eval->add_option("--multiplier", ev.multiplier)->check(CLI::PositiveNumber);
    eval->add_option("--output", ev.output, "Report path (stdout when omitted)");

    try {
        app.parse(argc, argv);
        if (gen_syn->parsed()) return run_gen_synthetic(gs);
        if (gen_fail->parsed()) return run_gen_failure(gf);
        if (transform->parsed()) return run_transform(tr);
        if (score->parsed()) return run_score(sc);
        if (eval->parsed()) return run_eval(ev);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qcpd::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
