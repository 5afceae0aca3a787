// Python bindings for the core operations: dataset generation, projected
// quantum features, density-ratio fitting, window scoring, and evaluation.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcpd/datagen.hpp"
#include "qcpd/detection.hpp"
#include "qcpd/evaluation.hpp"
#include "qcpd/features.hpp"
#include "qcpd/ulsif.hpp"

namespace py = pybind11;
using namespace qcpd;

namespace {

TimeSeries series_from_matrix(const Eigen::MatrixXd& values) {
    return make_indexed_series(values);
}

EncodingConfig make_encoding(const std::string& circuit, double t, int p,
                             std::uint64_t init_seed) {
    EncodingConfig cfg;
    if (circuit == "heisenberg")
        cfg.circuit_family = CircuitFamily::Heisenberg;
    else if (circuit == "twolocal")
        cfg.circuit_family = CircuitFamily::TwoLocal;
    else
        throw std::invalid_argument("circuit must be 'heisenberg' or 'twolocal'");
    cfg.t = t;
    cfg.p = p;
    cfg.init_seed = init_seed;
    return cfg;
}

FeatureBackend make_backend(const std::string& backend, std::int64_t shots,
                            std::uint64_t seed) {
    if (backend == "exact") return FeatureBackend::exact();
    if (backend == "shots") return FeatureBackend::with_shots(shots, seed);
    throw std::invalid_argument("backend must be 'exact' or 'shots'");
}

UlsifConfig make_ulsif(double l, double lam, Eigen::Index num_basis) {
    UlsifConfig cfg;
    cfg.scale = l;
    cfg.regularization = lam;
    cfg.num_basis = num_basis;
    return cfg;
}

std::vector<std::int64_t> to_indices(const std::vector<Timestamp>& ts) {
    std::vector<std::int64_t> out;
    out.reserve(ts.size());
    for (const Timestamp& t : ts) out.push_back(t.as_index());
    return out;
}

}  // namespace

PYBIND11_MODULE(_qcpd, m) {
    m.doc() = "Change-point and failure detection with projected quantum features "
              "and density-ratio scoring";

    m.def(
        "project",
        [](const Eigen::VectorXd& x, const std::string& circuit, double t, int p,
           std::uint64_t init_seed, const std::string& backend, std::int64_t shots,
           std::uint64_t shot_seed, std::int64_t row_index) {
            return project(x, make_encoding(circuit, t, p, init_seed),
                           make_backend(backend, shots, shot_seed), row_index);
        },
        py::arg("x"), py::arg("circuit") = "heisenberg", py::arg("t") = 0.5, py::arg("p") = 1,
        py::arg("init_seed") = 0, py::arg("backend") = "exact", py::arg("shots") = 8192,
        py::arg("shot_seed") = 0, py::arg("row_index") = 0,
        "Projected quantum feature vector of one sample: per-qubit Pauli "
        "coefficients, dimension 3*(d+1), entries in [-1/2, 1/2].");

    m.def(
        "transform",
        [](const Eigen::MatrixXd& values, const std::string& circuit, double t, int p,
           std::uint64_t init_seed, const std::string& backend, std::int64_t shots,
           std::uint64_t shot_seed) {
            return transform_series(series_from_matrix(values),
                                    make_encoding(circuit, t, p, init_seed),
                                    make_backend(backend, shots, shot_seed))
                .values;
        },
        py::arg("values"), py::arg("circuit") = "heisenberg", py::arg("t") = 0.5,
        py::arg("p") = 1, py::arg("init_seed") = 0, py::arg("backend") = "exact",
        py::arg("shots") = 8192, py::arg("shot_seed") = 0,
        "Row-wise projected features of a (T, d) array; returns a (T, 3*(d+1)) array.");

    py::class_<UlsifModel>(m, "UlsifModel")
        .def_readonly("centers", &UlsifModel::centers)
        .def_readonly("scale", &UlsifModel::scale)
        .def_readonly("alpha", &UlsifModel::alpha);

    m.def(
        "fit_density_ratio",
        [](const Eigen::MatrixXd& samples_p, const Eigen::MatrixXd& samples_q, double l,
           double lam, Eigen::Index num_basis) {
            return fit(samples_p, samples_q, make_ulsif(l, lam, num_basis));
        },
        py::arg("samples_p"), py::arg("samples_q"), py::arg("l") = 1.0,
        py::arg("regularization") = 0.1, py::arg("num_basis") = -1,
        "Least-squares density-ratio fit of p/q with Gaussian kernels centered on "
        "the first num_basis p-side samples (-1 = all).");

    m.def("evaluate_ratio", &evaluate, py::arg("model"), py::arg("x"),
          "Fitted ratio estimate at one point.");

    m.def("pearson_divergence", &estimate_pe, py::arg("model"), py::arg("samples_p"),
          "Plug-in Pearson divergence estimate over p-side samples; >= -1/2.");

    m.def(
        "change_scores",
        [](const Eigen::MatrixXd& values, Eigen::Index window_length, double l, double lam,
           Eigen::Index num_basis) {
            const ScoreSeries s = change_scores(series_from_matrix(values), window_length,
                                                make_ulsif(l, lam, num_basis));
            return std::make_pair(to_indices(s.timestamps), s.scores);
        },
        py::arg("values"), py::arg("window_length"), py::arg("l") = 1.0,
        py::arg("regularization") = 0.1, py::arg("num_basis") = -1,
        "Sliding-window change scores (slide 1); returns (window_ends, scores) with "
        "1-based end timestamps.");

    m.def(
        "anomaly_scores",
        [](const Eigen::MatrixXd& values, std::int64_t normal_start, std::int64_t normal_end,
           Eigen::Index window_length, Eigen::Index slide, double l, double lam,
           Eigen::Index num_basis) {
            NormalPeriod normal{Timestamp::index(normal_start), Timestamp::index(normal_end)};
            const ScoreSeries s =
                anomaly_scores(series_from_matrix(values), normal, {window_length, slide},
                               make_ulsif(l, lam, num_basis));
            return std::make_pair(to_indices(s.timestamps), s.scores);
        },
        py::arg("values"), py::arg("normal_start"), py::arg("normal_end"),
        py::arg("window_length"), py::arg("slide") = 1, py::arg("l") = 1.0,
        py::arg("regularization") = 0.1, py::arg("num_basis") = -1,
        "Window scores against a fixed normal period (1-based inclusive interval).");

    m.def(
        "roc_auc",
        [](const std::vector<std::int64_t>& window_ends, const std::vector<double>& scores,
           std::int64_t anomaly_start, std::int64_t anomaly_end) {
            LabeledScores labeled;
            for (std::int64_t t : window_ends)
                labeled.scores.timestamps.push_back(Timestamp::index(t));
            labeled.scores.scores = scores;
            labeled.anomaly_start = Timestamp::index(anomaly_start);
            labeled.anomaly_end = Timestamp::index(anomaly_end);
            return roc_auc(labeled);
        },
        py::arg("window_ends"), py::arg("scores"), py::arg("anomaly_start"),
        py::arg("anomaly_end"),
        "Mann-Whitney ROC-AUC; a window is positive when its end lies in the "
        "anomaly interval (inclusive). Ties count one half.");

    m.def(
        "find_peaks",
        [](const std::vector<std::int64_t>& window_ends, const std::vector<double>& scores,
           double min_prominence) {
            ScoreSeries s;
            for (std::int64_t t : window_ends) s.timestamps.push_back(Timestamp::index(t));
            s.scores = scores;
            return to_indices(find_peaks(s, min_prominence));
        },
        py::arg("window_ends"), py::arg("scores"), py::arg("min_prominence"),
        "Local maxima with at least the given prominence.");

    m.def(
        "generate_synthetic",
        [](int segments, Eigen::Index segment_len, std::uint64_t seed) {
            const SyntheticData data = generate_synthetic({segments, segment_len, seed});
            return std::make_pair(data.series.values, to_indices(data.change_points));
        },
        py::arg("segments") = 10, py::arg("segment_len") = 100, py::arg("seed") = 0,
        "Covariance-switching benchmark; returns (values, change_points).");

    m.def(
        "generate_failure_sequence",
        [](Eigen::Index dim, Eigen::Index normal_len, Eigen::Index pre_len,
           Eigen::Index anomaly_len, const Eigen::VectorXd& shift, std::uint64_t seed) {
            FailureSpec spec;
            spec.dim = dim;
            spec.normal_len = normal_len;
            spec.pre_anomaly_len = pre_len;
            spec.anomaly_len = anomaly_len;
            spec.shift = shift;
            spec.noise_seed = seed;
            const FailureData data = generate_failure_sequence(spec);
            py::dict truth;
            truth["normal_start"] = data.normal_period.start.as_index();
            truth["normal_end"] = data.normal_period.end.as_index();
            truth["anomaly_start"] = data.anomaly_start.as_index();
            truth["anomaly_end"] = data.anomaly_end.as_index();
            return py::make_tuple(data.series.values, truth);
        },
        py::arg("dim"), py::arg("normal_len"), py::arg("pre_len"), py::arg("anomaly_len"),
        py::arg("shift") = Eigen::VectorXd(), py::arg("seed") = 0,
        "Failure fixture: standard-normal rows with a persistent mean shift over "
        "the anomaly interval; returns (values, truth_dict).");
}
