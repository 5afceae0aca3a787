#include "qcpd/detection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcpd {

namespace {

Eigen::MatrixXd rows_in_range(const TimeSeries& series, const WindowRange& r) {
    return series.values.middleRows(r.first, r.last - r.first + 1);
}

}  // namespace

ScoreSeries ScoreSeries::normalize() const {
    if (scores.empty()) throw std::invalid_argument("cannot normalize an empty score series");
    const double max_score = *std::max_element(scores.begin(), scores.end());
    if (max_score == 0.0) throw std::domain_error("cannot normalize: maximum score is zero");
    ScoreSeries out = *this;
    for (double& s : out.scores) s /= max_score;
    out.normalized = true;
    return out;
}

std::vector<WindowRange> make_windows(const TimeSeries& series, const WindowSpec& spec) {
    if (spec.length < 1 || spec.slide < 1)
        throw std::invalid_argument("window length and slide must be >= 1");
    const Eigen::Index T = series.length();
    if (T < spec.length + 1) throw std::invalid_argument("series shorter than one window");

    std::vector<WindowRange> windows;
    for (Eigen::Index s = 1; s * spec.slide + spec.length <= T; ++s) {
        const Eigen::Index first = s * spec.slide;  // 1-based start s*w -> 0-based s*w - 1
        windows.push_back({first - 1, first - 1 + spec.length});
    }
    if (windows.empty()) throw std::invalid_argument("no valid window fits the series");
    return windows;
}

ScoreSeries anomaly_scores(const TimeSeries& series, const NormalPeriod& normal,
                           const WindowSpec& spec, const UlsifConfig& cfg) {
    series.validate();
    Eigen::Index norm_first = -1, norm_last = -1;
    for (Eigen::Index t = 0; t < series.length(); ++t) {
        const Timestamp& ts = series.timestamps[static_cast<std::size_t>(t)];
        if (normal.start <= ts && ts <= normal.end) {
            if (norm_first < 0) norm_first = t;
            norm_last = t;
        }
    }
    if (norm_first < 0) throw std::invalid_argument("normal period contains no samples");
    const Eigen::MatrixXd normal_rows =
        series.values.middleRows(norm_first, norm_last - norm_first + 1);

    ScoreSeries out;
    for (const WindowRange& w : make_windows(series, spec)) {
        const UlsifModel model = fit(normal_rows, rows_in_range(series, w), cfg);
        out.timestamps.push_back(series.timestamps[static_cast<std::size_t>(w.last)]);
        out.scores.push_back(estimate_pe(model, normal_rows));
    }
    return out;
}

ScoreSeries change_scores(const TimeSeries& series, Eigen::Index window_length,
                          const UlsifConfig& cfg) {
    series.validate();
    const Eigen::Index L = window_length;
    if (L < 1) throw std::invalid_argument("window length must be >= 1");
    if (series.length() < 2 * L + 1)
        throw std::invalid_argument("series too short for adjacent-window scoring");

    // Slide w = 1: window X_s covers 1-based [s, s+L]; it is compared with
    // X_{s-L}, so the first valid s is L+1.
    ScoreSeries out;
    for (Eigen::Index s = L + 1; s + L <= series.length(); ++s) {
        const WindowRange current{s - 1, s - 1 + L};
        const WindowRange previous{s - L - 1, s - 1};
        const Eigen::MatrixXd current_rows = rows_in_range(series, current);
        const UlsifModel model = fit(current_rows, rows_in_range(series, previous), cfg);
        out.timestamps.push_back(series.timestamps[static_cast<std::size_t>(current.last)]);
        out.scores.push_back(estimate_pe(model, current_rows));
    }
    return out;
}

double threshold_from_warmup(const ScoreSeries& scores, std::size_t k, double multiplier) {
    if (k < 1) throw std::invalid_argument("warm-up length must be >= 1");
    if (!(multiplier > 0)) throw std::invalid_argument("threshold multiplier must be positive");
    if (scores.size() < k) throw std::invalid_argument("fewer scores than warm-up length");
    double mean = 0.0;
    for (std::size_t i = 0; i < k; ++i) mean += scores.scores[i];
    mean /= static_cast<double>(k);
    return multiplier * mean;
}

std::vector<Timestamp> detect(const ScoreSeries& scores, double threshold) {
    std::vector<Timestamp> alerts;
    for (std::size_t i = 0; i < scores.size(); ++i)
        if (scores.scores[i] > threshold) alerts.push_back(scores.timestamps[i]);
    return alerts;
}

}  // namespace qcpd
