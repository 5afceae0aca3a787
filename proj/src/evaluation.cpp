#include "qcpd/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcpd {

namespace {

bool is_positive(const LabeledScores& labeled, std::size_t i) {
    const Timestamp& ts = labeled.scores.timestamps[i];
    return labeled.anomaly_start <= ts && ts <= labeled.anomaly_end;
}

}  // namespace

double roc_auc(const LabeledScores& labeled) {
    std::vector<double> pos, neg;
    for (std::size_t i = 0; i < labeled.scores.size(); ++i)
        (is_positive(labeled, i) ? pos : neg).push_back(labeled.scores.scores[i]);
    if (pos.empty() || neg.empty())
        throw std::invalid_argument("roc_auc needs both positive and negative windows");

    std::sort(neg.begin(), neg.end());
    double u = 0.0;
    for (double s : pos) {
        const auto lower = std::lower_bound(neg.begin(), neg.end(), s);
        const auto upper = std::upper_bound(neg.begin(), neg.end(), s);
        u += static_cast<double>(lower - neg.begin()) + 0.5 * static_cast<double>(upper - lower);
    }
    return u / (static_cast<double>(pos.size()) * static_cast<double>(neg.size()));
}

std::size_t count_false_alerts(const LabeledScores& labeled, double threshold) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < labeled.scores.size(); ++i)
        if (labeled.scores.timestamps[i] < labeled.anomaly_start &&
            labeled.scores.scores[i] > threshold)
            ++count;
    return count;
}

std::optional<Timestamp> detection_time(const LabeledScores& labeled, double threshold) {
    for (std::size_t i = 0; i < labeled.scores.size(); ++i)
        if (labeled.scores.timestamps[i] >= labeled.anomaly_start &&
            labeled.scores.scores[i] > threshold)
            return labeled.scores.timestamps[i];
    return std::nullopt;
}

std::vector<Timestamp> find_peaks(const ScoreSeries& scores, double min_prominence) {
    if (!(min_prominence > 0)) throw std::invalid_argument("min_prominence must be positive");
    const std::vector<double>& s = scores.scores;
    std::vector<Timestamp> peaks;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (!(s[i] > s[i - 1] && s[i] > s[i + 1])) continue;

        // Base on each side: the minimum between the peak and the nearest
        // strictly higher sample (or the series boundary).
        double left_base = s[i];
        for (std::size_t j = i; j-- > 0;) {
            if (s[j] > s[i]) break;
            left_base = std::min(left_base, s[j]);
        }
        double right_base = s[i];
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[j] > s[i]) break;
            right_base = std::min(right_base, s[j]);
        }
        const double prominence = s[i] - std::max(left_base, right_base);
        if (prominence >= min_prominence) peaks.push_back(scores.timestamps[i]);
    }
    return peaks;
}

TimeSeries pca_fit_project(const TimeSeries& reference, const TimeSeries& target,
                           Eigen::Index k) {
    reference.validate();
    target.validate();
    const Eigen::Index d = reference.dim();
    if (target.dim() != d) throw std::invalid_argument("pca: dimension mismatch");
    if (k < 1 || k > d) throw std::invalid_argument("pca: invalid component count");
    if (reference.length() < 2) throw std::invalid_argument("pca: reference needs >= 2 rows");

    const Eigen::RowVectorXd mean = reference.values.colwise().mean();
    const Eigen::MatrixXd centered = reference.values.rowwise() - mean;
    const Eigen::MatrixXd cov =
        centered.transpose() * centered / static_cast<double>(reference.length() - 1);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
    if (eig.info() != Eigen::Success) throw std::runtime_error("pca: eigendecomposition failed");

    // Eigen returns eigenvalues ascending; take the top k in descending order
    // and orient each vector so its largest-magnitude entry is positive.
    Eigen::MatrixXd components(d, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        Eigen::VectorXd v = eig.eigenvectors().col(d - 1 - j);
        Eigen::Index argmax = 0;
        v.cwiseAbs().maxCoeff(&argmax);
        if (v(argmax) < 0) v = -v;
        components.col(j) = v;
    }

    TimeSeries out;
    out.timestamps = target.timestamps;
    out.values = (target.values.rowwise() - mean) * components;
    return out;
}

}  // namespace qcpd
