#ifndef QCPD_EVALUATION_HPP
#define QCPD_EVALUATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "qcpd/detection.hpp"
#include "qcpd/timeseries.hpp"

namespace qcpd {

/// Scores with the ground-truth anomaly interval; a window counts as
/// positive iff its end timestamp lies inside the interval (inclusive).
struct LabeledScores {
    ScoreSeries scores;
    Timestamp anomaly_start;
    Timestamp anomaly_end;
};

struct EvalReport {
    double auc = 0.0;
    std::size_t false_alerts = 0;
    std::optional<Timestamp> detection_time;  // nullopt = not detected
    double threshold = 0.0;
};

/// ROC-AUC via the Mann-Whitney rank statistic; ties count one half.
double roc_auc(const LabeledScores& labeled);

/// Pre-anomaly window ends whose score exceeds the threshold.
std::size_t count_false_alerts(const LabeledScores& labeled, double threshold);

/// Earliest window end at or after anomaly start whose score exceeds the
/// threshold; nullopt when the anomaly is never detected.
std::optional<Timestamp> detection_time(const LabeledScores& labeled, double threshold);

/// Local maxima ranked by prominence (height above the higher of the two
/// flanking minima), greedily from the highest peak.
std::vector<Timestamp> find_peaks(const ScoreSeries& scores, double min_prominence);

/// Principal components are fit on `reference` (mean and covariance) and
/// `target` is projected onto the top-k eigenvectors. Each eigenvector is
/// oriented so its largest-magnitude component is positive.
TimeSeries pca_fit_project(const TimeSeries& reference, const TimeSeries& target,
                           Eigen::Index k);

}  // namespace qcpd

#endif
