#ifndef QCPD_DETECTION_HPP
#define QCPD_DETECTION_HPP

#include <vector>

#include "qcpd/timeseries.hpp"
#include "qcpd/ulsif.hpp"

namespace qcpd {

struct WindowSpec {
    Eigen::Index length = 1;  // L
    Eigen::Index slide = 1;   // w
};

struct NormalPeriod {
    Timestamp start;
    Timestamp end;  // inclusive
};

/// Inclusive 0-based index range of one window; covers L+1 points.
struct WindowRange {
    Eigen::Index first;
    Eigen::Index last;
};

struct ScoreSeries {
    std::vector<Timestamp> timestamps;  // window ends, strictly increasing
    std::vector<double> scores;
    bool normalized = false;

    std::size_t size() const { return scores.size(); }
    /// Divides every score by the maximum (plotting convention).
    ScoreSeries normalize() const;
};

/// Window s covers 1-based indices [s*w, s*w + L] for s = 1, 2, ... while
/// the window fits in the series.
std::vector<WindowRange> make_windows(const TimeSeries& series, const WindowSpec& spec);

/// Failure-detection scoring: each window is compared against the fixed
/// normal-period sample; score is the estimated Pearson divergence with the
/// normal rows on the p side and kernel centers drawn from them.
ScoreSeries anomaly_scores(const TimeSeries& series, const NormalPeriod& normal,
                           const WindowSpec& spec, const UlsifConfig& cfg);

/// Change-point scoring with slide w = 1: window X_s against X_{s-L}, with
/// X_s on the p side and centers drawn from it.
ScoreSeries change_scores(const TimeSeries& series, Eigen::Index window_length,
                          const UlsifConfig& cfg);

/// multiplier times the mean of the first k scores.
double threshold_from_warmup(const ScoreSeries& scores, std::size_t k, double multiplier);

/// Window-end timestamps with score strictly above the threshold.
std::vector<Timestamp> detect(const ScoreSeries& scores, double threshold);

}  // namespace qcpd

#endif
