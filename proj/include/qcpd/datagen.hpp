#ifndef QCPD_DATAGEN_HPP
#define QCPD_DATAGEN_HPP

#include <cstdint>
#include <vector>

#include "qcpd/detection.hpp"
#include "qcpd/timeseries.hpp"

namespace qcpd {

/// Covariance-switching 2-d benchmark: segment N is origin-centered normal
/// with unit diagonal and off-diagonal +-(4/5 + (N-2)/500), sign alternating
/// with the parity of N (negative for odd N).
struct SyntheticSpec {
    int num_segments = 10;
    Eigen::Index segment_len = 100;
    std::uint64_t seed = 0;
};

struct SyntheticData {
    TimeSeries series;
    std::vector<Timestamp> change_points;  // at t = segment_len * k
};

/// Synthetic stand-in for the proprietary failure sequences: i.i.d. standard
/// normal rows with a persistent mean shift over the anomaly interval.
struct FailureSpec {
    Eigen::Index dim = 13;
    Eigen::Index normal_len = 1;
    Eigen::Index pre_anomaly_len = 1;
    Eigen::Index anomaly_len = 1;
    Eigen::VectorXd shift;  // dim entries; empty means zero
    std::uint64_t noise_seed = 0;
};

struct FailureData {
    TimeSeries series;
    NormalPeriod normal_period;
    Timestamp anomaly_start;
    Timestamp anomaly_end;  // inclusive
};

Eigen::Matrix2d synthetic_covariance(int segment);

SyntheticData generate_synthetic(const SyntheticSpec& spec);

FailureData generate_failure_sequence(const FailureSpec& spec);

}  // namespace qcpd

#endif
