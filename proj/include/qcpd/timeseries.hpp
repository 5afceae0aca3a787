#ifndef QCPD_TIMESERIES_HPP
#define QCPD_TIMESERIES_HPP

#include <Eigen/Dense>
#include <vector>

#include "qcpd/timestamp.hpp"

namespace qcpd {

/// Multivariate time series: strictly increasing timestamps with one
/// fixed-dimension real feature row per timestamp.
struct TimeSeries {
    std::vector<Timestamp> timestamps;
    Eigen::MatrixXd values;  // shape (T, d)

    Eigen::Index length() const { return values.rows(); }
    Eigen::Index dim() const { return values.cols(); }

    /// Throws std::invalid_argument on shape mismatch, non-finite entries,
    /// or non-increasing timestamps.
    void validate() const;
};

/// Builds a series with index timestamps 1..T (the convention used by all
/// generated datasets).
TimeSeries make_indexed_series(Eigen::MatrixXd values);

}  // namespace qcpd

#endif
