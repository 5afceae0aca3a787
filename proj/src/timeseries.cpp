#include "qcpd/timeseries.hpp"

#include <cmath>
#include <stdexcept>

namespace qcpd {

void TimeSeries::validate() const {
    if (static_cast<Eigen::Index>(timestamps.size()) != values.rows())
        throw std::invalid_argument("timestamp count does not match row count");
    for (std::size_t i = 1; i < timestamps.size(); ++i)
        if (!(timestamps[i - 1] < timestamps[i]))
            throw std::invalid_argument("timestamps must be strictly increasing");
    if (!values.allFinite())
        throw std::invalid_argument("series contains non-finite values");
}

TimeSeries make_indexed_series(Eigen::MatrixXd values) {
    TimeSeries s;
    s.timestamps.reserve(static_cast<std::size_t>(values.rows()));
    for (Eigen::Index t = 0; t < values.rows(); ++t)
        s.timestamps.push_back(Timestamp::index(t + 1));
    s.values = std::move(values);
    return s;
}

}  // namespace qcpd
