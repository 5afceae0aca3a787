#ifndef QCPD_CSV_IO_HPP
#define QCPD_CSV_IO_HPP

#include <string>

#include "qcpd/detection.hpp"
#include "qcpd/timeseries.hpp"

namespace qcpd {

/// CSV schema: header `timestamp,f1,...,fd`; UTF-8, LF line endings; floats
/// written with 17 significant digits so a round-trip is exact.
void write_series_csv(const TimeSeries& series, const std::string& path);
TimeSeries read_series_csv(const std::string& path);

/// Score schema: header `window_end,score`.
void write_scores_csv(const ScoreSeries& scores, const std::string& path);
ScoreSeries read_scores_csv(const std::string& path);

std::string format_double(double v);

}  // namespace qcpd

#endif
