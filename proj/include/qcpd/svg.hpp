#ifndef QCPD_SVG_HPP
#define QCPD_SVG_HPP

#include <optional>
#include <string>
#include <utility>

#include "qcpd/detection.hpp"

namespace qcpd {

struct SvgOptions {
    int width = 900;
    int height = 300;
    std::optional<double> threshold;
    /// Shaded interval given as positions in [0, 1] along the x axis.
    std::optional<std::pair<double, double>> shaded_fraction;
    std::string title;
};

/// Minimal self-contained line chart of a score series.
void write_score_svg(const ScoreSeries& scores, const std::string& path, const SvgOptions& opts);

}  // namespace qcpd

#endif
