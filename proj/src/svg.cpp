#include "qcpd/svg.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "qcpd/csv_io.hpp"

namespace qcpd {

void write_score_svg(const ScoreSeries& scores, const std::string& path, const SvgOptions& opts) {
    if (scores.size() < 2) throw std::invalid_argument("svg: need at least two scores");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);

    const double margin = 40.0;
    const double plot_w = opts.width - 2 * margin;
    const double plot_h = opts.height - 2 * margin;

    double lo = *std::min_element(scores.scores.begin(), scores.scores.end());
    double hi = *std::max_element(scores.scores.begin(), scores.scores.end());
    if (opts.threshold) {
        lo = std::min(lo, *opts.threshold);
        hi = std::max(hi, *opts.threshold);
    }
    if (hi == lo) hi = lo + 1.0;

    auto x_at = [&](std::size_t i) {
        return margin + plot_w * static_cast<double>(i) / static_cast<double>(scores.size() - 1);
    };
    auto y_at = [&](double v) { return margin + plot_h * (1.0 - (v - lo) / (hi - lo)); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width << "\" height=\""
        << opts.height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (opts.shaded_fraction) {
        const double x0 = margin + plot_w * std::clamp(opts.shaded_fraction->first, 0.0, 1.0);
        const double x1 = margin + plot_w * std::clamp(opts.shaded_fraction->second, 0.0, 1.0);
        out << "<rect x=\"" << x0 << "\" y=\"" << margin << "\" width=\"" << (x1 - x0)
            << "\" height=\"" << plot_h << "\" fill=\"#fdd\" />\n";
    }
    out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
    if (!opts.title.empty())
        out << "<text x=\"" << margin << "\" y=\"" << margin - 10 << "\" font-size=\"14\">"
            << opts.title << "</text>\n";
    if (opts.threshold)
        out << "<line x1=\"" << margin << "\" y1=\"" << y_at(*opts.threshold) << "\" x2=\""
            << margin + plot_w << "\" y2=\"" << y_at(*opts.threshold)
            << "\" stroke=\"red\" stroke-dasharray=\"5,5\"/>\n";

    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < scores.size(); ++i)
        out << x_at(i) << ',' << y_at(scores.scores[i]) << ' ';
    out << "\"/>\n";

    out << "<text x=\"5\" y=\"" << y_at(hi) + 4 << "\" font-size=\"11\">" << format_double(hi)
        << "</text>\n";
    out << "<text x=\"5\" y=\"" << y_at(lo) + 4 << "\" font-size=\"11\">" << format_double(lo)
        << "</text>\n";
    out << "<text x=\"" << margin << "\" y=\"" << opts.height - 10 << "\" font-size=\"11\">"
        << scores.timestamps.front().to_string() << "</text>\n";
    out << "<text x=\"" << margin + plot_w - 60 << "\" y=\"" << opts.height - 10
        << "\" font-size=\"11\">" << scores.timestamps.back().to_string() << "</text>\n";
    out << "</svg>\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qcpd
