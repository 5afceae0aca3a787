#include "qcpd/csv_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qcpd {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& text, std::size_t line_no) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad numeric field '" +
                                 text + "'");
    return v;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_series_csv(const TimeSeries& series, const std::string& path) {
    series.validate();
    std::ofstream out = open_out(path);
    out << "timestamp";
    for (Eigen::Index j = 1; j <= series.dim(); ++j) out << ",f" << j;
    out << "\n";
    for (Eigen::Index t = 0; t < series.length(); ++t) {
        out << series.timestamps[static_cast<std::size_t>(t)].to_string();
        for (Eigen::Index j = 0; j < series.dim(); ++j)
            out << ',' << format_double(series.values(t, j));
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

TimeSeries read_series_csv(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split_line(line);
    if (header.size() < 2 || header[0] != "timestamp")
        throw std::runtime_error(path + ": expected header 'timestamp,f1,...'");
    const std::size_t dim = header.size() - 1;

    TimeSeries series;
    std::vector<double> flat;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_line(line);
        if (fields.size() != dim + 1)
            throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                                     ": expected " + std::to_string(dim + 1) + " fields, got " +
                                     std::to_string(fields.size()));
        series.timestamps.push_back(Timestamp::parse(fields[0]));
        for (std::size_t j = 1; j < fields.size(); ++j)
            flat.push_back(parse_double(fields[j], line_no));
    }
    const Eigen::Index rows = static_cast<Eigen::Index>(series.timestamps.size());
    series.values.resize(rows, static_cast<Eigen::Index>(dim));
    for (Eigen::Index t = 0; t < rows; ++t)
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(dim); ++j)
            series.values(t, j) = flat[static_cast<std::size_t>(t) * dim + static_cast<std::size_t>(j)];
    series.validate();
    return series;
}

void write_scores_csv(const ScoreSeries& scores, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "window_end,score\n";
    for (std::size_t i = 0; i < scores.size(); ++i)
        out << scores.timestamps[i].to_string() << ',' << format_double(scores.scores[i]) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

ScoreSeries read_scores_csv(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split_line(line);
    if (header.size() < 2 || header[0] != "window_end")
        throw std::runtime_error(path + ": expected header 'window_end,score'");

    ScoreSeries scores;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_line(line);
        if (fields.size() < 2)
            throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                                     ": expected at least 2 fields");
        scores.timestamps.push_back(Timestamp::parse(fields[0]));
        scores.scores.push_back(parse_double(fields[1], line_no));
    }
    return scores;
}

}  // namespace qcpd
