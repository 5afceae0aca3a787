#include "qcpd/datagen.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qcpd {

namespace {

std::uint64_t mix_segment_seed(std::uint64_t seed, int segment) {
    std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(segment + 1));
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Eigen::Matrix2d synthetic_covariance(int segment) {
    if (segment < 1) throw std::invalid_argument("segment index must be >= 1");
    const double magnitude = 4.0 / 5.0 + static_cast<double>(segment - 2) / 500.0;
    const double off = (segment % 2 == 1) ? -magnitude : magnitude;
    Eigen::Matrix2d sigma;
    sigma << 1.0, off, off, 1.0;
    return sigma;
}

SyntheticData generate_synthetic(const SyntheticSpec& spec) {
    if (spec.num_segments < 2) throw std::invalid_argument("need at least two segments");
    if (spec.segment_len < 1) throw std::invalid_argument("segment length must be >= 1");

    const Eigen::Index total = spec.segment_len * spec.num_segments;
    Eigen::MatrixXd values(total, 2);
    for (int seg = 1; seg <= spec.num_segments; ++seg) {
        const Eigen::Matrix2d chol = synthetic_covariance(seg).llt().matrixL();
        std::mt19937_64 rng(mix_segment_seed(spec.seed, seg));
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (Eigen::Index i = 0; i < spec.segment_len; ++i) {
            Eigen::Vector2d z;
            z << gauss(rng), gauss(rng);
            values.row(spec.segment_len * (seg - 1) + i) = (chol * z).transpose();
        }
    }

    SyntheticData out;
    out.series = make_indexed_series(std::move(values));
    for (int k = 1; k < spec.num_segments; ++k)
        out.change_points.push_back(Timestamp::index(spec.segment_len * k));
    return out;
}

FailureData generate_failure_sequence(const FailureSpec& spec) {
    if (spec.dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (spec.normal_len < 1 || spec.pre_anomaly_len < 1 || spec.anomaly_len < 1)
        throw std::invalid_argument("all period lengths must be >= 1");
    Eigen::VectorXd shift = spec.shift;
    if (shift.size() == 0) shift = Eigen::VectorXd::Zero(spec.dim);
    if (shift.size() != spec.dim)
        throw std::invalid_argument("shift dimension does not match feature dimension");

    const Eigen::Index total = spec.normal_len + spec.pre_anomaly_len + spec.anomaly_len;
    const Eigen::Index anomaly_first = spec.normal_len + spec.pre_anomaly_len;  // 0-based

    std::mt19937_64 rng(spec.noise_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd values(total, spec.dim);
    for (Eigen::Index t = 0; t < total; ++t)
        for (Eigen::Index j = 0; j < spec.dim; ++j) values(t, j) = gauss(rng);
    values.bottomRows(spec.anomaly_len).rowwise() += shift.transpose();

    FailureData out;
    out.series = make_indexed_series(std::move(values));
    out.normal_period = {Timestamp::index(1), Timestamp::index(spec.normal_len)};
    out.anomaly_start = Timestamp::index(anomaly_first + 1);
    out.anomaly_end = Timestamp::index(total);
    return out;
}

}  // namespace qcpd
