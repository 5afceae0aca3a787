#ifndef QCPD_FEATURES_HPP
#define QCPD_FEATURES_HPP

#include <Eigen/Dense>
#include <cstdint>

#include "qcpd/quantum.hpp"
#include "qcpd/timeseries.hpp"

namespace qcpd {

enum class CircuitFamily { Heisenberg, TwoLocal };

struct EncodingConfig {
    CircuitFamily circuit_family = CircuitFamily::Heisenberg;
    double t = 0.5;
    int p = 1;
    std::uint64_t init_seed = 0;
};

/// Exact expectations or idealized finite-shot sampling.
struct FeatureBackend {
    enum class Mode { Exact, Shots };
    Mode mode = Mode::Exact;
    std::int64_t shots = 8192;
    std::uint64_t seed = 0;

    static FeatureBackend exact() { return {}; }
    static FeatureBackend with_shots(std::int64_t shots, std::uint64_t seed);
};

/// Elementwise arctangent; bounds every encoding angle to (-pi/2, pi/2).
Eigen::VectorXd encode_angles(const Eigen::VectorXd& x);

/// Projected quantum feature of a single point: the Pauli coefficients
/// c_{k,i} = (1/2)<sigma_i> of every qubit's reduced density matrix, ordered
/// k ascending with i = X, Y, Z. Output dimension 3*(d+1); every entry in
/// [-1/2, 1/2]. `row_index` seeds the per-point shot stream in Shots mode.
Eigen::VectorXd project(const Eigen::VectorXd& x, const EncodingConfig& cfg,
                        const FeatureBackend& backend, std::int64_t row_index = 0);

/// Row-wise projection of a whole series; timestamps pass through unchanged.
TimeSeries transform_series(const TimeSeries& series, const EncodingConfig& cfg,
                            const FeatureBackend& backend);

}  // namespace qcpd

#endif
