#include "qcpd/features.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qcpd {

namespace {

// splitmix64 finalizer; the per-row shot stream is seeded with
// mix(global_seed ^ golden_ratio * (row + 1)) so that parallel and serial
// row processing agree bit-for-bit.
std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t row_seed(std::uint64_t global_seed, std::int64_t row) {
    return splitmix64(global_seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(row + 1)));
}

}  // namespace

FeatureBackend FeatureBackend::with_shots(std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    FeatureBackend b;
    b.mode = Mode::Shots;
    b.shots = shots;
    b.seed = seed;
    return b;
}

Eigen::VectorXd encode_angles(const Eigen::VectorXd& x) {
    if (!x.allFinite()) throw std::invalid_argument("encode_angles: non-finite input entry");
    return x.array().atan();
}

Eigen::VectorXd project(const Eigen::VectorXd& x, const EncodingConfig& cfg,
                        const FeatureBackend& backend, std::int64_t row_index) {
    const int d = static_cast<int>(x.size());
    if (d < 1) throw std::invalid_argument("project: input dimension must be >= 1");
    if (cfg.circuit_family == CircuitFamily::Heisenberg && !(cfg.t > 0))
        throw std::invalid_argument("Heisenberg encoding requires t > 0");

    const Eigen::VectorXd theta = encode_angles(x);
    const CircuitSpec circuit = cfg.circuit_family == CircuitFamily::Heisenberg
                                    ? build_heisenberg_circuit(theta, cfg.t, cfg.p)
                                    : build_two_local_circuit(theta, cfg.p);
    const StateVector initial = haar_random_initial_state(circuit.n_qubits, cfg.init_seed);
    const StateVector state = run_circuit(circuit, initial);

    const int n_q = circuit.n_qubits;
    Eigen::VectorXd features(3 * n_q);
    std::mt19937_64 rng(row_seed(backend.seed, row_index));
    const Pauli order[] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (int k = 1; k <= n_q; ++k) {
        for (int i = 0; i < 3; ++i) {
            const double expectation = pauli_expectation(state, k, order[i]);
            double c;
            if (backend.mode == FeatureBackend::Mode::Exact) {
                c = 0.5 * expectation;
            } else {
                // Each observable is measured independently: a +1 outcome has
                // probability (1+<sigma>)/2, and the empirical mean replaces
                // the exact expectation.
                const double p_plus = std::clamp(0.5 * (1.0 + expectation), 0.0, 1.0);
                std::binomial_distribution<std::int64_t> binom(backend.shots, p_plus);
                const std::int64_t successes = binom(rng);
                c = 0.5 * (2.0 * static_cast<double>(successes) / static_cast<double>(backend.shots) - 1.0);
            }
            features(3 * (k - 1) + i) = c;
        }
    }
    return features;
}

TimeSeries transform_series(const TimeSeries& series, const EncodingConfig& cfg,
                            const FeatureBackend& backend) {
    series.validate();
    const Eigen::Index dim_in = series.dim();
    if (dim_in < 1) throw std::invalid_argument("transform_series: series dimension must be >= 1");
    const Eigen::Index dim_out = 3 * (dim_in + 1);

    TimeSeries out;
    out.timestamps = series.timestamps;
    out.values.resize(series.length(), dim_out);
    for (Eigen::Index t = 0; t < series.length(); ++t)
        out.values.row(t) = project(series.values.row(t), cfg, backend, t).transpose();
    return out;
}

}  // namespace qcpd
