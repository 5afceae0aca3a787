#ifndef QCPD_QUANTUM_HPP
#define QCPD_QUANTUM_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

namespace qcpd {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

/// Pure n-qubit state. Qubit indexing is little-endian and 1-based:
/// qubit 1 is the least significant bit of the amplitude index.
struct StateVector {
    int n_qubits = 0;
    Amplitudes amplitudes;

    static StateVector zero_state(int n_qubits);

    double norm() const;
};

enum class Pauli { X, Y, Z };

/// Two-qubit rotation exp(-i*angle * sigma(a) sigma(b)). The angle is used
/// as written, with no implicit halving.
struct TwoQubitRotation {
    Pauli axis;
    double angle;
    int qubit_a;
    int qubit_b;
};

/// Single-qubit rotation exp(-i*angle * Z); same no-halving convention as
/// the two-qubit rotations.
struct RotationZ {
    double angle;
    int qubit;
};

struct ControlledNot {
    int control;
    int target;
};

/// Arbitrary single-qubit unitary (checked to 1e-10 on construction sites
/// that build it from random matrices).
struct SingleQubitUnitary {
    Eigen::Matrix2cd matrix;
    int qubit;
};

using Gate = std::variant<TwoQubitRotation, RotationZ, ControlledNot, SingleQubitUnitary>;

struct CircuitSpec {
    int n_qubits = 0;
    std::vector<Gate> gates;  // applied front to back
};

/// One-qubit reduced density matrix.
struct DensityMatrix1Q {
    Eigen::Matrix2cd entries;
};

StateVector apply_gate(const StateVector& state, const Gate& gate);
StateVector run_circuit(const CircuitSpec& circuit, const StateVector& initial);

/// Tensor product of seeded Haar-random single-qubit states (Ginibre + QR
/// with R-diagonal phase fix applied to |0>). Deterministic per seed.
StateVector haar_random_initial_state(int n_qubits, std::uint64_t seed);

/// Trotterized Heisenberg encoding circuit on n_q = d+1 qubits: per
/// repetition, even-bond ZZ/YY/XX rotations then odd-bond ZZ/YY/XX
/// rotations, each with angle t*theta of its bond.
CircuitSpec build_heisenberg_circuit(const Eigen::VectorXd& theta, double t, int p);

/// Two-local encoding circuit on n_q = d+1 qubits: per repetition, RZ(theta_k)
/// on qubits 1..d followed by the linear CX chain.
CircuitSpec build_two_local_circuit(const Eigen::VectorXd& theta, int p);

/// <phi| sigma_qubit |phi>.
double pauli_expectation(const StateVector& state, int qubit, Pauli pauli);

/// Partial trace of |phi><phi| over all qubits except `qubit`.
DensityMatrix1Q reduced_density_matrix(const StateVector& state, int qubit);

}  // namespace qcpd

#endif
