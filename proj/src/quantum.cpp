#include "qcpd/quantum.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qcpd {

namespace {

constexpr Complex kImag{0.0, 1.0};

void check_qubit(int qubit, int n_qubits) {
    if (qubit < 1 || qubit > n_qubits)
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " out of range for " + std::to_string(n_qubits) + " qubits");
}

std::size_t bit_mask(int qubit) { return std::size_t{1} << (qubit - 1); }

void apply_two_qubit_rotation(Amplitudes& a, const TwoQubitRotation& g, int n_qubits) {
    check_qubit(g.qubit_a, n_qubits);
    check_qubit(g.qubit_b, n_qubits);
    if (g.qubit_a == g.qubit_b)
        throw std::invalid_argument("two-qubit rotation needs distinct qubits");
    const std::size_t ma = bit_mask(g.qubit_a);
    const std::size_t mb = bit_mask(g.qubit_b);
    const std::size_t mask = ma | mb;
    const double c = std::cos(g.angle);
    const double s = std::sin(g.angle);
    const std::size_t dim = a.size();

    if (g.axis == Pauli::Z) {
        // exp(-i*phi*ZZ) is diagonal: eigenvalue +1 when the two bits agree.
        const Complex phase_same = std::exp(-kImag * g.angle);
        const Complex phase_diff = std::exp(kImag * g.angle);
        for (std::size_t idx = 0; idx < dim; ++idx) {
            const bool same = ((idx & ma) != 0) == ((idx & mb) != 0);
            a[idx] *= same ? phase_same : phase_diff;
        }
        return;
    }
    // XX and YY couple idx with idx^mask. For YY the coupled amplitude picks
    // up a sign: -1 when the two bits agree, +1 otherwise.
    for (std::size_t idx = 0; idx < dim; ++idx) {
        const std::size_t partner = idx ^ mask;
        if (partner < idx) continue;
        double sign = 1.0;
        if (g.axis == Pauli::Y) {
            const bool same = ((idx & ma) != 0) == ((idx & mb) != 0);
            sign = same ? -1.0 : 1.0;
        }
        const Complex u = a[idx];
        const Complex v = a[partner];
        a[idx] = c * u - kImag * (s * sign) * v;
        a[partner] = c * v - kImag * (s * sign) * u;
    }
}

void apply_rz(Amplitudes& a, const RotationZ& g, int n_qubits) {
    check_qubit(g.qubit, n_qubits);
    const std::size_t m = bit_mask(g.qubit);
    const Complex phase0 = std::exp(-kImag * g.angle);
    const Complex phase1 = std::exp(kImag * g.angle);
    for (std::size_t idx = 0; idx < a.size(); ++idx)
        a[idx] *= (idx & m) ? phase1 : phase0;
}

void apply_cx(Amplitudes& a, const ControlledNot& g, int n_qubits) {
    check_qubit(g.control, n_qubits);
    check_qubit(g.target, n_qubits);
    if (g.control == g.target)
        throw std::invalid_argument("CX needs distinct control and target");
    const std::size_t mc = bit_mask(g.control);
    const std::size_t mt = bit_mask(g.target);
    for (std::size_t idx = 0; idx < a.size(); ++idx)
        if ((idx & mc) && !(idx & mt)) std::swap(a[idx], a[idx | mt]);
}

void apply_u1q(Amplitudes& a, const SingleQubitUnitary& g, int n_qubits) {
    check_qubit(g.qubit, n_qubits);
    const Eigen::Matrix2cd& u = g.matrix;
    if (!(u.adjoint() * u - Eigen::Matrix2cd::Identity()).isZero(1e-10))
        throw std::invalid_argument("single-qubit gate matrix is not unitary");
    const std::size_t m = bit_mask(g.qubit);
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
        if (idx & m) continue;
        const Complex x0 = a[idx];
        const Complex x1 = a[idx | m];
        a[idx] = u(0, 0) * x0 + u(0, 1) * x1;
        a[idx | m] = u(1, 0) * x0 + u(1, 1) * x1;
    }
}

/// Haar-random 2x2 unitary: complex Ginibre matrix, QR, then fix the phase
/// ambiguity by normalizing the R diagonal.
Eigen::Matrix2cd haar_unitary_2x2(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Matrix2cd g;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(r, c) = Complex(re, im);
        }
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    Eigen::Matrix2cd lambda = Eigen::Matrix2cd::Zero();
    for (int j = 0; j < 2; ++j) lambda(j, j) = r(j, j) / std::abs(r(j, j));
    return q * lambda;
}

}  // namespace

StateVector StateVector::zero_state(int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
    StateVector s;
    s.n_qubits = n_qubits;
    s.amplitudes.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    s.amplitudes[0] = Complex{1.0, 0.0};
    return s;
}

double StateVector::norm() const {
    double n2 = 0.0;
    for (const Complex& a : amplitudes) n2 += std::norm(a);
    return std::sqrt(n2);
}

StateVector apply_gate(const StateVector& state, const Gate& gate) {
    StateVector out = state;
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, TwoQubitRotation>)
                apply_two_qubit_rotation(out.amplitudes, g, out.n_qubits);
            else if constexpr (std::is_same_v<T, RotationZ>)
                apply_rz(out.amplitudes, g, out.n_qubits);
            else if constexpr (std::is_same_v<T, ControlledNot>)
                apply_cx(out.amplitudes, g, out.n_qubits);
            else
                apply_u1q(out.amplitudes, g, out.n_qubits);
        },
        gate);
    return out;
}

StateVector run_circuit(const CircuitSpec& circuit, const StateVector& initial) {
    if (circuit.n_qubits != initial.n_qubits)
        throw std::invalid_argument("circuit and state qubit counts differ");
    StateVector state = initial;
    for (const Gate& g : circuit.gates) state = apply_gate(state, g);
    return state;
}

StateVector haar_random_initial_state(int n_qubits, std::uint64_t seed) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Eigen::Vector2cd> locals;
    locals.reserve(static_cast<std::size_t>(n_qubits));
    for (int k = 0; k < n_qubits; ++k)
        locals.push_back(haar_unitary_2x2(rng).col(0));

    StateVector s;
    s.n_qubits = n_qubits;
    s.amplitudes.resize(std::size_t{1} << n_qubits);
    for (std::size_t idx = 0; idx < s.amplitudes.size(); ++idx) {
        Complex amp{1.0, 0.0};
        for (int k = 0; k < n_qubits; ++k) amp *= locals[static_cast<std::size_t>(k)]((idx >> k) & 1);
        s.amplitudes[idx] = amp;
    }
    return s;
}

CircuitSpec build_heisenberg_circuit(const Eigen::VectorXd& theta, double t, int p) {
    const int d = static_cast<int>(theta.size());
    if (d < 1) throw std::invalid_argument("theta must have dimension >= 1");
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    if (!std::isfinite(t)) throw std::invalid_argument("t must be finite");
    const int n_q = d + 1;

    // Bond list with its data parameter: even bonds (2i-1, 2i) carry
    // theta_{2i-1}, odd bonds (2i, 2i+1) carry theta_{2i}; bonds reaching
    // past qubit n_q are dropped, leaving exactly d parameterized bonds.
    std::vector<std::pair<std::pair<int, int>, double>> even_bonds, odd_bonds;
    for (int i = 1; 2 * i <= n_q; ++i)
        even_bonds.push_back({{2 * i - 1, 2 * i}, theta(2 * i - 2)});
    for (int i = 1; 2 * i + 1 <= n_q; ++i)
        odd_bonds.push_back({{2 * i, 2 * i + 1}, theta(2 * i - 1)});

    CircuitSpec circuit;
    circuit.n_qubits = n_q;
    const Pauli axes[] = {Pauli::Z, Pauli::Y, Pauli::X};  // rightmost operator factor first
    for (int rep = 0; rep < p; ++rep) {
        for (Pauli axis : axes)
            for (const auto& [bond, th] : even_bonds)
                circuit.gates.push_back(TwoQubitRotation{axis, t * th, bond.first, bond.second});
        for (Pauli axis : axes)
            for (const auto& [bond, th] : odd_bonds)
                circuit.gates.push_back(TwoQubitRotation{axis, t * th, bond.first, bond.second});
    }
    return circuit;
}

CircuitSpec build_two_local_circuit(const Eigen::VectorXd& theta, int p) {
    const int d = static_cast<int>(theta.size());
    if (d < 1) throw std::invalid_argument("theta must have dimension >= 1");
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    const int n_q = d + 1;

    CircuitSpec circuit;
    circuit.n_qubits = n_q;
    for (int rep = 0; rep < p; ++rep) {
        for (int k = 1; k <= d; ++k)
            circuit.gates.push_back(RotationZ{theta(k - 1), k});
        for (int k = 1; k < n_q; ++k)
            circuit.gates.push_back(ControlledNot{k, k + 1});
    }
    return circuit;
}

double pauli_expectation(const StateVector& state, int qubit, Pauli pauli) {
    check_qubit(qubit, state.n_qubits);
    const std::size_t m = bit_mask(qubit);
    const Amplitudes& a = state.amplitudes;
    double acc = 0.0;
    switch (pauli) {
        case Pauli::Z:
            for (std::size_t idx = 0; idx < a.size(); ++idx)
                acc += (idx & m) ? -std::norm(a[idx]) : std::norm(a[idx]);
            break;
        case Pauli::X:
            for (std::size_t idx = 0; idx < a.size(); ++idx)
                if (!(idx & m)) acc += 2.0 * std::real(std::conj(a[idx]) * a[idx | m]);
            break;
        case Pauli::Y:
            for (std::size_t idx = 0; idx < a.size(); ++idx)
                if (!(idx & m)) acc += 2.0 * std::imag(std::conj(a[idx]) * a[idx | m]);
            break;
    }
    return acc;
}

DensityMatrix1Q reduced_density_matrix(const StateVector& state, int qubit) {
    check_qubit(qubit, state.n_qubits);
    const std::size_t m = bit_mask(qubit);
    const Amplitudes& a = state.amplitudes;
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
        if (idx & m) continue;
        const Complex x0 = a[idx];
        const Complex x1 = a[idx | m];
        rho(0, 0) += x0 * std::conj(x0);
        rho(0, 1) += x0 * std::conj(x1);
        rho(1, 0) += x1 * std::conj(x0);
        rho(1, 1) += x1 * std::conj(x1);
    }
    return DensityMatrix1Q{rho};
}

}  // namespace qcpd
