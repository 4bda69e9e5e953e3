// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include "molpea/trotter.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "molpea/errors.hpp"

namespace molpea {

namespace {

std::vector<int> support_qubits(const PauliString& p) {
    std::vector<int> out;
    for (std::uint64_t s = p.support(); s; s &= s - 1) out.push_back(std::countr_zero(s));
    return out;
}

Eigen::MatrixXcd matrix_power(Eigen::MatrixXcd base, int n) {
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(base.rows(), base.cols());
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

double spectral_norm(const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

void require_dense_capacity(int nqubits) {
    if (nqubits > kTrotterDenseMaxQubits)
        throw CapacityError("dense Trotter reconstruction limited to " +
                            std::to_string(kTrotterDenseMaxQubits) + " qubits, got " +
                            std::to_string(nqubits));
}

/// Error of the M-fold product given the exact unitary.
double error_against(const PauliHamiltonian& h, const Eigen::MatrixXcd& exact, double tau, int m) {
    const Eigen::MatrixXcd step = circuit_to_dense(trotter_step(h, tau / m, 1));
    return spectral_norm(exact - matrix_power(step, m));
}

}  // namespace

std::string_view to_string(GateKind kind) noexcept {
    switch (kind) {
        case GateKind::Hadamard: return "H";
        case GateKind::RxHalfPi: return "RX+";
        case GateKind::RxMinusHalfPi: return "RX-";
        case GateKind::Cnot: return "CNOT";
        case GateKind::Rz: return "RZ";
        case GateKind::GlobalPhase: return "GPHASE";
    }
    return "?";
}

void append_pauli_exponential(std::vector<Gate>& out, const PauliString& p, double theta) {
    const auto qubits = support_qubits(p);
    if (qubits.empty()) {
        out.push_back({GateKind::GlobalPhase, 0, -1, theta});
        return;
    }
    for (int q : qubits) {
        const char c = p.at(q);
        if (c == 'X') out.push_back({GateKind::Hadamard, q, -1, 0.0});
        if (c == 'Y') out.push_back({GateKind::RxHalfPi, q, -1, 0.0});
    }
    for (std::size_t i = 0; i + 1 < qubits.size(); ++i)
        out.push_back({GateKind::Cnot, qubits[i + 1], qubits[i], 0.0});
    out.push_back({GateKind::Rz, qubits.back(), -1, -2.0 * theta});
    for (std::size_t i = qubits.size() - 1; i > 0; --i)
        out.push_back({GateKind::Cnot, qubits[i], qubits[i - 1], 0.0});
    for (int q : qubits) {
        const char c = p.at(q);
        if (c == 'X') out.push_back({GateKind::Hadamard, q, -1, 0.0});
        if (c == 'Y') out.push_back({GateKind::RxMinusHalfPi, q, -1, 0.0});
    }
}

PauliCircuit trotter_step(const PauliHamiltonian& h, double tau, int repetitions) {
    if (repetitions < 1) throw DomainError("Trotter repetition count M must be >= 1");
    PauliCircuit c;
    c.nqubits = h.nqubits();
    c.repetitions = repetitions;
    const double slice = tau / repetitions;
    for (int r = 0; r < repetitions; ++r) {
        for (std::size_t t = 0; t < h.size(); ++t) {
            const auto& term = h.terms()[t];
            const std::size_t first = c.gates.size();
            append_pauli_exponential(c.gates, term.string, term.coefficient * slice);
            c.segments.push_back({first, c.gates.size() - first, t});
        }
    }
    return c;
}

void apply_circuit(StateVector& state, const PauliCircuit& circuit, std::optional<int> control) {
    if (circuit.nqubits > state.nqubits())
        throw ShapeError("circuit has more qubits than the state");
    if (control && *control < circuit.nqubits)
        throw IndexError("control qubit overlaps the circuit register");
    const Eigen::Matrix2cd h = gates::hadamard();
    const Eigen::Matrix2cd rx_in = gates::rx(std::numbers::pi / 2);
    const Eigen::Matrix2cd rx_out = gates::rx(-std::numbers::pi / 2);
    for (const auto& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::Hadamard: apply_one_qubit_gate(state, g.qubit, h); break;
            case GateKind::RxHalfPi: apply_one_qubit_gate(state, g.qubit, rx_in); break;
            case GateKind::RxMinusHalfPi: apply_one_qubit_gate(state, g.qubit, rx_out); break;
            case GateKind::Cnot: apply_cnot(state, g.control, g.qubit); break;
            case GateKind::Rz:
                if (control)
                    apply_controlled_gate(state, *control, g.qubit, gates::rz(g.angle));
                else
                    apply_one_qubit_gate(state, g.qubit, gates::rz(g.angle));
                break;
            case GateKind::GlobalPhase:
                if (control)
                    apply_one_qubit_gate(state, *control, gates::phase(g.angle));
                else
                    state.amplitudes() *= std::polar(1.0, g.angle);
                break;
        }
    }
}

Eigen::MatrixXcd circuit_to_dense(const PauliCircuit& circuit, int max_qubits) {
    if (circuit.nqubits > max_qubits)
        throw CapacityError("dense circuit reconstruction limited to " + std::to_string(max_qubits) +
                            " qubits, got " + std::to_string(circuit.nqubits));
    const Eigen::Index dim = Eigen::Index{1} << circuit.nqubits;
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        StateVector s = StateVector::basis_state(circuit.nqubits, static_cast<std::uint64_t>(col),
                                                 std::max(max_qubits, circuit.nqubits));
        apply_circuit(s, circuit);
        u.col(col) = s.amplitudes();
    }
    return u;
}

double trotter_error(const PauliHamiltonian& h, double tau, int repetitions) {
    if (repetitions < 1) throw DomainError("Trotter repetition count M must be >= 1");
    require_dense_capacity(h.nqubits());
    const Eigen::MatrixXcd exact =
        expm_i_hermitian(h.to_dense(kTrotterDenseMaxQubits), tau).matrix();
    return error_against(h, exact, tau, repetitions);
}

int find_trotter_steps(const PauliHamiltonian& h, double tau, double threshold, int max_repetitions) {
    if (!(threshold > 0.0)) throw DomainError("Trotter error threshold must be positive");
    require_dense_capacity(h.nqubits());
    const Eigen::MatrixXcd exact =
        expm_i_hermitian(h.to_dense(kTrotterDenseMaxQubits), tau).matrix();
    int hi = 1;
    while (error_against(h, exact, tau, hi) > threshold) {
        if (hi >= max_repetitions) {
            std::ostringstream msg;
            msg << "Trotter error stays above " << threshold << " up to M = " << hi;
            throw NumericsError(msg.str());
        }
        hi = std::min(2 * hi, max_repetitions);
    }
    int lo = hi / 2;  // error(lo) > threshold, or lo == 0
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (error_against(h, exact, tau, mid) <= threshold)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

GateReport gate_count(const PauliHamiltonian& h, int repetitions) {
    if (repetitions < 1) throw DomainError("Trotter repetition count M must be >= 1");
    GateReport r;
    r.term_count = h.size();
    r.repetitions = repetitions;
    for (const auto& term : h.terms()) {
        TermCost c;
        c.label = term.string.label(h.nqubits());
        c.coefficient = term.coefficient;
        c.weight = term.string.weight();
        c.mode_support = term.mode_support;
        if (c.weight == 0) {
            c.global_phases = 1;
        } else {
            c.cnots = 2 * (c.weight - 1);
            c.rotations = 1;
            c.basis_changes = 2 * std::popcount(term.string.x);
        }
        if (c.mode_support > kMaxModeSupport) {
            std::ostringstream msg;
            msg << "term " << c.label << " involves " << c.mode_support
                << " fermionic modes, more than " << kMaxModeSupport;
            throw EncodingError(msg.str());
        }
        r.max_support = std::max(r.max_support, c.weight);
        r.max_mode_support = std::max(r.max_mode_support, c.mode_support);
        r.max_term_gates = std::max(r.max_term_gates, c.elementary_gates());
        r.terms.push_back(std::move(c));
    }

    const PauliCircuit circuit = trotter_step(h, 1.0, repetitions);
    for (const auto& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::Hadamard:
            case GateKind::RxHalfPi:
            case GateKind::RxMinusHalfPi: ++r.basis_changes; break;
            case GateKind::Cnot: ++r.two_qubit_gates; break;
            case GateKind::Rz: ++r.rotations; break;
            case GateKind::GlobalPhase: ++r.global_phases; break;
        }
    }
    r.one_qubit_gates = r.basis_changes + r.rotations + r.global_phases;
    r.controlled_two_qubit_gates = r.two_qubit_gates + r.rotations + r.global_phases;
    r.decomposed_two_qubit_gates = r.two_qubit_gates + 2 * r.rotations;
    r.decomposed_one_qubit_gates = r.basis_changes + 2 * r.rotations + r.global_phases;
    return r;
}

PeaTrace controlled_trotter_pea(const PauliHamiltonian& h, const StateVector& initial,
                                const PeaConfig& cfg, int repetitions) {
    if (initial.nqubits() < h.nqubits())
        throw ShapeError("initial state has fewer qubits than the Hamiltonian");
    if (cfg.readout_bits < 1) throw DomainError("read-out register needs at least one qubit");
    const PauliCircuit circuit = trotter_step(h, cfg.tau, repetitions);
    const DenseUnitary u(circuit_to_dense(circuit));

    const int ns = initial.nqubits();
    const int m = cfg.readout_bits;
    StateVector joint = tensor_product(StateVector(m, cfg.max_qubits), initial, cfg.max_qubits);
    for (int j = 0; j < m; ++j) apply_one_qubit_gate(joint, ns + j, gates::hadamard());
    for (int j = 0; j < m; ++j)
        for (long rep = 0; rep < (1L << j); ++rep) apply_circuit(joint, circuit, ns + j);
    inverse_qft(joint, QubitRange{ns, m});
    const auto gate_level = measure_distribution(joint, QubitRange{ns, m});
    const auto dense = pea_once(u, initial, m, cfg.max_qubits);
    double worst = 0.0;
    for (std::size_t i = 0; i < dense.size(); ++i)
        worst = std::max(worst, std::abs(dense[i] - gate_level[i]));
    if (worst > 1e-9) {
        std::ostringstream msg;
        msg << "gate-level controlled Trotter PEA deviates from the dense unitary by " << worst;
        throw NumericsError(msg.str());
    }
    return recursive_pea(u, initial, cfg);
}

}  // namespace molpea
