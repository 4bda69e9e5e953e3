// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file trotter.hpp
 * @brief First-order product formula for Pauli Hamiltonians and its circuits.
 *
 * e^{i H tau} is approximated by [prod_X e^{i c_X P_X tau / M}]^M with terms
 * in the Hamiltonian's sorted order. Each factor e^{i theta P} is emitted as
 *
 *   basis change (H for X, Rx(pi/2) for Y)
 *   CNOT ladder folding the parity onto the last support qubit
 *   Rz(-2 theta) on that qubit
 *   ladder and basis change undone.
 *
 * The identity term becomes a GlobalPhase gate. Circuit qubit q is state
 * qubit q when applied.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "molpea/pauli.hpp"
#include "molpea/pea.hpp"
#include "molpea/simulator.hpp"

namespace molpea {

enum class GateKind {
    Hadamard,
    RxHalfPi,       ///< Rx(pi/2), into the Y basis
    RxMinusHalfPi,  ///< Rx(-pi/2), out of the Y basis
    Cnot,
    Rz,             ///< e^{-i angle Z / 2}
    GlobalPhase,    ///< e^{i angle}
};

[[nodiscard]] std::string_view to_string(GateKind kind) noexcept;

struct Gate {
    GateKind kind = GateKind::Hadamard;
    int qubit = 0;    ///< target (unused for GlobalPhase)
    int control = -1; ///< CNOT control
    double angle = 0.0;
};

/// Gates [first, first + count) implement the exponential of term `term`.
struct TermSegment {
    std::size_t first = 0;
    std::size_t count = 0;
    std::size_t term = 0;
};

struct PauliCircuit {
    int nqubits = 0;
    int repetitions = 1;
    std::vector<Gate> gates;
    std::vector<TermSegment> segments;
};

/// Appends the gates for e^{i theta P} to `out`.
void append_pauli_exponential(std::vector<Gate>& out, const PauliString& p, double theta);

/// [prod_X e^{i c_X P_X tau / M}]^M. Throws DomainError for M < 1.
[[nodiscard]] PauliCircuit trotter_step(const PauliHamiltonian& h, double tau, int repetitions);

/**
 * Applies the circuit to the low-order qubits of `state`. With a control
 * qubit, every Rz becomes a controlled Rz and every global phase a phase
 * gate on the control; basis changes and ladders stay uncontrolled since
 * they cancel when the control is 0.
 */
void apply_circuit(StateVector& state, const PauliCircuit& circuit,
                   std::optional<int> control = std::nullopt);

inline constexpr int kTrotterDenseMaxQubits = 10;

/// Dense unitary of the circuit, one column per basis state.
/// Throws CapacityError above `max_qubits`.
[[nodiscard]] Eigen::MatrixXcd circuit_to_dense(const PauliCircuit& circuit,
                                                int max_qubits = kTrotterDenseMaxQubits);

/// ||e^{i H tau} - U_circuit(M)||_2. Throws CapacityError above 10 qubits.
[[nodiscard]] double trotter_error(const PauliHamiltonian& h, double tau, int repetitions);

/// Smallest M found by doubling then bisection with trotter_error <= threshold.
/// Throws NumericsError if `max_repetitions` is reached first.
[[nodiscard]] int find_trotter_steps(const PauliHamiltonian& h, double tau, double threshold,
                                     int max_repetitions = 1 << 26);

struct TermCost {
    std::string label;
    double coefficient = 0.0;
    int weight = 0;        ///< qubits acted on
    int mode_support = 0;  ///< fermionic modes behind the term
    int cnots = 0;         ///< 2 (w - 1)
    int rotations = 0;     ///< 1, or 0 for the identity
    int basis_changes = 0; ///< 2 per X or Y factor
    int global_phases = 0; ///< 1 for the identity
    [[nodiscard]] int elementary_gates() const noexcept {
        return cnots + rotations + basis_changes + global_phases;
    }
};

inline constexpr int kMaxModeSupport = 4;
inline constexpr int kElementaryGateBound = 400;

struct GateReport {
    std::size_t term_count = 0;
    int repetitions = 1;
    std::vector<TermCost> terms;
    /// Counted from the emitted circuit.
    std::size_t one_qubit_gates = 0;  ///< basis changes + Rz + global phases
    std::size_t two_qubit_gates = 0;  ///< CNOTs
    std::size_t rotations = 0;
    std::size_t basis_changes = 0;
    std::size_t global_phases = 0;
    /// Controlled circuit with native controlled rotations: every Rz and
    /// global phase becomes a two-qubit gate.
    std::size_t controlled_two_qubit_gates = 0;
    /// Controlled circuit with each controlled Rz lowered to 2 CNOT + 2 Rz.
    std::size_t decomposed_two_qubit_gates = 0;
    std::size_t decomposed_one_qubit_gates = 0;
    int max_support = 0;        ///< largest qubit weight of a term
    int max_mode_support = 0;   ///< largest fermionic mode count of a term
    int max_term_gates = 0;     ///< largest per-term elementary gate count
};

/**
 * Gate accounting for trotter_step(h, tau, M). Throws EncodingError when a
 * term touches more than four fermionic modes.
 */
[[nodiscard]] GateReport gate_count(const PauliHamiltonian& h, int repetitions);

/**
 * Recursive PEA on the Trotter circuit. The circuit's dense unitary drives
 * recursive_pea; iteration 0 is also run at gate level (controlled circuit
 * repeated 2^j times per read-out qubit) and must match the dense
 * distribution within 1e-9, otherwise NumericsError.
 */
[[nodiscard]] PeaTrace controlled_trotter_pea(const PauliHamiltonian& h, const StateVector& initial,
                                              const PeaConfig& cfg, int repetitions);

}  // namespace molpea
