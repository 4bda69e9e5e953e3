// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file simulator.hpp
 * @brief Dense statevector backend.
 *
 * Basis index bit q is the state of qubit q. Registers are contiguous qubit
 * ranges; a register's integer value is sum_i bit(first + i) * 2^i. In the
 * phase-estimation layout the read-out register sits above the system
 * register, so outcome integers are read directly from the high bits.
 */

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace molpea {

using Complex = std::complex<double>;

inline constexpr int kDefaultMaxQubits = 16;

struct QubitRange {
    int first = 0;
    int count = 0;

    [[nodiscard]] int end() const noexcept { return first + count; }
    [[nodiscard]] bool contains(int q) const noexcept { return q >= first && q < end(); }
};

class StateVector {
public:
    /// |0...0> on `nqubits` qubits. Throws CapacityError above `max_qubits`.
    explicit StateVector(int nqubits, int max_qubits = kDefaultMaxQubits);

    [[nodiscard]] static StateVector basis_state(int nqubits, std::uint64_t index,
                                                 int max_qubits = kDefaultMaxQubits);
    /// Normalizes `amplitudes`, whose length must be a power of two.
    [[nodiscard]] static StateVector from_amplitudes(const Eigen::VectorXcd& amplitudes,
                                                     int max_qubits = kDefaultMaxQubits);
    /// Embeds a vector of arbitrary length d into ceil(log2 d) qubits,
    /// zero-padding the tail, then normalizes.
    [[nodiscard]] static StateVector embed(const Eigen::VectorXcd& amplitudes,
                                           int max_qubits = kDefaultMaxQubits);

    [[nodiscard]] int nqubits() const noexcept { return nqubits_; }
    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    [[nodiscard]] const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] Eigen::VectorXcd& amplitudes() noexcept { return amplitudes_; }
    [[nodiscard]] double norm_squared() const { return amplitudes_.squaredNorm(); }

private:
    StateVector(int nqubits, Eigen::VectorXcd amplitudes);

    int nqubits_;
    Eigen::VectorXcd amplitudes_;
};

/// |high> (x) |low>: `low` occupies the low-order qubits.
[[nodiscard]] StateVector tensor_product(const StateVector& high, const StateVector& low,
                                         int max_qubits = kDefaultMaxQubits);

/// |<a|b>|^2 over the overlapping leading amplitudes.
[[nodiscard]] double squared_overlap(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

class DenseUnitary {
public:
    /// Throws ShapeError for non-square input. Unitarity is not enforced here;
    /// see unitarity_error().
    explicit DenseUnitary(Eigen::MatrixXcd matrix);

    [[nodiscard]] static DenseUnitary identity(Eigen::Index dimension);

    [[nodiscard]] Eigen::Index dimension() const noexcept { return matrix_.rows(); }
    [[nodiscard]] const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
    /// ||U^dagger U - I||_F
    [[nodiscard]] double unitarity_error() const;
    /// Block-diagonal extension by the identity to 2^nqubits rows.
    [[nodiscard]] DenseUnitary embed(int nqubits) const;
    /// This matrix squared.
    [[nodiscard]] DenseUnitary squared() const;

private:
    Eigen::MatrixXcd matrix_;
};

/**
 * e^{i h tau} by Hermitian eigendecomposition, Q diag(e^{i lambda tau}) Q^dagger.
 * Throws SymmetryError when ||h - h^dagger||_max > 1e-10.
 */
[[nodiscard]] DenseUnitary expm_i_hermitian(const Eigen::MatrixXcd& h, double tau);
[[nodiscard]] DenseUnitary expm_i_hermitian(const Eigen::MatrixXd& h, double tau);

namespace gates {
[[nodiscard]] Eigen::Matrix2cd identity();
[[nodiscard]] Eigen::Matrix2cd hadamard();
[[nodiscard]] Eigen::Matrix2cd pauli_x();
[[nodiscard]] Eigen::Matrix2cd pauli_y();
[[nodiscard]] Eigen::Matrix2cd pauli_z();
/// diag(1, e^{i theta})
[[nodiscard]] Eigen::Matrix2cd phase(double theta);
/// e^{-i theta X / 2}
[[nodiscard]] Eigen::Matrix2cd rx(double theta);
/// e^{-i theta Z / 2}
[[nodiscard]] Eigen::Matrix2cd rz(double theta);
}  // namespace gates

/// Throws IndexError for q outside the register.
void apply_one_qubit_gate(StateVector& state, int qubit, const Eigen::Matrix2cd& gate);
/// Applies `gate` to `target` on the control = 1 subspace.
void apply_controlled_gate(StateVector& state, int control, int target,
                           const Eigen::Matrix2cd& gate);
void apply_cnot(StateVector& state, int control, int target);
void apply_swap(StateVector& state, int a, int b);

/// Applies `u` to the qubits of `target`. Throws ShapeError unless
/// u.dimension() == 2^target.count.
void apply_unitary(StateVector& state, QubitRange target, const DenseUnitary& u);
/// Controlled form of apply_unitary; control must lie outside `target`.
void apply_controlled_unitary(StateVector& state, int control, QubitRange target,
                              const DenseUnitary& u);

/// F|j> = 2^{-m/2} sum_k e^{i 2 pi j k / 2^m} |k> on the block, built from
/// Hadamards, controlled phases and swaps.
void qft(StateVector& state, QubitRange block);
void inverse_qft(StateVector& state, QubitRange block);

/// Marginal probabilities of the 2^count outcomes of `block`.
[[nodiscard]] std::vector<double> measure_distribution(const StateVector& state, QubitRange block);
/// Samples one outcome of `block`, projects and renormalizes the state.
std::uint64_t measure_and_collapse(StateVector& state, QubitRange block, std::mt19937_64& rng);

}  // namespace molpea
