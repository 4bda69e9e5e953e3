// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file pauli.hpp
 * @brief Pauli strings and the Jordan-Wigner (direct mapping) Hamiltonian.
 *
 * A PauliString is stored in symplectic form (x, z) with Y = i X Z on each
 * qubit where both bits are set. Labels are written with qubit 0 leftmost.
 *
 * Qubit layout of the direct mapping: qubit 2p is spatial orbital p with
 * alpha spin, qubit 2p+1 is orbital p with beta spin. A qubit in |1> is an
 * occupied spin orbital, and a_j = Z_0 ... Z_{j-1} (X_j + i Y_j) / 2.
 */

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "molpea/integrals.hpp"

namespace molpea {

struct PauliString {
    std::uint64_t x = 0;
    std::uint64_t z = 0;

    [[nodiscard]] int weight() const noexcept;
    [[nodiscard]] std::uint64_t support() const noexcept { return x | z; }
    [[nodiscard]] char at(int qubit) const noexcept;
    /// Label over `nqubits` characters from {I, X, Y, Z}, qubit 0 first.
    [[nodiscard]] std::string label(int nqubits) const;
    /// Inverse of label(). Throws DomainError on an invalid symbol.
    [[nodiscard]] static PauliString parse(std::string_view label);

    auto operator<=>(const PauliString&) const = default;
};

/// P1 * P2 = i^phase * (x1 ^ x2, z1 ^ z2); returns phase in {0,1,2,3}.
[[nodiscard]] int pauli_product_phase(const PauliString& a, const PauliString& b) noexcept;
[[nodiscard]] bool commutes(const PauliString& a, const PauliString& b) noexcept;

struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;
    /// Largest number of distinct fermionic modes among the second-quantized
    /// operators contributing to this term (the qubit weight for terms built
    /// by hand).
    int mode_support = 0;
};

/// Real-weighted sum of distinct Pauli strings, sorted by label.
class PauliHamiltonian {
public:
    PauliHamiltonian(int nqubits, std::vector<PauliTerm> terms);

    [[nodiscard]] int nqubits() const noexcept { return nqubits_; }
    [[nodiscard]] const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    /// Dense 2^n x 2^n matrix; basis index bit q is the state of qubit q.
    /// Throws CapacityError above `max_qubits`.
    [[nodiscard]] Eigen::MatrixXcd to_dense(int max_qubits = 12) const;

private:
    int nqubits_;
    std::vector<PauliTerm> terms_;
};

/// Dense matrix of a single Pauli string on `nqubits` qubits.
[[nodiscard]] Eigen::MatrixXcd pauli_matrix(const PauliString& p, int nqubits);

/**
 * Jordan-Wigner image of the electronic Hamiltonian
 *   sum_{pq,s} h(p,q) a+_{ps} a_{qs}
 *   + 1/2 sum_{pqrs,st} (pq|rs) a+_{ps} a+_{rt} a_{st} a_{qs}.
 * The core energy is not included. Terms are coalesced and those with
 * |coefficient| <= drop_tolerance are removed; imaginary residues below
 * 1e-12 are discarded (larger ones throw NumericsError).
 */
[[nodiscard]] PauliHamiltonian jordan_wigner(const IntegralTable& table,
                                             double drop_tolerance = 1e-12);

/// Basis index of the direct-mapping HF state (lowest NELEC spin orbitals).
[[nodiscard]] std::uint64_t hf_occupation_index(const IntegralTable& table);

}  // namespace molpea
