// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Classical ground truth: dense diagonalization and a brute-force
 *        Fock-space Hamiltonian.
 *
 * fock_space_hamiltonian() applies the second-quantized operators term by
 * term to occupation-number vectors with its own sign bookkeeping. It shares
 * no code with the Slater-Condon or Jordan-Wigner builders and is used to
 * cross-check both.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "molpea/integrals.hpp"

namespace molpea {

template <typename Vector>
struct SpectralResult {
    Eigen::VectorXd eigenvalues;  ///< ascending
    Vector ground;                ///< normalized; largest component real positive
    double gap = 0.0;             ///< E1 - E0 (0 for a 1x1 matrix)

    [[nodiscard]] double ground_energy() const { return eigenvalues(0); }
};

using RealSpectrum = SpectralResult<Eigen::VectorXd>;
using ComplexSpectrum = SpectralResult<Eigen::VectorXcd>;

/// Throws SymmetryError when the matrix is not Hermitian within 1e-10.
[[nodiscard]] RealSpectrum diagonalize(const Eigen::MatrixXd& h);
[[nodiscard]] ComplexSpectrum diagonalize(const Eigen::MatrixXcd& h);

/// Two lowest eigenvalues only (same checks as diagonalize).
[[nodiscard]] std::pair<double, double> lowest_two(const Eigen::MatrixXd& h);

inline constexpr int kFockOracleMaxOrbitals = 3;

/**
 * H = sum_{pq} <p|h|q> a+_p a_q - 1/2 sum_{pqrs} <pq|rs> a+_p a+_q a_r a_s
 * over spin orbitals, with <pq|rs> = (pr|qs) when spins match. Occupation
 * basis index bit j is spin orbital j = 2p + spin; the basis vector is
 * a+_{j1} a+_{j2} ... |vac> with j1 < j2 < ... . Core energy excluded.
 *
 * Throws CapacityError when norb exceeds `max_norb`.
 */
[[nodiscard]] Eigen::MatrixXd fock_space_hamiltonian(const IntegralTable& table,
                                                     int max_norb = kFockOracleMaxOrbitals);

/// Occupation-basis indices with the given alpha / beta electron counts,
/// ordered by ascending (alpha string, beta string) of the spatial masks.
[[nodiscard]] std::vector<std::uint64_t> fock_sector_indices(int norb, int nalpha, int nbeta);

}  // namespace molpea
