// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file pea.hpp
 * @brief Recursive phase estimation with a small read-out register.
 *
 * U = e^{i H tau} has eigenvalue e^{i 2 pi phi} on an eigenvector of H with
 * energy E = 2 pi phi / tau. Iteration k runs an m-qubit phase estimation on
 * V_k, reads the peak outcome theta_k = peak / 2^m, and chooses the shift
 * phi_k = theta_k - 1/4 (mod 1). The next operator is
 * V_{k+1} = (e^{-i 2 pi phi_k} V_k)^2, whose eigenphase 2 (theta - phi_k)
 * sits near 1/2. Unwinding theta_k = phi_k + theta_{k+1} / 2 yields phi with
 * one more bit per iteration.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "molpea/simulator.hpp"

namespace molpea {

enum class PeaMode {
    Argmax,   ///< deterministic: peak of the exact outcome distribution
    Sampled,  ///< one seeded draw per iteration; the state collapses
};

/// How the phase remainder of the last iteration is read.
enum class FinalEstimate {
    Peak,       ///< peak / 2^m, resolution 2^-(m+1) on the last remainder
    KernelFit,  ///< inverts the single-eigenvector Fourier kernel on the peak
                ///< and its larger neighbour (argmax mode only)
};

struct PeaConfig {
    int readout_bits = 4;
    int iterations = 20;
    double tau = 0.0;
    double reference_energy = 0.0;
    PeaMode mode = PeaMode::Argmax;
    std::uint64_t seed = 0;
    FinalEstimate final_estimate = FinalEstimate::KernelFit;
    /// Eigenvector the run is meant to resolve; enables the overlap check
    /// (warning below 0.5, PreparationError below 0.05).
    std::optional<Eigen::VectorXcd> target;
    /// Highest qubit count the joint register may use.
    int max_qubits = kDefaultMaxQubits;
};

struct PeaIteration {
    int k = 0;
    double shift = 0.0;               ///< phi_k in [0, 1)
    std::vector<double> distribution; ///< 2^m outcome probabilities
    int peak = 0;                     ///< argmax, or the drawn outcome
    double theta_hat = 0.0;           ///< peak / 2^m
};

struct PeaTrace {
    std::vector<PeaIteration> iterations;
    int readout_bits = 4;
    double tau = 0.0;
    double final_remainder = 0.0;  ///< estimate of the last eigenphase used
    double phase = 0.0;            ///< reconstructed phi in [0, 1)
    double energy = 0.0;           ///< 2 pi phi / tau
    double initial_overlap = -1.0; ///< |<target|initial>|^2, -1 when unknown
    std::vector<std::string> warnings;
};

inline constexpr double kOverlapWarning = 0.5;
inline constexpr double kOverlapFloor = 0.05;
inline constexpr double kUnitarityDriftLimit = 1e-6;

/// tau = -pi / |E|, so phi(E) = 1/2. Throws DomainError unless E < 0.
[[nodiscard]] double choose_tau(double e_estimate);

/// Closed-form outcome distribution of an m-qubit PEA on an eigenvector
/// with eigenphase `phase`.
[[nodiscard]] std::vector<double> fourier_kernel(double phase, int readout_bits);

/**
 * One m-qubit phase estimation: Hadamards on the read-out register,
 * controlled-v^{2^j} from read-out qubit j, inverse QFT, marginal
 * distribution of the read-out register.
 *
 * `v` may be smaller than the system register; it is extended by the identity.
 * Throws ShapeError if v does not fit the system register.
 */
[[nodiscard]] std::vector<double> pea_once(const DenseUnitary& v, const StateVector& system,
                                           int readout_bits, int max_qubits = kDefaultMaxQubits);

/// (e^{-i 2 pi phi_shift} v)^2
[[nodiscard]] DenseUnitary shift_and_square(const DenseUnitary& v, double phi_shift);

/**
 * Runs cfg.iterations rounds of the recursive algorithm on `u` starting from
 * `initial` on the system register.
 *
 * Throws PreparationError (overlap below the floor), NumericsError (V_k
 * drifts from unitarity by more than 1e-6), DomainError (bad config).
 */
[[nodiscard]] PeaTrace recursive_pea(const DenseUnitary& u, const StateVector& initial,
                                     const PeaConfig& cfg);

/// phi from the shifts and the final remainder, via theta_k = phi_k + theta_{k+1}/2.
[[nodiscard]] double reconstruct_phase(const PeaTrace& trace);
/// E = 2 pi phi / tau using reconstruct_phase().
[[nodiscard]] double reconstruct_energy(const PeaTrace& trace, double tau);

/// Energy that outcome `outcome` of iteration `k` stands for, given the
/// shifts of iterations before k.
[[nodiscard]] double outcome_energy(const PeaTrace& trace, int k, int outcome);

/// First `nbits` binary digits of phi in [0, 1), e.g. "10000000".
[[nodiscard]] std::string phase_bits(double phase, int nbits);

/// Sub-bin phase estimate of a single eigenvector from its kernel (see
/// FinalEstimate::KernelFit). Returns peak / 2^m when the neighbours are empty.
[[nodiscard]] double kernel_fit_phase(const std::vector<double>& distribution);

}  // namespace molpea
