// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file asp.hpp
 * @brief Adiabatic state preparation along H(s) = (1 - s) H_start + s H_end.
 *
 * H_start is the mean-field operator diag(E_HF, 0, ..., 0), whose ground
 * state is the HF basis vector. Each of the `steps` slices applies
 * e^{-i H(s_j) dt} exactly, dt = T / steps.
 */

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "molpea/simulator.hpp"

namespace molpea {

struct AspPath {
    Eigen::MatrixXd h_start;
    Eigen::MatrixXd h_end;
    int steps = 1000;
    double total_time = 0.0;  ///< T in inverse hartree
};

struct AspStep {
    double s = 0.0;
    /// |<psi(s)|ground of h_end>|^2
    double overlap_sq = 0.0;
    /// E1(s) - E0(s)
    double gap = 0.0;
    /// |<psi(s)|ground of H(s)>|^2
    double instantaneous_overlap_sq = 0.0;
};

struct AspTrace {
    std::vector<AspStep> steps;  ///< steps + 1 rows, s = j / steps for j = 0..steps
    Eigen::VectorXcd final_state;  ///< in the dimension of the path matrices
    Eigen::VectorXd target_ground; ///< ground eigenvector of h_end
    double target_energy = 0.0;
};

/// Zero matrix of the given dimension with entry (0, 0) = hf_energy.
[[nodiscard]] Eigen::MatrixXd build_hf_hamiltonian(Eigen::Index dimension, double hf_energy);

/// T = steps * 0.1 / |E_HF|. Throws DomainError when hf_energy is zero.
[[nodiscard]] double default_total_time(int steps, double hf_energy);

/**
 * Evolves `initial` (whose leading amplitudes span the path's dimension; any
 * tail must be zero) through the discretized path.
 *
 * Throws ShapeError for mismatched or non-square matrices or a dimension
 * below 2, DomainError for steps < 1 or T <= 0, SymmetryError for
 * non-symmetric input, and DegeneracyError when an instantaneous gap falls
 * below 1e-12.
 */
[[nodiscard]] AspTrace asp_evolve(const AspPath& path, const StateVector& initial);

struct GapPoint {
    double s = 0.0;
    double gap = 0.0;
};

/// Gap of H(j / steps) for j = 0..steps.
[[nodiscard]] std::vector<GapPoint> gap_profile(const AspPath& path);

}  // namespace molpea
