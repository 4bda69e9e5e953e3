// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file serialize.hpp
 * @brief JSON and CSV writers for the command-line artifacts.
 *
 * Key order is fixed and reals are printed with 17 significant digits, so
 * identical inputs give byte-identical files. Column layouts are listed in
 * the README and versioned by kSchemaVersion.
 */

#pragma once

#include <json.hpp>
#include <ostream>
#include <vector>

#include "molpea/asp.hpp"
#include "molpea/mappings.hpp"
#include "molpea/pauli.hpp"
#include "molpea/pea.hpp"
#include "molpea/trotter.hpp"

namespace molpea {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

[[nodiscard]] Json to_json(const MappingSpec& spec);
[[nodiscard]] Json to_json(const PauliHamiltonian& h);
/// Iteration records without the distributions (those go to CSV).
[[nodiscard]] Json to_json(const PeaTrace& trace);
[[nodiscard]] Json to_json(const GateReport& report);

/// outcome,theta,energy,probability for iteration k; `energy` is the
/// hartree value the outcome stands for given the earlier shifts.
void write_distribution_csv(std::ostream& out, const PeaTrace& trace, int k);

/// s,overlap_sq,gap,instantaneous_overlap_sq
void write_asp_csv(std::ostream& out, const AspTrace& trace);

struct ErrorScanRow {
    int repetitions = 0;
    double error = 0.0;
};
/// M,error
void write_error_scan_csv(std::ostream& out, const std::vector<ErrorScanRow>& rows);

struct QubitScanRow {
    int basis_functions = 0;
    int electrons = 0;
    int direct_qubits = 0;
    int compact_qubits = 0;
    int compact_singlet_qubits = 0;
};
/// basis_functions,electrons,direct_qubits,compact_qubits,compact_singlet_qubits
void write_qubit_scan_csv(std::ostream& out, const std::vector<QubitScanRow>& rows);

/// One gate per line after a `# qubits N repetitions M` header:
/// `CNOT control target`, `RZ qubit angle`, `GPHASE angle`, otherwise `NAME qubit`.
void write_circuit_text(std::ostream& out, const PauliCircuit& circuit);

/// Writes `value` with 17 significant digits.
void write_real(std::ostream& out, double value);

}  // namespace molpea
