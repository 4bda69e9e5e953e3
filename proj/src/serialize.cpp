// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include "molpea/serialize.hpp"

#include <array>
#include <charconv>
#include <string>

#include "molpea/errors.hpp"

namespace molpea {

namespace {

std::string real_text(double value) {
    std::array<char, 40> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

}  // namespace

void write_real(std::ostream& out, double value) {
    out << real_text(value);
}

Json to_json(const MappingSpec& spec) {
    Json j;
    j["mapping"] = std::string(to_string(spec.kind));
    j["qubits"] = spec.nqubits;
    j["subspace_dimension"] = spec.subspace_dimension.str();
    return j;
}

Json to_json(const PauliHamiltonian& h) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["qubits"] = h.nqubits();
    j["term_count"] = h.size();
    Json terms = Json::array();
    for (const auto& t : h.terms()) {
        Json e;
        e["pauli"] = t.string.label(h.nqubits());
        e["coefficient"] = t.coefficient;
        e["weight"] = t.string.weight();
        e["mode_support"] = t.mode_support;
        terms.push_back(std::move(e));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const PeaTrace& trace) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["readout_bits"] = trace.readout_bits;
    j["iterations"] = trace.iterations.size();
    j["tau"] = trace.tau;
    j["phase"] = trace.phase;
    j["phase_bits"] = phase_bits(trace.phase, static_cast<int>(trace.iterations.size()) + 1);
    j["final_remainder"] = trace.final_remainder;
    j["energy"] = trace.energy;
    if (trace.initial_overlap >= 0.0) j["initial_overlap_sq"] = trace.initial_overlap;
    Json records = Json::array();
    for (const auto& it : trace.iterations) {
        Json r;
        r["k"] = it.k;
        r["peak"] = it.peak;
        r["theta_hat"] = it.theta_hat;
        r["shift"] = it.shift;
        r["peak_probability"] = it.distribution.at(static_cast<std::size_t>(it.peak));
        records.push_back(std::move(r));
    }
    j["records"] = std::move(records);
    j["warnings"] = trace.warnings;
    return j;
}

Json to_json(const GateReport& report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["term_count"] = report.term_count;
    j["repetitions"] = report.repetitions;
    j["one_qubit_gates"] = report.one_qubit_gates;
    j["two_qubit_gates"] = report.two_qubit_gates;
    j["rotations"] = report.rotations;
    j["basis_changes"] = report.basis_changes;
    j["global_phases"] = report.global_phases;
    j["controlled_two_qubit_gates"] = report.controlled_two_qubit_gates;
    j["decomposed_two_qubit_gates"] = report.decomposed_two_qubit_gates;
    j["decomposed_one_qubit_gates"] = report.decomposed_one_qubit_gates;
    j["max_support"] = report.max_support;
    j["max_support_with_control"] = report.max_support + 1;
    j["max_mode_support"] = report.max_mode_support;
    j["max_term_gates"] = report.max_term_gates;
    j["term_gate_bound"] = kElementaryGateBound;
    Json terms = Json::array();
    for (const auto& t : report.terms) {
        Json e;
        e["pauli"] = t.label;
        e["coefficient"] = t.coefficient;
        e["weight"] = t.weight;
        e["mode_support"] = t.mode_support;
        e["cnots"] = t.cnots;
        e["rotations"] = t.rotations;
        e["basis_changes"] = t.basis_changes;
        e["global_phases"] = t.global_phases;
        terms.push_back(std::move(e));
    }
    j["terms"] = std::move(terms);
    return j;
}

void write_distribution_csv(std::ostream& out, const PeaTrace& trace, int k) {
    if (k < 0 || k >= static_cast<int>(trace.iterations.size()))
        throw IndexError("iteration index out of range");
    const auto& it = trace.iterations[static_cast<std::size_t>(k)];
    const int n = 1 << trace.readout_bits;
    out << "outcome,theta,energy,probability\n";
    for (int o = 0; o < n; ++o) {
        out << o << ',' << real_text(static_cast<double>(o) / n) << ','
            << real_text(outcome_energy(trace, k, o)) << ','
            << real_text(it.distribution.at(static_cast<std::size_t>(o))) << '\n';
    }
}

void write_asp_csv(std::ostream& out, const AspTrace& trace) {
    out << "s,overlap_sq,gap,instantaneous_overlap_sq\n";
    for (const auto& r : trace.steps)
        out << real_text(r.s) << ',' << real_text(r.overlap_sq) << ',' << real_text(r.gap) << ','
            << real_text(r.instantaneous_overlap_sq) << '\n';
}

void write_error_scan_csv(std::ostream& out, const std::vector<ErrorScanRow>& rows) {
    out << "M,error\n";
    for (const auto& r : rows) out << r.repetitions << ',' << real_text(r.error) << '\n';
}

void write_qubit_scan_csv(std::ostream& out, const std::vector<QubitScanRow>& rows) {
    out << "basis_functions,electrons,direct_qubits,compact_qubits,compact_singlet_qubits\n";
    for (const auto& r : rows)
        out << r.basis_functions << ',' << r.electrons << ',' << r.direct_qubits << ','
            << r.compact_qubits << ',' << r.compact_singlet_qubits << '\n';
}

void write_circuit_text(std::ostream& out, const PauliCircuit& circuit) {
    out << "# qubits " << circuit.nqubits << " repetitions " << circuit.repetitions << '\n';
    for (const auto& g : circuit.gates) {
        out << to_string(g.kind);
        switch (g.kind) {
            case GateKind::Cnot: out << ' ' << g.control << ' ' << g.qubit; break;
            case GateKind::Rz: out << ' ' << g.qubit << ' ' << real_text(g.angle); break;
            case GateKind::GlobalPhase: out << ' ' << real_text(g.angle); break;
            default: out << ' ' << g.qubit; break;
        }
        out << '\n';
    }
}

}  // namespace molpea
