// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>
#include <sstream>

#include "molpea/serialize.hpp"
#include "test_support.hpp"

using namespace molpea;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("Reals are written with round-trip precision", "[serialize]") {
    for (double v : {0.1, -84.20366431234567, 1e-300, 3.0, 2.0 / 3.0}) {
        std::ostringstream s;
        write_real(s, v);
        CHECK(std::stod(s.str()) == v);
    }
}

TEST_CASE("Mapping and Hamiltonian JSON", "[serialize]") {
    const Json m = to_json(qubit_requirements(58, 10, MappingKind::CompactSinglet));
    CHECK(m["mapping"] == "compact_singlet");
    CHECK(m["qubits"] == 42);
    CHECK(m["subspace_dimension"].is_string());

    const PauliHamiltonian h(2, {{0.5, PauliString::parse("ZI"), 1}, {-1.0, PauliString::parse("II"), 0}});
    const Json j = to_json(h);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["term_count"] == 2);
    CHECK(j["terms"][0]["pauli"] == "II");
    CHECK(j["terms"][1]["coefficient"] == 0.5);
    CHECK(Json::parse(j.dump()) == j);
}

TEST_CASE("PEA trace and distribution CSV", "[serialize]") {
    PeaConfig cfg;
    cfg.iterations = 3;
    cfg.tau = -1.0;
    const DenseUnitary u(std::polar(1.0, 2 * 3.141592653589793 * 0.3) * Eigen::MatrixXcd::Identity(2, 2));
    const PeaTrace t = recursive_pea(u, StateVector(1), cfg);
    const Json j = to_json(t);
    CHECK(j["iterations"] == 3);
    CHECK(j["records"].size() == 3);
    CHECK(j["phase_bits"].get<std::string>().size() == 4);

    std::ostringstream csv;
    write_distribution_csv(csv, t, 1);
    const auto rows = lines(csv.str());
    REQUIRE(rows.size() == 17);
    CHECK(rows[0] == "outcome,theta,energy,probability");
    CHECK(rows[1].rfind("0,0,", 0) == 0);
}

TEST_CASE("Scan, ASP and circuit writers", "[serialize]") {
    std::ostringstream a;
    write_error_scan_csv(a, {{1, 0.5}, {2, 0.25}});
    CHECK(a.str() == "M,error\n1,0.5\n2,0.25\n");

    std::ostringstream b;
    write_qubit_scan_csv(b, {{7, 10, 14, 10, 8}});
    CHECK(b.str() ==
          "basis_functions,electrons,direct_qubits,compact_qubits,compact_singlet_qubits\n7,10,14,10,8\n");

    AspTrace trace;
    trace.steps = {{0.0, 0.5, 1.0, 1.0}, {1.0, 0.9, 0.5, 0.9}};
    std::ostringstream c;
    write_asp_csv(c, trace);
    CHECK(c.str() == "s,overlap_sq,gap,instantaneous_overlap_sq\n0,0.5,1,1\n1,0.90000000000000002,0.5,0.90000000000000002\n");

    PauliCircuit circ;
    circ.nqubits = 2;
    circ.gates = {{GateKind::Hadamard, 1, -1, 0.0},
                  {GateKind::Cnot, 1, 0, 0.0},
                  {GateKind::Rz, 1, -1, 0.5},
                  {GateKind::GlobalPhase, 0, -1, -0.25}};
    std::ostringstream d;
    write_circuit_text(d, circ);
    CHECK(d.str() == "# qubits 2 repetitions 1\nH 1\nCNOT 0 1\nRZ 1 0.5\nGPHASE -0.25\n");
}
