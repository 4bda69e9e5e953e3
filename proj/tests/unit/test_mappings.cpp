// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include <Eigen/Eigenvalues>
#include <bit>
#include <catch_amalgamated.hpp>
#include <cmath>

#include "molpea/errors.hpp"
#include "molpea/mappings.hpp"
#include "molpea/oracle.hpp"
#include "test_support.hpp"

using namespace molpea;
using Catch::Matchers::WithinAbs;

namespace {

/// Weyl count of S = 0 states in double precision, via lgamma.
double weyl_singlets(int norb, int nelec) {
    auto lbin = [](int n, int k) {
        return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    };
    const int h = nelec / 2;
    return std::exp(lbin(norb + 1, h) + lbin(norb + 1, h + 1)) / (norb + 1);
}

}  // namespace

TEST_CASE("Table of qubit counts for water", "[mappings]") {
    struct Row {
        int norb, direct, compact, singlet;
    };
    for (const Row& r : {Row{7, 14, 10, 8}, Row{19, 38, 29, 25}, Row{58, 116, 47, 42}}) {
        CHECK(qubit_requirements(r.norb, 10, MappingKind::Direct).nqubits == r.direct);
        CHECK(qubit_requirements(r.norb, 10, MappingKind::Compact).nqubits == r.compact);
        CHECK(qubit_requirements(r.norb, 10, MappingKind::CompactSinglet).nqubits == r.singlet);
    }
}

TEST_CASE("Subspace dimensions follow the counting formulas", "[mappings]") {
    CHECK(qubit_requirements(7, 10, MappingKind::Compact).subspace_dimension == 1001);
    CHECK(qubit_requirements(7, 10, MappingKind::CompactSinglet).subspace_dimension == 196);
    CHECK(qubit_requirements(11, 4, MappingKind::CompactSinglet).subspace_dimension == 1210);
    CHECK(qubit_requirements(2, 2, MappingKind::CompactSinglet).subspace_dimension == 3);
    CHECK(qubit_requirements(3, 2, MappingKind::Direct).subspace_dimension == 64);
    for (int norb = 2; norb <= 30; ++norb)
        for (int nelec = 2; nelec <= std::min(2 * norb, 20); nelec += 2) {
            const BigInt w = qubit_requirements(norb, nelec, MappingKind::CompactSinglet).subspace_dimension;
            const double ref = weyl_singlets(norb, nelec);
            CHECK(std::abs(w.convert_to<double>() - ref) <= 1e-9 * ref);
        }
}

TEST_CASE("Qubit counts never decrease with basis size", "[mappings]") {
    int last[3] = {0, 0, 0};
    for (int n = 5; n <= 80; ++n) {
        const MappingKind kinds[] = {MappingKind::Direct, MappingKind::Compact,
                                     MappingKind::CompactSinglet};
        for (int k = 0; k < 3; ++k) {
            const int q = qubit_requirements(n, 10, kinds[k]).nqubits;
            CHECK(q >= last[k]);
            last[k] = q;
        }
    }
}

TEST_CASE("Invalid electron counts are rejected", "[mappings]") {
    CHECK_THROWS_AS(qubit_requirements(3, 7, MappingKind::Compact), DomainError);
    CHECK_THROWS_AS(qubit_requirements(3, 3, MappingKind::CompactSinglet), DomainError);
    CHECK_THROWS_AS(parse_mapping_kind("jordan"), DomainError);
    CHECK(parse_mapping_kind("compact_singlet") == MappingKind::CompactSinglet);
    CHECK(ceil_log2(BigInt(1)) == 0);
    CHECK(ceil_log2(BigInt(196)) == 8);
    CHECK(ceil_log2(BigInt(256)) == 8);
    CHECK(ceil_log2(BigInt(257)) == 9);
}

TEST_CASE("Determinants are enumerated HF first in ascending order", "[mappings]") {
    const ConfigurationBasis b = enumerate_determinants(4, 2, 1);
    REQUIRE(b.size() == 24);
    CHECK(b[0] == Determinant{0b0011, 0b0001});
    for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i - 1] < b[i]);
    for (const auto& d : b.determinants()) {
        CHECK(std::popcount(d.alpha) == 2);
        CHECK(std::popcount(d.beta) == 1);
    }
    CHECK(b.index_of(Determinant{0b1100, 0b1000}).value() == 23);
    CHECK_FALSE(b.index_of(Determinant{0b0111, 0b0001}).has_value());
    CHECK_THROWS_AS(enumerate_determinants(3, 4, 0), DomainError);
}

TEST_CASE("Determinant matrix equals the Fock-space sector up to ordering signs",
          "[mappings]") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const IntegralTable t = testing::random_table(3, 2, rng);
        const ConfigurationBasis b = enumerate_determinants(3, 1, 1);
        const Eigen::MatrixXd h = build_fci_matrix(t, b);
        const Eigen::MatrixXd fock = fock_space_hamiltonian(t);
        const auto idx = fock_sector_indices(3, 1, 1);
        REQUIRE(idx.size() == b.size());
        // The determinant basis orders creators alpha block then beta block;
        // the occupation basis interleaves them. Each (alpha p, beta q < p)
        // pair is one transposition.
        auto sign = [](const Determinant& d) {
            int swaps = 0;
            for (int p = 0; p < 3; ++p)
                if ((d.alpha >> p) & 1u) swaps += std::popcount(d.beta & ((1u << p) - 1));
            return swaps % 2 ? -1.0 : 1.0;
        };
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                const double f = fock(static_cast<Eigen::Index>(idx[i]), static_cast<Eigen::Index>(idx[j]));
                CHECK_THAT(h(i, j), WithinAbs(sign(b[i]) * sign(b[j]) * f, 1e-12));
            }
    }
}

TEST_CASE("S^2 has the expected spectrum and commutes with H", "[mappings]") {
    const ConfigurationBasis b = enumerate_determinants(3, 2, 2);
    const Eigen::MatrixXd s2 = build_s2_matrix(b);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s2);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double v = es.eigenvalues()(i);
        // S(S+1) for S = 0, 1, 2
        const bool allowed = std::abs(v) < 1e-10 || std::abs(v - 2) < 1e-10 || std::abs(v - 6) < 1e-10;
        CHECK(allowed);
    }
    std::mt19937_64 rng(5);
    const IntegralTable t = testing::random_table(3, 4, rng);
    const Eigen::MatrixXd h = build_fci_matrix(t, b);
    CHECK((h * s2 - s2 * h).norm() < 1e-10);
}

TEST_CASE("Singlet projection keeps the singlet spectrum", "[mappings]") {
    std::mt19937_64 rng(9);
    const IntegralTable t = testing::random_table(4, 4, rng);
    const ConfigurationBasis b = enumerate_determinants(4, 2, 2);
    const Eigen::MatrixXd h = build_fci_matrix(t, b);
    const Eigen::MatrixXd s2 = build_s2_matrix(b);
    const SingletProjection p = project_singlet(h, s2);
    REQUIRE(p.isometry.cols() == 20);
    CHECK((p.isometry.transpose() * p.isometry - Eigen::MatrixXd::Identity(20, 20)).norm() < 1e-10);
    CHECK((s2 * p.isometry).norm() < 1e-10);
    CHECK(p.isometry(0, 0) == Catch::Approx(1.0).margin(1e-12));

    // Singlet eigenvalues of h are those whose eigenvectors have <S^2> = 0.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full(h);
    std::vector<double> singlet;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        const Eigen::VectorXd v = full.eigenvectors().col(i);
        if (v.dot(s2 * v) < 1e-6) singlet.push_back(full.eigenvalues()(i));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> proj(p.hamiltonian);
    REQUIRE(singlet.size() == 20);
    for (std::size_t i = 0; i < singlet.size(); ++i)
        CHECK_THAT(proj.eigenvalues()(static_cast<Eigen::Index>(i)), WithinAbs(singlet[i], 1e-9));
}

TEST_CASE("Non-commuting input is refused by the singlet projection", "[mappings]") {
    const ConfigurationBasis b = enumerate_determinants(2, 1, 1);
    const Eigen::MatrixXd s2 = build_s2_matrix(b);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(4, 4);
    h(1, 1) = 1.0;  // distinguishes the two open-shell determinants
    CHECK_THROWS_AS(project_singlet(h, s2), SymmetryError);
}

TEST_CASE("Compact Hamiltonians of the fixtures", "[mappings]") {
    const IntegralTable h2 = read_fcidump(testing::fixture("h2_sto3g_r0.74.fcidump"));
    const CompactHamiltonian c = build_compact_hamiltonian(h2, MappingKind::Compact);
    CHECK(c.hamiltonian.rows() == 4);
    CHECK(c.nqubits == 2);
    CHECK_THAT(c.hamiltonian(0, 0), WithinAbs(hf_reference_energy(h2), 1e-12));
    const CompactHamiltonian s = build_compact_hamiltonian(h2, MappingKind::CompactSinglet);
    CHECK(s.hamiltonian.rows() == 3);
    CHECK(s.nqubits == 2);
    CHECK_THAT(s.hamiltonian(0, 0), WithinAbs(hf_reference_energy(h2), 1e-12));
    CHECK_THROWS_AS(build_compact_hamiltonian(h2, MappingKind::Direct), DomainError);
    CHECK_THROWS_AS(build_compact_hamiltonian(h2, MappingKind::Compact, 2), CapacityError);
}
