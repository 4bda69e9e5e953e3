// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>
#include <cmath>
#include <numbers>

#include "molpea/errors.hpp"
#include "molpea/simulator.hpp"
#include "test_support.hpp"

using namespace molpea;
using testing::cd;

namespace {

Eigen::MatrixXcd controlled_dense(int control, int target, const Eigen::Matrix2cd& g, int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        if (!((col >> control) & 1)) {
            m(col, col) = 1.0;
            continue;
        }
        const int bit = (col >> target) & 1;
        for (int out = 0; out < 2; ++out) {
            const Eigen::Index row = (col & ~(Eigen::Index{1} << target)) | (Eigen::Index(out) << target);
            m(row, col) += g(out, bit);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("State construction and capacity", "[simulator]") {
    StateVector s(3);
    CHECK(s.size() == 8);
    CHECK(s.amplitudes()(0) == cd(1, 0));
    CHECK(StateVector::basis_state(3, 5).amplitudes()(5) == cd(1, 0));
    CHECK_THROWS_AS(StateVector(17), CapacityError);
    CHECK_THROWS_AS(StateVector::from_amplitudes(Eigen::VectorXcd::Ones(3)), ShapeError);
    const StateVector e = StateVector::embed(Eigen::VectorXcd::Ones(3));
    CHECK(e.nqubits() == 2);
    CHECK(std::abs(e.amplitudes()(3)) == 0.0);
    CHECK(std::abs(e.norm_squared() - 1.0) < 1e-15);
}

TEST_CASE("One- and two-qubit gates match Kronecker constructions", "[simulator]") {
    std::mt19937_64 rng(1);
    const int n = 4;
    const Eigen::VectorXcd psi = testing::random_state(16, rng);
    const Eigen::Matrix2cd g = testing::random_unitary(2, rng);
    for (int q = 0; q < n; ++q) {
        StateVector s = StateVector::from_amplitudes(psi);
        apply_one_qubit_gate(s, q, g);
        CHECK((s.amplitudes() - testing::lift(g, q, n) * psi).norm() < 1e-12);
    }
    for (int c = 0; c < n; ++c)
        for (int t = 0; t < n; ++t) {
            if (c == t) continue;
            StateVector s = StateVector::from_amplitudes(psi);
            apply_controlled_gate(s, c, t, g);
            CHECK((s.amplitudes() - controlled_dense(c, t, g, n) * psi).norm() < 1e-12);
            StateVector x = StateVector::from_amplitudes(psi);
            apply_cnot(x, c, t);
            CHECK((x.amplitudes() - controlled_dense(c, t, testing::pauli2('X'), n) * psi).norm() < 1e-12);
        }
    StateVector s = StateVector::basis_state(3, 0b001);
    apply_swap(s, 0, 2);
    CHECK(std::abs(s.amplitudes()(0b100) - 1.0) < 1e-15);
    CHECK_THROWS_AS(apply_one_qubit_gate(s, 3, g), IndexError);
}

TEST_CASE("Named gates have their textbook matrices", "[simulator]") {
    const double pi = std::numbers::pi;
    CHECK((gates::rz(0.3) - testing::expm_i(testing::pauli2('Z'), -0.15)).norm() < 1e-14);
    CHECK((gates::rx(0.7) - testing::expm_i(testing::pauli2('X'), -0.35)).norm() < 1e-14);
    CHECK(std::abs(gates::phase(pi / 3)(1, 1) - std::polar(1.0, pi / 3)) < 1e-15);
    CHECK((gates::hadamard() * gates::hadamard() - Eigen::Matrix2cd::Identity()).norm() < 1e-15);
    CHECK((gates::pauli_y() - testing::pauli2('Y')).norm() == 0.0);
}

TEST_CASE("Block unitaries act on their register only", "[simulator]") {
    std::mt19937_64 rng(2);
    const Eigen::VectorXcd psi = testing::random_state(32, rng);
    const Eigen::MatrixXcd u = testing::random_unitary(4, rng);
    // Register qubits 1..2 of 5: U acts as I_4 (x) U (x) I_2 in Kronecker order.
    const Eigen::MatrixXcd full = testing::kron(testing::kron(Eigen::MatrixXcd::Identity(4, 4), u),
                                                Eigen::MatrixXcd::Identity(2, 2));
    StateVector s = StateVector::from_amplitudes(psi);
    apply_unitary(s, QubitRange{1, 2}, DenseUnitary(u));
    CHECK((s.amplitudes() - full * psi).norm() < 1e-12);

    // Controlled from qubit 4 on register 0..1.
    Eigen::MatrixXcd cu = Eigen::MatrixXcd::Identity(32, 32);
    cu.block(16, 16, 16, 16) = testing::kron(Eigen::MatrixXcd::Identity(4, 4), u);
    StateVector c = StateVector::from_amplitudes(psi);
    apply_controlled_unitary(c, 4, QubitRange{0, 2}, DenseUnitary(u));
    CHECK((c.amplitudes() - cu * psi).norm() < 1e-12);

    CHECK_THROWS_AS(apply_unitary(s, QubitRange{0, 3}, DenseUnitary(u)), ShapeError);
}

TEST_CASE("Gate-level QFT equals the discrete Fourier transform", "[simulator]") {
    std::mt19937_64 rng(3);
    for (int m = 1; m <= 5; ++m) {
        const Eigen::Index n = Eigen::Index{1} << m;
        const Eigen::MatrixXcd f = testing::dft(static_cast<int>(n));
        const Eigen::VectorXcd psi = testing::random_state(n, rng);
        StateVector s = StateVector::from_amplitudes(psi);
        qft(s, QubitRange{0, m});
        CHECK((s.amplitudes() - f * psi).norm() < 1e-12);
        inverse_qft(s, QubitRange{0, m});
        CHECK((s.amplitudes() - psi).norm() < 1e-12);
    }
    // On the high block of a larger register.
    const Eigen::VectorXcd psi = testing::random_state(32, rng);
    StateVector s = StateVector::from_amplitudes(psi);
    inverse_qft(s, QubitRange{2, 3});
    const Eigen::MatrixXcd full = testing::kron(testing::dft(8).adjoint(), Eigen::MatrixXcd::Identity(4, 4));
    CHECK((s.amplitudes() - full * psi).norm() < 1e-12);
}

TEST_CASE("Hermitian exponentials match the Pade exponential", "[simulator]") {
    std::mt19937_64 rng(4);
    Eigen::MatrixXcd a = testing::random_unitary(6, rng);
    const Eigen::MatrixXcd h = (a + a.adjoint()) / 2.0;
    const DenseUnitary u = expm_i_hermitian(h, 0.83);
    CHECK((u.matrix() - testing::expm_i(h, 0.83)).norm() < 1e-11);
    CHECK(u.unitarity_error() < 1e-12);

    const Eigen::MatrixXd hr = h.real();
    CHECK((expm_i_hermitian(hr, -1.7).matrix() - testing::expm_i(hr.cast<cd>(), -1.7)).norm() < 1e-11);

    Eigen::MatrixXcd bad = h;
    bad(0, 1) += 1e-6;
    CHECK_THROWS_AS(expm_i_hermitian(bad, 1.0), SymmetryError);
}

TEST_CASE("Embedding and squaring of unitaries", "[simulator]") {
    std::mt19937_64 rng(5);
    const Eigen::MatrixXcd u = testing::random_unitary(3, rng);
    const DenseUnitary e = DenseUnitary(u).embed(2);
    CHECK(e.dimension() == 4);
    CHECK((e.matrix().topLeftCorner(3, 3) - u).norm() == 0.0);
    CHECK(e.matrix()(3, 3) == cd(1, 0));
    CHECK((DenseUnitary(u).squared().matrix() - u * u).norm() < 1e-14);
}

TEST_CASE("Measurement marginals and collapse", "[simulator]") {
    std::mt19937_64 rng(6);
    const Eigen::VectorXcd psi = testing::random_state(16, rng);
    StateVector s = StateVector::from_amplitudes(psi);
    const auto p = measure_distribution(s, QubitRange{2, 2});
    for (int o = 0; o < 4; ++o) {
        double ref = 0.0;
        for (int low = 0; low < 4; ++low) ref += std::norm(psi(o * 4 + low));
        CHECK(std::abs(p[o] - ref) < 1e-14);
    }
    std::mt19937_64 draw(42);
    const auto outcome = measure_and_collapse(s, QubitRange{2, 2}, draw);
    CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
    const auto after = measure_distribution(s, QubitRange{2, 2});
    CHECK(std::abs(after[outcome] - 1.0) < 1e-12);

    // Same seed, same outcome.
    StateVector again = StateVector::from_amplitudes(psi);
    std::mt19937_64 draw2(42);
    CHECK(measure_and_collapse(again, QubitRange{2, 2}, draw2) == outcome);
}
