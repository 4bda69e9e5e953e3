// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include "molpea/simulator.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "molpea/errors.hpp"

namespace molpea {

namespace {

constexpr double kHermitianTolerance = 1e-10;

void check_qubit(const StateVector& s, int q) {
    if (q < 0 || q >= s.nqubits())
        throw IndexError("qubit " + std::to_string(q) + " outside a " +
                         std::to_string(s.nqubits()) + "-qubit register");
}

void check_range(const StateVector& s, QubitRange r) {
    if (r.count < 0 || r.first < 0 || r.end() > s.nqubits())
        throw IndexError("qubit range [" + std::to_string(r.first) + ", " +
                         std::to_string(r.end()) + ") outside a " +
                         std::to_string(s.nqubits()) + "-qubit register");
}

void check_capacity(int nqubits, int max_qubits) {
    if (nqubits < 0) throw DomainError("negative qubit count");
    if (nqubits > max_qubits)
        throw CapacityError(std::to_string(nqubits) + " qubits exceed the simulator cap of " +
                            std::to_string(max_qubits));
}

int exact_log2(Eigen::Index n) {
    if (n <= 0 || (n & (n - 1)) != 0) return -1;
    int q = 0;
    while ((Eigen::Index{1} << q) < n) ++q;
    return q;
}

/// Shared kernel for plain and controlled block unitaries.
void apply_block(StateVector& state, QubitRange target, const DenseUnitary& u,
                 std::uint64_t required_mask) {
    check_range(state, target);
    if (u.dimension() != (Eigen::Index{1} << target.count))
        throw ShapeError("unitary of dimension " + std::to_string(u.dimension()) +
                         " cannot act on " + std::to_string(target.count) + " qubits");
    auto& amps = state.amplitudes();
    const auto block = static_cast<std::uint64_t>(u.dimension());
    const std::uint64_t tmask = (block - 1) << target.first;
    const auto total = static_cast<std::uint64_t>(amps.size());
    Eigen::VectorXcd in(static_cast<Eigen::Index>(block));
    Eigen::VectorXcd out(static_cast<Eigen::Index>(block));
    for (std::uint64_t base = 0; base < total; ++base) {
        if ((base & tmask) != 0 || (base & required_mask) != required_mask) continue;
        if (target.first == 0) {
            auto seg = amps.segment(static_cast<Eigen::Index>(base), static_cast<Eigen::Index>(block));
            out.noalias() = u.matrix() * seg;
            seg = out;
            continue;
        }
        for (std::uint64_t k = 0; k < block; ++k)
            in(static_cast<Eigen::Index>(k)) = amps(static_cast<Eigen::Index>(base | (k << target.first)));
        out.noalias() = u.matrix() * in;
        for (std::uint64_t k = 0; k < block; ++k)
            amps(static_cast<Eigen::Index>(base | (k << target.first))) = out(static_cast<Eigen::Index>(k));
    }
}

}  // namespace

StateVector::StateVector(int nqubits, int max_qubits) : nqubits_(nqubits) {
    check_capacity(nqubits, max_qubits);
    amplitudes_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << nqubits);
    amplitudes_(0) = 1.0;
}

StateVector::StateVector(int nqubits, Eigen::VectorXcd amplitudes)
    : nqubits_(nqubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::basis_state(int nqubits, std::uint64_t index, int max_qubits) {
    StateVector s(nqubits, max_qubits);
    if (index >= s.size()) throw IndexError("basis index outside the register");
    s.amplitudes_(0) = 0.0;
    s.amplitudes_(static_cast<Eigen::Index>(index)) = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(const Eigen::VectorXcd& amplitudes, int max_qubits) {
    const int nq = exact_log2(amplitudes.size());
    if (nq < 0) throw ShapeError("amplitude count must be a power of two");
    check_capacity(nq, max_qubits);
    const double norm = amplitudes.norm();
    if (norm == 0.0) throw DomainError("cannot normalize the zero vector");
    return StateVector(nq, amplitudes / norm);
}

StateVector StateVector::embed(const Eigen::VectorXcd& amplitudes, int max_qubits) {
    int nq = 0;
    while ((Eigen::Index{1} << nq) < amplitudes.size()) ++nq;
    check_capacity(nq, max_qubits);
    Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(Eigen::Index{1} << nq);
    padded.head(amplitudes.size()) = amplitudes;
    return from_amplitudes(padded, max_qubits);
}

StateVector tensor_product(const StateVector& high, const StateVector& low, int max_qubits) {
    check_capacity(high.nqubits() + low.nqubits(), max_qubits);
    const Eigen::Index nl = low.amplitudes().size();
    Eigen::VectorXcd amps(high.amplitudes().size() * nl);
    for (Eigen::Index h = 0; h < high.amplitudes().size(); ++h)
        amps.segment(h * nl, nl) = high.amplitudes()(h) * low.amplitudes();
    return StateVector::from_amplitudes(amps, max_qubits);
}

double squared_overlap(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    const Eigen::Index n = std::min(a.size(), b.size());
    return std::norm(a.head(n).dot(b.head(n)));
}

DenseUnitary::DenseUnitary(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) throw ShapeError("unitary must be square");
}

DenseUnitary DenseUnitary::identity(Eigen::Index dimension) {
    return DenseUnitary(Eigen::MatrixXcd::Identity(dimension, dimension));
}

double DenseUnitary::unitarity_error() const {
    Eigen::MatrixXcd g = matrix_.adjoint() * matrix_;
    g.diagonal().array() -= 1.0;
    return g.norm();
}

DenseUnitary DenseUnitary::embed(int nqubits) const {
    const Eigen::Index dim = Eigen::Index{1} << nqubits;
    if (dim < dimension())
        throw ShapeError("cannot embed a dimension-" + std::to_string(dimension()) +
                         " unitary into " + std::to_string(nqubits) + " qubits");
    if (dim == dimension()) return *this;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
    m.topLeftCorner(dimension(), dimension()) = matrix_;
    return DenseUnitary(std::move(m));
}

DenseUnitary DenseUnitary::squared() const {
    Eigen::MatrixXcd m(dimension(), dimension());
    m.noalias() = matrix_ * matrix_;
    return DenseUnitary(std::move(m));
}

DenseUnitary expm_i_hermitian(const Eigen::MatrixXcd& h, double tau) {
    if (h.rows() != h.cols()) throw ShapeError("expm_i_hermitian: matrix must be square");
    if (h.size() > 0 && (h - h.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance)
        throw SymmetryError("expm_i_hermitian: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const Eigen::VectorXcd phases =
        (es.eigenvalues().array() * tau).unaryExpr([](double x) { return std::polar(1.0, x); });
    Eigen::MatrixXcd u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return DenseUnitary(std::move(u));
}

DenseUnitary expm_i_hermitian(const Eigen::MatrixXd& h, double tau) {
    if (h.rows() != h.cols()) throw ShapeError("expm_i_hermitian: matrix must be square");
    if (h.size() > 0 && (h - h.transpose()).cwiseAbs().maxCoeff() > kHermitianTolerance)
        throw SymmetryError("expm_i_hermitian: matrix is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const Eigen::MatrixXd& q = es.eigenvectors();
    const Eigen::ArrayXd angles = es.eigenvalues().array() * tau;
    Eigen::MatrixXd re = q * angles.cos().matrix().asDiagonal() * q.transpose();
    Eigen::MatrixXd im = q * angles.sin().matrix().asDiagonal() * q.transpose();
    Eigen::MatrixXcd u(h.rows(), h.cols());
    u.real() = re;
    u.imag() = im;
    return DenseUnitary(std::move(u));
}

namespace gates {

Eigen::Matrix2cd identity() { return Eigen::Matrix2cd::Identity(); }

Eigen::Matrix2cd hadamard() {
    Eigen::Matrix2cd g;
    const double r = std::numbers::sqrt2 / 2.0;
    g << r, r, r, -r;
    return g;
}

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd g;
    g << 0, 1, 1, 0;
    return g;
}

Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd g;
    g << 0, Complex(0, -1), Complex(0, 1), 0;
    return g;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd g;
    g << 1, 0, 0, -1;
    return g;
}

Eigen::Matrix2cd phase(double theta) {
    Eigen::Matrix2cd g;
    g << 1, 0, 0, std::polar(1.0, theta);
    return g;
}

Eigen::Matrix2cd rx(double theta) {
    Eigen::Matrix2cd g;
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    g << c, Complex(0, -s), Complex(0, -s), c;
    return g;
}

Eigen::Matrix2cd rz(double theta) {
    Eigen::Matrix2cd g;
    g << std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2);
    return g;
}

}  // namespace gates

void apply_one_qubit_gate(StateVector& state, int q, const Eigen::Matrix2cd& g) {
    check_qubit(state, q);
    auto& a = state.amplitudes();
    const auto bit = Eigen::Index{1} << q;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (i & bit) continue;
        const Complex a0 = a(i), a1 = a(i | bit);
        a(i) = g(0, 0) * a0 + g(0, 1) * a1;
        a(i | bit) = g(1, 0) * a0 + g(1, 1) * a1;
    }
}

void apply_controlled_gate(StateVector& state, int control, int target, const Eigen::Matrix2cd& g) {
    check_qubit(state, control);
    check_qubit(state, target);
    if (control == target) throw IndexError("control and target coincide");
    auto& a = state.amplitudes();
    const auto cbit = Eigen::Index{1} << control;
    const auto tbit = Eigen::Index{1} << target;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if ((i & tbit) || !(i & cbit)) continue;
        const Complex a0 = a(i), a1 = a(i | tbit);
        a(i) = g(0, 0) * a0 + g(0, 1) * a1;
        a(i | tbit) = g(1, 0) * a0 + g(1, 1) * a1;
    }
}

void apply_cnot(StateVector& state, int control, int target) {
    check_qubit(state, control);
    check_qubit(state, target);
    if (control == target) throw IndexError("control and target coincide");
    auto& a = state.amplitudes();
    const auto cbit = Eigen::Index{1} << control;
    const auto tbit = Eigen::Index{1} << target;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(a(i), a(i | tbit));
}

void apply_swap(StateVector& state, int qa, int qb) {
    check_qubit(state, qa);
    check_qubit(state, qb);
    if (qa == qb) return;
    auto& a = state.amplitudes();
    const auto ba = Eigen::Index{1} << qa;
    const auto bb = Eigen::Index{1} << qb;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if ((i & ba) && !(i & bb)) std::swap(a(i), a((i ^ ba) | bb));
}

void apply_unitary(StateVector& state, QubitRange target, const DenseUnitary& u) {
    apply_block(state, target, u, 0);
}

void apply_controlled_unitary(StateVector& state, int control, QubitRange target,
                              const DenseUnitary& u) {
    check_qubit(state, control);
    if (target.contains(control)) throw IndexError("control qubit lies inside the target block");
    apply_block(state, target, u, std::uint64_t{1} << control);
}

void qft(StateVector& state, QubitRange block) {
    check_range(state, block);
    const int m = block.count;
    for (int i = m - 1; i >= 0; --i) {
        apply_one_qubit_gate(state, block.first + i, gates::hadamard());
        for (int k = i - 1; k >= 0; --k)
            apply_controlled_gate(state, block.first + k, block.first + i,
                                  gates::phase(2.0 * std::numbers::pi / double(1 << (i - k + 1))));
    }
    for (int i = 0; i < m / 2; ++i) apply_swap(state, block.first + i, block.first + m - 1 - i);
}

void inverse_qft(StateVector& state, QubitRange block) {
    check_range(state, block);
    const int m = block.count;
    for (int i = 0; i < m / 2; ++i) apply_swap(state, block.first + i, block.first + m - 1 - i);
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < i; ++k)
            apply_controlled_gate(state, block.first + k, block.first + i,
                                  gates::phase(-2.0 * std::numbers::pi / double(1 << (i - k + 1))));
        apply_one_qubit_gate(state, block.first + i, gates::hadamard());
    }
}

std::vector<double> measure_distribution(const StateVector& state, QubitRange block) {
    check_range(state, block);
    std::vector<double> p(std::size_t{1} << block.count, 0.0);
    const auto& a = state.amplitudes();
    const std::uint64_t mask = (std::uint64_t{1} << block.count) - 1;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        p[(static_cast<std::uint64_t>(i) >> block.first) & mask] += std::norm(a(i));
    return p;
}

std::uint64_t measure_and_collapse(StateVector& state, QubitRange block, std::mt19937_64& rng) {
    const auto p = measure_distribution(state, block);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double r = uni(rng);
    double acc = 0.0;
    std::uint64_t outcome = p.size() - 1;
    for (std::size_t k = 0; k < p.size(); ++k) {
        acc += p[k];
        if (r < acc) {
            outcome = k;
            break;
        }
    }
    while (p[outcome] == 0.0 && outcome > 0) --outcome;
    auto& a = state.amplitudes();
    const std::uint64_t mask = (std::uint64_t{1} << block.count) - 1;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (((static_cast<std::uint64_t>(i) >> block.first) & mask) != outcome) a(i) = 0.0;
    a /= std::sqrt(p[outcome]);
    return outcome;
}

}  // namespace molpea
