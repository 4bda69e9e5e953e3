// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include "molpea/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "molpea/errors.hpp"

namespace molpea {

namespace {

template <typename Matrix>
void require_hermitian(const Matrix& h) {
    if (h.rows() != h.cols()) throw ShapeError("diagonalize: matrix must be square");
    if (h.rows() == 0) throw ShapeError("diagonalize: empty matrix");
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw SymmetryError("diagonalize: matrix is not Hermitian within 1e-10");
}

template <typename Vector>
void fix_phase(Vector& v) {
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    if constexpr (std::is_same_v<typename Vector::Scalar, double>) {
        if (v(pivot) < 0) v = -v;
    } else {
        const auto ph = v(pivot) / std::abs(v(pivot));
        v /= ph;
        v(pivot) = std::abs(v(pivot));
    }
}

template <typename Vector, typename Matrix>
SpectralResult<Vector> diagonalize_impl(const Matrix& h) {
    require_hermitian(h);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success) throw NumericsError("eigensolver failed to converge");
    SpectralResult<Vector> out;
    out.eigenvalues = es.eigenvalues();
    out.ground = es.eigenvectors().col(0);
    fix_phase(out.ground);
    out.gap = h.rows() > 1 ? out.eigenvalues(1) - out.eigenvalues(0) : 0.0;
    return out;
}

/// Occupation-number state |n> with a sign; sign 0 means the zero vector.
struct Occupation {
    std::uint64_t bits;
    int sign;
};

/// a_j: move the operator past every occupied mode k < j.
Occupation lower(Occupation s, int j) {
    if (s.sign == 0 || !((s.bits >> j) & 1u)) return {s.bits, 0};
    int swaps = 0;
    for (int k = 0; k < j; ++k) swaps += static_cast<int>((s.bits >> k) & 1u);
    return {s.bits & ~(std::uint64_t{1} << j), (swaps % 2 == 0) ? s.sign : -s.sign};
}

/// a+_j
Occupation raise(Occupation s, int j) {
    if (s.sign == 0 || ((s.bits >> j) & 1u)) return {s.bits, 0};
    int swaps = 0;
    for (int k = 0; k < j; ++k) swaps += static_cast<int>((s.bits >> k) & 1u);
    return {s.bits | (std::uint64_t{1} << j), (swaps % 2 == 0) ? s.sign : -s.sign};
}

}  // namespace

RealSpectrum diagonalize(const Eigen::MatrixXd& h) {
    return diagonalize_impl<Eigen::VectorXd>(h);
}

ComplexSpectrum diagonalize(const Eigen::MatrixXcd& h) {
    return diagonalize_impl<Eigen::VectorXcd>(h);
}

std::pair<double, double> lowest_two(const Eigen::MatrixXd& h) {
    require_hermitian(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
    const double e0 = es.eigenvalues()(0);
    const double e1 = h.rows() > 1 ? es.eigenvalues()(1) : e0;
    return {e0, e1};
}

Eigen::MatrixXd fock_space_hamiltonian(const IntegralTable& t, int max_norb) {
    const int norb = t.norb();
    if (norb > max_norb)
        throw CapacityError("Fock-space oracle limited to " + std::to_string(max_norb) +
                            " orbitals, got " + std::to_string(norb));
    const int modes = 2 * norb;
    const Eigen::Index dim = Eigen::Index{1} << modes;
    auto spatial = [](int j) { return j / 2; };
    auto spin = [](int j) { return j % 2; };

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const Occupation ket{static_cast<std::uint64_t>(col), 1};
        for (int p = 0; p < modes; ++p)
            for (int q = 0; q < modes; ++q) {
                if (spin(p) != spin(q)) continue;
                const double c = t.one_body(spatial(p), spatial(q));
                if (c == 0.0) continue;
                const Occupation out = raise(lower(ket, q), p);
                if (out.sign) h(static_cast<Eigen::Index>(out.bits), col) += c * out.sign;
            }
        for (int p = 0; p < modes; ++p)
            for (int q = 0; q < modes; ++q)
                for (int r = 0; r < modes; ++r)
                    for (int s = 0; s < modes; ++s) {
                        if (spin(p) != spin(r) || spin(q) != spin(s)) continue;
                        // <pq|rs> = (pr|qs)
                        const double c =
                            t.two_body(spatial(p), spatial(r), spatial(q), spatial(s));
                        if (c == 0.0) continue;
                        const Occupation out = raise(raise(lower(lower(ket, s), r), q), p);
                        if (out.sign)
                            h(static_cast<Eigen::Index>(out.bits), col) += -0.5 * c * out.sign;
                    }
    }
    return h;
}

std::vector<std::uint64_t> fock_sector_indices(int norb, int nalpha, int nbeta) {
    std::vector<std::uint64_t> out;
    auto popcount = [](std::uint64_t m) {
        int c = 0;
        for (; m; m >>= 1) c += static_cast<int>(m & 1u);
        return c;
    };
    const std::uint64_t limit = std::uint64_t{1} << norb;
    for (std::uint64_t a = 0; a < limit; ++a) {
        if (popcount(a) != nalpha) continue;
        for (std::uint64_t b = 0; b < limit; ++b) {
            if (popcount(b) != nbeta) continue;
            std::uint64_t bits = 0;
            for (int p = 0; p < norb; ++p) {
                if ((a >> p) & 1u) bits |= std::uint64_t{1} << (2 * p);
                if ((b >> p) & 1u) bits |= std::uint64_t{1} << (2 * p + 1);
            }
            out.push_back(bits);
        }
    }
    return out;
}

}  // namespace molpea
