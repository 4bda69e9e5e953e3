// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include "molpea/mappings.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "molpea/errors.hpp"

namespace molpea {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> strings_with_popcount(int norb, int count) {
    std::vector<Mask> out;
    if (count == 0) {
        out.push_back(0);
        return out;
    }
    Mask v = (Mask{1} << count) - 1;
    const Mask limit = Mask{1} << norb;
    while (v < limit) {
        out.push_back(v);
        // Gosper's hack: next integer with the same popcount.
        const Mask c = v & (~v + 1);
        const Mask r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
    return out;
}

/// Spin-orbital bit layout: bits [0, norb) alpha, [norb, 2 norb) beta.
Mask combined(const Determinant& d, int norb) { return d.alpha | (d.beta << norb); }

/// Sign of moving an operator at `pos` across the occupied modes below it.
int parity_below(Mask m, int pos) {
    return (std::popcount(m & ((Mask{1} << pos) - 1)) & 1) ? -1 : 1;
}

/// Applies a_pos; returns 0 if the mode is empty.
int annihilate(Mask& m, int pos) {
    if (!(m >> pos & 1)) return 0;
    const int s = parity_below(m, pos);
    m ^= Mask{1} << pos;
    return s;
}

/// Applies a+_pos; returns 0 if the mode is occupied.
int create(Mask& m, int pos) {
    if (m >> pos & 1) return 0;
    const int s = parity_below(m, pos);
    m |= Mask{1} << pos;
    return s;
}

class SpinOrbitalIntegrals {
public:
    explicit SpinOrbitalIntegrals(const IntegralTable& t) : t_(t), n_(t.norb()) {}

    [[nodiscard]] double h(int p, int q) const {
        if (p / n_ != q / n_) return 0.0;
        return t_.one_body(p % n_, q % n_);
    }
    /// <pq|rs> = (pr|qs) with spin conservation on each electron.
    [[nodiscard]] double phys(int p, int q, int r, int s) const {
        if (p / n_ != r / n_ || q / n_ != s / n_) return 0.0;
        return t_.two_body(p % n_, r % n_, q % n_, s % n_);
    }
    [[nodiscard]] double anti(int p, int q, int r, int s) const {
        return phys(p, q, r, s) - phys(p, q, s, r);
    }

private:
    const IntegralTable& t_;
    int n_;
};

std::vector<int> occupied_modes(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

void check_capacity(std::size_t dim, std::size_t capacity) {
    if (dim > capacity)
        throw CapacityError("basis dimension " + std::to_string(dim) + " exceeds capacity " +
                            std::to_string(capacity));
}

}  // namespace

ConfigurationBasis::ConfigurationBasis(int norb, int nalpha, int nbeta,
                                       std::vector<Determinant> dets)
    : norb_(norb), nalpha_(nalpha), nbeta_(nbeta), dets_(std::move(dets)) {}

std::optional<std::size_t> ConfigurationBasis::index_of(const Determinant& d) const {
    // Index 0 is HF and the tail is sorted.
    if (!dets_.empty() && dets_.front() == d) return 0;
    auto it = std::lower_bound(dets_.begin() + (dets_.empty() ? 0 : 1), dets_.end(), d);
    if (it != dets_.end() && *it == d) return static_cast<std::size_t>(it - dets_.begin());
    return std::nullopt;
}

ConfigurationBasis enumerate_determinants(int norb, int nalpha, int nbeta) {
    if (norb < 1 || norb > 32) throw DomainError("norb must lie in [1, 32]");
    if (nalpha < 0 || nalpha > norb || nbeta < 0 || nbeta > norb)
        throw DomainError("electron counts (" + std::to_string(nalpha) + ", " +
                          std::to_string(nbeta) + ") do not fit in " + std::to_string(norb) +
                          " orbitals");
    const auto alphas = strings_with_popcount(norb, nalpha);
    const auto betas = strings_with_popcount(norb, nbeta);
    std::vector<Determinant> dets;
    dets.reserve(alphas.size() * betas.size());
    // The smallest mask with a given popcount is the lowest-orbital filling, so
    // ascending order already places the HF determinant first.
    for (Mask a : alphas)
        for (Mask b : betas) dets.push_back({a, b});
    return ConfigurationBasis(norb, nalpha, nbeta, std::move(dets));
}

Eigen::MatrixXd build_fci_matrix(const IntegralTable& table, const ConfigurationBasis& basis,
                                 std::size_t capacity) {
    if (basis.norb() != table.norb())
        throw ShapeError("basis has " + std::to_string(basis.norb()) +
                         " orbitals but the integral table has " + std::to_string(table.norb()));
    const std::size_t dim = basis.size();
    check_capacity(dim, capacity);
    const int norb = basis.norb();
    const SpinOrbitalIntegrals so(table);

    std::vector<Mask> masks(dim);
    for (std::size_t i = 0; i < dim; ++i) masks[i] = combined(basis[i], norb);

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        const Mask ket = masks[j];
        const auto occ = occupied_modes(ket);

        double diag = 0.0;
        for (int i : occ) {
            diag += so.h(i, i);
            for (int k : occ) diag += 0.5 * so.anti(i, k, i, k);
        }
        h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = diag;

        for (std::size_t i = 0; i < j; ++i) {
            const Mask bra = masks[i];
            const Mask diff = bra ^ ket;
            const int nd = std::popcount(diff);
            if (nd > 4) continue;
            const Mask holes = ket & diff;
            const Mask parts = bra & diff;
            double value = 0.0;
            if (nd == 2) {
                const int hole = std::countr_zero(holes);
                const int part = std::countr_zero(parts);
                Mask m = ket;
                int sign = annihilate(m, hole);
                sign *= create(m, part);
                double v = so.h(part, hole);
                for (int k : occ) v += so.anti(part, k, hole, k);
                value = sign * v;
            } else if (nd == 4) {
                const int i1 = std::countr_zero(holes);
                const int i2 = std::countr_zero(holes & (holes - 1));
                const int a1 = std::countr_zero(parts);
                const int a2 = std::countr_zero(parts & (parts - 1));
                Mask m = ket;
                int sign = annihilate(m, i1);
                sign *= annihilate(m, i2);
                sign *= create(m, a2);
                sign *= create(m, a1);
                // <bra| a+_a1 a+_a2 a_i2 a_i1 |ket> carries <a1 a2||i1 i2>.
                value = sign * so.anti(a1, a2, i1, i2);
            } else {
                continue;
            }
            const auto ii = static_cast<Eigen::Index>(i);
            const auto jj = static_cast<Eigen::Index>(j);
            h(ii, jj) = value;
            h(jj, ii) = value;
        }
    }
    return h;
}

Eigen::MatrixXd build_s2_matrix(const ConfigurationBasis& basis, std::size_t capacity) {
    const std::size_t dim = basis.size();
    check_capacity(dim, capacity);
    const int norb = basis.norb();
    std::unordered_map<Mask, std::size_t> index;
    index.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) index.emplace(combined(basis[i], norb), i);

    Eigen::MatrixXd s2 = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                               static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        const Mask ket = combined(basis[j], norb);
        const double sz = 0.5 * (std::popcount(basis[j].alpha) - std::popcount(basis[j].beta));
        s2(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) += sz * (sz + 1.0);
        // S-S+ = sum_{p,q} a+_{q beta} a_{q alpha} a+_{p alpha} a_{p beta}
        for (int p = 0; p < norb; ++p) {
            Mask m1 = ket;
            int s1 = annihilate(m1, norb + p);
            if (!s1) continue;
            s1 *= create(m1, p);
            if (!s1) continue;
            for (int q = 0; q < norb; ++q) {
                Mask m2 = m1;
                int s = s1 * annihilate(m2, q);
                if (!s) continue;
                s *= create(m2, norb + q);
                if (!s) continue;
                auto it = index.find(m2);
                if (it == index.end()) continue;
                s2(static_cast<Eigen::Index>(it->second), static_cast<Eigen::Index>(j)) += s;
            }
        }
    }
    return s2;
}

SingletProjection project_singlet(const Eigen::MatrixXd& h, const Eigen::MatrixXd& s2) {
    if (h.rows() != h.cols() || s2.rows() != s2.cols() || h.rows() != s2.rows())
        throw ShapeError("project_singlet: h and s2 must be square and of equal dimension");
    const Eigen::Index n = h.rows();
    const Eigen::SparseMatrix<double> s2s = s2.sparseView(1.0, 1e-14);
    const double comm = (h * s2s - s2s * h).norm();
    if (comm > 1e-8)
        throw SymmetryError("||[H, S^2]||_F = " + std::to_string(comm) + " exceeds 1e-8");

    // Connected components of the S^2 sparsity graph.
    std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), Eigen::Index{0});
    auto find = [&](Eigen::Index x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Eigen::Index k = 0; k < s2s.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(s2s, k); it; ++it) {
            auto a = find(it.row());
            auto b = find(it.col());
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<Eigen::Index>> blocks;
    std::vector<Eigen::Index> block_of(static_cast<std::size_t>(n), -1);
    for (Eigen::Index i = 0; i < n; ++i) {
        auto root = find(i);
        if (block_of[root] < 0) {
            block_of[root] = static_cast<Eigen::Index>(blocks.size());
            blocks.emplace_back();
        }
        blocks[block_of[root]].push_back(i);
    }

    std::vector<Eigen::VectorXd> null_vectors;
    for (const auto& members : blocks) {
        const auto m = static_cast<Eigen::Index>(members.size());
        Eigen::MatrixXd sub(m, m);
        for (Eigen::Index a = 0; a < m; ++a)
            for (Eigen::Index b = 0; b < m; ++b) sub(a, b) = s2(members[a], members[b]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sub);
        for (Eigen::Index c = 0; c < m; ++c) {
            if (es.eigenvalues()(c) >= 0.5) break;
            Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
            for (Eigen::Index a = 0; a < m; ++a) v(members[a]) = es.eigenvectors()(a, c);
            null_vectors.push_back(std::move(v));
        }
    }
    if (null_vectors.empty()) throw DomainError("S^2 has no singlet eigenvectors in this basis");

    std::size_t hf_col = 0;
    for (std::size_t c = 1; c < null_vectors.size(); ++c)
        if (std::abs(null_vectors[c](0)) > std::abs(null_vectors[hf_col](0))) hf_col = c;
    std::rotate(null_vectors.begin(), null_vectors.begin() + static_cast<std::ptrdiff_t>(hf_col),
                null_vectors.begin() + static_cast<std::ptrdiff_t>(hf_col) + 1);

    const auto k = static_cast<Eigen::Index>(null_vectors.size());
    Eigen::MatrixXd iso(n, k);
    for (Eigen::Index c = 0; c < k; ++c) {
        Eigen::VectorXd& v = null_vectors[static_cast<std::size_t>(c)];
        Eigen::Index pivot = 0;
        if (c != 0) v.cwiseAbs().maxCoeff(&pivot);
        if (v(pivot) < 0) v = -v;
        iso.col(c) = v;
    }
    const Eigen::SparseMatrix<double> isos = iso.sparseView(1.0, 1e-15);
    Eigen::MatrixXd hq = h * isos;
    Eigen::MatrixXd projected = isos.transpose() * hq;
    projected = 0.5 * (projected + projected.transpose()).eval();
    return {std::move(projected), std::move(iso)};
}

std::string_view to_string(MappingKind kind) noexcept {
    switch (kind) {
        case MappingKind::Direct: return "direct";
        case MappingKind::Compact: return "compact";
        case MappingKind::CompactSinglet: return "compact_singlet";
    }
    return "unknown";
}

MappingKind parse_mapping_kind(std::string_view text) {
    if (text == "direct") return MappingKind::Direct;
    if (text == "compact") return MappingKind::Compact;
    if (text == "compact_singlet") return MappingKind::CompactSinglet;
    throw DomainError("unknown mapping kind '" + std::string(text) + "'");
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

int ceil_log2(const BigInt& x) {
    if (x < 1) throw DomainError("ceil_log2 requires x >= 1");
    if (x == 1) return 0;
    const auto msb = static_cast<int>(boost::multiprecision::msb(x));
    const bool power_of_two = (x & (x - 1)) == 0;
    return power_of_two ? msb : msb + 1;
}

MappingSpec qubit_requirements(int norb, int nelec, MappingKind kind) {
    if (norb < 1) throw DomainError("norb must be positive");
    if (nelec < 0 || nelec > 2 * norb)
        throw DomainError("nelec = " + std::to_string(nelec) + " does not fit in " +
                          std::to_string(norb) + " spatial orbitals");
    switch (kind) {
        case MappingKind::Direct:
            return {kind, 2 * norb, BigInt(1) << (2 * norb)};
        case MappingKind::Compact: {
            BigInt dim = binomial(2 * norb, nelec);
            return {kind, ceil_log2(dim), dim};
        }
        case MappingKind::CompactSinglet: {
            if (nelec % 2 != 0) throw DomainError("singlet mapping requires an even electron count");
            const int half = nelec / 2;
            BigInt w = binomial(norb + 1, half) * binomial(norb + 1, half + 1) / (norb + 1);
            if (w < 1) throw DomainError("no singlet states for this electron count");
            return {kind, ceil_log2(w), w};
        }
    }
    throw DomainError("unknown mapping kind");
}

CompactHamiltonian build_compact_hamiltonian(const IntegralTable& table, MappingKind kind,
                                             std::size_t capacity) {
    if (kind == MappingKind::Direct)
        throw DomainError("build_compact_hamiltonian: direct mapping has no determinant basis");
    if ((table.nelec() + table.ms2()) % 2 != 0)
        throw DomainError("NELEC and MS2 have inconsistent parity");
    const int nalpha = (table.nelec() + table.ms2()) / 2;
    const int nbeta = (table.nelec() - table.ms2()) / 2;
    auto basis = enumerate_determinants(table.norb(), nalpha, nbeta);
    Eigen::MatrixXd h = build_fci_matrix(table, basis, capacity);
    Eigen::MatrixXd iso;
    if (kind == MappingKind::CompactSinglet) {
        if (table.ms2() != 0) throw UnsupportedError("singlet projection requires MS2 = 0");
        auto proj = project_singlet(h, build_s2_matrix(basis, capacity));
        h = std::move(proj.hamiltonian);
        iso = std::move(proj.isometry);
    }
    const int nq = ceil_log2(BigInt(static_cast<unsigned long long>(h.rows())));
    return {kind, std::move(h), std::move(basis), std::move(iso), nq};
}

}  // namespace molpea
