// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include "molpea/pauli.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <span>
#include <unordered_map>

#include "molpea/errors.hpp"

namespace molpea {

namespace {

using Complex = std::complex<double>;

constexpr std::array<Complex, 4> kIPowers{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                          Complex{0, -1}};

struct StringHash {
    std::size_t operator()(const PauliString& p) const noexcept {
        return std::hash<std::uint64_t>{}(p.x * 0x9E3779B97F4A7C15ULL ^ p.z);
    }
};

struct Accumulated {
    Complex value{0.0, 0.0};
    int modes = 0;
};

/// One Jordan-Wigner ladder operator as a two-term Pauli sum.
struct Ladder {
    std::array<PauliString, 2> strings;
    std::array<Complex, 2> coeffs;
};

Ladder ladder(int mode, bool dagger) {
    const std::uint64_t tail = (std::uint64_t{1} << mode) - 1;
    const std::uint64_t bit = std::uint64_t{1} << mode;
    Ladder l;
    l.strings[0] = {bit, tail};        // X_j Z_{<j}
    l.strings[1] = {bit, tail | bit};  // Y_j Z_{<j}
    l.coeffs[0] = {0.5, 0.0};
    l.coeffs[1] = dagger ? Complex{0.0, -0.5} : Complex{0.0, 0.5};
    return l;
}

class TermAccumulator {
public:
    void add_product(std::span<const Ladder> ops, double scale, int modes) {
        const std::size_t n = ops.size();
        for (std::size_t choice = 0; choice < (std::size_t{1} << n); ++choice) {
            PauliString acc{};
            Complex coef{scale, 0.0};
            int phase = 0;
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t pick = choice >> k & 1;
                const PauliString& s = ops[k].strings[pick];
                phase += pauli_product_phase(acc, s);
                acc.x ^= s.x;
                acc.z ^= s.z;
                coef *= ops[k].coeffs[pick];
            }
            auto& slot = terms_[acc];
            slot.value += coef * kIPowers[static_cast<std::size_t>(phase & 3)];
            slot.modes = std::max(slot.modes, modes);
        }
    }

    [[nodiscard]] const auto& terms() const noexcept { return terms_; }

private:
    std::unordered_map<PauliString, Accumulated, StringHash> terms_;
};

}  // namespace

int PauliString::weight() const noexcept { return std::popcount(x | z); }

char PauliString::at(int q) const noexcept {
    const bool xb = x >> q & 1;
    const bool zb = z >> q & 1;
    if (xb && zb) return 'Y';
    if (xb) return 'X';
    if (zb) return 'Z';
    return 'I';
}

std::string PauliString::label(int nqubits) const {
    std::string out(static_cast<std::size_t>(nqubits), 'I');
    for (int q = 0; q < nqubits; ++q) out[static_cast<std::size_t>(q)] = at(q);
    return out;
}

PauliString PauliString::parse(std::string_view label) {
    if (label.size() > 64) throw DomainError("Pauli label longer than 64 qubits");
    PauliString p;
    for (std::size_t q = 0; q < label.size(); ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        switch (label[q]) {
            case 'I': break;
            case 'X': p.x |= bit; break;
            case 'Y': p.x |= bit; p.z |= bit; break;
            case 'Z': p.z |= bit; break;
            default: throw DomainError("invalid Pauli symbol '" + std::string(1, label[q]) + "'");
        }
    }
    return p;
}

int pauli_product_phase(const PauliString& a, const PauliString& b) noexcept {
    std::uint64_t active = (a.x | a.z) & (b.x | b.z);
    int phase = 0;
    while (active) {
        const int q = std::countr_zero(active);
        active &= active - 1;
        const int x1 = a.x >> q & 1, z1 = a.z >> q & 1;
        const int x2 = b.x >> q & 1, z2 = b.z >> q & 1;
        if (x1 && z1) phase += z2 - x2;
        else if (x1) phase += z2 * (2 * x2 - 1);
        else phase += x2 * (1 - 2 * z2);
    }
    return ((phase % 4) + 4) % 4;
}

bool commutes(const PauliString& a, const PauliString& b) noexcept {
    return ((std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1) == 0;
}

PauliHamiltonian::PauliHamiltonian(int nqubits, std::vector<PauliTerm> terms)
    : nqubits_(nqubits), terms_(std::move(terms)) {
    if (nqubits < 0 || nqubits > 64) throw DomainError("Pauli Hamiltonian needs 0..64 qubits");
    const std::uint64_t mask = nqubits == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << nqubits) - 1;
    for (const auto& t : terms_)
        if ((t.string.support() & ~mask) != 0) throw IndexError("Pauli term acts outside the register");
    std::sort(terms_.begin(), terms_.end(), [n = nqubits_](const PauliTerm& a, const PauliTerm& b) {
        return a.string.label(n) < b.string.label(n);
    });
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i].string == terms_[i - 1].string)
            throw DomainError("duplicate Pauli string " + terms_[i].string.label(nqubits_));
}

Eigen::MatrixXcd pauli_matrix(const PauliString& p, int nqubits) {
    const Eigen::Index dim = Eigen::Index{1} << nqubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    const Complex base = kIPowers[static_cast<std::size_t>(std::popcount(p.x & p.z) & 3)];
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
        const double sign = (std::popcount(p.z & b) & 1) ? -1.0 : 1.0;
        m(static_cast<Eigen::Index>(b ^ p.x), static_cast<Eigen::Index>(b)) = sign * base;
    }
    return m;
}

Eigen::MatrixXcd PauliHamiltonian::to_dense(int max_qubits) const {
    if (nqubits_ > max_qubits)
        throw CapacityError("dense reconstruction of " + std::to_string(nqubits_) +
                            " qubits exceeds the cap of " + std::to_string(max_qubits));
    const Eigen::Index dim = Eigen::Index{1} << nqubits_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& t : terms_) {
        const auto& p = t.string;
        const Complex base =
            t.coefficient * kIPowers[static_cast<std::size_t>(std::popcount(p.x & p.z) & 3)];
        for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
            const double sign = (std::popcount(p.z & b) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(b ^ p.x), static_cast<Eigen::Index>(b)) += sign * base;
        }
    }
    return m;
}

PauliHamiltonian jordan_wigner(const IntegralTable& t, double drop_tolerance) {
    const int norb = t.norb();
    const int nq = 2 * norb;
    if (nq > 64) throw CapacityError("Jordan-Wigner supports at most 32 spatial orbitals");
    auto mode = [](int p, int spin) { return 2 * p + spin; };

    std::vector<Ladder> create(static_cast<std::size_t>(nq)), destroy(static_cast<std::size_t>(nq));
    for (int j = 0; j < nq; ++j) {
        create[static_cast<std::size_t>(j)] = ladder(j, true);
        destroy[static_cast<std::size_t>(j)] = ladder(j, false);
    }

    TermAccumulator acc;
    for (int p = 0; p < norb; ++p)
        for (int q = 0; q < norb; ++q) {
            const double h = t.one_body(p, q);
            if (h == 0.0) continue;
            for (int s = 0; s < 2; ++s) {
                const int a = mode(p, s), b = mode(q, s);
                const std::array<Ladder, 2> ops{create[static_cast<std::size_t>(a)],
                                                destroy[static_cast<std::size_t>(b)]};
                acc.add_product(ops, h, a == b ? 1 : 2);
            }
        }
    for (int p = 0; p < norb; ++p)
        for (int q = 0; q < norb; ++q)
            for (int r = 0; r < norb; ++r)
                for (int s = 0; s < norb; ++s) {
                    const double g = t.two_body(p, q, r, s);
                    if (g == 0.0) continue;
                    for (int s1 = 0; s1 < 2; ++s1)
                        for (int s2 = 0; s2 < 2; ++s2) {
                            const int a = mode(p, s1), b = mode(q, s1);
                            const int c = mode(r, s2), d = mode(s, s2);
                            if (a == c || b == d) continue;  // a+_a a+_a = 0, a_d a_d = 0
                            std::array<int, 4> ids{a, b, c, d};
                            std::sort(ids.begin(), ids.end());
                            const int modes = static_cast<int>(
                                std::unique(ids.begin(), ids.end()) - ids.begin());
                            const std::array<Ladder, 4> ops{
                                create[static_cast<std::size_t>(a)],
                                create[static_cast<std::size_t>(c)],
                                destroy[static_cast<std::size_t>(d)],
                                destroy[static_cast<std::size_t>(b)]};
                            acc.add_product(ops, 0.5 * g, modes);
                        }
                }

    std::vector<PauliTerm> terms;
    for (const auto& [string, slot] : acc.terms()) {
        if (std::abs(slot.value.imag()) > 1e-10)
            throw NumericsError("Jordan-Wigner term " + string.label(nq) +
                                " has a non-negligible imaginary coefficient");
        if (std::abs(slot.value.real()) <= drop_tolerance) continue;
        terms.push_back({slot.value.real(), string, slot.modes});
    }
    return PauliHamiltonian(nq, std::move(terms));
}

std::uint64_t hf_occupation_index(const IntegralTable& t) {
    if ((t.nelec() + t.ms2()) % 2 != 0) throw DomainError("NELEC and MS2 have inconsistent parity");
    const int nalpha = (t.nelec() + t.ms2()) / 2;
    const int nbeta = (t.nelec() - t.ms2()) / 2;
    std::uint64_t idx = 0;
    for (int p = 0; p < nalpha; ++p) idx |= std::uint64_t{1} << (2 * p);
    for (int p = 0; p < nbeta; ++p) idx |= std::uint64_t{1} << (2 * p + 1);
    return idx;
}

}  // namespace molpea
