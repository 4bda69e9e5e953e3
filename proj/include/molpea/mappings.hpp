// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file mappings.hpp
 * @brief Compact mapping of the molecular wave function onto qubits.
 *
 * The compact mapping enumerates Slater determinants with fixed (N_alpha,
 * N_beta) and equates them with qubit basis states. The Hamiltonian matrix in
 * that basis is built with the Slater-Condon rules; an optional numerical
 * projection onto the S^2 = 0 eigenspace gives the singlet-restricted
 * mapping. qubit_requirements() evaluates the storage cost of the direct,
 * compact and compact-singlet mappings.
 *
 * Determinant sign convention: |D> = prod_{p in alpha, ascending} a+_{p alpha}
 * prod_{q in beta, ascending} a+_{q beta} |vac>, i.e. all alpha spin orbitals
 * precede all beta spin orbitals.
 */

#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "molpea/integrals.hpp"

namespace molpea {

struct Determinant {
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;

    auto operator<=>(const Determinant&) const = default;
};

/// Ordered determinant list; index 0 is always the HF determinant.
class ConfigurationBasis {
public:
    ConfigurationBasis(int norb, int nalpha, int nbeta, std::vector<Determinant> dets);

    [[nodiscard]] int norb() const noexcept { return norb_; }
    [[nodiscard]] int nalpha() const noexcept { return nalpha_; }
    [[nodiscard]] int nbeta() const noexcept { return nbeta_; }
    [[nodiscard]] std::size_t size() const noexcept { return dets_.size(); }
    [[nodiscard]] const Determinant& operator[](std::size_t i) const { return dets_[i]; }
    [[nodiscard]] const std::vector<Determinant>& determinants() const noexcept { return dets_; }
    [[nodiscard]] std::optional<std::size_t> index_of(const Determinant& d) const;

private:
    int norb_;
    int nalpha_;
    int nbeta_;
    std::vector<Determinant> dets_;
};

/// All C(norb,nalpha) * C(norb,nbeta) determinants, ascending (alpha, beta).
/// Throws DomainError for counts outside [0, norb] or norb > 32.
[[nodiscard]] ConfigurationBasis enumerate_determinants(int norb, int nalpha, int nbeta);

inline constexpr std::size_t kDefaultFciCapacity = std::size_t{1} << 14;

/**
 * Electronic Hamiltonian in the determinant basis (Slater-Condon rules). The
 * core energy is not added. Throws CapacityError when the basis exceeds
 * `capacity` determinants and ShapeError when the basis and table disagree on
 * the orbital count.
 */
[[nodiscard]] Eigen::MatrixXd build_fci_matrix(const IntegralTable& table,
                                               const ConfigurationBasis& basis,
                                               std::size_t capacity = kDefaultFciCapacity);

/// Total spin S^2 = S-S+ + Sz(Sz+1) in the determinant basis.
[[nodiscard]] Eigen::MatrixXd build_s2_matrix(const ConfigurationBasis& basis,
                                              std::size_t capacity = kDefaultFciCapacity);

struct SingletProjection {
    Eigen::MatrixXd hamiltonian;  ///< isometry^T * h * isometry
    Eigen::MatrixXd isometry;     ///< orthonormal columns spanning ker(S^2)
};

/**
 * Restricts `h` to the S^2 = 0 eigenspace of `s2`.
 *
 * S^2 is block diagonal over spatial occupation patterns, so the null space
 * is found block by block (connected components of the sparsity graph of
 * `s2`). Column 0 of the isometry is the null vector with the largest weight
 * on basis state 0 (the HF determinant), phase fixed so that weight is
 * positive; every other column has its largest-magnitude entry positive.
 *
 * Throws SymmetryError when ||[h, s2]||_F > 1e-8 and ShapeError on dimension
 * mismatch.
 */
[[nodiscard]] SingletProjection project_singlet(const Eigen::MatrixXd& h,
                                                const Eigen::MatrixXd& s2);

enum class MappingKind { Direct, Compact, CompactSinglet };

[[nodiscard]] std::string_view to_string(MappingKind kind) noexcept;
/// Accepts "direct", "compact", "compact_singlet". Throws DomainError.
[[nodiscard]] MappingKind parse_mapping_kind(std::string_view text);

using BigInt = boost::multiprecision::cpp_int;

struct MappingSpec {
    MappingKind kind;
    int nqubits;
    BigInt subspace_dimension;
};

/**
 * Qubits needed to store the wave function.
 *
 *  - direct:          2 * norb (Fock space, dimension 4^norb)
 *  - compact:         ceil(log2 C(2 norb, nelec))
 *  - compact_singlet: ceil(log2 W), W = C(norb+1, N/2) C(norb+1, N/2+1) / (norb+1)
 *
 * Throws DomainError when nelec > 2 norb, or nelec is odd for compact_singlet.
 */
[[nodiscard]] MappingSpec qubit_requirements(int norb, int nelec, MappingKind kind);

[[nodiscard]] BigInt binomial(int n, int k);
/// ceil(log2 x) for x >= 1.
[[nodiscard]] int ceil_log2(const BigInt& x);

/**
 * Electronic Hamiltonian under a compact mapping, ready for the simulator.
 * Basis state 0 is the HF determinant (or the singlet vector aligned with it).
 */
struct CompactHamiltonian {
    MappingKind kind;
    Eigen::MatrixXd hamiltonian;
    ConfigurationBasis basis;
    Eigen::MatrixXd isometry;  ///< empty for MappingKind::Compact
    int nqubits;               ///< ceil(log2 dimension)
};

/// Builds the Sz = 0 (or MS2/2) determinant Hamiltonian, optionally projected
/// onto the singlet space. Throws DomainError for MappingKind::Direct.
[[nodiscard]] CompactHamiltonian build_compact_hamiltonian(
    const IntegralTable& table, MappingKind kind,
    std::size_t capacity = kDefaultFciCapacity);

}  // namespace molpea
