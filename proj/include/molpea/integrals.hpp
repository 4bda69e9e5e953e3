// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file integrals.hpp
 * @brief Spatial-orbital molecular integrals and FCIDUMP input/output.
 *
 * One-electron integrals h(p,q) = <p|T + V_N|q> and two-electron integrals in
 * chemists' notation (pq|rs), together with the scalar core energy. Indices
 * are 0-based internally; the FCIDUMP format uses 1-based indices.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace molpea {

/**
 * Real-orbital integral table.
 *
 * Writes through set_one_body / set_two_body fill every symmetry-equivalent
 * slot (2-fold for h, 8-fold for (pq|rs)), so lookups never depend on which
 * permutation was stored. Immutable once built; safe to share for reading.
 */
class IntegralTable {
public:
    IntegralTable(int norb, int nelec, int ms2);

    [[nodiscard]] int norb() const noexcept { return norb_; }
    [[nodiscard]] int nelec() const noexcept { return nelec_; }
    [[nodiscard]] int ms2() const noexcept { return ms2_; }
    [[nodiscard]] double core_energy() const noexcept { return core_energy_; }

    [[nodiscard]] double one_body(int p, int q) const noexcept {
        return h1_[static_cast<std::size_t>(p) * norb_ + q];
    }
    [[nodiscard]] double two_body(int p, int q, int r, int s) const noexcept {
        const auto n = static_cast<std::size_t>(norb_);
        return h2_[((p * n + q) * n + r) * n + s];
    }

    void set_core_energy(double value) noexcept { core_energy_ = value; }
    /// Sets h(p,q) and h(q,p). Throws IndexError on out-of-range indices.
    void set_one_body(int p, int q, double value);
    /// Sets all eight real-orbital permutations of (pq|rs).
    void set_two_body(int p, int q, int r, int s, double value);

    [[nodiscard]] std::span<const double> one_body_data() const noexcept { return h1_; }
    [[nodiscard]] std::span<const double> two_body_data() const noexcept { return h2_; }

private:
    void check_index(int p) const;

    int norb_;
    int nelec_;
    int ms2_;
    double core_energy_ = 0.0;
    std::vector<double> h1_;
    std::vector<double> h2_;
};

/**
 * Parse an FCIDUMP stream.
 *
 * The namelist header (`&FCI ... &END` or `/`) must define NORB and NELEC;
 * MS2 defaults to 0 when absent. Body lines are `value i j k l`:
 * all-zero indices carry the core energy, `k = l = 0` carries h(i,j),
 * `j = k = l = 0` (orbital energies) is ignored, and everything else is a
 * two-electron integral.
 *
 * Throws ParseError, IndexError or ConsistencyError (two lines assigning the
 * same symmetry-equivalent slot values that differ by more than 1e-10).
 */
[[nodiscard]] IntegralTable parse_fcidump(std::istream& in);
[[nodiscard]] IntegralTable read_fcidump(const std::filesystem::path& path);

/// Writes the symmetry-unique non-zero integrals with round-trip precision.
void write_fcidump(std::ostream& out, const IntegralTable& table);

/**
 * Closed-shell electronic Hartree-Fock energy
 * 2 sum_i h(i,i) + sum_ij [2 (ii|jj) - (ij|ji)] over the occupied spatial
 * orbitals. The core energy is not included.
 *
 * Throws UnsupportedError unless the table is closed shell (MS2 = 0, even
 * NELEC) and |occupied| = NELEC / 2.
 */
[[nodiscard]] double hf_reference_energy(const IntegralTable& table,
                                         std::span<const int> occupied);

/// HF energy with the lowest NELEC / 2 orbitals occupied.
[[nodiscard]] double hf_reference_energy(const IntegralTable& table);

}  // namespace molpea
