// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include "molpea/pea.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "molpea/errors.hpp"

namespace molpea {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_unit(double x) {
    x = std::fmod(x, 1.0);
    return x < 0.0 ? x + 1.0 : x;
}

int argmax(const std::vector<double>& p) {
    return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
}

/// Joint read-out/system state after the controlled powers and the inverse
/// QFT. `powers[j]` is v^{2^j} already embedded in the system register.
StateVector run_circuit(const std::vector<DenseUnitary>& powers, const StateVector& system,
                        int max_qubits) {
    const int ns = system.nqubits();
    const int m = static_cast<int>(powers.size());
    StateVector joint = tensor_product(StateVector(m, max_qubits), system, max_qubits);
    for (int j = 0; j < m; ++j) apply_one_qubit_gate(joint, ns + j, gates::hadamard());
    for (int j = 0; j < m; ++j)
        apply_controlled_unitary(joint, ns + j, QubitRange{0, ns}, powers[static_cast<std::size_t>(j)]);
    inverse_qft(joint, QubitRange{ns, m});
    return joint;
}

/// v, v^2, ..., v^{2^{m-1}} in v's own dimension.
std::vector<DenseUnitary> repeated_squares(const DenseUnitary& v, int m) {
    std::vector<DenseUnitary> out;
    out.reserve(static_cast<std::size_t>(m));
    out.push_back(v);
    for (int j = 1; j < m; ++j) out.push_back(out.back().squared());
    return out;
}

std::vector<DenseUnitary> embedded(const std::vector<DenseUnitary>& powers, int nqubits) {
    std::vector<DenseUnitary> out;
    out.reserve(powers.size());
    for (const auto& p : powers) out.push_back(p.embed(nqubits));
    return out;
}

void check_fits(const DenseUnitary& v, const StateVector& system) {
    if (v.dimension() > static_cast<Eigen::Index>(system.size()))
        throw ShapeError("unitary of dimension " + std::to_string(v.dimension()) +
                         " does not fit a " + std::to_string(system.nqubits()) +
                         "-qubit system register");
}

}  // namespace

double choose_tau(double e_estimate) {
    if (!(e_estimate < 0.0))
        throw DomainError("reference energy must be negative to place phi near 1/2");
    return -std::numbers::pi / std::abs(e_estimate);
}

std::vector<double> fourier_kernel(double phase, int m) {
    const int n = 1 << m;
    std::vector<double> p(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double delta = phase - static_cast<double>(k) / n;
        const double den = std::sin(std::numbers::pi * delta);
        if (std::abs(den) < 1e-9) {
            p[static_cast<std::size_t>(k)] = 1.0;
            continue;
        }
        const double num = std::sin(std::numbers::pi * n * delta);
        p[static_cast<std::size_t>(k)] = (num * num) / (static_cast<double>(n) * n * den * den);
    }
    return p;
}

std::vector<double> pea_once(const DenseUnitary& v, const StateVector& system, int m,
                             int max_qubits) {
    if (m < 1) throw DomainError("read-out register needs at least one qubit");
    check_fits(v, system);
    const auto powers = embedded(repeated_squares(v, m), system.nqubits());
    const StateVector joint = run_circuit(powers, system, max_qubits);
    return measure_distribution(joint, QubitRange{system.nqubits(), m});
}

DenseUnitary shift_and_square(const DenseUnitary& v, double phi_shift) {
    const Complex phase = std::polar(1.0, -kTwoPi * phi_shift);
    Eigen::MatrixXcd m = phase * v.matrix();
    return DenseUnitary(m * m);
}

double kernel_fit_phase(const std::vector<double>& p) {
    const int n = static_cast<int>(p.size());
    if (n == 0 || (n & (n - 1)) != 0) throw ShapeError("distribution length must be a power of two");
    const int peak = argmax(p);
    if (n == 1) return 0.0;
    const int right = (peak + 1) % n;
    const int left = (peak + n - 1) % n;
    const bool use_right = p[static_cast<std::size_t>(right)] >= p[static_cast<std::size_t>(left)];
    const double neighbour = p[static_cast<std::size_t>(use_right ? right : left)];
    const double centre = p[static_cast<std::size_t>(peak)];
    if (centre <= 0.0 || neighbour <= 0.0) return static_cast<double>(peak) / n;
    // Amplitude ratio r = sin(a d) / sin(a (1 - d)) with a = pi / n solves to
    // tan(a d) = r sin(a) / (1 + r cos(a)).
    const double r = std::min(1.0, std::sqrt(neighbour / centre));
    const double a = std::numbers::pi / n;
    const double d = std::atan2(r * std::sin(a), 1.0 + r * std::cos(a)) / a;
    const double theta = (static_cast<double>(peak) + (use_right ? d : -d)) / n;
    return wrap_unit(theta);
}

PeaTrace recursive_pea(const DenseUnitary& u, const StateVector& initial, const PeaConfig& cfg) {
    const int m = cfg.readout_bits;
    if (m < 4) throw DomainError("recursive PEA needs at least 4 read-out qubits");
    if (cfg.iterations < 1) throw DomainError("recursive PEA needs at least one iteration");
    if (cfg.tau == 0.0 || !std::isfinite(cfg.tau)) throw DomainError("PEA time parameter tau is unset");
    check_fits(u, initial);
    const int ns = initial.nqubits();
    if (ns + m > cfg.max_qubits)
        throw CapacityError(std::to_string(ns + m) + " qubits exceed the simulator cap of " +
                            std::to_string(cfg.max_qubits));

    PeaTrace trace;
    trace.readout_bits = m;
    trace.tau = cfg.tau;

    if (cfg.target) {
        const Eigen::VectorXcd t = cfg.target->normalized();
        trace.initial_overlap = squared_overlap(t, initial.amplitudes());
        if (trace.initial_overlap < kOverlapFloor) {
            std::ostringstream msg;
            msg << "initial state overlap " << trace.initial_overlap
                << " with the target eigenvector is below " << kOverlapFloor
                << "; prepare a better initial state (e.g. adiabatically)";
            throw PreparationError(msg.str());
        }
        if (trace.initial_overlap < kOverlapWarning) {
            std::ostringstream msg;
            msg << "initial state overlap " << trace.initial_overlap << " is below "
                << kOverlapWarning << "; the ground-state peak may not dominate";
            trace.warnings.push_back(msg.str());
        }
    }

    std::mt19937_64 rng(cfg.seed);
    StateVector system = initial;
    DenseUnitary v = u;
    const int n_out = 1 << m;
    for (int k = 0; k < cfg.iterations; ++k) {
        const double drift = v.unitarity_error();
        if (drift > kUnitarityDriftLimit) {
            std::ostringstream msg;
            msg << "V_" << k << " drifted from unitarity by " << drift;
            throw NumericsError(msg.str());
        }
        const auto powers = repeated_squares(v, m);
        StateVector joint = run_circuit(embedded(powers, ns), system, cfg.max_qubits);
        const QubitRange readout{ns, m};

        PeaIteration it;
        it.k = k;
        it.distribution = measure_distribution(joint, readout);
        if (cfg.mode == PeaMode::Argmax) {
            it.peak = argmax(it.distribution);
        } else {
            it.peak = static_cast<int>(measure_and_collapse(joint, readout, rng));
            const auto offset = static_cast<Eigen::Index>(it.peak) << ns;
            system = StateVector::from_amplitudes(
                joint.amplitudes().segment(offset, Eigen::Index{1} << ns), cfg.max_qubits);
        }
        it.theta_hat = static_cast<double>(it.peak) / n_out;
        it.shift = wrap_unit(it.theta_hat - 0.25);
        trace.iterations.push_back(std::move(it));

        if (k + 1 < cfg.iterations) {
            // (e^{-i 2 pi phi_k} V_k)^2 reuses the V_k^2 already formed.
            const Complex phase = std::polar(1.0, -2.0 * kTwoPi * trace.iterations.back().shift);
            v = DenseUnitary(phase * powers[1].matrix());
        }
    }

    const auto& last = trace.iterations.back();
    trace.final_remainder =
        (cfg.mode == PeaMode::Argmax && cfg.final_estimate == FinalEstimate::KernelFit)
            ? kernel_fit_phase(last.distribution)
            : last.theta_hat;
    trace.phase = reconstruct_phase(trace);
    trace.energy = kTwoPi * trace.phase / cfg.tau;
    return trace;
}

double reconstruct_phase(const PeaTrace& trace) {
    if (trace.iterations.empty()) throw DomainError("empty PEA trace");
    double theta = trace.final_remainder;
    for (auto k = static_cast<std::ptrdiff_t>(trace.iterations.size()) - 2; k >= 0; --k)
        theta = trace.iterations[static_cast<std::size_t>(k)].shift + theta / 2.0;
    return wrap_unit(theta);
}

double reconstruct_energy(const PeaTrace& trace, double tau) {
    if (tau == 0.0) throw DomainError("tau must be non-zero");
    return kTwoPi * reconstruct_phase(trace) / tau;
}

double outcome_energy(const PeaTrace& trace, int k, int outcome) {
    if (k < 0 || k >= static_cast<int>(trace.iterations.size()))
        throw IndexError("iteration index out of range");
    double phi = static_cast<double>(outcome) / (1 << trace.readout_bits);
    for (int i = k - 1; i >= 0; --i) phi = trace.iterations[static_cast<std::size_t>(i)].shift + phi / 2.0;
    return kTwoPi * wrap_unit(phi) / trace.tau;
}

std::string phase_bits(double phase, int nbits) {
    std::string out;
    double x = wrap_unit(phase);
    for (int i = 0; i < nbits; ++i) {
        x *= 2.0;
        const bool bit = x >= 1.0;
        out.push_back(bit ? '1' : '0');
        if (bit) x -= 1.0;
    }
    return out;
}

}  // namespace molpea
