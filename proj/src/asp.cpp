// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include "molpea/asp.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "molpea/errors.hpp"

namespace molpea {

namespace {

constexpr double kDegenerateGap = 1e-12;

void validate(const AspPath& path) {
    const auto& a = path.h_start;
    const auto& b = path.h_end;
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw ShapeError("adiabatic path matrices must be square and of equal dimension");
    if (a.rows() < 2) throw ShapeError("adiabatic path needs dimension >= 2 to define a gap");
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-10 ||
        (b - b.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw SymmetryError("adiabatic path matrices must be symmetric");
    if (path.steps < 1) throw DomainError("adiabatic path needs at least one step");
}

Eigen::MatrixXd interpolate(const AspPath& path, double s) {
    return (1.0 - s) * path.h_start + s * path.h_end;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve(const Eigen::MatrixXd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) throw NumericsError("eigensolver failed along adiabatic path");
    return es;
}

double checked_gap(const Eigen::VectorXd& eigenvalues, double s) {
    const double gap = eigenvalues(1) - eigenvalues(0);
    if (gap < kDegenerateGap) {
        std::ostringstream msg;
        msg << "instantaneous ground state is degenerate at s = " << s << " (gap " << gap << ")";
        throw DegeneracyError(msg.str());
    }
    return gap;
}

double overlap_sq(const Eigen::VectorXd& ground, const Eigen::VectorXcd& psi) {
    return std::norm(ground.cast<Complex>().dot(psi));
}

}  // namespace

Eigen::MatrixXd build_hf_hamiltonian(Eigen::Index dimension, double hf_energy) {
    if (dimension < 1) throw ShapeError("HF Hamiltonian needs a positive dimension");
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dimension, dimension);
    h(0, 0) = hf_energy;
    return h;
}

double default_total_time(int steps, double hf_energy) {
    if (hf_energy == 0.0) throw DomainError("HF energy must be non-zero to scale the time step");
    if (steps < 1) throw DomainError("adiabatic path needs at least one step");
    return steps * 0.1 / std::abs(hf_energy);
}

AspTrace asp_evolve(const AspPath& path, const StateVector& initial) {
    validate(path);
    if (!(path.total_time > 0.0)) throw DomainError("adiabatic total time must be positive");
    const Eigen::Index d = path.h_end.rows();
    if (static_cast<Eigen::Index>(initial.size()) < d)
        throw ShapeError("initial state is smaller than the adiabatic path dimension");
    const auto& amps = initial.amplitudes();
    if (amps.tail(amps.size() - d).squaredNorm() > 1e-20)
        throw ShapeError("initial state has weight outside the adiabatic path subspace");

    AspTrace trace;
    const auto target = solve(path.h_end);
    trace.target_ground = target.eigenvectors().col(0);
    trace.target_energy = target.eigenvalues()(0);

    Eigen::VectorXcd psi = amps.head(d);
    const double dt = path.total_time / path.steps;
    trace.steps.reserve(static_cast<std::size_t>(path.steps) + 1);
    for (int j = 0; j <= path.steps; ++j) {
        const double s = static_cast<double>(j) / path.steps;
        const auto es = solve(interpolate(path, s));
        if (j > 0) {
            // psi <- Q e^{-i lambda dt} Q^T psi
            const Eigen::MatrixXcd q = es.eigenvectors().cast<Complex>();
            Eigen::VectorXcd c = q.adjoint() * psi;
            for (Eigen::Index i = 0; i < d; ++i) c(i) *= std::polar(1.0, -es.eigenvalues()(i) * dt);
            psi = q * c;
        }
        AspStep row;
        row.s = s;
        row.gap = checked_gap(es.eigenvalues(), s);
        row.overlap_sq = overlap_sq(trace.target_ground, psi);
        row.instantaneous_overlap_sq = overlap_sq(es.eigenvectors().col(0), psi);
        trace.steps.push_back(row);
    }
    trace.final_state = std::move(psi);
    return trace;
}

std::vector<GapPoint> gap_profile(const AspPath& path) {
    validate(path);
    std::vector<GapPoint> out;
    out.reserve(static_cast<std::size_t>(path.steps) + 1);
    for (int j = 0; j <= path.steps; ++j) {
        const double s = static_cast<double>(j) / path.steps;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(interpolate(path, s),
                                                          Eigen::EigenvaluesOnly);
        out.push_back({s, es.eigenvalues()(1) - es.eigenvalues()(0)});
    }
    return out;
}

}  // namespace molpea
