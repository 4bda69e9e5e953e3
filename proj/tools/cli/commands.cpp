// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "molpea/asp.hpp"
#include "molpea/integrals.hpp"
#include "molpea/mappings.hpp"
#include "molpea/oracle.hpp"
#include "molpea/pauli.hpp"
#include "molpea/pea.hpp"
#include "molpea/serialize.hpp"
#include "molpea/simulator.hpp"
#include "molpea/trotter.hpp"

namespace molpea::cli {

namespace {

namespace fs = std::filesystem;

/// Invalid value that CLI11 validators cannot express.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string output_dir;
    std::uint64_t seed = 0;
};

struct SystemOptions {
    std::string fcidump;
    std::string mapping = "compact_singlet";
};

struct PeaOptions {
    int readout_bits = 4;
    int iterations = 20;
    std::string reference = "hf-auto";
    std::string mode = "argmax";
    std::string final_estimate = "kernel-fit";
    double tolerance = 0.0;  // 0: derived from the run's phase resolution
};

struct QubitsOptions {
    int norb = 0;
    int nelec = 0;
    std::string scan;
    double ratio = 1.0;
    std::string format = "text";
};

struct AspOptions {
    int steps = 1000;
    double total_time = 0.0;
    bool then_pea = false;
};

struct TrotterOptions {
    std::vector<int> m_list{1, 2, 4, 8, 16};
    int repetitions = 1;
    int pea_repetitions = 0;
    bool circuit = false;
    double tolerance = 1e-5;
};

struct HamiltonianOptions {
    bool matrix = false;
};

std::string fixed(double v, int digits = 10) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

fs::path output_dir(const CommonOptions& c) {
    if (!c.output_dir.empty()) return c.output_dir;
    if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
    return ".";
}

void write_file(const fs::path& dir, const std::string& name, const std::string& content) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    const fs::path path = dir / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f << content;
    if (!f) throw IoError("failed writing " + path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

double reference_energy(const PeaOptions& o, const IntegralTable& table) {
    if (o.reference == "hf-auto") return hf_reference_energy(table);
    try {
        std::size_t used = 0;
        const double v = std::stod(o.reference, &used);
        if (used != o.reference.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw UsageError("--reference must be 'hf-auto' or a number, got '" + o.reference + "'");
    }
}

PeaConfig pea_config(const PeaOptions& o, const CommonOptions& c, double tau, double reference) {
    PeaConfig cfg;
    cfg.readout_bits = o.readout_bits;
    cfg.iterations = o.iterations;
    cfg.tau = tau;
    cfg.reference_energy = reference;
    cfg.seed = c.seed;
    cfg.mode = o.mode == "sampled" ? PeaMode::Sampled : PeaMode::Argmax;
    cfg.final_estimate = o.final_estimate == "peak" ? FinalEstimate::Peak : FinalEstimate::KernelFit;
    return cfg;
}

/// Default cross-check tolerance: the phase resolution 2^-(K+m) of the run
/// in hartree, and never tighter than 2e-6.
double pea_tolerance(const PeaOptions& o, double tau) {
    if (o.tolerance > 0.0) return o.tolerance;
    const double resolution = 2.0 * std::numbers::pi / std::abs(tau) *
                              std::ldexp(1.0, -(o.iterations + o.readout_bits));
    return std::max(2e-6, 2.0 * resolution);
}

/// Writes the trace and its distributions, prints the summary line and
/// returns the exit code of the cross-check.
int report_pea(const PeaTrace& trace, Json header, double core_energy, double e_diag,
               double tolerance, const CommonOptions& c, std::ostream& out, std::ostream& err) {
    const double delta = std::abs(trace.energy - e_diag);
    const bool ok = delta <= tolerance;
    Json j = std::move(header);
    j.update(to_json(trace));
    j["energy_total"] = trace.energy + core_energy;
    j["diagonalization_energy"] = e_diag;
    j["abs_error"] = delta;
    j["tolerance"] = tolerance;
    j["within_tolerance"] = ok;

    const fs::path dir = output_dir(c);
    write_file(dir, "pea_trace.json", dump(j));
    for (std::size_t k = 0; k < trace.iterations.size(); ++k) {
        std::ostringstream csv;
        write_distribution_csv(csv, trace, static_cast<int>(k));
        std::ostringstream name;
        name << "pea_distribution_k" << std::setw(2) << std::setfill('0') << k << ".csv";
        write_file(dir, name.str(), csv.str());
    }
    for (const auto& w : trace.warnings) err << "warning: " << w << "\n";
    out << "E_electronic=" << fixed(trace.energy) << " E_total=" << fixed(trace.energy + core_energy)
        << " E_diagonalization=" << fixed(e_diag) << " |dE|=" << std::scientific
        << std::setprecision(3) << delta << std::defaultfloat << "\n";
    if (!ok) {
        err << "error: PEA energy differs from diagonalization by " << delta
            << " hartree, above the tolerance " << tolerance << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

/// PEA on a compact-mapped Hamiltonian from `initial`.
int run_compact_pea(const IntegralTable& table, const CompactHamiltonian& ch,
                    const RealSpectrum& oracle, const StateVector& initial, const PeaOptions& o,
                    const CommonOptions& c, std::ostream& out, std::ostream& err) {
    const double reference = reference_energy(o, table);
    const double tau = choose_tau(reference);
    PeaConfig cfg = pea_config(o, c, tau, reference);
    cfg.target = oracle.ground.cast<Complex>();
    const DenseUnitary u = expm_i_hermitian(ch.hamiltonian, tau);
    const PeaTrace trace = recursive_pea(u, initial, cfg);

    Json header;
    header["command"] = "pea";
    header["mapping"] = std::string(to_string(ch.kind));
    header["dimension"] = ch.hamiltonian.rows();
    header["system_qubits"] = ch.nqubits;
    header["reference_energy"] = reference;
    header["core_energy"] = table.core_energy();
    header["mode"] = o.mode;
    header["seed"] = c.seed;
    return report_pea(trace, std::move(header), table.core_energy(), oracle.ground_energy(),
                      pea_tolerance(o, tau), c, out, err);
}

MappingKind compact_kind(const std::string& text) {
    const MappingKind kind = parse_mapping_kind(text);
    if (kind == MappingKind::Direct)
        throw DomainError("this command needs a compact mapping; the direct mapping is "
                          "simulated through 'trotter --pea-repetitions'");
    return kind;
}

int cmd_qubits(const QubitsOptions& o, std::ostream& out) {
    if (!o.scan.empty()) {
        const auto dots = o.scan.find("..");
        int lo = 0;
        int hi = 0;
        try {
            if (dots == std::string::npos) throw std::invalid_argument("no range");
            lo = std::stoi(o.scan.substr(0, dots));
            hi = std::stoi(o.scan.substr(dots + 2));
        } catch (const std::exception&) {
            throw UsageError("--scan expects a range a..b, got '" + o.scan + "'");
        }
        if (lo < 1 || hi < lo) throw UsageError("--scan needs 1 <= a <= b");
        if (!(o.ratio > 0.0) || o.ratio > 2.0) throw UsageError("--ratio must lie in (0, 2]");
        std::vector<QubitScanRow> rows;
        for (int n = lo; n <= hi; ++n) {
            int nelec = 2 * static_cast<int>(std::lround(o.ratio * n / 2.0));
            nelec = std::clamp(nelec, 0, 2 * n);
            rows.push_back({n, nelec, qubit_requirements(n, nelec, MappingKind::Direct).nqubits,
                            qubit_requirements(n, nelec, MappingKind::Compact).nqubits,
                            qubit_requirements(n, nelec, MappingKind::CompactSinglet).nqubits});
        }
        write_qubit_scan_csv(out, rows);
        return kExitOk;
    }
    if (o.norb < 1) throw UsageError("qubits needs --norb and --nelec, or --scan a..b");
    const MappingKind kinds[] = {MappingKind::Direct, MappingKind::Compact,
                                 MappingKind::CompactSinglet};
    std::vector<MappingSpec> specs;
    for (auto k : kinds) specs.push_back(qubit_requirements(o.norb, o.nelec, k));
    if (o.format == "json") {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["norb"] = o.norb;
        j["nelec"] = o.nelec;
        j["mappings"] = Json::array();
        for (const auto& s : specs) j["mappings"].push_back(to_json(s));
        out << dump(j);
    } else if (o.format == "csv") {
        write_qubit_scan_csv(out, {{o.norb, o.nelec, specs[0].nqubits, specs[1].nqubits,
                                    specs[2].nqubits}});
    } else {
        for (const auto& s : specs)
            out << to_string(s.kind) << ' ' << s.nqubits << " (dimension " << s.subspace_dimension
                << ")\n";
    }
    return kExitOk;
}

int cmd_hamiltonian(const SystemOptions& s, const HamiltonianOptions& o, const CommonOptions& c,
                    std::ostream& out) {
    const IntegralTable table = read_fcidump(s.fcidump);
    const MappingKind kind = parse_mapping_kind(s.mapping);
    const fs::path dir = output_dir(c);
    if (kind == MappingKind::Direct) {
        const PauliHamiltonian h = jordan_wigner(table);
        Json j;
        j["mapping"] = "direct";
        j["core_energy"] = table.core_energy();
        j.update(to_json(h));
        write_file(dir, "hamiltonian.json", dump(j));
        out << "direct mapping: " << h.nqubits() << " qubits, " << h.size() << " Pauli terms\n";
        return kExitOk;
    }
    const CompactHamiltonian ch = build_compact_hamiltonian(table, kind);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["mapping"] = std::string(to_string(kind));
    j["dimension"] = ch.hamiltonian.rows();
    j["qubits"] = ch.nqubits;
    j["core_energy"] = table.core_energy();
    j["hf_energy"] = ch.hamiltonian(0, 0);
    write_file(dir, "hamiltonian.json", dump(j));
    if (o.matrix) {
        std::ostringstream csv;
        for (Eigen::Index r = 0; r < ch.hamiltonian.rows(); ++r) {
            for (Eigen::Index col = 0; col < ch.hamiltonian.cols(); ++col) {
                if (col) csv << ',';
                write_real(csv, ch.hamiltonian(r, col));
            }
            csv << '\n';
        }
        write_file(dir, "hamiltonian_matrix.csv", csv.str());
    }
    out << to_string(kind) << " mapping: dimension " << ch.hamiltonian.rows() << ", " << ch.nqubits
        << " qubits\n";
    return kExitOk;
}

int cmd_fci(const SystemOptions& s, const CommonOptions& c, std::ostream& out, std::ostream& err) {
    const IntegralTable table = read_fcidump(s.fcidump);
    const CompactHamiltonian ch = build_compact_hamiltonian(table, compact_kind(s.mapping));
    const RealSpectrum spec = diagonalize(ch.hamiltonian);
    const double e0 = spec.ground_energy();

    Json j;
    j["schema_version"] = kSchemaVersion;
    j["mapping"] = std::string(to_string(ch.kind));
    j["dimension"] = ch.hamiltonian.rows();
    j["qubits"] = ch.nqubits;
    j["core_energy"] = table.core_energy();
    j["hf_energy"] = ch.hamiltonian(0, 0);
    j["energy_electronic"] = e0;
    j["energy_total"] = e0 + table.core_energy();
    j["gap"] = spec.gap;
    j["hf_overlap_sq"] = spec.ground(0) * spec.ground(0);
    Json low = Json::array();
    for (Eigen::Index i = 0; i < std::min<Eigen::Index>(10, spec.eigenvalues.size()); ++i)
        low.push_back(spec.eigenvalues(i));
    j["lowest_eigenvalues"] = std::move(low);

    int code = kExitOk;
    if (table.norb() <= kFockOracleMaxOrbitals && table.ms2() == 0 && table.nelec() % 2 == 0) {
        const Eigen::MatrixXd fock = fock_space_hamiltonian(table);
        const auto idx =
            fock_sector_indices(table.norb(), table.nelec() / 2, table.nelec() / 2);
        Eigen::MatrixXd sector(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b)
                sector(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                    fock(static_cast<Eigen::Index>(idx[a]), static_cast<Eigen::Index>(idx[b]));
        const double oracle = lowest_two(sector).first;
        j["fock_oracle_energy"] = oracle;
        if (std::abs(oracle - e0) > 1e-8) {
            err << "error: Fock-space oracle energy " << oracle << " disagrees with " << e0 << "\n";
            code = kExitMismatch;
        }
    }
    write_file(output_dir(c), "fci.json", dump(j));
    out << "E_electronic=" << fixed(e0) << " E_total=" << fixed(e0 + table.core_energy())
        << " dimension=" << ch.hamiltonian.rows() << " qubits=" << ch.nqubits << "\n";
    return code;
}

int cmd_pea(const SystemOptions& s, const PeaOptions& o, const CommonOptions& c, std::ostream& out,
            std::ostream& err) {
    const IntegralTable table = read_fcidump(s.fcidump);
    const CompactHamiltonian ch = build_compact_hamiltonian(table, compact_kind(s.mapping));
    const RealSpectrum oracle = diagonalize(ch.hamiltonian);
    const StateVector initial = StateVector::basis_state(ch.nqubits, 0);
    return run_compact_pea(table, ch, oracle, initial, o, c, out, err);
}

int cmd_asp(const SystemOptions& s, const AspOptions& a, const PeaOptions& o,
            const CommonOptions& c, std::ostream& out, std::ostream& err) {
    const IntegralTable table = read_fcidump(s.fcidump);
    const CompactHamiltonian ch = build_compact_hamiltonian(table, compact_kind(s.mapping));
    const double e_hf = ch.hamiltonian(0, 0);
    AspPath path;
    path.h_start = build_hf_hamiltonian(ch.hamiltonian.rows(), e_hf);
    path.h_end = ch.hamiltonian;
    path.steps = a.steps;
    path.total_time = a.total_time > 0.0 ? a.total_time : default_total_time(a.steps, e_hf);
    const StateVector initial = StateVector::basis_state(ch.nqubits, 0);
    const AspTrace trace = asp_evolve(path, initial);

    std::ostringstream csv;
    write_asp_csv(csv, trace);
    write_file(output_dir(c), "asp_trace.csv", csv.str());
    double min_gap = trace.steps.front().gap;
    for (const auto& r : trace.steps) min_gap = std::min(min_gap, r.gap);
    out << "T=" << fixed(path.total_time, 6) << " steps=" << path.steps
        << " overlap_initial=" << fixed(trace.steps.front().overlap_sq, 6)
        << " overlap_final=" << fixed(trace.steps.back().overlap_sq, 6)
        << " min_gap=" << fixed(min_gap, 6) << "\n";
    if (!a.then_pea) return kExitOk;

    RealSpectrum oracle;
    oracle.eigenvalues = Eigen::VectorXd::Constant(1, trace.target_energy);
    oracle.ground = trace.target_ground;
    const StateVector prepared = StateVector::embed(trace.final_state);
    return run_compact_pea(table, ch, oracle, prepared, o, c, out, err);
}

int cmd_trotter(const SystemOptions& s, const TrotterOptions& t, const PeaOptions& o,
                const CommonOptions& c, std::ostream& out, std::ostream& err) {
    const IntegralTable table = read_fcidump(s.fcidump);
    const PauliHamiltonian h = jordan_wigner(table);
    const double reference = reference_energy(o, table);
    const double tau = choose_tau(reference);
    const fs::path dir = output_dir(c);

    std::vector<ErrorScanRow> rows;
    for (int m : t.m_list) rows.push_back({m, trotter_error(h, tau, m)});
    std::ostringstream csv;
    write_error_scan_csv(csv, rows);
    write_file(dir, "trotter_error.csv", csv.str());

    const GateReport report = gate_count(h, t.repetitions);
    Json j;
    j["command"] = "trotter";
    j["tau"] = tau;
    j.update(to_json(report));
    write_file(dir, "gate_report.json", dump(j));
    out << "terms=" << report.term_count << " max_support=" << report.max_support
        << " max_mode_support=" << report.max_mode_support << " M=" << report.repetitions
        << " two_qubit_gates=" << report.two_qubit_gates
        << " one_qubit_gates=" << report.one_qubit_gates << "\n";
    for (const auto& r : rows) out << "M=" << r.repetitions << " error=" << r.error << "\n";

    if (t.circuit) {
        std::ostringstream text;
        write_circuit_text(text, trotter_step(h, tau, t.repetitions));
        write_file(dir, "circuit.txt", text.str());
    }
    if (t.pea_repetitions <= 0) return kExitOk;

    const CompactHamiltonian det = build_compact_hamiltonian(table, MappingKind::Compact);
    const double e_diag = lowest_two(det.hamiltonian).first;
    const std::uint64_t hf = hf_occupation_index(table);
    const StateVector initial = StateVector::basis_state(h.nqubits(), hf);

    // Target: the Fock-space eigenvector at the sector ground energy with the
    // largest HF weight.
    Eigen::VectorXcd target;
    double best = -1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.to_dense());
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        if (std::abs(es.eigenvalues()(i) - e_diag) > 1e-8) continue;
        const double w = std::norm(es.eigenvectors()(static_cast<Eigen::Index>(hf), i));
        if (w > best) {
            best = w;
            target = es.eigenvectors().col(i);
        }
    }
    PeaConfig cfg = pea_config(o, c, tau, reference);
    if (target.size() > 0) cfg.target = target;
    const PeaTrace trace = controlled_trotter_pea(h, initial, cfg, t.pea_repetitions);

    Json header;
    header["command"] = "trotter-pea";
    header["mapping"] = "direct";
    header["system_qubits"] = h.nqubits();
    header["trotter_repetitions"] = t.pea_repetitions;
    header["reference_energy"] = reference;
    header["core_energy"] = table.core_energy();
    header["mode"] = o.mode;
    header["seed"] = c.seed;
    const double tol = std::max(t.tolerance, pea_tolerance(o, tau));
    return report_pea(trace, std::move(header), table.core_energy(), e_diag, tol, c, out, err);
}

void add_common(CLI::App* cmd, CommonOptions& c) {
    cmd->add_option("-o,--output-dir", c.output_dir,
                    std::string("Directory for artifacts (default: $") + kOutputDirEnv +
                        " or the current directory)");
    cmd->add_option("--seed", c.seed, "Seed for sampled measurements")->capture_default_str();
}

enum class Mappings { None, Compact, All };

void add_system(CLI::App* cmd, SystemOptions& s, Mappings mappings) {
    cmd->add_option("fcidump", s.fcidump, "FCIDUMP integral file")->required();
    if (mappings == Mappings::None) return;
    std::vector<std::string> kinds{"compact", "compact_singlet"};
    if (mappings == Mappings::All) kinds.insert(kinds.begin(), "direct");
    cmd->add_option("-m,--mapping", s.mapping, "Qubit mapping")
        ->check(CLI::IsMember(kinds))
        ->capture_default_str();
}

void add_pea(CLI::App* cmd, PeaOptions& o) {
    cmd->add_option("--readout-bits", o.readout_bits, "Read-out register size m")
        ->check(CLI::Range(4, 8))
        ->capture_default_str();
    cmd->add_option("--iterations", o.iterations, "Recursive iterations K")
        ->check(CLI::Range(1, 60))
        ->capture_default_str();
    cmd->add_option("--reference", o.reference,
                    "Electronic reference energy for tau, or hf-auto")
        ->capture_default_str();
    cmd->add_option("--mode", o.mode, "Peak selection")
        ->check(CLI::IsMember({"argmax", "sampled"}))
        ->capture_default_str();
    cmd->add_option("--final-estimate", o.final_estimate, "Last-iteration remainder estimate")
        ->check(CLI::IsMember({"kernel-fit", "peak"}))
        ->capture_default_str();
    cmd->add_option("--tolerance", o.tolerance,
                    "Cross-check tolerance in hartree (default: run resolution, at least 2e-6)")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Io:
        case ErrorKind::Parse:
        case ErrorKind::Index:
        case ErrorKind::Consistency: return kExitInput;
        case ErrorKind::Domain:
        case ErrorKind::Unsupported: return kExitDomain;
        case ErrorKind::Preparation: return kExitPreparation;
        case ErrorKind::Numerics:
        case ErrorKind::Symmetry:
        case ErrorKind::Degeneracy:
        case ErrorKind::Encoding:
        case ErrorKind::Shape: return kExitNumerics;
        case ErrorKind::Capacity: return kExitCapacity;
    }
    return kExitFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Molecular energies by recursive phase estimation on a statevector simulator"};
    app.name("molpea");
    app.require_subcommand(1);

    CommonOptions common;
    SystemOptions system;
    PeaOptions pea;
    QubitsOptions qubits;
    AspOptions asp;
    TrotterOptions trotter;
    HamiltonianOptions ham;

    auto* q = app.add_subcommand("qubits", "Qubits needed by each mapping");
    q->add_option("--norb", qubits.norb, "Spatial orbitals (basis functions)")
        ->check(CLI::PositiveNumber);
    q->add_option("--nelec", qubits.nelec, "Electrons")->check(CLI::NonNegativeNumber);
    q->add_option("--scan", qubits.scan, "Basis-function range a..b, emitted as CSV");
    q->add_option("--ratio", qubits.ratio, "Electrons per basis function in scan mode")
        ->capture_default_str();
    q->add_option("--format", qubits.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    auto* hcmd = app.add_subcommand("hamiltonian", "Mapped Hamiltonian (Pauli terms or matrix)");
    add_system(hcmd, system, Mappings::All);
    add_common(hcmd, common);
    hcmd->add_flag("--matrix", ham.matrix, "Also write the compact matrix as CSV");

    auto* fci = app.add_subcommand("fci", "Exact diagonalization energy");
    add_system(fci, system, Mappings::Compact);
    add_common(fci, common);

    auto* pcmd = app.add_subcommand("pea", "Recursive phase estimation from the HF state");
    add_system(pcmd, system, Mappings::Compact);
    add_common(pcmd, common);
    add_pea(pcmd, pea);

    auto* acmd = app.add_subcommand("asp", "Adiabatic state preparation from the HF state");
    add_system(acmd, system, Mappings::Compact);
    add_common(acmd, common);
    add_pea(acmd, pea);
    acmd->add_option("--steps", asp.steps, "Time slices")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    acmd->add_option("--total-time", asp.total_time,
                     "Total time T in inverse hartree (default: steps * 0.1 / |E_HF|)")
        ->check(CLI::PositiveNumber);
    acmd->add_flag("--then-pea", asp.then_pea, "Run the PEA from the prepared state");

    auto* tcmd = app.add_subcommand("trotter", "Product-formula circuits, errors and gate counts");
    add_system(tcmd, system, Mappings::None);
    add_common(tcmd, common);
    add_pea(tcmd, pea);
    tcmd->add_option("--m-list", trotter.m_list, "Repetition counts for the error scan")
        ->check(CLI::PositiveNumber)
        ->delimiter(',')
        ->capture_default_str();
    tcmd->add_option("-M,--repetitions", trotter.repetitions, "Repetitions for the gate report")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    tcmd->add_option("--pea-repetitions", trotter.pea_repetitions,
                     "Run the controlled-circuit PEA with this many repetitions")
        ->check(CLI::PositiveNumber);
    tcmd->add_flag("--circuit", trotter.circuit, "Write the circuit as text");
    tcmd->add_option("--trotter-tolerance", trotter.tolerance,
                     "Cross-check tolerance for the Trotter PEA in hartree")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*q) return cmd_qubits(qubits, out);
        if (*hcmd) return cmd_hamiltonian(system, ham, common, out);
        if (*fci) return cmd_fci(system, common, out, err);
        if (*pcmd) return cmd_pea(system, pea, common, out, err);
        if (*acmd) return cmd_asp(system, asp, pea, common, out, err);
        if (*tcmd) return cmd_trotter(system, trotter, pea, common, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace molpea::cli
