// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include "molpea/integrals.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "molpea/errors.hpp"

namespace molpea {

namespace {

constexpr double kDuplicateTolerance = 1e-10;

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

/// Parses `KEY=value,...` pairs from the namelist text. List values such as
/// ORBSYM keep every comma-separated item; only scalars are used.
std::map<std::string, std::string> parse_namelist(const std::string& text) {
    std::map<std::string, std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto eq = text.find('=', pos);
        if (eq == std::string::npos) break;
        std::size_t kend = eq;
        while (kend > pos && std::isspace(static_cast<unsigned char>(text[kend - 1]))) --kend;
        std::size_t kbeg = kend;
        while (kbeg > pos && (std::isalnum(static_cast<unsigned char>(text[kbeg - 1])) ||
                              text[kbeg - 1] == '_'))
            --kbeg;
        std::string key = upper(text.substr(kbeg, kend - kbeg));
        // Value runs until the next KEY= token.
        auto next_eq = text.find('=', eq + 1);
        std::size_t vend = text.size();
        if (next_eq != std::string::npos) {
            std::size_t k = next_eq;
            while (k > eq + 1 && std::isspace(static_cast<unsigned char>(text[k - 1]))) --k;
            while (k > eq + 1 && (std::isalnum(static_cast<unsigned char>(text[k - 1])) ||
                                  text[k - 1] == '_'))
                --k;
            vend = k;
        }
        std::string value = text.substr(eq + 1, vend - eq - 1);
        if (key.empty()) throw ParseError("FCIDUMP header: '=' without a key");
        out[key] = value;
        pos = eq + 1;
    }
    return out;
}

int header_int(const std::map<std::string, std::string>& nl, const std::string& key,
               std::optional<int> fallback) {
    auto it = nl.find(key);
    if (it == nl.end()) {
        if (fallback) return *fallback;
        throw ParseError("FCIDUMP header is missing " + key);
    }
    std::string v = it->second;
    v.erase(std::remove_if(v.begin(), v.end(),
                           [](unsigned char c) { return std::isspace(c) || c == ','; }),
            v.end());
    int out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ParseError("FCIDUMP header: bad integer for " + key + ": '" + it->second + "'");
    return out;
}

double parse_value(std::string token, int line_no) {
    for (auto& c : token)
        if (c == 'D' || c == 'd') c = 'E';
    try {
        std::size_t used = 0;
        double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError("FCIDUMP line " + std::to_string(line_no) + ": bad value '" + token + "'");
    }
}

class Assignment {
public:
    explicit Assignment(int norb)
        : norb_(norb),
          one_(static_cast<std::size_t>(norb) * norb, 0),
          two_(static_cast<std::size_t>(norb) * norb * norb * norb, 0) {}

    void one(IntegralTable& t, int p, int q, double v, int line_no) {
        auto idx = static_cast<std::size_t>(p) * norb_ + q;
        if (one_[idx]) {
            check(t.one_body(p, q), v, line_no);
            return;
        }
        t.set_one_body(p, q, v);
        one_[idx] = one_[static_cast<std::size_t>(q) * norb_ + p] = 1;
    }

    void two(IntegralTable& t, int p, int q, int r, int s, double v, int line_no) {
        if (two_[index(p, q, r, s)]) {
            check(t.two_body(p, q, r, s), v, line_no);
            return;
        }
        t.set_two_body(p, q, r, s, v);
        const std::array<std::array<int, 4>, 8> perms{{{p, q, r, s}, {q, p, r, s},
                                                       {p, q, s, r}, {q, p, s, r},
                                                       {r, s, p, q}, {s, r, p, q},
                                                       {r, s, q, p}, {s, r, q, p}}};
        for (const auto& x : perms) two_[index(x[0], x[1], x[2], x[3])] = 1;
    }

private:
    [[nodiscard]] std::size_t index(int p, int q, int r, int s) const {
        const auto n = static_cast<std::size_t>(norb_);
        return ((p * n + q) * n + r) * n + s;
    }
    static void check(double stored, double v, int line_no) {
        if (std::abs(stored - v) > kDuplicateTolerance) {
            std::ostringstream msg;
            msg << std::setprecision(17) << "FCIDUMP line " << line_no
                << ": value " << v << " conflicts with previously stored " << stored;
            throw ConsistencyError(msg.str());
        }
    }

    int norb_;
    std::vector<unsigned char> one_;
    std::vector<unsigned char> two_;
};

}  // namespace

IntegralTable::IntegralTable(int norb, int nelec, int ms2)
    : norb_(norb), nelec_(nelec), ms2_(ms2) {
    if (norb <= 0) throw DomainError("NORB must be positive, got " + std::to_string(norb));
    if (nelec < 0 || nelec > 2 * norb)
        throw DomainError("NELEC must lie in [0, 2*NORB], got " + std::to_string(nelec));
    const auto n = static_cast<std::size_t>(norb);
    h1_.assign(n * n, 0.0);
    h2_.assign(n * n * n * n, 0.0);
}

void IntegralTable::check_index(int p) const {
    if (p < 0 || p >= norb_)
        throw IndexError("orbital index " + std::to_string(p) + " outside [0, " +
                         std::to_string(norb_) + ")");
}

void IntegralTable::set_one_body(int p, int q, double value) {
    check_index(p);
    check_index(q);
    const auto n = static_cast<std::size_t>(norb_);
    h1_[p * n + q] = value;
    h1_[q * n + p] = value;
}

void IntegralTable::set_two_body(int p, int q, int r, int s, double value) {
    check_index(p);
    check_index(q);
    check_index(r);
    check_index(s);
    const auto n = static_cast<std::size_t>(norb_);
    auto at = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) -> double& {
        return h2_[((a * n + b) * n + c) * n + d];
    };
    at(p, q, r, s) = value;
    at(q, p, r, s) = value;
    at(p, q, s, r) = value;
    at(q, p, s, r) = value;
    at(r, s, p, q) = value;
    at(s, r, p, q) = value;
    at(r, s, q, p) = value;
    at(s, r, q, p) = value;
}

IntegralTable parse_fcidump(std::istream& in) {
    std::string header;
    std::string line;
    int line_no = 0;
    bool header_closed = false;
    bool header_opened = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string up = upper(line);
        if (!header_opened) {
            auto amp = up.find("&FCI");
            if (amp == std::string::npos) {
                if (up.find_first_not_of(" \t\r") == std::string::npos) continue;
                throw ParseError("FCIDUMP must start with an &FCI namelist header");
            }
            header_opened = true;
            std::string rest = line.substr(amp + 4);
            const std::string rest_up = upper(rest);
            auto end = rest_up.find("&END");
            if (end == std::string::npos) end = rest_up.find('/');
            if (end != std::string::npos) {
                header += rest.substr(0, end);
                header_closed = true;
                break;
            }
            header += rest + " ";
            continue;
        }
        auto end = up.find("&END");
        if (end == std::string::npos) end = up.find('/');
        if (end != std::string::npos) {
            header += line.substr(0, end);
            header_closed = true;
            break;
        }
        header += line + " ";
    }
    if (!header_closed) throw ParseError("FCIDUMP header is not terminated by &END or /");

    const auto namelist = parse_namelist(header);
    const int norb = header_int(namelist, "NORB", std::nullopt);
    const int nelec = header_int(namelist, "NELEC", std::nullopt);
    const int ms2 = header_int(namelist, "MS2", 0);
    if (norb <= 0) throw ParseError("FCIDUMP header: NORB must be positive");
    if (nelec < 0 || nelec > 2 * norb) throw ParseError("FCIDUMP header: NELEC out of range");

    IntegralTable table(norb, nelec, ms2);
    Assignment seen(norb);
    bool core_seen = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string value_token;
        if (!(ls >> value_token)) continue;
        std::array<long, 4> idx{};
        for (auto& i : idx) {
            if (!(ls >> i))
                throw ParseError("FCIDUMP line " + std::to_string(line_no) +
                                 ": expected 'value i j k l'");
        }
        std::string extra;
        if (ls >> extra)
            throw ParseError("FCIDUMP line " + std::to_string(line_no) + ": trailing tokens");
        const double value = parse_value(value_token, line_no);
        for (long i : idx) {
            if (i < 0 || i > norb)
                throw IndexError("FCIDUMP line " + std::to_string(line_no) + ": index " +
                                 std::to_string(i) + " outside 1..=" + std::to_string(norb));
        }
        const auto [i, j, k, l] = idx;
        if (i == 0 && j == 0 && k == 0 && l == 0) {
            if (core_seen && std::abs(table.core_energy() - value) > kDuplicateTolerance)
                throw ConsistencyError("FCIDUMP line " + std::to_string(line_no) +
                                       ": conflicting core energy");
            table.set_core_energy(value);
            core_seen = true;
        } else if (k == 0 && l == 0) {
            if (i == 0) throw IndexError("FCIDUMP line " + std::to_string(line_no) +
                                         ": zero first index in a one-body entry");
            if (j == 0) continue;  // orbital energy, not needed
            seen.one(table, static_cast<int>(i - 1), static_cast<int>(j - 1), value, line_no);
        } else {
            if (i == 0 || j == 0 || k == 0 || l == 0)
                throw IndexError("FCIDUMP line " + std::to_string(line_no) +
                                 ": zero index inside a two-body entry");
            seen.two(table, static_cast<int>(i - 1), static_cast<int>(j - 1),
                     static_cast<int>(k - 1), static_cast<int>(l - 1), value, line_no);
        }
    }
    return table;
}

IntegralTable read_fcidump(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open FCIDUMP file '" + path.string() + "'");
    return parse_fcidump(in);
}

void write_fcidump(std::ostream& out, const IntegralTable& table) {
    const int n = table.norb();
    out << " &FCI NORB=" << n << ",NELEC=" << table.nelec() << ",MS2=" << table.ms2() << ",\n";
    out << "  ORBSYM=";
    for (int i = 0; i < n; ++i) out << "1,";
    out << "\n  ISYM=1,\n &END\n";
    const auto old_flags = out.flags();
    const auto old_prec = out.precision();
    out << std::setprecision(17);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= p; ++q)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s <= r; ++s) {
                    if (p * n + q < r * n + s) continue;
                    const double v = table.two_body(p, q, r, s);
                    if (v == 0.0) continue;
                    out << ' ' << v << ' ' << p + 1 << ' ' << q + 1 << ' ' << r + 1 << ' '
                        << s + 1 << '\n';
                }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q <= p; ++q) {
            const double v = table.one_body(p, q);
            if (v == 0.0) continue;
            out << ' ' << v << ' ' << p + 1 << ' ' << q + 1 << " 0 0\n";
        }
    out << ' ' << table.core_energy() << " 0 0 0 0\n";
    out.flags(old_flags);
    out.precision(old_prec);
}

double hf_reference_energy(const IntegralTable& t, std::span<const int> occupied) {
    if (t.ms2() != 0 || t.nelec() % 2 != 0)
        throw UnsupportedError("HF reference energy requires a closed-shell system (MS2 = 0)");
    if (static_cast<int>(occupied.size()) * 2 != t.nelec())
        throw UnsupportedError("closed-shell HF needs NELEC/2 = " + std::to_string(t.nelec() / 2) +
                               " occupied orbitals, got " + std::to_string(occupied.size()));
    for (int i : occupied)
        if (i < 0 || i >= t.norb()) throw IndexError("occupied orbital out of range");
    double e = 0.0;
    for (int i : occupied) {
        e += 2.0 * t.one_body(i, i);
        for (int j : occupied) e += 2.0 * t.two_body(i, i, j, j) - t.two_body(i, j, j, i);
    }
    return e;
}

double hf_reference_energy(const IntegralTable& t) {
    std::vector<int> occ(static_cast<std::size_t>(std::max(t.nelec() / 2, 0)));
    for (std::size_t i = 0; i < occ.size(); ++i) occ[i] = static_cast<int>(i);
    return hf_reference_energy(t, occ);
}

}  // namespace molpea
