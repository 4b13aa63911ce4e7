#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "levylab/errors.hpp"
#include "levylab/grid.hpp"
#include "levylab/jump_path.hpp"

namespace levylab {

// All CSV writers print doubles with max_digits10 so a reload is bit-exact.
inline std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

namespace csv_detail {

inline std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

// leading "# key=value" comment block
inline std::map<std::string, std::string> read_meta(std::istream& in, std::string& first_line) {
    std::map<std::string, std::string> meta;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            if (eq != std::string::npos) meta[line.substr(2, eq - 2)] = line.substr(eq + 1);
        } else {
            first_line = line;
            break;
        }
    }
    return meta;
}

}  // namespace csv_detail

inline void save_jump_path_csv(const JumpPath& p, const std::string& file) {
    std::ofstream out(file);
    if (!out) throw Error("cannot open " + file + " for writing");
    out << "# T=" << fmt_double(p.T) << "\n# eps=" << fmt_double(p.eps) << "\n# seed=" << p.seed
        << "\n# spec_ref=" << p.spec_ref << "\n# dim=" << p.dim << "\n# R=" << fmt_double(p.R)
        << "\n";
    out << "t";
    for (int c = 0; c < p.dim; ++c) out << ",z_" << (c + 1);
    out << "\n";
    for (const auto& j : p.jumps) {
        out << fmt_double(j.t);
        for (int c = 0; c < p.dim; ++c) out << "," << fmt_double(j.z[c]);
        out << "\n";
    }
}

inline JumpPath load_jump_path_csv(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file);
    std::string header;
    const auto meta = csv_detail::read_meta(in, header);
    JumpPath p;
    p.T = std::stod(meta.at("T"));
    p.eps = std::stod(meta.at("eps"));
    p.seed = std::stoull(meta.at("seed"));
    p.spec_ref = meta.at("spec_ref");
    p.dim = std::stoi(meta.at("dim"));
    p.R = std::stod(meta.at("R"));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = csv_detail::split(line);
        Jump j;
        j.t = std::stod(cells.at(0));
        for (int c = 0; c < p.dim; ++c) j.z[c] = std::stod(cells.at(1 + static_cast<std::size_t>(c)));
        p.jumps.push_back(j);
    }
    return p;
}

inline void save_grid_field_csv(const GridField& f, const std::string& file) {
    std::ofstream out(file);
    if (!out) throw Error("cannot open " + file + " for writing");
    const auto& g = f.grid();
    out << "# dim=" << g.dim << "\n# L=" << fmt_double(g.L) << "\n# N=" << g.N
        << "\n# comps=" << f.comps() << "\n";
    out << "index";
    for (int c = 0; c < f.comps(); ++c) out << ",v_" << c;
    out << "\n";
    for (std::size_t i = 0; i < f.npoints(); ++i) {
        out << i;
        for (int c = 0; c < f.comps(); ++c) out << "," << fmt_double(f.at(i, c));
        out << "\n";
    }
}

inline GridField load_grid_field_csv(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file);
    std::string header;
    const auto meta = csv_detail::read_meta(in, header);
    const PeriodicGrid g(std::stoi(meta.at("dim")), std::stod(meta.at("L")),
                         std::stoi(meta.at("N")));
    GridField f(g, std::stoi(meta.at("comps")));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = csv_detail::split(line);
        const std::size_t i = std::stoull(cells.at(0));
        for (int c = 0; c < f.comps(); ++c)
            f.at(i, c) = std::stod(cells.at(1 + static_cast<std::size_t>(c)));
    }
    return f;
}

// FNV-1a over file bytes, for the report manifest.
inline std::uint64_t file_content_hash(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error("cannot open " + file);
    std::uint64_t h = 1469598103934665603ULL;
    char ch;
    while (in.get(ch)) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace levylab
