// io.cpp

#include "delamina/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace delamina {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("atomic_write: cannot open " + tmp.string());
        out << content;
        if (!out.good()) throw std::runtime_error("atomic_write: write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

void write_scalar_field(const std::string& path, const ScalarField& f, const std::string& kind) {
    nlohmann::json hdr;
    hdr["nx"] = f.grid.nx;
    hdr["ny"] = f.grid.ny;
    hdr["lx"] = f.grid.lx;
    hdr["ly"] = f.grid.ly;
    hdr["kind"] = kind;
    hdr["version"] = kVersion;
    std::string body = hdr.dump();
    body += '\n';
    for (double v : f.v) {
        body += format_double(v);
        body += '\n';
    }
    atomic_write(path, body);
}

ScalarField read_scalar_field(const std::string& path, std::string* kind_out) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("read_scalar_field: cannot open " + path);
    std::string header;
    std::getline(in, header);
    const nlohmann::json hdr = nlohmann::json::parse(header);
    Grid g(hdr.at("nx").get<int>(), hdr.at("ny").get<int>(), hdr.at("lx").get<double>(),
           hdr.at("ly").get<double>());
    if (kind_out) *kind_out = hdr.value("kind", "scalar");
    ScalarField f(g);
    for (std::size_t k = 0; k < g.nodes(); ++k)
        if (!(in >> f.v[k]))
            throw InvalidArgument("read_scalar_field: truncated node data in " + path);
    return f;
}

void write_state(const std::string& stem, const ConstructedState& s) {
    write_scalar_field(stem + ".w", s.w, "w");
    write_scalar_field(stem + ".ux", s.u.x, "ux");
    write_scalar_field(stem + ".uy", s.u.y, "uy");

    nlohmann::json meta;
    meta["construction"] = s.id;
    meta["predicted_energy"] = s.predicted_energy;
    meta["version"] = kVersion;
    const char* names[4] = {"left", "right", "bottom", "top"};
    for (int e = 0; e < 4; ++e)
        meta["boundary"][names[e]] =
            s.boundary.edge[e] == EdgeCondition::DirichletZero ? "dirichlet" : "free";
    if (s.laminate_params) {
        meta["laminate"]["period"] = s.laminate_params->period;
        meta["laminate"]["tube_width"] = s.laminate_params->tube_width;
        meta["laminate"]["boundary_layer"] = s.laminate_params->boundary_layer;
    }
    if (s.branching_params) {
        meta["branching"]["generations"] = s.branching_params->generations;
        meta["branching"]["base_period"] = s.branching_params->base_period;
        meta["branching"]["refinement_positions"] = s.branching_params->refinement_positions;
    }
    atomic_write(stem + ".json", meta.dump(2) + "\n");
}

std::string sweep_csv(const SweepResult& r) {
    std::string out = "sigma,gamma,regime,stretch,bend,bond,total,construction,converged\n";
    for (const auto& rec : r.records) {
        out += format_double(rec.sigma);
        out += ',';
        out += format_double(rec.gamma);
        out += ',';
        out += to_string(rec.regime);
        out += ',';
        if (rec.resolved) {
            out += format_double(rec.energy.stretch);
            out += ',';
            out += format_double(rec.energy.bend);
            out += ',';
            out += format_double(rec.energy.bond);
            out += ',';
            out += format_double(rec.energy.total);
        } else {
            out += "nan,nan,nan,nan";
        }
        out += ',';
        out += rec.construction;
        out += ',';
        out += rec.resolved ? (rec.minimized ? "minimized" : "constructed") : "unresolved";
        out += '\n';
    }
    return out;
}

std::string phase_diagram_csv(const PhaseDiagram& p) {
    std::string out = "sigma,gamma,regime,upper_bound,lower_bound\n";
    const int n = int(p.sigma.size());
    for (int jg = 0; jg < n; ++jg)
        for (int is = 0; is < n; ++is) {
            const double s = p.sigma[is], gm = p.gamma[jg];
            out += format_double(s);
            out += ',';
            out += format_double(gm);
            out += ',';
            out += to_string(p.label[std::size_t(jg) * n + is]);
            out += ',';
            out += format_double(upper_bound_value(s, gm));
            out += ',';
            out += format_double(lower_bound_value(s, gm));
            out += '\n';
        }
    return out;
}

std::string phase_boundaries_csv(const PhaseDiagram& p) {
    std::string out = "sigma,gamma_ab,gamma_bc,gamma_cd\n";
    for (std::size_t k = 0; k < p.sigma.size(); ++k) {
        out += format_double(p.sigma[k]);
        out += ',';
        out += format_double(p.curve_ab[k]);
        out += ',';
        out += format_double(p.curve_bc[k]);
        out += ',';
        out += format_double(p.curve_cd[k]);
        out += '\n';
    }
    return out;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace delamina
