// io.hpp
// Field serialization (JSON header line + CSV node dump), sweep/phase CSV
// emission and atomic writes. Formats are documented in the README and kept
// stable across versions.

#ifndef DELAMINA_IO_HPP
#define DELAMINA_IO_HPP

#include <string>

#include "delamina/construct.hpp"
#include "delamina/scaling.hpp"

namespace delamina {

inline constexpr const char* kVersion = "delamina 0.1.0";

// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

// Write content to path via a temp file + rename; no partial artifacts.
void atomic_write(const std::string& path, const std::string& content);

// Field file: one JSON header line {"nx","ny","lx","ly","kind","version"},
// then one value per line in row-major node order.
void write_scalar_field(const std::string& path, const ScalarField& f,
                        const std::string& kind = "scalar");
ScalarField read_scalar_field(const std::string& path, std::string* kind_out = nullptr);

// State = three field files <stem>.w / <stem>.ux / <stem>.uy plus a JSON
// sidecar <stem>.json with construction metadata.
void write_state(const std::string& stem, const ConstructedState& s);

// CSV of a sweep: header then one row per record,
// sigma,gamma,regime,stretch,bend,bond,total,construction,converged
std::string sweep_csv(const SweepResult& r);

// CSV of the phase diagram lattice and of the boundary curves.
std::string phase_diagram_csv(const PhaseDiagram& p);
std::string phase_boundaries_csv(const PhaseDiagram& p);

// FNV-1a hash of a string, for config provenance.
std::uint64_t fnv1a(const std::string& s);

} // namespace delamina

#endif
