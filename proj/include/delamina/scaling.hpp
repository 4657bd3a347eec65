// scaling.hpp
// Regime classification, bound formulas, parameter sweeps, power-law fits
// and the phase diagram in the (sigma, gamma) plane.

#ifndef DELAMINA_SCALING_HPP
#define DELAMINA_SCALING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "delamina/construct.hpp"

namespace delamina {

enum class Regime { A, B, C, D };           // upper-bound phases
enum class LowerRegime { A, Bp, Dp };       // lower-bound phases

std::string to_string(Regime r);
std::string to_string(LowerRegime r);

// Phase of (sigma, gamma) by the upper-bound thresholds; boundary ties take
// the label whose formula value is smaller (equal values: the larger-gamma
// regime, which keeps vertical scans monotone).
Regime classify_regime(double sigma, double gamma);
LowerRegime classify_lower_regime(double sigma, double gamma);

// Piecewise bound formulas without the undetermined constants.
double upper_bound_value(double sigma, double gamma);
double lower_bound_value(double sigma, double gamma);

enum class SweepMode { ConstructOnly, ConstructMinimize };

struct SweepSpec {
    std::vector<std::pair<double, double>> points;  // (sigma, gamma)
    int grid_n = 256;
    SweepMode mode = SweepMode::ConstructOnly;
    std::string construction = "auto";  // or flat/laminate/branched-tubes/debonded
    std::uint64_t seed = 1;
    int minimize_iters = 60;

    void validate() const;
};

struct SweepRecord {
    double sigma = 0.0, gamma = 0.0;
    Regime regime = Regime::A;
    EnergyBreakdown energy;          // constructed (or minimized, if requested)
    EnergyBreakdown constructed;     // pre-relaxation value
    std::string construction;
    bool minimized = false;
    bool resolved = true;
    std::string note;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRecord> records;
    std::string version;
};

SweepResult run_sweep(const SweepSpec& spec);

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;   // of the log-log fit
    double r_squared = 0.0;
    double residual_max = 0.0;
};

// Least squares on (log x, log y); requires >= 3 strictly positive points.
FitResult fit_power_law(const std::vector<std::pair<double, double>>& points);

struct PhaseDiagram {
    std::vector<double> sigma;   // log-spaced lattice
    std::vector<double> gamma;
    std::vector<Regime> label;   // row-major, gamma outer
    // Boundary curves gamma = sigma^-1, sigma^-4/9, sigma^4/5 sampled on the
    // sigma lattice.
    std::vector<double> curve_ab, curve_bc, curve_cd;
};

PhaseDiagram phase_diagram(double sigma_min, double sigma_max, double gamma_min,
                           double gamma_max, int resolution);

} // namespace delamina

#endif
