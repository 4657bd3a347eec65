// rng.hpp
// Deterministic random numbers and smooth random test fields. Distributions
// are hand-rolled on top of mt19937_64 because the std:: distributions are
// implementation-defined and would break byte-reproducibility contracts.

#ifndef DELAMINA_RNG_HPP
#define DELAMINA_RNG_HPP

#include <cstdint>
#include <random>

#include "delamina/grid.hpp"

namespace delamina {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0,1).
    double uniform() {
        return double(eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Symmetric in [-1,1).
    double symmetric() { return 2.0 * uniform() - 1.0; }

private:
    std::mt19937_64 eng_;
};

// Smooth field built from low-order sine modes, zero on the whole boundary.
// amplitude scales the largest coefficient.
ScalarField random_smooth_scalar(const Grid& g, Rng& rng, double amplitude, int max_mode = 4);

// Vector field with both components of the same sine-mode form.
VectorField2 random_smooth_vector(const Grid& g, Rng& rng, double amplitude, int max_mode = 4);

} // namespace delamina

#endif
