// rng.cpp

#include "delamina/rng.hpp"

#include <cmath>
#include <numbers>

namespace delamina {

ScalarField random_smooth_scalar(const Grid& g, Rng& rng, double amplitude, int max_mode) {
    ScalarField f(g, 0.0);
    const double pi = std::numbers::pi;
    for (int k = 1; k <= max_mode; ++k)
        for (int l = 1; l <= max_mode; ++l) {
            const double a = amplitude * rng.symmetric() / double(k * k + l * l);
            for (int j = 0; j <= g.ny; ++j) {
                const double sy = std::sin(l * pi * g.y(j) / g.ly);
                for (int i = 0; i <= g.nx; ++i)
                    f.v[g.idx(i, j)] += a * std::sin(k * pi * g.x(i) / g.lx) * sy;
            }
        }
    return f;
}

VectorField2 random_smooth_vector(const Grid& g, Rng& rng, double amplitude, int max_mode) {
    VectorField2 u(g);
    u.x = random_smooth_scalar(g, rng, amplitude, max_mode);
    u.y = random_smooth_scalar(g, rng, amplitude, max_mode);
    return u;
}

} // namespace delamina
