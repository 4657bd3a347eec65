// test_fields.cpp
// Difference operators, quadrature, distance and mollification.

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "delamina/ops.hpp"
#include "delamina/rng.hpp"

using namespace delamina;

namespace {

constexpr double kPi = std::numbers::pi;

ScalarField sample(const Grid& g, double (*f)(double, double)) {
    ScalarField out(g);
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) out.v[g.idx(i, j)] = f(g.x(i), g.y(j));
    return out;
}

double max_abs(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.v) m = std::max(m, std::abs(v));
    return m;
}

} // namespace

TEST_CASE("gradient is exact on affine fields") {
    Grid g(17, 23);
    ScalarField c(g, 3.25);
    VectorField2 gc = gradient(c);
    CHECK(max_abs(gc.x) == 0.0);
    CHECK(max_abs(gc.y) == 0.0);

    ScalarField lin = sample(g, [](double x, double) { return x; });
    VectorField2 gl = gradient(lin);
    for (std::size_t k = 0; k < g.nodes(); ++k) {
        CHECK(gl.x.v[k] == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::abs(gl.y.v[k]) < 1e-13);
    }
}

TEST_CASE("gradient converges at second order") {
    auto max_err = [](int n) {
        Grid g(n, n);
        ScalarField f = sample(g, [](double x, double) { return std::sin(kPi * x); });
        ScalarField gx = deriv_x(f);
        double err = 0.0;
        for (int j = 0; j <= g.ny; ++j)
            for (int i = 0; i <= g.nx; ++i)
                err = std::max(err, std::abs(gx.v[g.idx(i, j)] - kPi * std::cos(kPi * g.x(i))));
        return err;
    };
    const double ratio = max_err(64) / max_err(128);
    CHECK(ratio > 3.2);
    CHECK(ratio < 4.8);
}

TEST_CASE("hessian is exact on quadratics") {
    Grid g(11, 9);
    ScalarField lin = sample(g, [](double x, double y) { return 2.0 * x - y + 0.5; });
    SymTensorField hl = hessian(lin);
    CHECK(max_abs(hl.xx) < 1e-12);
    CHECK(max_abs(hl.xy) < 1e-12);
    CHECK(max_abs(hl.yy) < 1e-12);

    ScalarField q = sample(g, [](double x, double) { return x * x; });
    SymTensorField hq = hessian(q);
    for (std::size_t k = 0; k < g.nodes(); ++k) {
        CHECK(hq.xx.v[k] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(std::abs(hq.xy.v[k]) < 1e-11);
        CHECK(std::abs(hq.yy.v[k]) < 1e-11);
    }

    ScalarField xy = sample(g, [](double x, double y) { return x * y; });
    SymTensorField hxy = hessian(xy);
    for (std::size_t k = 0; k < g.nodes(); ++k)
        CHECK(hxy.xy.v[k] == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("strain reproduces the hand values") {
    Grid g(16, 16);
    VectorField2 u(g);
    ScalarField w(g, 0.0);

    SUBCASE("zero state gives -Id") {
        SymTensorField e = strain(u, w, 0.5);
        for (std::size_t k = 0; k < g.nodes(); ++k) {
            CHECK(e.xx.v[k] == doctest::Approx(-1.0));
            CHECK(e.yy.v[k] == doctest::Approx(-1.0));
            CHECK(std::abs(e.xy.v[k]) < 1e-14);
        }
    }
    SUBCASE("u = x/2 cancels the eigenstrain") {
        u.x = sample(g, [](double x, double) { return x / 2.0; });
        u.y = sample(g, [](double, double y) { return y / 2.0; });
        SymTensorField e = strain(u, w, 0.5);
        CHECK(max_abs(e.xx) < 1e-13);
        CHECK(max_abs(e.xy) < 1e-13);
        CHECK(max_abs(e.yy) < 1e-13);
    }
    SUBCASE("unit slope fills the xx slot") {
        w = sample(g, [](double x, double) { return x; });
        SymTensorField e = strain(u, w, 0.5);
        for (std::size_t k = 0; k < g.nodes(); ++k) {
            CHECK(std::abs(e.xx.v[k]) < 1e-13);
            CHECK(e.yy.v[k] == doctest::Approx(-1.0));
        }
    }
    SUBCASE("grid mismatch is rejected") {
        VectorField2 other(Grid(8, 8));
        CHECK_THROWS_AS(strain(other, w, 0.5), InvalidArgument);
    }
}

TEST_CASE("integrate: trapezoid values") {
    Grid g(64, 64);
    CHECK(integrate(ScalarField(g, 1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    ScalarField lin = sample(g, [](double x, double) { return x; });
    CHECK(integrate(lin) == doctest::Approx(0.5).epsilon(1e-14));

    Grid f(128, 128);
    ScalarField s = sample(f, [](double x, double y) {
        return std::sin(kPi * x) * std::sin(kPi * y);
    });
    CHECK(std::abs(integrate(s) - 4.0 / (kPi * kPi)) < 1e-4);
}

TEST_CASE("integrate of a constant matches the area exactly") {
    Grid g(37, 59, 2.0, 0.75);
    const double got = integrate(ScalarField(g, 2.5));
    CHECK(got == doctest::Approx(2.5 * g.area()).epsilon(1e-14));
}

TEST_CASE("distance to boundary") {
    Grid g(64, 64);
    ScalarField d = distance_to_boundary(g);
    CHECK(d.v[g.idx(32, 32)] == doctest::Approx(0.5));
    CHECK(d.v[g.idx(0, 17)] == 0.0);
    CHECK(d.v[g.idx(51, 0)] == 0.0);
    // interior point (0.1, 0.3): nearest edge is the left one
    Grid f(10, 10);
    ScalarField df = distance_to_boundary(f);
    CHECK(df.v[f.idx(1, 3)] == doctest::Approx(0.1));
}

TEST_CASE("mollify: normalization, affine reproduction, resolution guard") {
    Grid g(128, 128);
    const double sigma = 0.06;

    ScalarField c(g, 0.7);
    ScalarField mc = mollify(c, sigma);
    for (std::size_t k = 0; k < g.nodes(); ++k)
        CHECK(mc.v[k] == doctest::Approx(0.7).epsilon(1e-13));

    ScalarField lin = sample(g, [](double x, double) { return x; });
    ScalarField ml = mollify(lin, sigma);
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) {
            const double x = g.x(i), y = g.y(j);
            if (x < sigma || x > 1 - sigma || y < sigma || y > 1 - sigma) continue;
            CHECK(ml.v[g.idx(i, j)] == doctest::Approx(x).epsilon(1e-12));
        }

    CHECK_THROWS_AS(mollify(c, 0.5 * g.spacing()), ResolutionError);
}

TEST_CASE("mollify smooths a tangential kink into +-1 slopes") {
    Grid g(256, 256);
    const double sigma = 0.1;
    ScalarField hat = sample(g, [](double x, double) { return std::abs(x - 0.5); });
    ScalarField m = mollify(hat, sigma);
    ScalarField mslope = deriv_x(m);
    for (int j = 64; j <= 192; ++j)
        for (int i = 0; i <= g.nx; ++i) {
            const double x = g.x(i), y = g.y(j);
            if (y < sigma || y > 1 - sigma) continue;
            if (x < sigma || x > 1 - sigma) continue;
            const double s = mslope.v[g.idx(i, j)];
            if (std::abs(x - 0.5) > sigma + 2.0 * g.dx()) {
                CHECK(std::abs(std::abs(s) - 1.0) < 1e-10);
            } else {
                CHECK(std::abs(s) < 1.0 + 1e-10);  // smooth transition stays 1-Lipschitz-like
            }
        }
}

TEST_CASE("mollify preserves the integral of interior-supported fields") {
    Grid g(96, 96);
    const double sigma = 0.08;
    ScalarField f(g, 0.0);
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) {
            const double x = g.x(i), y = g.y(j);
            const double dx = x - 0.5, dy = y - 0.5;
            const double r2 = dx * dx + dy * dy;
            const double rad = 0.5 - sigma - 2.0 * g.spacing();
            if (r2 < rad * rad) f.v[g.idx(i, j)] = std::cos(kPi * std::sqrt(r2) / rad) + 1.0;
        }
    const double before = integrate(f);
    const double after = integrate(mollify(f, sigma));
    CHECK(std::abs(after - before) < 1e-12 * std::abs(before));
}

TEST_CASE("operators are deterministic") {
    Grid g(48, 48);
    Rng rng(99);
    ScalarField f = random_smooth_scalar(g, rng, 1.0);
    ScalarField a = deriv_xy(f), b = deriv_xy(f);
    CHECK(a.v == b.v);
    CHECK(integrate(f) == integrate(f));
}
