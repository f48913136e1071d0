#include <doctest.h>

#include <cmath>
#include <numbers>

#include "platelab/functionals.hpp"
#include "platelab/oracles.hpp"

using namespace platelab;

namespace {
constexpr double kPi = std::numbers::pi;

struct BeamSetup {
    Grid grid;
    Spectrum spectrum;
    DerivativeStencils stencils;
    explicit BeamSetup(int div)
        : grid(build_grid(Domain::interval(1.0), {div})),
          spectrum(solve_dense(assemble_biharmonic(grid), grid, 3)),
          stencils(grid) {}
};

// normalized clamped-beam ground state with root b:
// u = N [ cosh bx - cos bx - s (sinh bx - sin bx) ],
// s = (cosh b - cos b)/(sinh b - sin b); satisfies u = u' = 0 at both ends
struct BeamGroundState {
    double b, sig, nrm;
    explicit BeamGroundState(double root) : b(root) {
        sig = (std::cosh(b) - std::cos(b)) / (std::sinh(b) - std::sin(b));
        const int m = 200000;
        double s = 0.0;
        for (int i = 1; i < m; ++i) {
            const double x = static_cast<double>(i) / m;
            s += raw(x) * raw(x);
        }
        nrm = 1.0 / std::sqrt(s / m);
    }
    double raw(double x) const {
        return std::cosh(b * x) - std::cos(b * x) -
               sig * (std::sinh(b * x) - std::sin(b * x));
    }
    double d1(double x) const {
        return nrm * b *
               (std::sinh(b * x) + std::sin(b * x) -
                sig * (std::cosh(b * x) - std::cos(b * x)));
    }
    double integral(const std::function<double(double)>& f) const {
        const int m = 200000;
        double s = 0.0;
        for (int i = 1; i < m; ++i) s += f(static_cast<double>(i) / m);
        return s / m;
    }
};
}  // namespace

TEST_CASE("discrete identity: integral of (Lap u1)^2 equals gamma1 exactly") {
    for (int div : {40, 80}) {
        const BeamSetup s(div);
        const auto f = compute_functionals(s.spectrum, s.grid, s.stencils);
        CHECK(f.lap_sq == doctest::Approx(f.gamma1).epsilon(1e-10));
    }
    const Grid g = build_grid(Domain::box({1.0, 1.0}), {24, 24});
    const auto sp = solve_dense(assemble_biharmonic(g), g, 1);
    const DerivativeStencils st(g);
    const auto f = compute_functionals(sp, g, st);
    CHECK(f.lap_sq == doctest::Approx(f.gamma1).epsilon(1e-10));
}

TEST_CASE("1D: pure second derivative energy equals the Laplacian energy") {
    const BeamSetup s(64);
    const auto f = compute_functionals(s.spectrum, s.grid, s.stencils);
    CHECK(f.pure_second_sq == doctest::Approx(f.lap_sq).epsilon(1e-14));
}

TEST_CASE("beam functionals converge to the analytic mode shape") {
    const auto oracle = beam_spectrum(1);
    const BeamGroundState exact(oracle.roots[0]);
    const double grad_exact =
        exact.integral([&](double x) { return exact.d1(x) * exact.d1(x); });

    const BeamSetup s(200);
    const auto f = compute_functionals(s.spectrum, s.grid, s.stencils);
    CHECK(f.gamma1 == doctest::Approx(oracle.values[0]).epsilon(5e-3));
    CHECK(f.grad_norm_sq == doctest::Approx(grad_exact).epsilon(1e-2));
    // integral |grad Lap u|^2 for the beam: Lap u = -b^4-scaled mix of the
    // same mode family; check it against gamma1 * grad_norm via the exact
    // relation (u'''')^2-type identities only loosely -- positivity and
    // h-refinement monotone trend are the meaningful invariants here.
    CHECK(f.grad_lap_sq > 0.0);
    CHECK(f.pure_second_sq > 0.0);
}

TEST_CASE("functional h-refinement converges") {
    const auto coarse = compute_functionals(BeamSetup(50).spectrum,
                                            BeamSetup(50).grid, BeamSetup(50).stencils);
    const BeamSetup a(100), b(200);
    const auto fa = compute_functionals(a.spectrum, a.grid, a.stencils);
    const auto fb = compute_functionals(b.spectrum, b.grid, b.stencils);
    CHECK(std::abs(fb.grad_norm_sq - fa.grad_norm_sq) <
          std::abs(fa.grad_norm_sq - coarse.grad_norm_sq));
    CHECK(std::abs(fb.grad_lap_sq - fa.grad_lap_sq) <
          std::abs(fa.grad_lap_sq - coarse.grad_lap_sq));
}

TEST_CASE("constant C: beam value pins to 68 gamma1") {
    const BeamSetup s(200);
    const auto f = compute_functionals(s.spectrum, s.grid, s.stencils);
    const double C = constant_C(f, 1);
    // with n=1: second branch = (4*13*gamma1 + 16*pure_second_sq)/1 and
    // pure_second_sq == gamma1, giving 68 gamma1; the first branch is smaller
    CHECK(C == doctest::Approx(68.0 * f.gamma1).epsilon(1e-9));
    CHECK(C >= 8.0 * f.grad_lap_sq / (3.0 * f.grad_norm_sq));

    EigenfunctionFunctionals bad;
    CHECK_THROWS_AS(constant_C(bad, 1), std::invalid_argument);
}

TEST_CASE("optimal trial frequency solves its defining quartic") {
    for (double P : {10.0, 500.0}) {
        for (double Q : {20.0, 900.0}) {
            const auto a = optimal_a(P, Q, 12.3, 2);
            CHECK(a.a_sq > 0.0);
            const double c = 2.0 * 4.0 / 2.0 * 12.3;
            const double lhs = a.a_sq * (a.a_sq + c);
            CHECK(lhs == doctest::Approx(std::sqrt(P * Q)).epsilon(1e-12));
            CHECK(a.defining_residual <= 1e-12);
            CHECK(a.a4_bounded);
            CHECK(a.a_sq * a.a_sq <= std::sqrt(P * Q) * (1 + 1e-12));
        }
    }
    // degenerate gap P = Q = 0 gives a = 0
    const auto z = optimal_a(0.0, 0.0, 5.0, 1);
    CHECK(z.a_sq == doctest::Approx(0.0));
}
