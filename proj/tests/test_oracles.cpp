#include <doctest.h>

#include <cmath>
#include <numbers>

#include "platelab/oracles.hpp"

using namespace platelab;

namespace {
constexpr double kPi = std::numbers::pi;

double beam_char(double b) { return std::cos(b) - 1.0 / std::cosh(b); }

double disk_char(int m, double x) {
    return bessel::cyl_j(m, x) * bessel::cyl_i(m + 1, x) +
           bessel::cyl_i(m, x) * bessel::cyl_j(m + 1, x);
}
}  // namespace

TEST_CASE("beam roots: classical values and defining equation") {
    const auto s = beam_spectrum(8);
    REQUIRE(s.values.size() == 8);
    CHECK(s.domain == "beam");
    CHECK(s.dim == 1);
    CHECK(s.volume == doctest::Approx(1.0));

    CHECK(s.roots[0] == doctest::Approx(4.7300407448627040).epsilon(1e-12));
    CHECK(s.roots[1] == doctest::Approx(7.8532046240958376).epsilon(1e-12));
    CHECK(s.roots[2] == doctest::Approx(10.9956078380016709).epsilon(1e-12));
    CHECK(s.values[0] == doctest::Approx(500.5639).epsilon(1e-6));

    for (std::size_t k = 0; k < s.roots.size(); ++k) {
        CHECK(s.values[k] == doctest::Approx(std::pow(s.roots[k], 4)).epsilon(1e-14));
        CHECK(std::abs(beam_char(s.roots[k])) <= 1e-12);
        CHECK(s.residuals[k] <= 1e-12);
        if (k > 0) CHECK(s.values[k] > s.values[k - 1]);
    }

    // large roots approach (k + 1/2) pi
    CHECK(s.roots[7] == doctest::Approx(8.5 * kPi).epsilon(1e-6));
}

TEST_CASE("beam spectrum scales like the quartic of the half-integer multiples") {
    const auto s = beam_spectrum(50);
    const double ratio = std::pow(s.values[49], 0.25) / (50.5 * kPi);
    CHECK(ratio == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("Bessel J: known values and Wronskian-style cross-check") {
    CHECK(bessel::cyl_j(0, 0.0) == doctest::Approx(1.0));
    CHECK(bessel::cyl_j(1, 0.0) == doctest::Approx(0.0));
    // Abramowitz & Stegun tables
    CHECK(bessel::cyl_j(0, 1.0) == doctest::Approx(0.7651976865579666).epsilon(1e-12));
    CHECK(bessel::cyl_j(1, 1.0) == doctest::Approx(0.4400505857449335).epsilon(1e-12));
    CHECK(bessel::cyl_j(0, 2.4048255576957728) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(bessel::cyl_j(2, 5.0) == doctest::Approx(0.04656511627775222).epsilon(1e-10));
    CHECK(bessel::cyl_j(0, 20.0) == doctest::Approx(0.1670246643405831).epsilon(1e-10));
    CHECK(bessel::cyl_j(5, 30.0) == doctest::Approx(-0.1432402955120771).epsilon(1e-9));

    // three-term recurrence J_{m-1} + J_{m+1} = (2m/x) J_m holds everywhere
    for (double x : {0.7, 3.3, 11.0, 25.0}) {
        for (int m = 1; m <= 6; ++m) {
            const double lhs = bessel::cyl_j(m - 1, x) + bessel::cyl_j(m + 1, x);
            CHECK(lhs == doctest::Approx(2.0 * m / x * bessel::cyl_j(m, x)).epsilon(1e-9));
        }
    }
}

TEST_CASE("Bessel I: known values and recurrence") {
    CHECK(bessel::cyl_i(0, 0.0) == doctest::Approx(1.0));
    CHECK(bessel::cyl_i(0, 1.0) == doctest::Approx(1.2660658777520082).epsilon(1e-12));
    CHECK(bessel::cyl_i(1, 1.0) == doctest::Approx(0.5651591039924851).epsilon(1e-12));
    CHECK(bessel::cyl_i(0, 10.0) == doctest::Approx(2815.716628466254).epsilon(1e-10));
    for (double x : {0.5, 4.0, 15.0}) {
        for (int m = 1; m <= 5; ++m) {
            const double lhs = bessel::cyl_i(m - 1, x) - bessel::cyl_i(m + 1, x);
            CHECK(lhs == doctest::Approx(2.0 * m / x * bessel::cyl_i(m, x)).epsilon(1e-10));
        }
    }
}

TEST_CASE("disk roots: lowest modes and multiplicity structure") {
    const auto s = disk_spectrum(12);
    REQUIRE(s.values.size() == 12);
    CHECK(s.domain == "disk");
    CHECK(s.dim == 2);
    CHECK(s.volume == doctest::Approx(kPi).epsilon(1e-14));

    // ground state: radially symmetric, x ~ 3.1962
    CHECK(s.angular_order[0] == 0);
    CHECK(s.roots[0] == doctest::Approx(3.19622).epsilon(1e-5));
    CHECK(s.values[0] == doctest::Approx(104.3631).epsilon(1e-5));

    // next level: m = 1, doubly degenerate, x ~ 4.6109
    CHECK(s.angular_order[1] == 1);
    CHECK(s.angular_order[2] == 1);
    CHECK(s.roots[1] == doctest::Approx(4.6109).epsilon(1e-4));
    CHECK(s.values[1] == doctest::Approx(s.values[2]).epsilon(1e-14));

    for (std::size_t k = 0; k < s.roots.size(); ++k) {
        CHECK(std::abs(disk_char(s.angular_order[k], s.roots[k])) <= 1e-10);
        CHECK(s.values[k] == doctest::Approx(std::pow(s.roots[k], 4)).epsilon(1e-14));
        if (k > 0) CHECK(s.values[k] >= s.values[k - 1]);
    }

    // every m >= 1 entry appears an even number of times
    int m1_count = 0;
    for (std::size_t k = 0; k < s.roots.size(); ++k)
        if (s.angular_order[k] == 1 && s.roots[k] == doctest::Approx(s.roots[1])) ++m1_count;
    CHECK(m1_count == 2);
}

TEST_CASE("unit ball volumes") {
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0));
    CHECK(unit_ball_volume(2) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-15));
    CHECK(unit_ball_volume(4) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-15));
}

TEST_CASE("growth coefficient: beam and disk normalizations") {
    // n=1, |Omega|=1: omega_1 = 2 so coefficient is 16 pi^4 / 2^4 = pi^4
    CHECK(ap_coefficient(1, 1.0) == doctest::Approx(std::pow(kPi, 4)).epsilon(1e-14));
    // n=2, unit disk: (omega_2 vol)^2 = pi^4 so coefficient is 16
    CHECK(ap_coefficient(2, kPi) == doctest::Approx(16.0).epsilon(1e-14));
}

TEST_CASE("oracle spectra track the leading growth term") {
    // the boundary-layer correction to the counting function decays like
    // k^{-1/2}, so the ratio sits well above 1 at moderate k but shrinks
    const auto s = disk_spectrum(60);
    const double c = ap_coefficient(2, kPi);
    const double r20 = s.values[19] / (c * 20.0 * 20.0);
    const double r60 = s.values[59] / (c * 60.0 * 60.0);
    CHECK(r60 > 1.0);
    CHECK(r60 < 1.8);
    CHECK(r60 < r20);
}
