#pragma once

#include <string>
#include <vector>

namespace platelab {

/// Analytic reference spectrum (root-finding accuracy, not discretization).
struct OracleSpectrum {
    std::string domain;              // "beam" | "disk"
    int dim = 1;
    double volume = 0.0;
    std::vector<double> values;      // sorted with multiplicity
    std::vector<double> roots;       // characteristic-equation root per entry
    std::vector<int> angular_order;  // disk only; -1 for the beam
    std::vector<double> residuals;   // |characteristic equation| at each root
};

/// Clamped beam on [0,1]: values are beta^4 over the positive roots of
/// cos(beta) cosh(beta) = 1 (evaluated in the overflow-safe form
/// cos(beta) - sech(beta)).
OracleSpectrum beam_spectrum(int K);

/// Clamped unit disk: values are x^4 over the roots of
/// J_m(x) I_{m+1}(x) + I_m(x) J_{m+1}(x) = 0, merged across angular orders,
/// multiplicity 2 for m >= 1.
OracleSpectrum disk_spectrum(int K);

/// Volume of the unit ball in R^n via the half-integer gamma recursion.
double unit_ball_volume(int n);

/// Leading eigenvalue-growth coefficient 16 pi^4 / (omega_n vol)^(4/n).
double ap_coefficient(int n, double vol);

namespace bessel {
/// Bessel J_m via ascending series (small x) or Miller's backward recurrence.
double cyl_j(int m, double x);
/// Modified Bessel I_m via the ascending series (arguments <= ~60).
double cyl_i(int m, double x);
}  // namespace bessel

}  // namespace platelab
