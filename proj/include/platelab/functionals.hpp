#pragma once

#include "platelab/eigensolver.hpp"
#include "platelab/stencils.hpp"

namespace platelab {

/// Scalar integrals of the normalized first eigenfunction entering the gap
/// bound's constant C.
struct EigenfunctionFunctionals {
    double grad_norm_sq = 0.0;    // ||grad u1||^2
    double lap_sq = 0.0;          // integral (Lap u1)^2, equals gamma1 exactly
    double grad_lap_sq = 0.0;     // integral |grad Lap u1|^2
    double pure_second_sq = 0.0;  // integral sum_m (d^2 u1 / dx_m^2)^2
    double gamma1 = 0.0;
};

EigenfunctionFunctionals compute_functionals(const Spectrum& spectrum, const Grid& grid,
                                             const DerivativeStencils& stencils);

/// C = max( 8*grad_lap_sq / ((n+2)*grad_norm_sq),
///          (4(n+12)*gamma1 + 16*pure_second_sq) / n ).
double constant_C(const EigenfunctionFunctionals& f, int n);

struct OptimalTrialFrequency {
    double a_sq = 0.0;               // nonnegative root of a^2(a^2 + c) = sqrt(PQ)
    double defining_residual = 0.0;  // relative residual of that equation
    bool a4_bounded = false;         // a^4 <= sqrt(PQ)
};

/// Solves a^2 (a^2 + 2 (n+2)/n * grad_norm_sq) = sqrt(P Q) with
/// P = gamma_{k+1} - gamma_1, Q = gamma_{k+2} - gamma_1.
OptimalTrialFrequency optimal_a(double P, double Q, double grad_norm_sq, int n);

}  // namespace platelab
