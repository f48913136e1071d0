#pragma once

#include <functional>
#include <optional>
#include <string>

#include "platelab/eigensolver.hpp"
#include "platelab/stencils.hpp"

namespace platelab {

using ScalarField = std::function<double(const std::array<double, 3>&)>;

/// Smooth test function with closed-form derivatives. The discrete-derivative
/// path (for functions supplied without derivatives) differences the value
/// callback directly, which is defined on all of space.
struct TestFunction {
    std::string name;
    ScalarField value;
    std::array<ScalarField, 3> grad;
    ScalarField lap;
    std::array<ScalarField, 3> grad_lap;  // d/dx_m of Lap g
    ScalarField bilap;

    static TestFunction constant(double c);
    static TestFunction coordinate(int axis);
    static TestFunction cos_axis(double a, int axis);
    static TestFunction sin_axis(double a, int axis);
    /// x^2 (1-x)^2 along one axis.
    static TestFunction poly_bump(int axis);

    Vec sample_interior(const Grid& grid) const;
    Vec sample_closure(const Grid& grid) const;
};

/// p = Lap^2 g * u1 + 2 grad(Lap g).grad u1 + 2 Lap g Lap u1
///     + 2 Lap(grad g . grad u1) + 2 grad g . grad(Lap u1), on interior nodes.
/// With analytic=false the derivatives of g come from centered differences of
/// its value callback at grid spacing.
Vec build_p(const TestFunction& g, const Vec& u1, const Grid& grid,
            const DerivativeStencils& stencils, bool analytic = true);

/// Per-j relative errors of the coefficient identity s_j = (gamma_j - gamma_1) r_j.
std::vector<double> verify_sj_identity(const Spectrum& spectrum, const TestFunction& g,
                                       const Grid& grid, const DerivativeStencils& stencils,
                                       int K);

struct PhiOrthogonality {
    double max_abs_pairing = 0.0;  // max_{j<=k} |<u_j, phi>|
    double phi_norm_sq = 0.0;
    double parseval_gap = 0.0;     // | ||phi||^2 - (||g u1||^2 - sum r_j^2) |
};
PhiOrthogonality phi_orthogonality(const Spectrum& spectrum, const TestFunction& g,
                                   int k, const Grid& grid);

struct IdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_gap = 0.0;
};

/// Integral identity for int g u1 p dv against the Stokes-theorem expansion.
IdentityCheck lemma22_check(const TestFunction& g, const Vec& u1, const Grid& grid,
                            const DerivativeStencils& stencils);

/// Paired trial data for g1 = cos(a x_m), g2 = sin(a x_m), built from the
/// closed-form expansion p = A cos(a x_m) + B sin(a x_m) (and its partner)
/// with discrete derivatives of u1 only.
struct PairTrialData {
    double a = 0.0;
    double b = 0.0;  // Lap f; zero for f = x_m
    int axis = 0;
    Vec g1, g2;      // interior samples
    Vec p1, p2;      // interior node vectors
    Vec coeff_a, coeff_b;  // the two bracket fields of the expansion
};
PairTrialData build_pair(double a, int axis, const Vec& u1, const Grid& grid,
                         const DerivativeStencils& stencils);

IdentityCheck prop21_check(const PairTrialData& pair, const Grid& grid);
IdentityCheck prop22_check(const PairTrialData& pair, const Vec& u1, const Grid& grid,
                           const DerivativeStencils& stencils);

struct InequalityMargin {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;         // rhs - lhs
    double tail_mass_rel = 0.0;  // truncated-series mass relative to ||g u1||^2
    bool conclusive = true;
};

/// Trial-function inequality: {mu_{k+2} + mu_{k+1}} int g u1 p
/// <= ||p||^2 + mu_{k+2} mu_{k+1} ||g u1||^2, mu_j = gamma_j - gamma_1.
/// `gammas` overrides the discrete eigenvalues (e.g. with oracle values).
InequalityMargin theorem21_check(const Spectrum& spectrum, const TestFunction& g, int k,
                                 const Grid& grid, const DerivativeStencils& stencils,
                                 const std::optional<std::vector<double>>& gammas = {});

/// The two-smallest-gaps inequality applied to mu_j = gamma_j - gamma_1,
/// a_j = r_j, truncated at the spectrum length with tail-mass accounting.
InequalityMargin lemma21_gap_inequality_check(
    const Spectrum& spectrum, const TestFunction& g, int k, const Grid& grid,
    const DerivativeStencils& stencils,
    const std::optional<std::vector<double>>& gammas = {});

// Closed-form derivative evaluators for g = cos(a f) / sin(a f) under the
// constraints |grad f|^2 = 1, Lap f = b; t is the value of f.
namespace chain_forms {
double lap_g1(double a, double b, double t);
double grad_lap_g1_coeff(double a, double b, double t);  // coefficient of grad f
double bilap_g1(double a, double b, double t);
double lap_g2(double a, double b, double t);
double grad_lap_g2_coeff(double a, double b, double t);
double bilap_g2(double a, double b, double t);
}  // namespace chain_forms

}  // namespace platelab
