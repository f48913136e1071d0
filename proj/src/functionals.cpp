#include "platelab/functionals.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace platelab {

EigenfunctionFunctionals compute_functionals(const Spectrum& spectrum, const Grid& grid,
                                             const DerivativeStencils& stencils) {
    if (spectrum.count() < 1) throw std::invalid_argument("spectrum is empty");
    Vec u1 = spectrum.first();
    const double nrm = grid.norm(u1);
    if (std::abs(nrm - 1.0) > 1e-8) {
        std::cerr << "compute_functionals: first eigenvector not normalized (|u1| = " << nrm
                  << "); renormalizing\n";
        u1 /= nrm;
    }

    EigenfunctionFunctionals f;
    // Rayleigh quotient of the computed vector through the assembled matrix,
    // not the solver's eigenvalue: the latter carries the solver's backward
    // error (~eps * h^-4), which would swamp the exact identity
    // lap_sq == gamma1 that holds for the operator by construction.
    f.gamma1 = grid.cell_volume() * assemble_biharmonic(grid).quadratic_form(u1) /
               grid.inner_product(u1, u1);

    for (int ax = 0; ax < grid.dim(); ++ax) {
        const Vec d = stencils.axis_first(u1, ax);
        f.grad_norm_sq += grid.closure_integral(d, d);
        const Vec dd = stencils.axis_second(u1, ax);
        f.pure_second_sq += grid.closure_integral(dd, dd);
    }

    const Vec lap = stencils.laplacian(u1);
    f.lap_sq = grid.closure_integral(lap, lap);

    for (int ax = 0; ax < grid.dim(); ++ax) {
        const Vec gl = stencils.interior_first_of_closure(lap, ax);
        f.grad_lap_sq += grid.inner_product(gl, gl);
    }
    return f;
}

double constant_C(const EigenfunctionFunctionals& f, int n) {
    if (f.grad_norm_sq <= 0.0)
        throw std::invalid_argument("constant_C: grad_norm_sq must be positive");
    const double first = 8.0 * f.grad_lap_sq / ((n + 2.0) * f.grad_norm_sq);
    const double second = (4.0 * (n + 12.0) * f.gamma1 + 16.0 * f.pure_second_sq) / n;
    return std::max(first, second);
}

OptimalTrialFrequency optimal_a(double P, double Q, double grad_norm_sq, int n) {
    if (P < 0.0 || Q < 0.0)
        throw std::invalid_argument("optimal_a: spectral gaps must be nonnegative");
    const double c = 2.0 * (n + 2.0) * grad_norm_sq / n;
    const double rhs = std::sqrt(P * Q);
    OptimalTrialFrequency out;
    out.a_sq = 0.5 * (-c + std::sqrt(c * c + 4.0 * rhs));
    const double lhs = out.a_sq * (out.a_sq + c);
    out.defining_residual = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
    out.a4_bounded = out.a_sq * out.a_sq <= rhs * (1.0 + 1e-12) + 1e-300;
    return out;
}

}  // namespace platelab
