#include "platelab/trial_function.hpp"

#include <cmath>
#include <stdexcept>

namespace platelab {

namespace {

double rel_gap_of(double lhs, double rhs) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
}

// Uniform access to the derivatives of g: either the closed forms or centered
// differences of the value callback at grid spacing.
struct GDerivatives {
    ScalarField value;
    std::array<ScalarField, 3> grad;
    ScalarField lap;
    std::array<ScalarField, 3> grad_lap;
    ScalarField bilap;
};

GDerivatives make_derivatives(const TestFunction& g, const Grid& grid, bool analytic, int dim) {
    if (analytic)
        return {g.value, g.grad, g.lap, g.grad_lap, g.bilap};

    const double h = grid.spacing();
    auto shift = [](std::array<double, 3> x, int ax, double d) {
        x[ax] += d;
        return x;
    };
    const ScalarField v = g.value;
    auto lap = [v, h, dim, shift](const std::array<double, 3>& x) {
        double acc = 0.0;
        for (int ax = 0; ax < dim; ++ax)
            acc += v(shift(x, ax, h)) - 2.0 * v(x) + v(shift(x, ax, -h));
        return acc / (h * h);
    };
    GDerivatives d;
    d.value = v;
    for (int ax = 0; ax < 3; ++ax) {
        d.grad[ax] = [v, h, ax, shift](const std::array<double, 3>& x) {
            return (v(shift(x, ax, h)) - v(shift(x, ax, -h))) / (2.0 * h);
        };
        d.grad_lap[ax] = [lap, h, ax, shift](const std::array<double, 3>& x) {
            return (lap(shift(x, ax, h)) - lap(shift(x, ax, -h))) / (2.0 * h);
        };
    }
    d.lap = lap;
    d.bilap = [lap, h, dim, shift](const std::array<double, 3>& x) {
        double acc = 0.0;
        for (int ax = 0; ax < dim; ++ax)
            acc += lap(shift(x, ax, h)) - 2.0 * lap(x) + lap(shift(x, ax, -h));
        return acc / (h * h);
    };
    return d;
}

ScalarField zero_field() {
    return [](const std::array<double, 3>&) { return 0.0; };
}

}  // namespace

TestFunction TestFunction::constant(double c) {
    TestFunction g;
    g.name = "const";
    g.value = [c](const std::array<double, 3>&) { return c; };
    for (int ax = 0; ax < 3; ++ax) {
        g.grad[ax] = zero_field();
        g.grad_lap[ax] = zero_field();
    }
    g.lap = zero_field();
    g.bilap = zero_field();
    return g;
}

TestFunction TestFunction::coordinate(int axis) {
    TestFunction g = constant(0.0);
    g.name = "x" + std::to_string(axis);
    g.value = [axis](const std::array<double, 3>& x) { return x[axis]; };
    g.grad[axis] = [](const std::array<double, 3>&) { return 1.0; };
    return g;
}

TestFunction TestFunction::cos_axis(double a, int axis) {
    TestFunction g = constant(0.0);
    g.name = "cos(" + std::to_string(a) + "*x" + std::to_string(axis) + ")";
    g.value = [a, axis](const std::array<double, 3>& x) { return std::cos(a * x[axis]); };
    g.grad[axis] = [a, axis](const std::array<double, 3>& x) { return -a * std::sin(a * x[axis]); };
    g.lap = [a, axis](const std::array<double, 3>& x) { return -a * a * std::cos(a * x[axis]); };
    g.grad_lap[axis] = [a, axis](const std::array<double, 3>& x) {
        return a * a * a * std::sin(a * x[axis]);
    };
    g.bilap = [a, axis](const std::array<double, 3>& x) {
        return a * a * a * a * std::cos(a * x[axis]);
    };
    return g;
}

TestFunction TestFunction::sin_axis(double a, int axis) {
    TestFunction g = constant(0.0);
    g.name = "sin(" + std::to_string(a) + "*x" + std::to_string(axis) + ")";
    g.value = [a, axis](const std::array<double, 3>& x) { return std::sin(a * x[axis]); };
    g.grad[axis] = [a, axis](const std::array<double, 3>& x) { return a * std::cos(a * x[axis]); };
    g.lap = [a, axis](const std::array<double, 3>& x) { return -a * a * std::sin(a * x[axis]); };
    g.grad_lap[axis] = [a, axis](const std::array<double, 3>& x) {
        return -a * a * a * std::cos(a * x[axis]);
    };
    g.bilap = [a, axis](const std::array<double, 3>& x) {
        return a * a * a * a * std::sin(a * x[axis]);
    };
    return g;
}

TestFunction TestFunction::poly_bump(int axis) {
    TestFunction g = constant(0.0);
    g.name = "x" + std::to_string(axis) + "^2(1-x)^2";
    g.value = [axis](const std::array<double, 3>& x) {
        const double t = x[axis];
        return t * t * (1.0 - t) * (1.0 - t);
    };
    g.grad[axis] = [axis](const std::array<double, 3>& x) {
        const double t = x[axis];
        return 2.0 * t * (1.0 - t) * (1.0 - 2.0 * t);
    };
    g.lap = [axis](const std::array<double, 3>& x) {
        const double t = x[axis];
        return 2.0 - 12.0 * t + 12.0 * t * t;
    };
    g.grad_lap[axis] = [axis](const std::array<double, 3>& x) {
        return -12.0 + 24.0 * x[axis];
    };
    g.bilap = [](const std::array<double, 3>&) { return 24.0; };
    return g;
}

Vec TestFunction::sample_interior(const Grid& grid) const {
    Vec out(grid.interior_count());
    for (int i = 0; i < grid.interior_count(); ++i)
        out[i] = value(grid.coordinates(grid.interior_nodes()[i]));
    return out;
}

Vec TestFunction::sample_closure(const Grid& grid) const {
    Vec out(grid.closure_count());
    for (int q = 0; q < grid.closure_count(); ++q)
        out[q] = value(grid.coordinates(grid.closure_nodes()[q]));
    return out;
}

Vec build_p(const TestFunction& g, const Vec& u1, const Grid& grid,
            const DerivativeStencils& stencils, bool analytic) {
    const int dim = grid.dim();
    const GDerivatives d = make_derivatives(g, grid, analytic, dim);

    const std::vector<Vec> grad_u1 = stencils.gradient(u1);  // closure fields
    const Vec lap_u1 = stencils.laplacian(u1);

    // w = grad g . grad u1 on the closure, then its discrete Laplacian.
    Vec w = Vec::Zero(grid.closure_count());
    for (int q = 0; q < grid.closure_count(); ++q) {
        const auto x = grid.coordinates(grid.closure_nodes()[q]);
        for (int ax = 0; ax < dim; ++ax) w[q] += d.grad[ax](x) * grad_u1[ax][q];
    }
    const Vec lap_w = stencils.interior_laplacian_of_closure(w);

    Vec p(grid.interior_count());
    for (int i = 0; i < grid.interior_count(); ++i) {
        const auto& node = grid.interior_nodes()[i];
        const auto x = grid.coordinates(node);
        const int q = grid.closure_of_interior(i);
        double acc = d.bilap(x) * u1[i] + 2.0 * d.lap(x) * lap_u1[q] + 2.0 * lap_w[i];
        for (int ax = 0; ax < dim; ++ax) acc += 2.0 * d.grad_lap[ax](x) * grad_u1[ax][q];
        p[i] = acc;
    }
    // + 2 grad g . grad(Lap u1)
    for (int ax = 0; ax < dim; ++ax) {
        const Vec gl = stencils.interior_first_of_closure(lap_u1, ax);
        for (int i = 0; i < grid.interior_count(); ++i) {
            const auto x = grid.coordinates(grid.interior_nodes()[i]);
            p[i] += 2.0 * d.grad[ax](x) * gl[i];
        }
    }
    return p;
}

std::vector<double> verify_sj_identity(const Spectrum& spectrum, const TestFunction& g,
                                       const Grid& grid, const DerivativeStencils& stencils,
                                       int K) {
    if (K > spectrum.count()) throw std::invalid_argument("verify_sj_identity: K too large");
    const Vec& u1 = spectrum.first();
    const Vec gu1 = g.sample_interior(grid).cwiseProduct(u1);
    const Vec p = build_p(g, u1, grid, stencils);
    const double gamma1 = spectrum.values.front();

    std::vector<double> errors(K);
    for (int j = 0; j < K; ++j) {
        const double sj = grid.inner_product(p, spectrum.vectors[j]);
        const double rj = grid.inner_product(gu1, spectrum.vectors[j]);
        const double target = (spectrum.values[j] - gamma1) * rj;
        errors[j] = std::abs(sj - target) / (1.0 + std::abs(target));
    }
    return errors;
}

PhiOrthogonality phi_orthogonality(const Spectrum& spectrum, const TestFunction& g,
                                   int k, const Grid& grid) {
    if (k > spectrum.count()) throw std::invalid_argument("phi_orthogonality: k too large");
    const Vec& u1 = spectrum.first();
    const Vec gu1 = g.sample_interior(grid).cwiseProduct(u1);

    Vec phi = gu1;
    double sum_r_sq = 0.0;
    for (int j = 0; j < k; ++j) {
        const double rj = grid.inner_product(gu1, spectrum.vectors[j]);
        phi -= rj * spectrum.vectors[j];
        sum_r_sq += rj * rj;
    }
    PhiOrthogonality out;
    for (int j = 0; j < k; ++j)
        out.max_abs_pairing =
            std::max(out.max_abs_pairing, std::abs(grid.inner_product(spectrum.vectors[j], phi)));
    out.phi_norm_sq = grid.inner_product(phi, phi);
    out.parseval_gap = std::abs(out.phi_norm_sq - (grid.inner_product(gu1, gu1) - sum_r_sq));
    return out;
}

IdentityCheck lemma22_check(const TestFunction& g, const Vec& u1, const Grid& grid,
                            const DerivativeStencils& stencils) {
    const Vec gu1 = g.sample_interior(grid).cwiseProduct(u1);
    const Vec p = build_p(g, u1, grid, stencils);

    IdentityCheck out;
    out.lhs = grid.inner_product(gu1, p);

    const std::vector<Vec> grad_u1 = stencils.gradient(u1);
    const Vec lap_u1 = stencils.laplacian(u1);
    Vec integrand(grid.interior_count());
    for (int i = 0; i < grid.interior_count(); ++i) {
        const auto x = grid.coordinates(grid.interior_nodes()[i]);
        const int q = grid.closure_of_interior(i);
        double gdot = 0.0, gnorm = 0.0;
        for (int ax = 0; ax < grid.dim(); ++ax) {
            const double ga = g.grad[ax](x);
            gdot += ga * grad_u1[ax][q];
            gnorm += ga * ga;
        }
        const double lg = g.lap(x);
        integrand[i] = lg * lg * u1[i] * u1[i] + 4.0 * gdot * gdot -
                       2.0 * gnorm * u1[i] * lap_u1[q] + 4.0 * u1[i] * lg * gdot;
    }
    out.rhs = grid.cell_volume() * integrand.sum();
    out.rel_gap = rel_gap_of(out.lhs, out.rhs);
    return out;
}

namespace chain_forms {
double lap_g1(double a, double b, double t) {
    return -a * a * std::cos(a * t) - a * b * std::sin(a * t);
}
double grad_lap_g1_coeff(double a, double b, double t) {
    return a * a * a * std::sin(a * t) - a * a * b * std::cos(a * t);
}
double bilap_g1(double a, double b, double t) {
    return a * a * a * a * std::cos(a * t) + 2.0 * a * a * a * b * std::sin(a * t) -
           a * a * b * b * std::cos(a * t);
}
double lap_g2(double a, double b, double t) {
    return -a * a * std::sin(a * t) + a * b * std::cos(a * t);
}
double grad_lap_g2_coeff(double a, double b, double t) {
    return -a * a * a * std::cos(a * t) - a * a * b * std::sin(a * t);
}
double bilap_g2(double a, double b, double t) {
    return a * a * a * a * std::sin(a * t) - 2.0 * a * a * a * b * std::cos(a * t) -
           a * a * b * b * std::sin(a * t);
}
}  // namespace chain_forms

PairTrialData build_pair(double a, int axis, const Vec& u1, const Grid& grid,
                         const DerivativeStencils& stencils) {
    if (axis < 0 || axis >= grid.dim()) throw std::invalid_argument("build_pair: bad axis");
    PairTrialData pair;
    pair.a = a;
    pair.b = 0.0;  // f = x_m
    pair.axis = axis;

    const Vec du = stencils.axis_first(u1, axis);          // closure
    const Vec d2u = stencils.axis_second(u1, axis);        // closure
    const Vec lap_u = stencils.laplacian(u1);              // closure
    const Vec lap_du = stencils.interior_laplacian_of_closure(du);
    const Vec d_lap_u = stencils.interior_first_of_closure(lap_u, axis);

    const int N = grid.interior_count();
    pair.g1.resize(N);
    pair.g2.resize(N);
    pair.coeff_a.resize(N);
    pair.coeff_b.resize(N);
    pair.p1.resize(N);
    pair.p2.resize(N);
    const double a2 = a * a, a3 = a2 * a, a4 = a2 * a2;
    for (int i = 0; i < N; ++i) {
        const double t = grid.coordinate(grid.interior_nodes()[i], axis);
        const int q = grid.closure_of_interior(i);
        pair.g1[i] = std::cos(a * t);
        pair.g2[i] = std::sin(a * t);
        // Bracket fields of the expansion p1 = A cos(a f) + B sin(a f),
        // p2 = A sin(a f) - B cos(a f), specialized to b = 0.
        pair.coeff_a[i] = a4 * u1[i] - 2.0 * a2 * lap_u[q] - 4.0 * a2 * d2u[q];
        pair.coeff_b[i] = 4.0 * a3 * du[q] - 2.0 * a * lap_du[i] - 2.0 * a * d_lap_u[i];
        pair.p1[i] = pair.coeff_a[i] * pair.g1[i] + pair.coeff_b[i] * pair.g2[i];
        pair.p2[i] = pair.coeff_a[i] * pair.g2[i] - pair.coeff_b[i] * pair.g1[i];
    }
    return pair;
}

IdentityCheck prop21_check(const PairTrialData& pair, const Grid& grid) {
    IdentityCheck out;
    out.lhs = grid.inner_product(pair.p1, pair.p1) + grid.inner_product(pair.p2, pair.p2);
    out.rhs = grid.inner_product(pair.coeff_a, pair.coeff_a) +
              grid.inner_product(pair.coeff_b, pair.coeff_b);
    out.rel_gap = rel_gap_of(out.lhs, out.rhs);
    return out;
}

IdentityCheck prop22_check(const PairTrialData& pair, const Vec& u1, const Grid& grid,
                           const DerivativeStencils& stencils) {
    IdentityCheck out;
    const Vec g1u1 = pair.g1.cwiseProduct(u1);
    const Vec g2u1 = pair.g2.cwiseProduct(u1);
    out.lhs = grid.inner_product(g1u1, pair.p1) + grid.inner_product(g2u1, pair.p2);

    const Vec lap_u = stencils.laplacian(u1);
    const double a2 = pair.a * pair.a, b = pair.b;
    Vec integrand(grid.interior_count());
    for (int i = 0; i < grid.interior_count(); ++i) {
        const int q = grid.closure_of_interior(i);
        integrand[i] = (a2 * a2 - a2 * b * b) * u1[i] * u1[i] - 2.0 * a2 * u1[i] * lap_u[q];
    }
    // gradient term on edge midpoints: the forward difference is exactly
    // adjoint to the centered second difference hidden in p, so the identity
    // holds at roundoff instead of carrying its own O(h^2) constant
    double grad_term = 0.0;
    const double h = grid.spacing();
    for (int i = 0; i < grid.interior_count(); ++i) {
        MultiIndex right = grid.interior_nodes()[i];
        right[pair.axis] += 1;
        const double dr = (grid.extended_value(u1, right) - u1[i]) / h;
        grad_term += dr * dr;
        MultiIndex left = grid.interior_nodes()[i];
        left[pair.axis] -= 1;
        if (grid.interior_index(left) < 0) {  // boundary edge, owned by no neighbor
            const double dl = (u1[i] - grid.extended_value(u1, left)) / h;
            grad_term += dl * dl;
        }
    }
    out.rhs = grid.cell_volume() * (integrand.sum() + 4.0 * a2 * grad_term);
    out.rel_gap = rel_gap_of(out.lhs, out.rhs);
    return out;
}

InequalityMargin theorem21_check(const Spectrum& spectrum, const TestFunction& g, int k,
                                 const Grid& grid, const DerivativeStencils& stencils,
                                 const std::optional<std::vector<double>>& gammas) {
    const std::vector<double>& gam = gammas ? *gammas : spectrum.values;
    if (k + 2 > static_cast<int>(gam.size()))
        throw std::invalid_argument("theorem21_check: need k+2 eigenvalues");
    const Vec& u1 = spectrum.first();
    const Vec gu1 = g.sample_interior(grid).cwiseProduct(u1);
    const Vec p = build_p(g, u1, grid, stencils);

    const double mu1 = gam[k] - gam[0];      // gamma_{k+1} - gamma_1
    const double mu2 = gam[k + 1] - gam[0];  // gamma_{k+2} - gamma_1
    InequalityMargin out;
    out.lhs = (mu1 + mu2) * grid.inner_product(gu1, p);
    out.rhs = grid.inner_product(p, p) + mu1 * mu2 * grid.inner_product(gu1, gu1);
    out.margin = out.rhs - out.lhs;
    return out;
}

InequalityMargin lemma21_gap_inequality_check(
    const Spectrum& spectrum, const TestFunction& g, int k, const Grid& grid,
    const DerivativeStencils& stencils, const std::optional<std::vector<double>>& gammas) {
    const std::vector<double>& gam = gammas ? *gammas : spectrum.values;
    const int K = std::min<int>(spectrum.count(), static_cast<int>(gam.size()));
    if (k + 2 > K)
        throw std::invalid_argument("lemma21_gap_inequality_check: need k+2 eigenpairs");
    const Vec& u1 = spectrum.first();
    const Vec gu1 = g.sample_interior(grid).cwiseProduct(u1);
    const Vec p = build_p(g, u1, grid, stencils);

    std::vector<double> r(K), mu(K);
    double sum_r_sq_head = 0.0, sum_mu2_r2_head = 0.0, tail_sum = 0.0, r_sq_all = 0.0;
    for (int j = 0; j < K; ++j) {
        r[j] = grid.inner_product(gu1, spectrum.vectors[j]);
        mu[j] = gam[j] - gam[0];
        r_sq_all += r[j] * r[j];
        if (j < k) {
            sum_r_sq_head += r[j] * r[j];
            sum_mu2_r2_head += mu[j] * mu[j] * r[j] * r[j];
        } else {
            tail_sum += mu[j] * r[j] * r[j];
        }
    }
    const double gu1_sq = grid.inner_product(gu1, gu1);
    const double mu1 = mu[k], mu2 = mu[k + 1];
    const double phi_sq = gu1_sq - sum_r_sq_head;

    InequalityMargin out;
    out.lhs = (mu1 + mu2) * tail_sum;
    out.rhs = (grid.inner_product(p, p) - sum_mu2_r2_head) + mu1 * mu2 * phi_sq;
    out.margin = out.rhs - out.lhs;
    out.tail_mass_rel = gu1_sq > 0.0 ? std::max(0.0, gu1_sq - r_sq_all) / gu1_sq : 0.0;
    out.conclusive = out.tail_mass_rel <= 0.01;
    return out;
}

}  // namespace platelab
