#include "platelab/stencils.hpp"

#include <stdexcept>

namespace platelab {

Vec DerivativeStencils::axis_first(const Vec& u, int axis) const {
    const Grid& g = *grid_;
    const double inv2h = 1.0 / (2.0 * g.spacing());
    Vec out(g.closure_count());
    const auto& nodes = g.closure_nodes();
    for (int q = 0; q < g.closure_count(); ++q) {
        MultiIndex plus = nodes[q], minus = nodes[q];
        ++plus[axis];
        --minus[axis];
        out[q] = (g.extended_value(u, plus) - g.extended_value(u, minus)) * inv2h;
    }
    return out;
}

Vec DerivativeStencils::axis_second(const Vec& u, int axis) const {
    const Grid& g = *grid_;
    const double invh2 = 1.0 / (g.spacing() * g.spacing());
    Vec out(g.closure_count());
    const auto& nodes = g.closure_nodes();
    for (int q = 0; q < g.closure_count(); ++q) {
        MultiIndex plus = nodes[q], minus = nodes[q];
        ++plus[axis];
        --minus[axis];
        const double center = g.extended_value(u, nodes[q]);
        out[q] = (g.extended_value(u, plus) - 2.0 * center + g.extended_value(u, minus)) * invh2;
    }
    return out;
}

Vec DerivativeStencils::laplacian(const Vec& u) const {
    Vec out = axis_second(u, 0);
    for (int ax = 1; ax < grid_->dim(); ++ax) out += axis_second(u, ax);
    return out;
}

std::vector<Vec> DerivativeStencils::gradient(const Vec& u) const {
    std::vector<Vec> out;
    out.reserve(grid_->dim());
    for (int ax = 0; ax < grid_->dim(); ++ax) out.push_back(axis_first(u, ax));
    return out;
}

std::vector<Vec> DerivativeStencils::pure_second_derivatives(const Vec& u) const {
    std::vector<Vec> out;
    out.reserve(grid_->dim());
    for (int ax = 0; ax < grid_->dim(); ++ax) out.push_back(axis_second(u, ax));
    return out;
}

std::vector<Vec> DerivativeStencils::grad_laplacian(const Vec& u) const {
    const Vec lap = laplacian(u);
    std::vector<Vec> out;
    out.reserve(grid_->dim());
    for (int ax = 0; ax < grid_->dim(); ++ax)
        out.push_back(interior_first_of_closure(lap, ax));
    return out;
}

Vec DerivativeStencils::interior_first_of_closure(const Vec& field, int axis) const {
    const Grid& g = *grid_;
    if (field.size() != g.closure_count())
        throw std::invalid_argument("expected a closure field");
    const double inv2h = 1.0 / (2.0 * g.spacing());
    Vec out(g.interior_count());
    const auto& nodes = g.interior_nodes();
    for (int i = 0; i < g.interior_count(); ++i) {
        MultiIndex plus = nodes[i], minus = nodes[i];
        ++plus[axis];
        --minus[axis];
        const int qp = g.closure_index(plus), qm = g.closure_index(minus);
        const double fp = qp >= 0 ? field[qp] : 0.0;
        const double fm = qm >= 0 ? field[qm] : 0.0;
        out[i] = (fp - fm) * inv2h;
    }
    return out;
}

Vec DerivativeStencils::interior_laplacian_of_closure(const Vec& field) const {
    const Grid& g = *grid_;
    if (field.size() != g.closure_count())
        throw std::invalid_argument("expected a closure field");
    const double invh2 = 1.0 / (g.spacing() * g.spacing());
    Vec out = Vec::Zero(g.interior_count());
    const auto& nodes = g.interior_nodes();
    for (int i = 0; i < g.interior_count(); ++i) {
        const double center = field[g.closure_of_interior(i)];
        double acc = 0.0;
        for (int ax = 0; ax < g.dim(); ++ax) {
            MultiIndex plus = nodes[i], minus = nodes[i];
            ++plus[ax];
            --minus[ax];
            const int qp = g.closure_index(plus), qm = g.closure_index(minus);
            const double fp = qp >= 0 ? field[qp] : 0.0;
            const double fm = qm >= 0 ? field[qm] : 0.0;
            acc += fp - 2.0 * center + fm;
        }
        out[i] = acc * invh2;
    }
    return out;
}

Vec DerivativeStencils::restrict_to_interior(const Vec& field) const {
    const Grid& g = *grid_;
    Vec out(g.interior_count());
    for (int i = 0; i < g.interior_count(); ++i) out[i] = field[g.closure_of_interior(i)];
    return out;
}

Vec DerivativeStencils::embed_in_closure(const Vec& u) const {
    const Grid& g = *grid_;
    Vec out = Vec::Zero(g.closure_count());
    for (int i = 0; i < g.interior_count(); ++i) out[g.closure_of_interior(i)] = u[i];
    return out;
}

}  // namespace platelab
