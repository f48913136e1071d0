#pragma once

#include "platelab/grid.hpp"

namespace platelab {

/// Centered-difference appliers sharing the grid's clamped ghost convention.
/// "Closure" outputs are sampled on the grid's closure node set (so that e.g.
/// the squared Laplacian integrates to the exact operator-square quadratic
/// form); "interior" outputs are plain node vectors.
class DerivativeStencils {
public:
    explicit DerivativeStencils(const Grid& grid) : grid_(&grid) {}

    const Grid& grid() const { return *grid_; }

    /// d u / d x_m on the closure, centered, ghost-extended.
    Vec axis_first(const Vec& u, int axis) const;
    /// d^2 u / d x_m^2 on the closure (3-point), ghost-extended.
    Vec axis_second(const Vec& u, int axis) const;
    /// Discrete Laplacian of a clamped interior vector, on the closure.
    Vec laplacian(const Vec& u) const;

    std::vector<Vec> gradient(const Vec& u) const;
    std::vector<Vec> pure_second_derivatives(const Vec& u) const;
    /// grad(Laplacian u) as per-axis interior vectors (Laplacian first, then
    /// centered first differences of the closure field).
    std::vector<Vec> grad_laplacian(const Vec& u) const;

    // Generic stencils reading an arbitrary closure field (no boundary
    // condition assumed); defined at interior nodes, whose stencil
    // neighbours always lie in the closure.
    Vec interior_first_of_closure(const Vec& field, int axis) const;
    Vec interior_laplacian_of_closure(const Vec& field) const;

    /// Restrict a closure field to interior nodes.
    Vec restrict_to_interior(const Vec& field) const;
    /// Embed an interior vector into the closure (zero elsewhere).
    Vec embed_in_closure(const Vec& u) const;

private:
    const Grid* grid_;
};

}  // namespace platelab
