#include "platelab/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace platelab {

Domain Domain::interval(double length) {
    if (length <= 0) throw std::invalid_argument("interval length must be positive");
    Domain d;
    d.kind = Kind::Interval;
    d.dim = 1;
    d.extents = {length};
    d.center = {0.0};
    return d;
}

Domain Domain::box(std::vector<double> extents) {
    if (extents.empty() || extents.size() > 3)
        throw std::invalid_argument("box dimension must be 1..3");
    for (double e : extents)
        if (e <= 0) throw std::invalid_argument("box extents must be positive");
    Domain d;
    d.kind = extents.size() == 1 ? Kind::Interval : Kind::Box;
    d.dim = static_cast<int>(extents.size());
    d.extents = std::move(extents);
    d.center.assign(d.dim, 0.0);
    return d;
}

Domain Domain::disk(double radius) {
    if (radius <= 0) throw std::invalid_argument("disk radius must be positive");
    Domain d;
    d.kind = Kind::MaskedDisk;
    d.dim = 2;
    d.radius = radius;
    d.extents = {2 * radius, 2 * radius};
    d.center = {-radius, -radius};  // bounding box [-r, r]^2
    return d;
}

double Domain::volume() const {
    if (kind == Kind::MaskedDisk) return std::numbers::pi * radius * radius;
    double v = 1.0;
    for (double e : extents) v *= e;
    return v;
}

Grid::Grid(Domain domain, std::vector<int> divisions) : domain_(std::move(domain)) {
    const int n = domain_.dim;
    if (static_cast<int>(divisions.size()) != n)
        throw std::invalid_argument("divisions must match domain dimension");
    for (int d : divisions)
        if (d < 4) throw std::invalid_argument("need at least 4 divisions per axis");

    h_ = domain_.extents[0] / divisions[0];
    for (int m = 0; m < n; ++m) {
        divisions_[m] = divisions[m];
        const double hm = domain_.extents[m] / divisions[m];
        if (std::abs(hm - h_) > 1e-12 * h_)
            throw std::invalid_argument(
                "divisions give non-uniform spacing across axes; choose counts "
                "proportional to the extents");
        origin_[m] = domain_.center[m];
    }
    for (int m = n; m < 3; ++m) divisions_[m] = 0;
    cell_volume_ = std::pow(h_, n);

    // Full lattice has divisions+1 nodes per axis.
    std::array<int, 3> nodes{1, 1, 1};
    int lattice_size = 1;
    for (int m = 0; m < n; ++m) {
        nodes[m] = divisions_[m] + 1;
        lattice_size *= nodes[m];
    }
    interior_of_lattice_.assign(lattice_size, -1);
    closure_of_lattice_.assign(lattice_size, -1);

    const bool masked = domain_.kind == Domain::Kind::MaskedDisk;
    const double r2 = domain_.radius * domain_.radius;

    auto is_interior = [&](const MultiIndex& m) {
        for (int ax = 0; ax < n; ++ax)
            if (m[ax] <= 0 || m[ax] >= divisions_[ax]) return false;
        if (masked) {
            const double x = coordinate(m, 0), y = coordinate(m, 1);
            return x * x + y * y < r2;
        }
        return true;
    };

    // Lexicographic node ordering for determinism.
    MultiIndex m{0, 0, 0};
    for (m[0] = 0; m[0] < nodes[0]; ++m[0])
        for (m[1] = 0; m[1] < nodes[1]; ++m[1])
            for (m[2] = 0; m[2] < nodes[2]; ++m[2])
                if (is_interior(m)) {
                    interior_of_lattice_[lattice_index(m)] = static_cast<int>(interior_.size());
                    interior_.push_back(m);
                }

    if (interior_.empty())
        throw std::invalid_argument("grid has no interior nodes; refine divisions");

    // Closure: boxes take the full lattice; the masked disk takes interior
    // nodes plus their axis neighbours (the numerical boundary layer).
    auto in_closure = [&](const MultiIndex& q) {
        if (!masked) return true;
        if (interior_of_lattice_[lattice_index(q)] >= 0) return true;
        for (int ax = 0; ax < n; ++ax)
            for (int s = -1; s <= 1; s += 2) {
                MultiIndex p = q;
                p[ax] += s;
                if (in_lattice(p) && interior_of_lattice_[lattice_index(p)] >= 0) return true;
            }
        return false;
    };

    for (m[0] = 0; m[0] < nodes[0]; ++m[0])
        for (m[1] = 0; m[1] < nodes[1]; ++m[1])
            for (m[2] = 0; m[2] < nodes[2]; ++m[2])
                if (in_closure(m)) {
                    closure_of_lattice_[lattice_index(m)] = static_cast<int>(closure_.size());
                    closure_.push_back(m);
                }

    interior_to_closure_.resize(interior_.size());
    for (std::size_t i = 0; i < interior_.size(); ++i)
        interior_to_closure_[i] = closure_of_lattice_[lattice_index(interior_[i])];

    // Trapezoidal weights: 1/2 per axis at box faces, 1 elsewhere. The masked
    // disk keeps unit weights (its boundary treatment is first order anyway).
    weights_.resize(closure_.size(), 1.0);
    if (!masked) {
        for (std::size_t q = 0; q < closure_.size(); ++q) {
            double w = 1.0;
            for (int ax = 0; ax < n; ++ax)
                if (closure_[q][ax] == 0 || closure_[q][ax] == divisions_[ax]) w *= 0.5;
            weights_[q] = w;
        }
    }
}

int Grid::lattice_index(const MultiIndex& m) const {
    int idx = m[0];
    for (int ax = 1; ax < domain_.dim; ++ax) idx = idx * (divisions_[ax] + 1) + m[ax];
    return idx;
}

bool Grid::in_lattice(const MultiIndex& m) const {
    for (int ax = 0; ax < domain_.dim; ++ax)
        if (m[ax] < 0 || m[ax] > divisions_[ax]) return false;
    return true;
}

int Grid::interior_index(const MultiIndex& m) const {
    if (!in_lattice(m)) return -1;
    return interior_of_lattice_[lattice_index(m)];
}

int Grid::closure_index(const MultiIndex& m) const {
    if (!in_lattice(m)) return -1;
    return closure_of_lattice_[lattice_index(m)];
}

double Grid::coordinate(const MultiIndex& m, int axis) const {
    return origin_[axis] + h_ * m[axis];
}

std::array<double, 3> Grid::coordinates(const MultiIndex& m) const {
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (int ax = 0; ax < domain_.dim; ++ax) x[ax] = coordinate(m, ax);
    return x;
}

double Grid::inner_product(const Vec& u, const Vec& v) const {
    if (u.size() != interior_count() || v.size() != interior_count())
        throw std::invalid_argument("inner_product: vector length must equal node count");
    return cell_volume_ * u.dot(v);
}

double Grid::norm(const Vec& u) const { return std::sqrt(inner_product(u, u)); }

double Grid::closure_integral(const Vec& f) const {
    if (f.size() != closure_count())
        throw std::invalid_argument("closure_integral: length must equal closure count");
    double s = 0.0;
    for (int q = 0; q < closure_count(); ++q) s += weights_[q] * f[q];
    return cell_volume_ * s;
}

double Grid::closure_integral(const Vec& f, const Vec& g) const {
    if (f.size() != closure_count() || g.size() != closure_count())
        throw std::invalid_argument("closure_integral: length must equal closure count");
    double s = 0.0;
    for (int q = 0; q < closure_count(); ++q) s += weights_[q] * f[q] * g[q];
    return cell_volume_ * s;
}

double Grid::extended_value(const Vec& u, MultiIndex m) const {
    if (domain_.kind == Domain::Kind::MaskedDisk) {
        const int i = interior_index(m);
        return i >= 0 ? u[i] : 0.0;
    }
    // Even reflection one layer beyond each box face: u(-h) = u(h).
    for (int ax = 0; ax < domain_.dim; ++ax) {
        if (m[ax] == -1) m[ax] = 1;
        if (m[ax] == divisions_[ax] + 1) m[ax] = divisions_[ax] - 1;
    }
    const int i = interior_index(m);
    return i >= 0 ? u[i] : 0.0;
}

Grid build_grid(const Domain& domain, const std::vector<int>& divisions) {
    return Grid(domain, divisions);
}

}  // namespace platelab
