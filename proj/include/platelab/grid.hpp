#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace platelab {

using Vec = Eigen::VectorXd;
using MultiIndex = std::array<int, 3>;

/// Computational domain: an interval, an axis-aligned box, or a disk
/// realized as a masked square lattice.
struct Domain {
    enum class Kind { Interval, Box, MaskedDisk };

    Kind kind = Kind::Interval;
    int dim = 1;
    std::vector<double> extents;  // per-axis lengths of the bounding box
    double radius = 0.0;          // masked disk only
    std::vector<double> center;   // lattice origin offset per axis

    static Domain interval(double length);
    static Domain box(std::vector<double> extents);
    static Domain disk(double radius);

    /// Analytic volume (pi r^2 for the disk, product of extents otherwise).
    double volume() const;
};

/// Uniform grid over a domain. Unknowns live on interior nodes; boundary
/// nodes carry the implicit value 0 (clamped condition u = 0). The closure
/// node set (interior plus the surrounding layer where a Laplacian stencil
/// of an interior function is still defined) carries trapezoidal quadrature
/// weights so that operator-square identities hold exactly.
class Grid {
public:
    Grid(Domain domain, std::vector<int> divisions);

    const Domain& domain() const { return domain_; }
    int dim() const { return domain_.dim; }
    double spacing() const { return h_; }
    int divisions(int axis) const { return divisions_[axis]; }

    int interior_count() const { return static_cast<int>(interior_.size()); }
    int closure_count() const { return static_cast<int>(closure_.size()); }

    const std::vector<MultiIndex>& interior_nodes() const { return interior_; }
    const std::vector<MultiIndex>& closure_nodes() const { return closure_; }

    /// -1 when the multi-index is not an interior / closure node.
    int interior_index(const MultiIndex& m) const;
    int closure_index(const MultiIndex& m) const;
    int closure_of_interior(int i) const { return interior_to_closure_[i]; }

    bool in_lattice(const MultiIndex& m) const;
    double coordinate(const MultiIndex& m, int axis) const;
    std::array<double, 3> coordinates(const MultiIndex& m) const;

    double cell_volume() const { return cell_volume_; }
    double closure_weight(int closure_idx) const { return weights_[closure_idx]; }

    /// Discrete surrogate of the L2 pairing: h^n * sum over interior nodes.
    double inner_product(const Vec& u, const Vec& v) const;
    double norm(const Vec& u) const;

    /// h^n * sum of w_q * f_q over the closure node set.
    double closure_integral(const Vec& closure_field) const;
    double closure_integral(const Vec& f, const Vec& g) const;

    /// h^n * interior node count; converges to the domain volume.
    double discrete_volume() const { return cell_volume_ * interior_count(); }

    /// Value of the clamped extension of an interior vector at an arbitrary
    /// multi-index: interior value, 0 on boundary nodes, even reflection one
    /// layer outside the lattice (boxes) or plain zero (masked disk).
    double extended_value(const Vec& u, MultiIndex m) const;

private:
    int lattice_index(const MultiIndex& m) const;

    Domain domain_;
    std::array<int, 3> divisions_{};
    double h_ = 0.0;
    double cell_volume_ = 0.0;
    std::array<double, 3> origin_{};

    std::vector<MultiIndex> interior_;
    std::vector<MultiIndex> closure_;
    std::vector<int> interior_of_lattice_;
    std::vector<int> closure_of_lattice_;
    std::vector<int> interior_to_closure_;
    std::vector<double> weights_;
};

Grid build_grid(const Domain& domain, const std::vector<int>& divisions);

}  // namespace platelab
