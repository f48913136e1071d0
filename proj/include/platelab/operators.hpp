#pragma once

#include <iosfwd>

#include <Eigen/SparseCore>

#include "platelab/grid.hpp"

namespace platelab {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Sparse symmetric operator with entry-exact symmetry: the lower triangle
/// is a mirror of the stored upper triangle by construction.
class SymmetricOperator {
public:
    SymmetricOperator() = default;
    /// Symmetrizes by copying the upper triangle of `m` onto the lower.
    explicit SymmetricOperator(const SparseMatrix& m);

    int size() const { return static_cast<int>(matrix_.rows()); }
    const SparseMatrix& matrix() const { return matrix_; }

    Vec apply(const Vec& u) const { return matrix_ * u; }
    double quadratic_form(const Vec& u) const { return u.dot(matrix_ * u); }

    bool entrywise_symmetric() const;
    int max_row_nonzeros() const;

    /// Coordinate text dump: "row col value" per line, upper triangle only,
    /// 17 significant digits.
    void dump_coordinate(std::ostream& os) const;

private:
    SparseMatrix matrix_;
};

/// -Laplacian with Dirichlet zero boundary values (positive definite).
SymmetricOperator assemble_laplacian(const Grid& grid);

/// Clamped biharmonic operator, assembled as G^T W G where G maps interior
/// values to ghost-extended Laplacian values on the closure and W holds the
/// closure quadrature weights, so u^T (bih) u equals the weighted squared
/// Laplacian exactly.
SymmetricOperator assemble_biharmonic(const Grid& grid);

/// The closure difference operator G above (closure_count x interior_count).
SparseMatrix closure_laplacian_operator(const Grid& grid);

}  // namespace platelab
