#pragma once

#include <cstdint>
#include <string>

#include "platelab/grid.hpp"
#include "platelab/operators.hpp"

namespace platelab {

/// Smallest-K eigenpairs of a symmetric positive definite operator.
/// Eigenvectors are orthonormal under the grid inner product and sign-fixed
/// so that the pairing with the all-ones vector is nonnegative. Residuals
/// are recomputed from an independent matvec after the solve.
struct Spectrum {
    std::vector<double> values;        // sorted ascending, with multiplicity
    std::vector<Vec> vectors;          // grid-orthonormal
    std::vector<double> residuals;     // ||A u - val u|| in the grid norm
    std::string method;                // "dense" | "shift-invert"

    int count() const { return static_cast<int>(values.size()); }
    const Vec& first() const { return vectors.front(); }
};

inline constexpr int kDefaultDenseCap = 4096;

/// Full symmetric eigendecomposition (tridiagonalization + implicit shifts),
/// smallest K extracted. Refuses N beyond the dense cap.
Spectrum solve_dense(const SymmetricOperator& matrix, const Grid& grid, int K,
                     int dense_cap = kDefaultDenseCap);

/// Lanczos with full reorthogonalization on the inverse operator, backed by
/// a sparse Cholesky factorization of (A - sigma I); sigma = 0 uses A itself.
Spectrum solve_shift_invert(const SymmetricOperator& matrix, const Grid& grid, int K,
                            double sigma = 0.0, double tol = 1e-10,
                            std::uint64_t seed = 20240815);

/// Max deviation of grid-inner-product Gram matrix from identity.
double orthonormality_defect(const Spectrum& spectrum, const Grid& grid);

}  // namespace platelab
