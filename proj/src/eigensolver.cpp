#include "platelab/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

namespace platelab {

namespace {

void finalize(Spectrum& s, const SymmetricOperator& matrix, const Grid& grid) {
    const double scale = 1.0 / std::sqrt(grid.cell_volume());
    for (std::size_t i = 0; i < s.vectors.size(); ++i) {
        Vec& v = s.vectors[i];
        v *= scale / v.norm();  // Euclidean-unit in, grid-unit out
        if (v.sum() < 0.0) v = -v;
    }
    s.residuals.clear();
    const double hpow = std::sqrt(grid.cell_volume());
    for (std::size_t i = 0; i < s.vectors.size(); ++i) {
        Vec r = matrix.apply(s.vectors[i]) - s.values[i] * s.vectors[i];
        s.residuals.push_back(hpow * r.norm());
    }
}

}  // namespace

Spectrum solve_dense(const SymmetricOperator& matrix, const Grid& grid, int K, int dense_cap) {
    const int N = matrix.size();
    if (N > dense_cap)
        throw std::invalid_argument(
            "solve_dense: problem size " + std::to_string(N) + " exceeds the dense cap " +
            std::to_string(dense_cap) + "; use solve_shift_invert");
    if (K < 1 || K > N) throw std::invalid_argument("solve_dense: K must be in 1..N");

    Eigen::MatrixXd dense(matrix.matrix());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("solve_dense: eigendecomposition failed");

    Spectrum s;
    s.method = "dense";
    for (int i = 0; i < K; ++i) {
        s.values.push_back(solver.eigenvalues()[i]);
        s.vectors.emplace_back(solver.eigenvectors().col(i));
    }
    finalize(s, matrix, grid);
    return s;
}

Spectrum solve_shift_invert(const SymmetricOperator& matrix, const Grid& grid, int K,
                            double sigma, double tol, std::uint64_t seed) {
    const int N = matrix.size();
    if (K < 1 || K > N) throw std::invalid_argument("solve_shift_invert: K must be in 1..N");
    if (tol <= 0) throw std::invalid_argument("solve_shift_invert: tol must be positive");

    SparseMatrix shifted = matrix.matrix();
    if (sigma != 0.0) {
        SparseMatrix id(N, N);
        id.setIdentity();
        shifted -= sigma * id;
    }
    Eigen::SimplicialLLT<SparseMatrix> llt(shifted);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error(
            "solve_shift_invert: Cholesky factorization of the shifted operator failed "
            "(operator not positive definite at this shift)");

    // Deterministic starting vector.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Vec v(N);
    for (int i = 0; i < N; ++i) v[i] = unif(rng);
    v.normalize();

    const int max_steps = std::min(N, std::max(4 * K + 40, 100));
    std::vector<Vec> basis;
    basis.reserve(max_steps);
    std::vector<double> alpha, beta;  // tridiagonal entries

    Spectrum s;
    s.method = "shift-invert";
    Eigen::VectorXd theta;
    Eigen::MatrixXd ritz;
    int converged = 0;

    for (int j = 0; j < max_steps; ++j) {
        basis.push_back(v);
        Vec w = llt.solve(v);
        const double a = v.dot(w);
        alpha.push_back(a);
        w -= a * v;
        if (j > 0) w -= beta.back() * basis[j - 1];
        // Full reorthogonalization, two passes.
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& q : basis) w -= q.dot(w) * q;
        const double b = w.norm();

        const int m = j + 1;
        if (m >= K || b < 1e-14) {
            Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
            for (int i = 0; i < m; ++i) t(i, i) = alpha[i];
            for (int i = 0; i + 1 < m; ++i) t(i, i + 1) = t(i + 1, i) = beta[i];
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(t);
            theta = small.eigenvalues();
            ritz = small.eigenvectors();
            // Largest theta of the inverse operator <-> smallest eigenvalues.
            converged = 0;
            for (int i = 0; i < std::min(K, m); ++i) {
                const int col = m - 1 - i;
                const double bound = b * std::abs(ritz(m - 1, col));
                if (bound <= tol * std::abs(theta[col]))
                    ++converged;
                else
                    break;
            }
            if (converged >= K || b < 1e-14) break;
        }
        if (b < 1e-14) break;
        beta.push_back(b);
        v = w / b;
    }

    const int m = static_cast<int>(alpha.size());
    const int avail = std::min(K, m);
    for (int i = 0; i < avail; ++i) {
        const int col = m - 1 - i;
        if (theta[col] <= 0.0)
            throw std::runtime_error("solve_shift_invert: nonpositive Ritz value; shift too high");
        s.values.push_back(sigma + 1.0 / theta[col]);
        Vec x = Vec::Zero(N);
        for (int q = 0; q < m; ++q) x += ritz(q, col) * basis[q];
        s.vectors.push_back(x);
    }
    finalize(s, matrix, grid);

    if (converged < K) {
        // Partial result, flagged rather than silently truncated.
        s.method = "shift-invert(partial:" + std::to_string(converged) + "/" +
                   std::to_string(K) + ")";
    }
    return s;
}

double orthonormality_defect(const Spectrum& spectrum, const Grid& grid) {
    double worst = 0.0;
    const int K = spectrum.count();
    for (int i = 0; i < K; ++i)
        for (int j = i; j < K; ++j) {
            const double g = grid.inner_product(spectrum.vectors[i], spectrum.vectors[j]);
            worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

}  // namespace platelab
