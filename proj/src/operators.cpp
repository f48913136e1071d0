#include "platelab/operators.hpp"

#include <iomanip>
#include <map>
#include <ostream>
#include <vector>

namespace platelab {

SymmetricOperator::SymmetricOperator(const SparseMatrix& m) {
    matrix_ = m.triangularView<Eigen::Upper>();
    SparseMatrix lower = matrix_.triangularView<Eigen::StrictlyUpper>();
    lower = SparseMatrix(lower.transpose());
    matrix_ += lower;
    matrix_.makeCompressed();
}

bool SymmetricOperator::entrywise_symmetric() const {
    SparseMatrix diff = SparseMatrix(matrix_.transpose()) - matrix_;
    for (int k = 0; k < diff.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(diff, k); it; ++it)
            if (it.value() != 0.0) return false;
    return true;
}

int SymmetricOperator::max_row_nonzeros() const {
    std::vector<int> counts(matrix_.rows(), 0);
    for (int k = 0; k < matrix_.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(matrix_, k); it; ++it) ++counts[it.row()];
    int best = 0;
    for (int c : counts) best = std::max(best, c);
    return best;
}

void SymmetricOperator::dump_coordinate(std::ostream& os) const {
    os << std::setprecision(17);
    for (int k = 0; k < matrix_.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(matrix_, k); it; ++it)
            if (it.row() <= it.col()) os << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
}

SymmetricOperator assemble_laplacian(const Grid& grid) {
    const int n = grid.dim();
    const int N = grid.interior_count();
    const double invh2 = 1.0 / (grid.spacing() * grid.spacing());
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(N) * (2 * n + 1));
    const auto& nodes = grid.interior_nodes();
    for (int i = 0; i < N; ++i) {
        trips.emplace_back(i, i, 2.0 * n * invh2);
        for (int ax = 0; ax < n; ++ax)
            for (int s = -1; s <= 1; s += 2) {
                MultiIndex p = nodes[i];
                p[ax] += s;
                const int j = grid.interior_index(p);
                if (j >= 0) trips.emplace_back(i, j, -invh2);
            }
    }
    SparseMatrix m(N, N);
    m.setFromTriplets(trips.begin(), trips.end());
    return SymmetricOperator(m);
}

SparseMatrix closure_laplacian_operator(const Grid& grid) {
    const int n = grid.dim();
    const int N = grid.interior_count();
    const int Nc = grid.closure_count();
    const double invh2 = 1.0 / (grid.spacing() * grid.spacing());
    const auto& nodes = grid.closure_nodes();
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(Nc) * (2 * n + 1));

    const bool masked = grid.domain().kind == Domain::Kind::MaskedDisk;
    // Resolve the ghost-extended interior index of a possibly-outside
    // multi-index: even reflection for boxes, nothing for the masked disk.
    auto resolve = [&](MultiIndex m) -> int {
        if (!masked)
            for (int ax = 0; ax < n; ++ax) {
                if (m[ax] == -1) m[ax] = 1;
                if (m[ax] == grid.divisions(ax) + 1) m[ax] = grid.divisions(ax) - 1;
            }
        return grid.interior_index(m);
    };

    for (int q = 0; q < Nc; ++q) {
        std::map<int, double> row;
        const int center = grid.interior_index(nodes[q]);
        if (center >= 0) row[center] += -2.0 * n * invh2;
        for (int ax = 0; ax < n; ++ax)
            for (int s = -1; s <= 1; s += 2) {
                MultiIndex p = nodes[q];
                p[ax] += s;
                const int j = resolve(p);
                if (j >= 0) row[j] += invh2;
            }
        for (const auto& [col, val] : row)
            if (val != 0.0) trips.emplace_back(q, col, val);
    }
    SparseMatrix g(Nc, N);
    g.setFromTriplets(trips.begin(), trips.end());
    return g;
}

SymmetricOperator assemble_biharmonic(const Grid& grid) {
    SparseMatrix g = closure_laplacian_operator(grid);
    Vec w(grid.closure_count());
    for (int q = 0; q < grid.closure_count(); ++q) w[q] = grid.closure_weight(q);
    SparseMatrix wg = w.asDiagonal() * g;
    SparseMatrix m = SparseMatrix(g.transpose()) * wg;
    return SymmetricOperator(m);
}

}  // namespace platelab
