#include "platelab/sequence_lemma.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace platelab {

double lemma_bound(double mu1, double mu2, double A, double B) {
    if (A < 0 || B < 0) throw std::invalid_argument("lemma_bound: A, B must be nonnegative");
    if (mu1 + mu2 <= 0.0)
        throw std::invalid_argument("lemma_bound: mu1 + mu2 must be positive");
    return (A + mu1 * mu2 * B) / (mu1 + mu2);
}

BruteForceResult brute_force_max(const std::vector<double>& mu, double A, double B) {
    if (mu.size() < 2) throw std::invalid_argument("brute_force_max: need at least two values");
    const auto [lo_it, hi_it] = std::minmax_element(mu.begin(), mu.end());
    const double mu_lo = *lo_it, mu_hi = *hi_it;
    const double slack = 1e-12 * (1.0 + A + B);
    if (A < mu_lo * mu_lo * B - slack)
        throw std::invalid_argument("brute_force_max: infeasible, A < min(mu)^2 B");
    if (A > mu_hi * mu_hi * B + slack)
        throw std::invalid_argument("brute_force_max: infeasible, A > max(mu)^2 B");

    BruteForceResult best;
    best.s_max = -1.0;
    const int n = static_cast<int>(mu.size());

    // Single-point supports: feasible when A = mu_r^2 B.
    for (int r = 0; r < n; ++r) {
        if (std::abs(mu[r] * mu[r] * B - A) <= slack) {
            const double s = mu[r] * B;
            if (s > best.s_max) best = {s, r, r};
        }
    }
    // Two-point supports mu_r < mu_s: solve the 2x2 moment system for weights.
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) {
            const double d = mu[s] * mu[s] - mu[r] * mu[r];
            if (d <= 0.0) continue;
            const double wr = (mu[s] * mu[s] * B - A) / d;
            const double ws = (A - mu[r] * mu[r] * B) / d;
            if (wr < -slack || ws < -slack) continue;
            const double val = mu[r] * std::max(wr, 0.0) + mu[s] * std::max(ws, 0.0);
            if (val > best.s_max) best = {val, r, s};
        }
    if (best.s_max < 0.0)
        throw std::invalid_argument("brute_force_max: no feasible support found");
    return best;
}

SequenceInstance random_instance(std::uint64_t seed, int length, double spread) {
    length = std::max(length, 2);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    SequenceInstance inst;
    inst.mu.resize(length);
    inst.a_sq.resize(length);
    double base = unif(rng);
    for (int j = 0; j < length; ++j) {
        inst.mu[j] = base;
        base += spread * unif(rng);
    }
    for (int j = 0; j < length; ++j) inst.a_sq[j] = unif(rng);
    for (int j = 0; j < length; ++j) {
        inst.A += inst.mu[j] * inst.mu[j] * inst.a_sq[j];
        inst.B += inst.a_sq[j];
        inst.S += inst.mu[j] * inst.a_sq[j];
    }
    return inst;
}

}  // namespace platelab
