#pragma once

#include <cstdint>
#include <vector>

namespace platelab {

/// Finite truncation of a nondecreasing nonnegative sequence with weights,
/// together with the moments A = sum mu^2 a^2, B = sum a^2, S = sum mu a^2.
struct SequenceInstance {
    std::vector<double> mu;    // sorted ascending, nonnegative
    std::vector<double> a_sq;  // nonnegative weights
    double A = 0.0;
    double B = 0.0;
    double S = 0.0;
};

/// (A + mu1 mu2 B) / (mu1 + mu2), the upper bound for S over all weights with
/// the given moments; mu1, mu2 are the two smallest sequence values.
double lemma_bound(double mu1, double mu2, double A, double B);

struct BruteForceResult {
    double s_max = 0.0;
    int support_lo = -1;  // indices of the optimal two-point support
    int support_hi = -1;
};

/// Constrained maximum of sum mu_j w_j over w >= 0 with sum mu^2 w = A and
/// sum w = B, by enumerating two-point supports (the optimum concentrates on
/// at most two distinct mu values).
BruteForceResult brute_force_max(const std::vector<double>& mu, double A, double B);

/// Deterministic random instance; always emits length >= 2.
SequenceInstance random_instance(std::uint64_t seed, int length, double spread);

}  // namespace platelab
