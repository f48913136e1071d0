#pragma once

#include <string>
#include <vector>

#include "platelab/functionals.hpp"

namespace platelab {

struct InequalityRecord {
    int k = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;      // rhs - lhs
    double rel_margin = 0.0;  // margin / max(|lhs|, |rhs|)
    bool skipped = false;
    std::string note;
};

enum class Verdict { Holds, Violated, Inconclusive };

/// Margin report for one eigenvalue inequality over a range of k.
struct InequalityReport {
    std::string id;
    std::string source;  // "computed" | "oracle"
    double eps_band = 0.0;
    std::vector<InequalityRecord> records;

    Verdict verdict() const;
    double min_margin() const;
};

std::string to_string(Verdict v);

/// Square-root gap bound: (sqrt(G_{k+1}-G_1) - sqrt(G_k-G_1))^2
/// <= 16 sqrt(G_1)/n * ((G_{k+1}-G_1)(G_k-G_1))^(1/4) + C.
InequalityReport gap_bound_report(const std::vector<double>& gammas,
                                  const EigenfunctionFunctionals& f, int n, int k_max,
                                  double eps_band, const std::string& source = "computed");

/// The classical universal inequalities plus the conjectured sharpening
/// (reported, never asserted): consecutive-gap bound (Payne-Polya-Weinberger
/// form), the Chen-Qian / Hook reciprocal bound, the quadratic
/// Cheng-Yang / Wang-Xia bound, and its conjectured 8/n variant.
std::vector<InequalityReport> classical_suite(const std::vector<double>& gammas, int n,
                                              int k_max, double eps_band,
                                              const std::string& source = "computed");

/// Levine-Protter lower bound on the mean of the first k eigenvalues.
InequalityReport levine_protter_check(const std::vector<double>& gammas, int n, double vol,
                                      int k_max, const std::string& source = "computed");

struct AsymptoticFit {
    double coefficient = 0.0;        // ap_coefficient(n, vol)
    double last_ratio = 0.0;         // gamma_k / k^(4/n) at the largest k
    double ratio_drift = 0.0;        // |last_ratio/coefficient - 1|
    double beam_quarter_ratio = 0.0; // gamma_k^(1/4) / ((k+1/2) pi), beam only
};
AsymptoticFit agmon_pleijel_fit(const std::vector<double>& gammas, int n, double vol,
                                int k_lo, int k_hi);

struct OrderScan {
    double slope_rhs = 0.0;       // log-log slope of the gap-bound rhs vs k
    double expected_rhs = 0.0;    // 2/n
    double slope_gap = 0.0;       // slope of the eigenvalue-gap bound vs k
    double expected_gap = 0.0;    // 3/n
    double slope_stderr = 0.0;
    int k_lo = 0, k_hi = 0;
};
/// Log-log regression of the gap-bound right-hand side over the upper part
/// of [10, k_max]; small k (constant-dominated regime) are excluded.
OrderScan gap_order_scan(const std::vector<double>& gammas,
                         const EigenfunctionFunctionals& f, int n, int k_max);

}  // namespace platelab
