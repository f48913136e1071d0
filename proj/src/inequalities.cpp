#include "platelab/inequalities.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "platelab/oracles.hpp"

namespace platelab {

namespace {

InequalityRecord make_record(int k, double lhs, double rhs) {
    InequalityRecord rec;
    rec.k = k;
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.margin = rhs - lhs;
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    rec.rel_margin = scale > 0.0 ? rec.margin / scale : 0.0;
    return rec;
}

struct LineFit {
    double slope = 0.0;
    double stderr_slope = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const int n = static_cast<int>(x.size());
    if (n < 2) throw std::invalid_argument("fit_line: need at least two points");
    double mx = 0, my = 0;
    for (int i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LineFit f;
    f.slope = sxy / sxx;
    double rss = 0;
    const double intercept = my - f.slope * mx;
    for (int i = 0; i < n; ++i) {
        const double e = y[i] - (intercept + f.slope * x[i]);
        rss += e * e;
    }
    if (n > 2) f.stderr_slope = std::sqrt(rss / (n - 2) / sxx);
    return f;
}

}  // namespace

Verdict InequalityReport::verdict() const {
    bool inconclusive = false;
    for (const auto& rec : records) {
        if (rec.skipped) continue;
        if (rec.margin < -eps_band) return Verdict::Violated;
        if (rec.margin < 0.0) inconclusive = true;
    }
    return inconclusive ? Verdict::Inconclusive : Verdict::Holds;
}

double InequalityReport::min_margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& rec : records)
        if (!rec.skipped) m = std::min(m, rec.margin);
    return m;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

InequalityReport gap_bound_report(const std::vector<double>& gammas,
                                  const EigenfunctionFunctionals& f, int n, int k_max,
                                  double eps_band, const std::string& source) {
    if (k_max + 1 > static_cast<int>(gammas.size()))
        throw std::invalid_argument("gap_bound_report: need k_max + 1 eigenvalues");
    InequalityReport rep;
    rep.id = "sqrt-gap-bound";
    rep.source = source;
    rep.eps_band = eps_band;
    const double C = constant_C(f, n);
    const double g1 = gammas[0];
    for (int k = 1; k <= k_max; ++k) {
        const double dk = gammas[k - 1] - g1;  // gamma_k - gamma_1
        const double dk1 = gammas[k] - g1;     // gamma_{k+1} - gamma_1
        const double lhs = std::pow(std::sqrt(dk1) - std::sqrt(dk), 2);
        const double rhs = 16.0 * std::sqrt(g1) / n * std::pow(dk1 * dk, 0.25) + C;
        rep.records.push_back(make_record(k, lhs, rhs));
    }
    return rep;
}

std::vector<InequalityReport> classical_suite(const std::vector<double>& gammas, int n,
                                              int k_max, double eps_band,
                                              const std::string& source) {
    if (k_max + 1 > static_cast<int>(gammas.size()))
        throw std::invalid_argument("classical_suite: need k_max + 1 eigenvalues");

    InequalityReport gap{"ppw-consecutive-gap", source, eps_band, {}};
    InequalityReport recip{"chen-qian-hook-reciprocal", source, eps_band, {}};
    InequalityReport quad{"cheng-yang-wang-xia-quadratic", source, eps_band, {}};
    InequalityReport conj{"conjectured-quadratic-8n", source, eps_band, {}};

    for (int k = 1; k <= k_max; ++k) {
        const double gk1 = gammas[k];
        double sum = 0.0, sum_sqrt = 0.0, sum_recip = 0.0, sum_quad = 0.0, sum_cross = 0.0;
        bool degenerate = false;
        for (int i = 0; i < k; ++i) {
            const double gi = gammas[i];
            sum += gi;
            sum_sqrt += std::sqrt(gi);
            if (gk1 - gi <= 0.0)
                degenerate = true;
            else
                sum_recip += std::sqrt(gi) / (gk1 - gi);
            sum_quad += (gk1 - gi) * (gk1 - gi);
            sum_cross += (gk1 - gi) * gi;
        }
        gap.records.push_back(
            make_record(k, gk1 - gammas[k - 1], 8.0 * (n + 2.0) / (n * n * k) * sum));
        if (degenerate) {
            InequalityRecord rec;
            rec.k = k;
            rec.skipped = true;
            rec.note = "gamma_{k+1} equals some gamma_i; reciprocal form undefined";
            recip.records.push_back(rec);
        } else {
            recip.records.push_back(
                make_record(k, n * n * k * k / (8.0 * (n + 2.0)), sum_recip * sum_sqrt));
        }
        quad.records.push_back(make_record(k, sum_quad, 8.0 * (n + 2.0) / (n * n) * sum_cross));
        conj.records.push_back(make_record(k, sum_quad, 8.0 / n * sum_cross));
    }
    return {gap, recip, quad, conj};
}

InequalityReport levine_protter_check(const std::vector<double>& gammas, int n, double vol,
                                      int k_max, const std::string& source) {
    if (vol <= 0) throw std::invalid_argument("levine_protter_check: vol must be positive");
    if (k_max > static_cast<int>(gammas.size()))
        throw std::invalid_argument("levine_protter_check: need k_max eigenvalues");
    InequalityReport rep;
    rep.id = "levine-protter";
    rep.source = source;
    rep.eps_band = 0.0;
    const double coef = ap_coefficient(n, vol) * n / (n + 4.0);
    double sum = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        sum += gammas[k - 1];
        // Lower bound: record as lhs = bound, rhs = mean, margin = mean - bound.
        rep.records.push_back(make_record(k, coef * std::pow(k, 4.0 / n), sum / k));
    }
    return rep;
}

AsymptoticFit agmon_pleijel_fit(const std::vector<double>& gammas, int n, double vol,
                                int k_lo, int k_hi) {
    if (k_hi > static_cast<int>(gammas.size()) || k_lo < 1 || k_lo > k_hi)
        throw std::invalid_argument("agmon_pleijel_fit: bad k range");
    AsymptoticFit fit;
    fit.coefficient = ap_coefficient(n, vol);
    fit.last_ratio = gammas[k_hi - 1] / std::pow(k_hi, 4.0 / n);
    fit.ratio_drift = std::abs(fit.last_ratio / fit.coefficient - 1.0);
    if (n == 1)
        fit.beam_quarter_ratio =
            std::pow(gammas[k_hi - 1], 0.25) / ((k_hi + 0.5) * std::numbers::pi);
    return fit;
}

OrderScan gap_order_scan(const std::vector<double>& gammas,
                         const EigenfunctionFunctionals& f, int n, int k_max) {
    if (k_max + 1 > static_cast<int>(gammas.size()))
        throw std::invalid_argument("gap_order_scan: need k_max + 1 eigenvalues");
    OrderScan scan;
    scan.expected_rhs = 2.0 / n;
    scan.expected_gap = 3.0 / n;
    scan.k_lo = std::max(10, k_max / 2);
    scan.k_hi = k_max;
    if (scan.k_hi - scan.k_lo < 9)
        throw std::invalid_argument("gap_order_scan: need at least 10 fit points");

    const double C = constant_C(f, n);
    const double g1 = gammas[0];
    std::vector<double> logk, log_rhs, log_gapbound;
    for (int k = scan.k_lo; k <= scan.k_hi; ++k) {
        const double dk = gammas[k - 1] - g1;
        const double dk1 = gammas[k] - g1;
        const double rhs = 16.0 * std::sqrt(g1) / n * std::pow(dk1 * dk, 0.25) + C;
        logk.push_back(std::log(static_cast<double>(k)));
        log_rhs.push_back(std::log(rhs));
        log_gapbound.push_back(std::log((std::sqrt(dk1) + std::sqrt(dk)) * std::sqrt(rhs)));
    }
    const LineFit fr = fit_line(logk, log_rhs);
    scan.slope_rhs = fr.slope;
    scan.slope_stderr = fr.stderr_slope;
    scan.slope_gap = fit_line(logk, log_gapbound).slope;
    return scan;
}

}  // namespace platelab
