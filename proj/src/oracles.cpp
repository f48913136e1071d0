#include "platelab/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace platelab {

namespace {

constexpr double kPi = std::numbers::pi;

double sech(double x) {
    const double e = std::exp(-std::abs(x));
    return 2.0 * e / (1.0 + e * e);
}

// Beam characteristic equation in overflow-safe form.
double beam_char(double beta) { return std::cos(beta) - sech(beta); }

double bisect(double lo, double hi, double flo, const auto& f, double width) {
    for (int it = 0; it < 200 && hi - lo > width; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

namespace bessel {

double cyl_i(int m, double x) {
    if (m < 0) throw std::invalid_argument("cyl_i: order must be nonnegative");
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    if (x > 60.0) throw std::invalid_argument("cyl_i: argument beyond supported range");
    const double half = 0.5 * x;
    double term = 1.0;
    for (int k = 1; k <= m; ++k) term *= half / k;  // (x/2)^m / m!
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= half * half / (k * (m + k));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

double cyl_j(int m, double x) {
    if (m < 0) throw std::invalid_argument("cyl_j: order must be nonnegative");
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    if (x <= 12.0) {
        // Ascending series; cancellation stays within ~4 digits here.
        const double half = 0.5 * x;
        double term = 1.0;
        for (int k = 1; k <= m; ++k) term *= half / k;
        double sum = term;
        for (int k = 1; k < 200; ++k) {
            term *= -half * half / (k * (m + k));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    // Miller's backward recurrence, normalized by J_0 + 2 sum J_{2k} = 1.
    const int start = static_cast<int>(x + 20.0 + 1.5 * std::sqrt(x)) + m;
    double jp = 0.0;    // J_{k+1}
    double jc = 1e-30;  // J_k, seeded at k = start
    double norm = start % 2 == 0 ? 2.0 * jc : 0.0;
    double target = start == m ? jc : 0.0;
    for (int k = start; k >= 1; --k) {
        const double jm = 2.0 * k / x * jc - jp;  // J_{k-1}
        jp = jc;
        jc = jm;
        const int idx = k - 1;
        if (idx == m) target = jc;
        if (idx % 2 == 0) norm += (idx == 0 ? 1.0 : 2.0) * jc;
        if (std::abs(jc) > 1e250) {  // rescale to avoid overflow
            jc *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            target *= 1e-250;
        }
    }
    return target / norm;
}

}  // namespace bessel

OracleSpectrum beam_spectrum(int K) {
    if (K < 1) throw std::invalid_argument("beam_spectrum: K must be positive");
    OracleSpectrum s;
    s.domain = "beam";
    s.dim = 1;
    s.volume = 1.0;
    for (int k = 1; k <= K; ++k) {
        const double seed = (k + 0.5) * kPi;
        double lo = seed - 0.5, hi = seed + 0.5;
        double flo = beam_char(lo), fhi = beam_char(hi);
        if ((flo < 0) == (fhi < 0)) {
            // Fall back to the full bracket around the asymptotic seed.
            lo = (k - 0.5) * kPi + 0.1;
            hi = (k + 1.4) * kPi;
            flo = beam_char(lo);
            fhi = beam_char(hi);
            if ((flo < 0) == (fhi < 0))
                throw std::runtime_error("beam_spectrum: no sign change in bracket");
        }
        const double beta = bisect(lo, hi, flo, beam_char, 1e-13);
        s.roots.push_back(beta);
        s.values.push_back(beta * beta * beta * beta);
        s.angular_order.push_back(-1);
        s.residuals.push_back(std::abs(beam_char(beta)));
    }
    return s;
}

OracleSpectrum disk_spectrum(int K) {
    if (K < 1) throw std::invalid_argument("disk_spectrum: K must be positive");

    // Normalized cross product: J_m I_{m+1}/I_m + J_{m+1}; same roots, O(1) scale.
    auto charfn = [](int m, double x) {
        return bessel::cyl_j(m, x) * (bessel::cyl_i(m + 1, x) / bessel::cyl_i(m, x)) +
               bessel::cyl_j(m + 1, x);
    };

    std::vector<std::tuple<double, int, double>> found;  // (root, m, residual)
    double xmax = 8.0;
    while (true) {
        if (xmax > 58.0)
            throw std::runtime_error("disk_spectrum: K too large for the supported "
                                     "Bessel argument range");
        found.clear();
        int count = 0;
        for (int m = 0; m <= static_cast<int>(xmax); ++m) {
            const double step = 0.05;
            double prev_x = std::max(0.25, static_cast<double>(m));
            double prev_f = charfn(m, prev_x);
            for (double x = prev_x + step; x <= xmax + step; x += step) {
                const double f = charfn(m, x);
                if ((prev_f < 0) != (f < 0)) {
                    auto g = [&](double t) { return charfn(m, t); };
                    const double root = bisect(prev_x, x, prev_f, g, 1e-13);
                    found.emplace_back(root, m, std::abs(charfn(m, root)));
                    count += (m == 0 ? 1 : 2);
                }
                prev_x = x;
                prev_f = f;
            }
        }
        if (count >= K + 2) break;  // margin so the K-th entry is not near xmax
        xmax *= 1.3;
    }
    std::sort(found.begin(), found.end());

    OracleSpectrum s;
    s.domain = "disk";
    s.dim = 2;
    s.volume = kPi;
    for (const auto& [root, m, res] : found) {
        const int mult = m == 0 ? 1 : 2;
        for (int c = 0; c < mult && static_cast<int>(s.values.size()) < K; ++c) {
            s.roots.push_back(root);
            s.values.push_back(root * root * root * root);
            s.angular_order.push_back(m);
            s.residuals.push_back(res);
        }
        if (static_cast<int>(s.values.size()) >= K) break;
    }
    return s;
}

double unit_ball_volume(int n) {
    if (n < 1) throw std::invalid_argument("unit_ball_volume: n must be positive");
    // omega_n = pi^{n/2} / Gamma(n/2 + 1), by the recursion omega_n = 2 pi / n * omega_{n-2}.
    double v = n % 2 == 0 ? 1.0 : 2.0;  // omega_0 = 1, omega_1 = 2
    for (int k = n % 2 == 0 ? 2 : 3; k <= n; k += 2) v *= 2.0 * kPi / k;
    return v;
}

double ap_coefficient(int n, double vol) {
    if (vol <= 0) throw std::invalid_argument("ap_coefficient: volume must be positive");
    const double base = unit_ball_volume(n) * vol;
    return 16.0 * std::pow(kPi, 4) / std::pow(base, 4.0 / n);
}

}  // namespace platelab
