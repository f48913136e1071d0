#include "platelab/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "platelab/operators.hpp"
#include "platelab/oracles.hpp"

namespace platelab {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

[[noreturn]] void config_error(const std::string& msg) {
    throw std::invalid_argument("config error: " + msg);
}

Spectrum solve_for(const StudyConfig& cfg, const SymmetricOperator& bih, const Grid& grid,
                   int K) {
    if (cfg.solver == "dense") {
        if (bih.size() <= kDefaultDenseCap) return solve_dense(bih, grid, K);
        return solve_shift_invert(bih, grid, K, 0.0, cfg.tol, cfg.seed);
    }
    if (cfg.solver == "shift-invert")
        return solve_shift_invert(bih, grid, K, 0.0, cfg.tol, cfg.seed);
    config_error("unknown solver '" + cfg.solver + "'");
}

TestFunction trial_function_by_name(const std::string& name, int axis) {
    if (name == "cos2") return TestFunction::cos_axis(2.0, axis);
    if (name == "sin3") return TestFunction::sin_axis(3.0, axis);
    if (name == "bump") return TestFunction::poly_bump(axis);
    config_error("unknown trial function '" + name + "' (use cos2|sin3|bump)");
}

double richardson_order(const std::vector<double>& values, const std::vector<double>& hs) {
    const std::size_t n = values.size();
    if (n < 3) return 0.0;
    const double d1 = std::abs(values[n - 2] - values[n - 3]);
    const double d2 = std::abs(values[n - 1] - values[n - 2]);
    if (d1 == 0.0 || d2 == 0.0) return 0.0;
    return std::log(d1 / d2) / std::log(hs[n - 3] / hs[n - 2]);
}

void write_csv_header_line(std::ofstream& os) { os << "k,lhs,rhs,margin,relative_margin\n"; }

}  // namespace

StudyConfig StudyConfig::parse(const std::string& text) {
    StudyConfig cfg;
    cfg.inequalities = {"gap-bound", "classical", "levine-protter"};
    cfg.trial_g = {};
    std::string section;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') config_error("bad section header at line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) config_error("expected key = value at line " + std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string full = section.empty() ? key : section + "." + key;

        try {
            if (full == "domain.kind") cfg.kind = value;
            else if (full == "domain.extents") {
                cfg.extents.clear();
                for (const auto& t : split_list(value)) cfg.extents.push_back(std::stod(t));
            } else if (full == "domain.radius") cfg.radius = std::stod(value);
            else if (full == "domain.divisions") {
                cfg.divisions.clear();
                for (const auto& t : split_list(value)) cfg.divisions.push_back(std::stoi(t));
            } else if (full == "solver.K") cfg.K = std::stoi(value);
            else if (full == "solver.method" || full == "solver.solver") cfg.solver = value;
            else if (full == "solver.tol") cfg.tol = std::stod(value);
            else if (full == "solver.seed") cfg.seed = std::stoull(value);
            else if (full == "checks.inequalities") cfg.inequalities = split_list(value);
            else if (full == "trial.g" || full == "trial.trial_g") cfg.trial_g = split_list(value);
            else if (full == "trial.a" || full == "trial.trial_a") {
                cfg.trial_a.clear();
                for (const auto& t : split_list(value)) cfg.trial_a.push_back(std::stod(t));
            } else if (full == "trial.axes" || full == "trial.trial_axes") {
                cfg.trial_axes.clear();
                for (const auto& t : split_list(value)) cfg.trial_axes.push_back(std::stoi(t));
            } else if (full == "trial.k" || full == "trial.trial_k") {
                cfg.trial_k.clear();
                for (const auto& t : split_list(value)) cfg.trial_k.push_back(std::stoi(t));
            } else if (full == "output.dir" || full == "output.out_dir") cfg.out_dir = value;
            else config_error("unknown key '" + full + "' at line " + std::to_string(lineno));
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            config_error("bad value for '" + full + "' at line " + std::to_string(lineno));
        }
    }
    if (cfg.divisions.empty()) config_error("divisions list is empty");
    for (std::size_t i = 1; i < cfg.divisions.size(); ++i)
        if (cfg.divisions[i] <= cfg.divisions[i - 1])
            config_error("divisions must be strictly increasing");
    if (cfg.K < 1) config_error("K must be positive");
    return cfg;
}

StudyConfig StudyConfig::from_file(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) config_error("cannot open config file " + path.string());
    std::stringstream ss;
    ss << is.rdbuf();
    return parse(ss.str());
}

Domain StudyConfig::make_domain() const {
    if (kind == "interval") return Domain::interval(extents.at(0));
    if (kind == "box") return Domain::box(extents);
    if (kind == "disk") return Domain::disk(radius);
    config_error("unknown domain kind '" + kind + "'");
}

StudyReport run_study(const StudyConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    StudyReport rep;
    rep.seed = cfg.seed;

    const Domain domain = cfg.make_domain();
    const int n = domain.dim;
    const int main_div = cfg.divisions.back();
    std::vector<int> divs(n, main_div);
    const Grid grid = build_grid(domain, divs);
    const DerivativeStencils stencils(grid);
    const SymmetricOperator bih = assemble_biharmonic(grid);
    const Spectrum spectrum = solve_for(cfg, bih, grid, cfg.K);

    rep.eigenvalues = spectrum.values;
    rep.residuals = spectrum.residuals;
    rep.solver_method = spectrum.method;
    rep.functionals = compute_functionals(spectrum, grid, stencils);
    rep.constant_c = constant_C(rep.functionals, n);

    // Discretization band: Richardson between the two finest grids when the
    // config provides them, otherwise between the main grid and its half.
    {
        int coarse_div = 0;
        if (cfg.divisions.size() >= 2)
            coarse_div = cfg.divisions[cfg.divisions.size() - 2];
        else if (main_div % 2 == 0 && main_div / 2 >= 4)
            coarse_div = main_div / 2;
        if (coarse_div > 0) {
            const Grid coarse = build_grid(domain, std::vector<int>(n, coarse_div));
            const SymmetricOperator cb = assemble_biharmonic(coarse);
            const int kk = std::min<int>(cfg.K, coarse.interior_count());
            const Spectrum cs = solve_for(cfg, cb, coarse, kk);
            rep.eps_band = 5.0 * std::abs(cs.values[kk - 1] - spectrum.values[kk - 1]);
        }
    }

    const int k_max = cfg.K - 1;
    for (const auto& id : cfg.inequalities) {
        if (id == "gap-bound") {
            rep.inequality_reports.push_back(
                gap_bound_report(spectrum.values, rep.functionals, n, k_max, rep.eps_band));
        } else if (id == "classical") {
            auto reports = classical_suite(spectrum.values, n, k_max, rep.eps_band);
            rep.inequality_reports.insert(rep.inequality_reports.end(), reports.begin(),
                                          reports.end());
        } else if (id == "levine-protter") {
            rep.inequality_reports.push_back(
                levine_protter_check(spectrum.values, n, domain.volume(), cfg.K));
        } else if (id == "agmon-pleijel") {
            rep.asymptotic_fit =
                agmon_pleijel_fit(spectrum.values, n, domain.volume(), 1, cfg.K);
        } else if (id == "order-scan") {
            // the fit window is [max(10, k/2), k]; below that the scan has no
            // meaningful regression points, so it is skipped rather than fatal
            if (k_max - std::max(10, k_max / 2) >= 9) {
                rep.order_scan = gap_order_scan(spectrum.values, rep.functionals, n, k_max);
            } else {
                std::cerr << "order-scan skipped: needs K >= 20 eigenvalues, have "
                          << cfg.K << "\n";
            }
        } else {
            config_error("unknown inequality id '" + id + "'");
        }
    }

    // Trial-function margin table.
    std::vector<int> axes = cfg.trial_axes;
    if (axes.empty()) axes = {0};
    std::vector<int> klist = cfg.trial_k;
    if (klist.empty()) klist = {1, 2, 3};
    for (const auto& gname : cfg.trial_g) {
        for (int axis : axes) {
            const TestFunction g = trial_function_by_name(gname, axis);
            for (int k : klist) {
                if (k + 2 > spectrum.count()) continue;
                const auto thm = theorem21_check(spectrum, g, k, grid, stencils);
                rep.trial_rows.push_back({"trial-inequality:" + g.name, k, thm.lhs, thm.rhs,
                                          thm.margin, 0.0, true});
                const auto lem = lemma21_gap_inequality_check(spectrum, g, k, grid, stencils);
                rep.trial_rows.push_back({"gap-lemma-applied:" + g.name, k, lem.lhs, lem.rhs,
                                          lem.margin, lem.tail_mass_rel, lem.conclusive});
            }
        }
    }
    for (double a : cfg.trial_a) {
        for (int axis : axes) {
            const auto pair = build_pair(a, axis, spectrum.first(), grid, stencils);
            const auto p21 = prop21_check(pair, grid);
            rep.trial_rows.push_back(
                {"pair-pointwise:a=" + std::to_string(a), 0, p21.lhs, p21.rhs, p21.rel_gap,
                 0.0, true});
            const auto p22 = prop22_check(pair, spectrum.first(), grid, stencils);
            rep.trial_rows.push_back(
                {"pair-integral:a=" + std::to_string(a), 0, p22.lhs, p22.rhs, p22.rel_gap,
                 0.0, true});
        }
    }

    if (cfg.divisions.size() >= 3) rep.convergence = convergence_study(cfg);

    std::ostringstream echo;
    echo << "kind=" << cfg.kind << " divisions=";
    for (std::size_t i = 0; i < cfg.divisions.size(); ++i)
        echo << (i ? "," : "") << cfg.divisions[i];
    echo << " K=" << cfg.K << " solver=" << cfg.solver << " tol=" << cfg.tol
         << " seed=" << cfg.seed;
    rep.config_echo = echo.str();

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<ConvergenceRow> convergence_study(const StudyConfig& cfg) {
    if (cfg.divisions.size() < 3)
        config_error("convergence study needs at least 3 division counts");
    const Domain domain = cfg.make_domain();
    const int n = domain.dim;
    const int n_eigs = std::min(cfg.K, 6);

    std::vector<double> hs;
    std::vector<ConvergenceRow> rows;
    auto row_of = [&rows](const std::string& name) -> ConvergenceRow& {
        for (auto& r : rows)
            if (r.quantity == name) return r;
        rows.push_back({name, {}, 0.0, 0.0});
        return rows.back();
    };

    for (int div : cfg.divisions) {
        const Grid grid = build_grid(domain, std::vector<int>(n, div));
        const DerivativeStencils stencils(grid);
        const SymmetricOperator bih = assemble_biharmonic(grid);
        const int kk = std::min(std::max(n_eigs + 2, cfg.K), grid.interior_count());
        const Spectrum spectrum = solve_for(cfg, bih, grid, kk);
        hs.push_back(grid.spacing());

        for (int i = 0; i < n_eigs; ++i)
            row_of("gamma_" + std::to_string(i + 1)).values.push_back(spectrum.values[i]);
        const auto f = compute_functionals(spectrum, grid, stencils);
        row_of("grad_norm_sq").values.push_back(f.grad_norm_sq);
        row_of("pure_second_sq").values.push_back(f.pure_second_sq);
        row_of("grad_lap_sq").values.push_back(f.grad_lap_sq);

        const TestFunction g = TestFunction::cos_axis(2.0, 0);
        const auto errs =
            verify_sj_identity(spectrum, g, grid, stencils, std::min(10, spectrum.count()));
        row_of("coeff_identity_max_err")
            .values.push_back(*std::max_element(errs.begin(), errs.end()));
        const auto l22 = lemma22_check(g, spectrum.first(), grid, stencils);
        row_of("product_identity_gap").values.push_back(std::abs(l22.lhs - l22.rhs));
        const auto pair = build_pair(1.0, 0, spectrum.first(), grid, stencils);
        const auto p22 = prop22_check(pair, spectrum.first(), grid, stencils);
        row_of("pair_integral_gap").values.push_back(std::abs(p22.lhs - p22.rhs));
    }
    for (auto& r : rows) {
        r.coarse_h = hs.front();
        r.estimated_order = richardson_order(r.values, hs);
    }
    return rows;
}

void emit_report(const StudyReport& rep, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);

    auto open = [&](const std::string& name) {
        std::ofstream os(fs::path(out_dir) / name);
        if (!os) throw std::runtime_error("cannot write to " + out_dir + "/" + name);
        os << std::setprecision(17);
        return os;
    };

    {
        auto os = open("report.txt");
        os << "schema_version = " << kReportSchemaVersion << "\n";
        os << "config = " << rep.config_echo << "\n";
        os << "seed = " << rep.seed << "\n";
        os << "eps_band = " << rep.eps_band << "\n";
        os << "solver = " << rep.solver_method << "\n";
        os << "elapsed_seconds = " << rep.elapsed_seconds << "\n";
        os << "[spectrum]\n";
        for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i)
            os << "gamma_" << i + 1 << " = " << rep.eigenvalues[i]
               << "  residual = " << rep.residuals[i] << "\n";
        os << "[functionals]\n";
        os << "grad_norm_sq = " << rep.functionals.grad_norm_sq << "\n";
        os << "lap_sq = " << rep.functionals.lap_sq << "\n";
        os << "grad_lap_sq = " << rep.functionals.grad_lap_sq << "\n";
        os << "pure_second_sq = " << rep.functionals.pure_second_sq << "\n";
        os << "constant_C = " << rep.constant_c << "\n";
        for (const auto& ir : rep.inequality_reports) {
            os << "[inequality:" << ir.id << "]\n";
            os << "verdict = " << to_string(ir.verdict()) << "\n";
            os << "min_margin = " << ir.min_margin() << "\n";
            os << "eps_band = " << ir.eps_band << "\n";
        }
        if (rep.asymptotic_fit) {
            os << "[asymptotics]\n";
            os << "coefficient = " << rep.asymptotic_fit->coefficient << "\n";
            os << "last_ratio = " << rep.asymptotic_fit->last_ratio << "\n";
            os << "ratio_drift = " << rep.asymptotic_fit->ratio_drift << "\n";
        }
        if (rep.order_scan) {
            os << "[order-scan]\n";
            os << "slope_rhs = " << rep.order_scan->slope_rhs
               << "  expected = " << rep.order_scan->expected_rhs << "\n";
            os << "slope_gap = " << rep.order_scan->slope_gap
               << "  expected = " << rep.order_scan->expected_gap << "\n";
        }
        if (!rep.trial_rows.empty()) {
            os << "[trial-function]\n";
            for (const auto& t : rep.trial_rows)
                os << t.label << " k=" << t.k << " lhs=" << t.lhs << " rhs=" << t.rhs
                   << " margin=" << t.margin << " tail=" << t.tail_mass
                   << (t.conclusive ? "" : " INCONCLUSIVE") << "\n";
        }
        if (!rep.convergence.empty()) {
            os << "[convergence]\n";
            for (const auto& c : rep.convergence) {
                os << c.quantity << " order=" << c.estimated_order << " values=";
                for (std::size_t i = 0; i < c.values.size(); ++i)
                    os << (i ? "," : "") << c.values[i];
                os << "\n";
            }
        }
    }

    for (const auto& ir : rep.inequality_reports) {
        auto os = open("margins_" + ir.id + ".csv");
        write_csv_header_line(os);
        for (const auto& r : ir.records) {
            if (r.skipped) continue;
            os << r.k << ',' << r.lhs << ',' << r.rhs << ',' << r.margin << ','
               << r.rel_margin << '\n';
        }
    }
    if (!rep.convergence.empty()) {
        auto os = open("convergence.csv");
        os << "quantity,estimated_order";
        for (std::size_t i = 0; i < rep.convergence.front().values.size(); ++i)
            os << ",value_" << i;
        os << "\n";
        for (const auto& c : rep.convergence) {
            os << c.quantity << ',' << c.estimated_order;
            for (double v : c.values) os << ',' << v;
            os << "\n";
        }
    }
}

int study_exit_code(const StudyReport& rep) {
    for (const auto& ir : rep.inequality_reports) {
        // The conjectured inequality is reported, never asserted.
        if (ir.id == "conjectured-quadratic-8n") continue;
        if (ir.verdict() == Verdict::Violated) return 2;
    }
    return 0;
}

}  // namespace platelab
