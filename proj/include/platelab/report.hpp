#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "platelab/inequalities.hpp"
#include "platelab/trial_function.hpp"

namespace platelab {

inline constexpr const char* kReportSchemaVersion = "1";

/// Study configuration, read from a flat key = value file with [section]
/// headers. Unknown keys are rejected.
struct StudyConfig {
    // [domain]
    std::string kind = "interval";       // interval | box | disk
    std::vector<double> extents = {1.0};
    double radius = 1.0;
    std::vector<int> divisions = {100};  // strictly increasing list; first = main grid
    // [solver]
    int K = 12;
    std::string solver = "dense";        // dense | shift-invert
    double tol = 1e-10;
    std::uint64_t seed = 20240815;
    // [checks]
    std::vector<std::string> inequalities;  // gap-bound, classical, levine-protter,
                                            // agmon-pleijel, order-scan
    // [trial]
    std::vector<std::string> trial_g;  // cos2, sin3, bump
    std::vector<double> trial_a;       // wavenumbers for paired checks
    std::vector<int> trial_axes;
    std::vector<int> trial_k;
    // [output]
    std::string out_dir = ".";

    static StudyConfig from_file(const std::filesystem::path& path);
    static StudyConfig parse(const std::string& text);

    Domain make_domain() const;
};

struct ConvergenceRow {
    std::string quantity;
    std::vector<double> values;  // one per grid, coarse to fine
    double coarse_h = 0.0;
    double estimated_order = 0.0;
};

struct TrialRow {
    std::string label;
    int k = 0;
    double lhs = 0.0, rhs = 0.0, margin = 0.0;
    double tail_mass = 0.0;
    bool conclusive = true;
};

struct StudyReport {
    std::string config_echo;
    std::uint64_t seed = 0;
    double eps_band = 0.0;
    std::vector<double> eigenvalues;
    std::vector<double> residuals;
    std::string solver_method;
    EigenfunctionFunctionals functionals;
    double constant_c = 0.0;
    std::vector<InequalityReport> inequality_reports;
    std::optional<AsymptoticFit> asymptotic_fit;
    std::optional<OrderScan> order_scan;
    std::vector<TrialRow> trial_rows;
    std::vector<ConvergenceRow> convergence;
    double elapsed_seconds = 0.0;
};

StudyReport run_study(const StudyConfig& config);

/// Richardson order estimates over >= 3 grids for the leading eigenvalues,
/// the functionals, and the identity gaps.
std::vector<ConvergenceRow> convergence_study(const StudyConfig& config);

/// Writes report.txt (hierarchical key/value, schema-versioned) plus one CSV
/// per inequality and per convergence table under report.out_dir.
void emit_report(const StudyReport& report, const std::string& out_dir);

/// Exit code policy: 0 all asserted checks hold, 2 proven inequality violated
/// beyond the band, 3 configuration error.
int study_exit_code(const StudyReport& report);

}  // namespace platelab
