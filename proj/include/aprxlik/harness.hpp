#ifndef APRXLIK_HARNESS_HPP
#define APRXLIK_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "aprxlik/ising.hpp"

namespace aprx::harness {

struct ExperimentConfig {
    std::string experiment;  // twolevel-figure | ising-bbeta | ising-contour | ising-trapezium
    std::uint64_t seed = 1;
    int threads = 0;  // 0: APRXLIK_THREADS env or hardware concurrency

    // two-level figure
    int replicates = 500;
    std::vector<long> n_list = {1000, 2154, 4642, 10000};
    std::vector<double> a_list = {0.2, 0.25, 0.3};
    double theta0 = 0.5;
    double level = 0.9;
    double grid_lo = 0.05;
    double grid_hi = 3.0;
    double grid_step = 0.005;

    // ising contour
    std::vector<int> m_list = {50, 70, 90, 120};
    std::vector<int> k_list = {2, 3, 4, 5, 6, 7, 8, 9, 10};
    double alpha = 0.1;
    double beta = 0.3;
    int k_proxy = 12;
    std::string contour_boundary = "free";

    // ising b_beta curve
    double beta_lo = 0.05;
    double beta_hi = 0.43;
    double beta_step = 0.005;

    // ising trapezium decay
    std::vector<double> beta_list = {0.1, 0.2, 0.3, 0.35};
    std::vector<int> trap_n_list = {4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};

    // Parse from a JSON object; missing fields keep the defaults above.
    static ExperimentConfig from_json(const std::string& json_text);
    static ExperimentConfig defaults_for(const std::string& experiment);
};

struct TwoLevelSummaryRow {
    long n = 0;
    double a = 0.0;
    int m = 0;
    double rmse_exact = 0.0;
    double rmse_laplace = 0.0;
    double rmse_ratio = 0.0;
    double cov_exact = 0.0;
    double cov_laplace = 0.0;
    double mean_tvd = 0.0;
    double rhat = 0.0;
    double scaled_delta = 0.0;
    int failures = 0;
};

// Replication experiment behind Figure 1: per (n, a) cell, simulate, fit the
// quadrature (proxy exact) and Laplace surfaces, form LR intervals and grid
// posteriors, and aggregate. Writes twolevel_summary.csv plus a sidecar
// failures.log listing excluded replicates. Bitwise deterministic for fixed
// seed regardless of thread count.
std::vector<TwoLevelSummaryRow> run_twolevel_figure(const ExperimentConfig& config, const std::string& out_dir);

// Figure 2 data at desk scale: (a) b_beta^{-1} curve, (b) delta contour with
// the K-1 stability column, (c) trapezium-remainder decay fits.
void run_ising_bbeta(const ExperimentConfig& config, const std::string& out_dir);
void run_ising_contour(const ExperimentConfig& config, const std::string& out_dir);
void run_ising_trapezium(const ExperimentConfig& config, const std::string& out_dir);

// Dispatch by experiment name; config_json may be empty for defaults.
void run_experiment(const std::string& name, const std::string& config_json, std::uint64_t seed_override,
                    bool has_seed, int threads_override, const std::string& out_dir);

// Quick oracle-equivalence suite; prints one line per check.
bool selftest(std::ostream& os);

// Fixed-width deterministic float formatting shared by all CSV output;
// round-trips exactly through strtod.
std::string format_double(double v);

int resolve_threads(int requested);

// Runs fn(i) for i in [0, total) across up to `threads` workers. Work items
// must be independent; callers store per-index results and reduce in order.
void parallel_for(std::size_t total, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace aprx::harness

#endif
