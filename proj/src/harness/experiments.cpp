#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aprxlik/harness.hpp"
#include "aprxlik/interval.hpp"
#include "aprxlik/optimize.hpp"
#include "aprxlik/posterior.hpp"
#include "aprxlik/rng.hpp"
#include "aprxlik/twolevel.hpp"

namespace aprx::harness {

namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kTwoLevelTag = 0x666967757265312bULL;

std::ofstream open_out(const std::string& out_dir, const std::string& name) {
    fs::create_directories(out_dir);
    const fs::path p = fs::path(out_dir) / name;
    std::ofstream os(p, std::ios::binary | std::ios::trunc);
    if (!os) fail(Errc::io_error, "cannot open output file " + p.string());
    return os;
}

std::vector<double> make_grid(double lo, double hi, double step) {
    std::vector<double> g;
    const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    g.reserve(n);
    for (int i = 0; i < n; ++i) g.push_back(lo + i * step);
    return g;
}

struct ReplicateResult {
    double theta_exact = 0.0;
    double theta_laplace = 0.0;
    bool covered_exact = false;
    bool covered_laplace = false;
    double tvd = 0.0;
    double j_norm_at_hat = 0.0;
    double delta_at_theta0 = 0.0;
    bool ok = false;
    std::string error;
};

// Best of a coarse grid, then Newton.
double fit_theta(const LikelihoodSurface& s) {
    static const double starts[] = {0.1, 0.25, 0.5, 1.0, 2.0};
    double best = starts[0];
    double best_ll = -std::numeric_limits<double>::infinity();
    for (double t : starts) {
        const double ll = loglik1(s, t);
        if (ll > best_ll) {
            best_ll = ll;
            best = t;
        }
    }
    const MaximizeResult r = maximize(s, param1(best));
    if (!r.converged) fail(Errc::iteration_limit, "maximize did not converge");
    return r.theta_hat[0];
}

ReplicateResult run_replicate(const ExperimentConfig& cfg, long n, int m, std::uint64_t cell_tag, int rep,
                              const std::vector<double>& grid) {
    ReplicateResult out;
    const std::uint64_t dataset_seed =
        Rng::stream(cfg.seed, kTwoLevelTag ^ cell_tag, static_cast<std::uint64_t>(rep)).next_u64();
    const auto data = twolevel::simulate_two_level(static_cast<int>(n), m, cfg.theta0, dataset_seed);
    const auto exact = twolevel::dataset_surface(data, twolevel::Method::quadrature);
    const auto laplace = twolevel::dataset_surface(data, twolevel::Method::laplace);

    out.theta_exact = fit_theta(*exact);
    out.theta_laplace = fit_theta(*laplace);

    const LrInterval ie = lr_confidence_interval(*exact, param1(out.theta_exact), cfg.level);
    const LrInterval il = lr_confidence_interval(*laplace, param1(out.theta_laplace), cfg.level);
    out.covered_exact = ie.lo <= cfg.theta0 && cfg.theta0 <= ie.hi;
    out.covered_laplace = il.lo <= cfg.theta0 && cfg.theta0 <= il.hi;

    const LogPrior prior = [](double th) { return -std::log(th); };
    const PosteriorGrid pe = grid_posterior(*exact, prior, grid);
    const PosteriorGrid pl = grid_posterior(*laplace, prior, grid);
    out.tvd = tv_distance(pe, pl);

    out.j_norm_at_hat = std::fabs(exact->eval(param1(out.theta_exact)).obs_info(0, 0));
    const ParamPoint th0 = param1(cfg.theta0);
    out.delta_at_theta0 = std::fabs(laplace->eval(th0).score[0] - exact->eval(th0).score[0]);
    out.ok = true;
    return out;
}

}  // namespace

std::vector<TwoLevelSummaryRow> run_twolevel_figure(const ExperimentConfig& cfg, const std::string& out_dir) {
    const int threads = resolve_threads(cfg.threads);
    const std::vector<double> grid = make_grid(cfg.grid_lo, cfg.grid_hi, cfg.grid_step);

    std::ofstream csv = open_out(out_dir, "twolevel_summary.csv");
    std::ofstream flog = open_out(out_dir, "failures.log");
    csv << "n,a,m,rmse_exact,rmse_laplace,rmse_ratio,cov_exact,cov_laplace,mean_tvd,rhat,scaled_delta\n";

    std::vector<TwoLevelSummaryRow> rows;
    std::uint64_t cell_index = 0;
    for (double a : cfg.a_list) {
        for (long n : cfg.n_list) {
            const int m = twolevel::mn_schedule(n, a);
            const std::uint64_t cell_tag = ++cell_index;

            std::vector<ReplicateResult> results(static_cast<std::size_t>(cfg.replicates));
            parallel_for(results.size(), threads, [&](std::size_t rep) {
                try {
                    results[rep] = run_replicate(cfg, n, m, cell_tag, static_cast<int>(rep), grid);
                } catch (const std::exception& e) {
                    results[rep].ok = false;
                    results[rep].error = e.what();
                }
            });

            TwoLevelSummaryRow row;
            row.n = n;
            row.a = a;
            row.m = m;
            double se = 0.0, sl = 0.0, tvd = 0.0, jn = 0.0, d0 = 0.0;
            long used = 0;
            long cov_e = 0, cov_l = 0;
            for (std::size_t rep = 0; rep < results.size(); ++rep) {
                const ReplicateResult& r = results[rep];
                if (!r.ok) {
                    ++row.failures;
                    flog << "n=" << n << " a=" << format_double(a) << " replicate=" << rep << " error=" << r.error
                         << "\n";
                    continue;
                }
                ++used;
                se += (r.theta_exact - cfg.theta0) * (r.theta_exact - cfg.theta0);
                sl += (r.theta_laplace - cfg.theta0) * (r.theta_laplace - cfg.theta0);
                cov_e += r.covered_exact;
                cov_l += r.covered_laplace;
                tvd += r.tvd;
                jn += r.j_norm_at_hat;
                d0 += r.delta_at_theta0;
            }
            if (row.failures > 0.02 * cfg.replicates)
                fail(Errc::evaluation_failure, "run_twolevel_figure: more than 2% replicate failures");
            row.rmse_exact = std::sqrt(se / used);
            row.rmse_laplace = std::sqrt(sl / used);
            row.rmse_ratio = row.rmse_laplace / row.rmse_exact;
            row.cov_exact = static_cast<double>(cov_e) / used;
            row.cov_laplace = static_cast<double>(cov_l) / used;
            row.mean_tvd = tvd / used;
            row.rhat = jn / used;
            row.scaled_delta = (d0 / used) / std::sqrt(row.rhat);
            rows.push_back(row);

            csv << row.n << ',' << format_double(row.a) << ',' << row.m << ',' << format_double(row.rmse_exact) << ','
                << format_double(row.rmse_laplace) << ',' << format_double(row.rmse_ratio) << ','
                << format_double(row.cov_exact) << ',' << format_double(row.cov_laplace) << ','
                << format_double(row.mean_tvd) << ',' << format_double(row.rhat) << ','
                << format_double(row.scaled_delta) << '\n';
        }
    }
    return rows;
}

void run_ising_bbeta(const ExperimentConfig& cfg, const std::string& out_dir) {
    std::ofstream csv = open_out(out_dir, "bbeta_curve.csv");
    csv << "beta,b_beta,b_beta_inv\n";
    const int n = static_cast<int>(std::floor((cfg.beta_hi - cfg.beta_lo) / cfg.beta_step + 1e-9)) + 1;
    for (int i = 0; i < n; ++i) {
        const double beta = cfg.beta_lo + i * cfg.beta_step;
        const double b = ising::b_beta(beta);
        csv << format_double(beta) << ',' << format_double(b) << ',' << format_double(1.0 / b) << '\n';
    }
}

void run_ising_contour(const ExperimentConfig& cfg, const std::string& out_dir) {
    const ising::Boundary bdy =
        cfg.contour_boundary == "periodic" ? ising::Boundary::periodic : ising::Boundary::free;
    const auto cells = ising::delta_contour(cfg.m_list, cfg.k_list, cfg.alpha, cfg.beta, cfg.k_proxy, bdy);
    const auto cells_km1 = ising::delta_contour(cfg.m_list, cfg.k_list, cfg.alpha, cfg.beta, cfg.k_proxy - 1, bdy);

    std::ofstream csv = open_out(out_dir, "contour.csv");
    csv << "m,k,alpha,beta,log_scaled_delta,log_scaled_delta_proxy_minus_1\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        csv << cells[i].m << ',' << cells[i].k << ',' << format_double(cfg.alpha) << ',' << format_double(cfg.beta)
            << ',' << format_double(cells[i].log_scaled_delta) << ','
            << format_double(cells_km1[i].log_scaled_delta) << '\n';
    }
}

void run_ising_trapezium(const ExperimentConfig& cfg, const std::string& out_dir) {
    std::ofstream rows_csv = open_out(out_dir, "trapezium_decay.csv");
    std::ofstream fits_csv = open_out(out_dir, "trapezium_fits.csv");
    rows_csv << "beta,n,r_odd,r_even,r_max,r_combined\n";
    fits_csv << "beta,b_beta,rate_parity_max,rate_combined\n";
    for (double beta : cfg.beta_list) {
        const ising::TrapeziumDecay d = ising::trapezium_decay_check(beta, cfg.trap_n_list);
        for (const auto& r : d.rows) {
            rows_csv << format_double(beta) << ',' << r.n << ',' << format_double(r.r_odd) << ','
                     << format_double(r.r_even) << ',' << format_double(r.r_max) << ','
                     << format_double(r.r_combined) << '\n';
        }
        fits_csv << format_double(beta) << ',' << format_double(d.b) << ',' << format_double(d.rate_parity_max) << ','
                 << format_double(d.rate_combined) << '\n';
    }
}

void run_experiment(const std::string& name, const std::string& config_json, std::uint64_t seed_override,
                    bool has_seed, int threads_override, const std::string& out_dir) {
    ExperimentConfig cfg =
        config_json.empty() ? ExperimentConfig::defaults_for(name) : ExperimentConfig::from_json(config_json);
    if (cfg.experiment.empty()) cfg.experiment = name;
    if (cfg.experiment != name)
        fail(Errc::invalid_argument, "config experiment '" + cfg.experiment + "' does not match requested '" + name + "'");
    if (has_seed) cfg.seed = seed_override;
    if (threads_override > 0) cfg.threads = threads_override;

    if (name == "twolevel-figure")
        run_twolevel_figure(cfg, out_dir);
    else if (name == "ising-bbeta")
        run_ising_bbeta(cfg, out_dir);
    else if (name == "ising-contour")
        run_ising_contour(cfg, out_dir);
    else if (name == "ising-trapezium")
        run_ising_trapezium(cfg, out_dir);
    else
        fail(Errc::invalid_argument, "unknown experiment '" + name + "'");
}

}  // namespace aprx::harness
