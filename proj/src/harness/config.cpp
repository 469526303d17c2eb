#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

#include <json.hpp>

#include "aprxlik/harness.hpp"

namespace aprx::harness {

namespace {

template <typename T>
void maybe(const nlohmann::json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

ExperimentConfig ExperimentConfig::defaults_for(const std::string& experiment) {
    ExperimentConfig c;
    c.experiment = experiment;
    return c;
}

ExperimentConfig ExperimentConfig::from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::invalid_argument, std::string("config: invalid JSON: ") + e.what());
    }
    ExperimentConfig c;
    try {
        maybe(j, "experiment", c.experiment);
        maybe(j, "seed", c.seed);
        maybe(j, "threads", c.threads);
        maybe(j, "replicates", c.replicates);
        maybe(j, "n_list", c.n_list);
        maybe(j, "a_list", c.a_list);
        maybe(j, "theta0", c.theta0);
        maybe(j, "level", c.level);
        maybe(j, "grid_lo", c.grid_lo);
        maybe(j, "grid_hi", c.grid_hi);
        maybe(j, "grid_step", c.grid_step);
        maybe(j, "m_list", c.m_list);
        maybe(j, "k_list", c.k_list);
        maybe(j, "alpha", c.alpha);
        maybe(j, "beta", c.beta);
        maybe(j, "K_proxy", c.k_proxy);
        maybe(j, "contour_boundary", c.contour_boundary);
        maybe(j, "beta_lo", c.beta_lo);
        maybe(j, "beta_hi", c.beta_hi);
        maybe(j, "beta_step", c.beta_step);
        maybe(j, "beta_list", c.beta_list);
        maybe(j, "trap_n_list", c.trap_n_list);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::invalid_argument, std::string("config: bad field type: ") + e.what());
    }
    if (!(c.level > 0.0 && c.level < 1.0)) fail(Errc::invalid_argument, "config: level must lie in (0,1)");
    if (c.replicates < 1) fail(Errc::invalid_argument, "config: replicates must be positive");
    if (c.n_list.empty() || c.a_list.empty() || c.m_list.empty() || c.k_list.empty())
        fail(Errc::invalid_argument, "config: parameter lists must be nonempty");
    return c;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("APRXLIK_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) return t;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t total, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads < 1) threads = 1;
    if (total > 0 && static_cast<std::size_t>(threads) > total) threads = static_cast<int>(total);
    if (threads <= 1) {
        for (std::size_t i = 0; i < total; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= total) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace aprx::harness
