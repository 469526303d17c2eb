#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "aprxlik/ising.hpp"
#include "aprxlik/optimize.hpp"
#include "oracles.hpp"

using namespace aprx;
using namespace aprx::ising;

namespace {

const LatticeSpec kFree22{2, 2, Boundary::free};
const LatticeSpec kPeriodic22{2, 2, Boundary::periodic};

double rel_diff(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::fabs(b)); }

}  // namespace

TEST_CASE("suff_stats conventions") {
    SUBCASE("all +1 on 2x2") {
        const SpinConfig up(4, 1);
        const SuffStats f = suff_stats(up, kFree22);
        CHECK(f.v0 == 4);
        CHECK(f.v1 == 4);
        const SuffStats p = suff_stats(up, kPeriodic22);
        CHECK(p.v0 == 4);
        CHECK(p.v1 == 8);  // wrap duplicates counted
    }
    SUBCASE("checkerboard 3x3") {
        SpinConfig cb(9);
        for (int i = 0; i < 9; ++i) cb[i] = (i % 2 == 0) ? 1 : -1;
        const SuffStats s = suff_stats(cb, LatticeSpec{3, 3, Boundary::free});
        CHECK(s.v0 == 1);
        CHECK(s.v1 == -12);
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(suff_stats(SpinConfig(3, 1), kFree22), Error);
    }
}

TEST_CASE("brute force closed forms") {
    SUBCASE("single site") {
        for (double alpha : {0.0, 0.4}) {
            const double z = brute_force_log_z(LatticeSpec{1, 1, Boundary::free}, IsingParams{alpha, 0.7});
            CHECK(z == doctest::Approx(std::log(2.0 * std::cosh(alpha))).epsilon(1e-14));
        }
    }
    SUBCASE("independence at beta = 0") {
        const double z = brute_force_log_z(kFree22, IsingParams{0.3, 0.0});
        CHECK(z == doctest::Approx(4.0 * std::log(2.0 * std::cosh(0.3))).epsilon(1e-14));
    }
    SUBCASE("2x2 free matches the hand enumeration grouped by v1") {
        // v1 groups: 2 configs at +4 (aligned), 8 at 0 (single flip),
        // 4 at 0 (adjacent pairs), 2 at -4 (diagonal pairs).
        const double beta = 0.3;
        const double z_hand = 2.0 * std::exp(4.0 * beta) + 12.0 + 2.0 * std::exp(-4.0 * beta);
        CHECK(brute_force_log_z(kFree22, IsingParams{0.0, beta}) == doctest::Approx(std::log(z_hand)).epsilon(1e-14));
    }
    SUBCASE("size cap") {
        CHECK_THROWS_AS(brute_force_log_z(LatticeSpec{5, 5, Boundary::free}, IsingParams{}), Error);
    }
}

TEST_CASE("transfer elimination equals brute force on every small lattice") {
    double worst = 0.0;
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c)
            for (Boundary b : {Boundary::free, Boundary::periodic})
                for (double alpha : {0.0, 0.1})
                    for (double beta : {0.0, 0.2, 0.43}) {
                        const LatticeSpec lat{r, c, b};
                        const IsingParams p{alpha, beta};
                        const double bf = brute_force_log_z(lat, p);
                        worst = std::max(worst, std::fabs(transfer_log_z(lat, p) - bf) / std::fabs(bf == 0 ? 1 : bf));
                    }
    CHECK(worst < 1e-10);
}

TEST_CASE("transfer closed forms and the 1-D chain") {
    SUBCASE("beta = 0 factorizes") {
        for (Boundary b : {Boundary::free, Boundary::periodic}) {
            const double z = transfer_log_z(LatticeSpec{3, 5, b}, IsingParams{0.25, 0.0});
            const double expected =
                15.0 * std::log(2.0 * std::cosh(0.25)) + (b == Boundary::periodic ? 15.0 * 0.0 : 0.0);
            CHECK(z == doctest::Approx(expected).epsilon(1e-12));
        }
    }
    SUBCASE("free 1 x c chain matches brute force and the closed form") {
        const LatticeSpec chain{1, 16, Boundary::free};
        const IsingParams p{0.0, 0.3};
        const double z = transfer_log_z(chain, p);
        CHECK(z == doctest::Approx(brute_force_log_z(chain, p)).epsilon(1e-12));
        // Z = 2^c cosh(beta)^(c-1)
        CHECK(z == doctest::Approx(16.0 * std::log(2.0) + 15.0 * std::log(std::cosh(0.3))).epsilon(1e-12));
    }
    SUBCASE("alpha flip symmetry") {
        for (const LatticeSpec& lat : {LatticeSpec{3, 4, Boundary::free}, LatticeSpec{3, 3, Boundary::periodic}}) {
            const double zp = transfer_log_z(lat, IsingParams{0.1, 0.3});
            const double zm = transfer_log_z(lat, IsingParams{-0.1, 0.3});
            CHECK(rel_diff(zp, zm) < 1e-12);
            const double bp = brute_force_log_z(lat, IsingParams{0.1, 0.3});
            const double bm = brute_force_log_z(lat, IsingParams{-0.1, 0.3});
            CHECK(rel_diff(bp, bm) < 1e-12);
        }
    }
    SUBCASE("width cap") {
        CHECK_THROWS_AS(transfer_log_z(LatticeSpec{20, 20, Boundary::free}, IsingParams{}), Error);
    }
}

TEST_CASE("rda level sweep") {
    SUBCASE("k = rows is the identity") {
        const LatticeSpec lat{4, 4, Boundary::free};
        const IsingParams p{0.1, 0.3};
        CHECK(std::fabs(rda_log_z(4, lat, p) - transfer_log_z(lat, p)) < 1e-12);
    }
    SUBCASE("error strictly decreasing in k on 4x4") {
        const LatticeSpec lat{4, 4, Boundary::free};
        const IsingParams p{0.0, 0.3};
        const double exact = brute_force_log_z(lat, p);
        double prev = std::numeric_limits<double>::infinity();
        for (int k : {2, 3, 4}) {
            const double err = std::fabs(rda_log_z(k, lat, p) - exact);
            CHECK(err < prev);
            prev = err;
        }
    }
    SUBCASE("6x6 with a field: rda(5) within 0.5% of transfer") {
        const LatticeSpec lat{6, 6, Boundary::free};
        const IsingParams p{0.1, 0.2};
        const double exact = transfer_log_z(lat, p);
        CHECK(std::fabs(rda_log_z(5, lat, p) - exact) / std::fabs(exact) < 0.005);
        double prev = std::numeric_limits<double>::infinity();
        for (int k : {2, 3, 4, 5, 6}) {
            const double err = std::fabs(rda_log_z(k, lat, p) - exact);
            CHECK(err <= prev);
            prev = err;
        }
    }
    SUBCASE("k out of range") {
        const LatticeSpec lat{4, 4, Boundary::free};
        CHECK_THROWS_AS(rda_log_z(1, lat, IsingParams{0.0, 0.2}), Error);
        CHECK_THROWS_AS(rda_log_z(5, lat, IsingParams{0.0, 0.2}), Error);
    }
}

TEST_CASE("kaufman closed form: product-limit resolution and oracle equivalence") {
    // The source formula's product limit is ambiguous (n vs n+1 factors);
    // the classical n-factor variant is the one that reproduces brute force.
    double worst_classical = 0.0, best_nplus1 = std::numeric_limits<double>::infinity();
    for (int n : {2, 3, 4})
        for (double beta : {0.1, 0.2, 0.3, 0.43}) {
            const double bf = brute_force_log_z(LatticeSpec{n, n, Boundary::periodic}, IsingParams{0.0, beta});
            worst_classical = std::max(worst_classical, rel_diff(kaufman_log_z(n, n, beta), bf));
            best_nplus1 = std::min(best_nplus1,
                                   std::fabs(kaufman_log_z(n, n, beta, KaufmanProduct::n_plus_one) - bf));
        }
    CHECK(worst_classical < 1e-10);
    CHECK(best_nplus1 > 1.0);  // the n+1 variant is not a roundoff-level miss

    SUBCASE("rectangular tori against brute force") {
        for (auto [n, m] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{2, 4}}) {
            const double bf = brute_force_log_z(LatticeSpec{n, m, Boundary::periodic}, IsingParams{0.0, 0.25});
            CHECK(rel_diff(kaufman_log_z(n, m, 0.25), bf) < 1e-10);
        }
    }
    SUBCASE("8x8 against the periodic transfer oracle") {
        for (double beta : {0.1, 0.2, 0.3, 0.43}) {
            const double tz = transfer_log_z(LatticeSpec{8, 8, Boundary::periodic}, IsingParams{0.0, beta});
            CHECK(rel_diff(kaufman_log_z(8, 8, beta), tz) < 1e-8);
        }
    }
    SUBCASE("1-wide torus (self edges) is consistent with the transfer convention") {
        for (double beta : {0.2, 0.4}) {
            const double tz = transfer_log_z(LatticeSpec{1, 12, Boundary::periodic}, IsingParams{0.0, beta});
            CHECK(rel_diff(kaufman_log_z(1, 12, beta), tz) < 1e-10);
        }
    }
    SUBCASE("terms: ratios sum to one, A4 carries the sign of a_0") {
        const KaufmanTerms t = kaufman_terms(6, 10, 0.3);
        CHECK(t.ratios[0] + t.ratios[1] + t.ratios[2] + t.ratios[3] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(t.log_abar.sign == 1.0);
        CHECK(t.a_even[0] < 0.0);  // a_0 = 2 beta + log tanh beta < 0 for beta < ~0.66
        CHECK(t.log_a[3].sign == -1.0);
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(kaufman_log_z(4, 4, 0.0), Error);
        CHECK_THROWS_AS(kaufman_log_z(4, 4, 0.44), Error);
    }
}

TEST_CASE("epsilon_k") {
    SUBCASE("k = m is exact") {
        CHECK(std::fabs(epsilon_k(8, 8, 0.25, ExactRoute::kaufman())) < 1e-9);
    }
    SUBCASE("|epsilon| decreases in k at m = 64") {
        double prev = std::numeric_limits<double>::infinity();
        for (int k : {4, 6, 8, 10, 12}) {
            const double e = std::fabs(epsilon_k(64, k, 0.3, ExactRoute::kaufman()));
            CHECK(e < prev);
            prev = e;
        }
    }
    SUBCASE("kaufman path equals the periodic transfer path at m = 8") {
        const LatticeSpec torus{8, 8, Boundary::periodic};
        const IsingParams p{0.0, 0.2};
        const double exact = transfer_log_z(torus, p);
        for (int k : {2, 3, 4, 5}) {
            const double eps_transfer = exact - rda_log_z(k, torus, p);
            const double eps_kaufman = epsilon_k(8, k, 0.2, ExactRoute::kaufman());
            CHECK(std::fabs(eps_kaufman - eps_transfer) < 1e-8);
        }
    }
    SUBCASE("data-free determinism") {
        const double a = epsilon_k(32, 6, 0.3, ExactRoute::kaufman());
        const double b = epsilon_k(32, 6, 0.3, ExactRoute::kaufman());
        CHECK(a == b);
    }
    SUBCASE("proxy route requires K > k") {
        CHECK_THROWS_AS(epsilon_k(16, 6, 0.3, ExactRoute::proxy(6, 0.1, Boundary::free)), Error);
        CHECK(std::isfinite(epsilon_k(16, 6, 0.3, ExactRoute::proxy(8, 0.1, Boundary::free))));
    }
}

TEST_CASE("delta_k") {
    SUBCASE("identical exact and approximate sides give zero") {
        CHECK(delta_k(12, 12, 0.3, ExactRoute::kaufman()) == 0.0);
    }
    SUBCASE("finite difference matches a 5-point-stencil oracle at m = 8") {
        auto eps = [](double b) { return epsilon_k(8, 3, b, ExactRoute::kaufman()); };
        const double h = 1e-3;
        const double stencil =
            (-eps(0.25 + 2 * h) + 8.0 * eps(0.25 + h) - 8.0 * eps(0.25 - h) + eps(0.25 - 2 * h)) / (12.0 * h);
        const double d = delta_k(8, 3, 0.25, ExactRoute::kaufman());
        CHECK(d == doctest::Approx(std::fabs(stencil)).epsilon(1e-6));
    }
    SUBCASE("log delta decreases linearly in k at the empirical rate b_beta/2") {
        // The observed decay rate of the score error is half the b_beta
        // claimed for it: the per-parity trapezium remainders that drive it
        // decay at the analyticity-strip rate acosh(c_beta - 1) = b_beta / 2.
        for (double beta : {0.2, 0.3}) {
            std::vector<double> ks, ld;
            for (int k = 4; k <= 12; ++k) {
                const double d = delta_k(64, k, beta, ExactRoute::kaufman());
                ks.push_back(k);
                ld.push_back(std::log(d));
            }
            const double slope = oracle::fit_slope(ks, ld);
            const double half_b = 0.5 * b_beta(beta);
            CHECK(slope < 0.0);
            CHECK(std::fabs(slope - (-half_b)) < 0.25 * half_b);
        }
    }
}

TEST_CASE("spectral quantities") {
    SUBCASE("b_beta boundary and limits") {
        CHECK(b_beta(beta_critical - 1e-9) < 1e-3);
        CHECK_THROWS_AS(b_beta(beta_critical + 1e-6), Error);
        CHECK_THROWS_AS(b_beta(0.5), Error);
        CHECK(b_beta(0.01) > 5.0);
    }
    SUBCASE("b_beta monotone decreasing on a 0.005 grid") {
        double prev = std::numeric_limits<double>::infinity();
        for (double beta = 0.01; beta <= 0.43 + 1e-12; beta += 0.005) {
            const double b = b_beta(beta);
            CHECK(b < prev);
            prev = b;
        }
    }
    SUBCASE("f is symmetric about pi") {
        const int n = 16;
        double full = 0.0;
        for (int q = 0; q < n; ++q) full += f_spectral(2.0 * M_PI * q / n, 0.3);
        double half = f_spectral(0.0, 0.3) + f_spectral(M_PI, 0.3);
        for (int q = 1; q < n / 2; ++q) half += 2.0 * f_spectral(2.0 * M_PI * q / n, 0.3);
        CHECK(full == doctest::Approx(half).epsilon(1e-12));
    }
    SUBCASE("reference integral stable under doubling") {
        const double i1 = i_beta_reference(0.3, 500000);
        const double i2 = i_beta_reference(0.3, 1000000);
        CHECK(std::fabs(i1 - i2) < 1e-10);
    }
}

TEST_CASE("trapezium decay rates") {
    // The remainders of the n-point parity rules decay at the strip rate
    // b_beta/2; their signed average (the 2n-node rule) decays at b_beta.
    for (double beta : {0.2, 0.3}) {
        std::vector<int> ns;
        for (int n = 4; n <= 16; ++n) ns.push_back(n);
        const TrapeziumDecay d = trapezium_decay_check(beta, ns);
        CHECK(std::fabs(d.rate_parity_max - (-0.5 * d.b)) < 0.1 * (0.5 * d.b));
        CHECK(std::fabs(d.rate_combined - (-d.b)) < 0.1 * d.b);
        for (const auto& row : d.rows) CHECK(row.r_max >= row.r_combined - 1e-18);
    }
    CHECK_THROWS_AS(trapezium_decay_check(0.3, std::vector<int>{4, 5, 6}), Error);
    CHECK_THROWS_AS(trapezium_decay_check(0.5, std::vector<int>{4, 5, 6, 7}), Error);
}

TEST_CASE("k_schedule") {
    CHECK(k_schedule(300, 0.3, -1.0).k == 2);
    CHECK(k_schedule(300, 0.3, 1.75).k == 10);  // ceil(1.75 * ln 300) = 10
    CHECK(k_schedule(300, 0.3, 1.75).insufficient == false);
    const KSchedule low = k_schedule(300, 0.3, 0.5);  // 1/b_0.3 ~ 0.79
    CHECK(low.insufficient);
    CHECK(k_schedule(4, 0.3, 10.0).k == 4);  // clamped by m
}

TEST_CASE("ising likelihood surfaces") {
    SUBCASE("loglik formula") {
        const SuffStats st{4, 8};
        const auto s = ising_loglik_surface(st, kPeriodic22, 0.0, ZMethod::brute());
        const double beta = 0.2;
        const double expect = beta * 8.0 - brute_force_log_z(kPeriodic22, IsingParams{0.0, beta});
        CHECK(loglik1(*s, beta) == doctest::Approx(expect).epsilon(1e-14));
    }
    SUBCASE("brute and transfer surfaces are identical; rda(k=r) matches") {
        const LatticeSpec lat{4, 4, Boundary::free};
        const SuffStats st{2, 6};
        const auto sb = ising_loglik_surface(st, lat, 0.1, ZMethod::brute());
        const auto stf = ising_loglik_surface(st, lat, 0.1, ZMethod::transfer());
        const auto srda = ising_loglik_surface(st, lat, 0.1, ZMethod::rda(4));
        for (double beta = 0.0; beta <= 0.43 + 1e-12; beta += 0.05) {
            CHECK(rel_diff(loglik1(*sb, beta), loglik1(*stf, beta)) < 1e-10);
            CHECK(rel_diff(loglik1(*srda, beta), loglik1(*stf, beta)) < 1e-12);
        }
    }
    SUBCASE("MLE on a 3x3 sampled configuration matches the grid-scan oracle") {
        // All +1 except a flipped center: v1 = 4, interior maximizer.
        SpinConfig cfg(9, 1);
        cfg[4] = -1;
        const LatticeSpec lat{3, 3, Boundary::free};
        const SuffStats st = suff_stats(cfg, lat);
        REQUIRE(st.v1 == 4);
        const auto s = ising_loglik_surface(st, lat, 0.0, ZMethod::brute());
        const MaximizeResult r = maximize(*s, param1(0.2));
        REQUIRE(r.converged);
        const double grid_hat = oracle::grid_scan_max([&](double b) { return loglik1(*s, b); }, 0.0, 0.43, 861);
        CHECK(std::fabs(r.theta_hat[0] - grid_hat) <= 5e-4);
    }
}

TEST_CASE("delta_contour") {
    SUBCASE("guards") {
        CHECK_THROWS_AS(delta_contour({20}, {4, 6}, 0.1, 0.3, 6), Error);   // K == max k
        CHECK_THROWS_AS(delta_contour({20}, {4, 6}, 0.1, 0.3, 17), Error);  // K beyond cap
    }
    SUBCASE("cells decrease in k at fixed m, deterministic across reruns") {
        const auto cells = delta_contour({24}, {2, 4, 6, 8}, 0.1, 0.3, 10);
        REQUIRE(cells.size() == 4);
        for (std::size_t i = 1; i < cells.size(); ++i) CHECK(cells[i].log_scaled_delta < cells[i - 1].log_scaled_delta);
        const auto again = delta_contour({24}, {2, 4, 6, 8}, 0.1, 0.3, 10);
        for (std::size_t i = 0; i < cells.size(); ++i)
            CHECK(cells[i].log_scaled_delta == again[i].log_scaled_delta);
    }
}

TEST_CASE("log-space paths stay finite at production sizes") {
    CHECK(std::isfinite(kaufman_log_z(300, 300, 0.2)));
    CHECK(std::isfinite(kaufman_log_z(300, 300, 0.43)));
    CHECK(kaufman_log_z(300, 300, 0.43) > 1e4);
    const double strip = transfer_log_z(LatticeSpec{16, 50, Boundary::free}, IsingParams{0.1, 0.43});
    CHECK(std::isfinite(strip));
}
