#include <doctest.h>

#include <cmath>

#include "airis/analytic.hpp"
#include "airis/channel.hpp"
#include "airis/montecarlo.hpp"
#include "airis/sisr.hpp"
#include "test_util.hpp"

using namespace airis;
using namespace airis::sisr;

TEST_CASE("degenerate fit collapses to the exponential") {
    for (int psi : {2, 4, 9}) {
        const auto p = fit_sisr(1.0, 2.0, 1, psi);
        CHECK(p.omega == doctest::Approx(0.0));
        CHECK(p.sigma2 == doctest::Approx(1.0));
        CHECK(p.kappa == doctest::Approx(0.0));
        CHECK(p.xi == doctest::Approx(0.0));
        CHECK(p.alpha == doctest::Approx(1.0));
        for (double x : {0.1, 0.9, 3.0}) {
            CHECK(sisr_pdf(p, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
            CHECK(sisr_cdf(p, x) == doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("fit matches its two target moments exactly") {
    const double tuples[][4] = {
        {1.0, 1.9, 1, 4}, {3.0, 11.0, 2, 4}, {5.0, 27.0, 4, 8},
        {2.0, 5.5, 1, 6}, {12.4, 160.0, 9, 4}, {0.7, 0.55, 3, 2},
    };
    for (const auto& t : tuples) {
        const auto p = fit_sisr(t[0], t[1], static_cast<int>(t[2]), static_cast<int>(t[3]));
        CHECK(mixture_moment1(p) == doctest::Approx(t[0]).epsilon(1e-9));
        CHECK(mixture_moment2(p) == doctest::Approx(t[1]).epsilon(1e-9));
        double chi_sum = 0.0;
        for (double c : p.chi) {
            CHECK(c >= 0.0);
            chi_sum += c;
        }
        CHECK(chi_sum == doctest::Approx(1.0).epsilon(1e-12));
        // quadrature cross-check of the same two moments
        const double q1 = testutil::adaptive_simpson(
            [&](double x) { return x * sisr_pdf(p, x); }, 0.0, t[0] * 60.0, 1e-12);
        CHECK(q1 == doctest::Approx(t[0]).epsilon(1e-8));
    }
}

TEST_CASE("fit rejects infeasible requests with the violated constraint") {
    CHECK_THROWS_AS(fit_sisr(1.0, 1.8, 3, 4), FitError);   // I > floor bound
    CHECK_THROWS_AS(fit_sisr(1.0, 0.9, 1, 4), FitError);   // mu2 <= mu1^2
    CHECK_THROWS_AS(fit_sisr(1.0, 2.0, 1, 1), FitError);   // psi too small
    CHECK_THROWS_AS(fit_sisr(-1.0, 2.0, 1, 4), FitError);  // bad mu1
    CHECK(max_feasible_count(1.0, 1.25) == 4);
    CHECK(max_feasible_count(1.0, 0.9) == 0);
}

TEST_CASE("both cdf forms agree and bracket the pdf") {
    const auto p = fit_sisr(3.0, 11.0, 2, 4);
    // gamma form vs finite sum across the support
    for (double m = 0.01; m <= 50.0; m *= 1.9) {
        const double x = m * p.alpha;
        CHECK(sisr_cdf(p, x) == doctest::Approx(sisr_cdf_gamma_form(p, x)).epsilon(1e-12));
    }
    CHECK(sisr_cdf(p, 0.0) == 0.0);
    CHECK(sisr_cdf(p, 1e6) == doctest::Approx(1.0).epsilon(1e-12));
    // monotone, and the centered difference reproduces the density
    double prev = -1.0;
    for (double x = 0.05; x < 20.0; x += 0.35) {
        const double c = sisr_cdf(p, x);
        CHECK(c >= prev);
        prev = c;
        const double h = 1e-5;
        const double der = (sisr_cdf(p, x + h) - sisr_cdf(p, x - h)) / (2.0 * h);
        CHECK(der == doctest::Approx(sisr_pdf(p, x)).epsilon(1e-6));
        CHECK(sisr_pdf(p, x) >= 0.0);
    }
    // unit mass
    const double mass = testutil::adaptive_simpson(
        [&](double x) { return sisr_pdf(p, x); }, 0.0, 400.0, 1e-13);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("small-x expansion has the right limit and log-log slope") {
    const auto p = fit_sisr(3.0, 11.0, 2, 4);
    CHECK(sisr_cdf_small_x(p, 0.0) == 0.0);
    const double x0 = p.alpha * 1e-3;
    CHECK(sisr_cdf_small_x(p, x0) / sisr_cdf(p, x0) == doctest::Approx(1.0).epsilon(0.01));
    // slope of log F vs log x near zero equals the component count
    const double x1 = p.alpha * 1e-4;
    const double x2 = p.alpha * 2e-4;
    const double slope = (std::log(sisr_cdf(p, x2)) - std::log(sisr_cdf(p, x1))) /
                         (std::log(x2) - std::log(x1));
    CHECK(slope == doctest::Approx(static_cast<double>(p.count)).epsilon(1e-3));
}

TEST_CASE("physical construction reproduces the mixture law") {
    const auto p = fit_sisr(3.0, 11.0, 2, 4);
    rng::Stream s(99, 5, 0);
    const std::size_t n = 1000000;
    std::vector<double> draws(n);
    double m1 = 0.0, m2 = 0.0;
    for (auto& v : draws) {
        v = sample_sisr(p, s);
        m1 += v;
        m2 += v * v;
    }
    m1 /= n;
    m2 /= n;
    CHECK(m1 == doctest::Approx(p.count * (p.omega + p.sigma2)).epsilon(0.01));
    const double ex2 = 2.0 * p.sigma2 * p.sigma2 + 4.0 * p.sigma2 * p.omega +
                       (p.shape + 1.0) / p.shape * p.omega * p.omega;
    const double expect2 =
        p.count * ex2 + p.count * (p.count - 1.0) * std::pow(p.omega + p.sigma2, 2.0);
    CHECK(m2 == doctest::Approx(expect2).epsilon(0.02));

    auto ecdf = mc::empirical_cdf(std::move(draws));
    const double ks = mc::ks_distance(ecdf, [&](double x) { return sisr_cdf(p, x); });
    CHECK(ks <= 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("cascade power fit tracks the simulated cascade") {
    // Four-element cascade with K = 1 on both hops: fit from closed-form
    // moments, then compare against a simulated cascade. The two-moment
    // family lands within a few percent in Kolmogorov distance here (the
    // looser gap is inherent to the family, not sampling noise).
    const auto table = analytic::cascade_moment_table(4, 1.0, 1.0, 4);
    const double mu1 = table.at(1.0);
    const double mu2 = table.at(2.0);
    const auto p = fit_sisr(mu1, mu2, 2, 4);
    rng::Stream s(7, 6, 0);
    const std::size_t n = 1000000;
    std::vector<double> draws(n);
    for (auto& v : draws) {
        double amp = 0.0;
        for (int e = 0; e < 4; ++e) {
            amp += std::sqrt(channel::sample_fading_power(1.0, s) *
                             channel::sample_fading_power(1.0, s));
        }
        v = amp * amp;
    }
    double mean = 0.0;
    for (double v : draws) mean += v;
    mean /= n;
    CHECK(mean == doctest::Approx(mu1).epsilon(0.01));
    auto ecdf = mc::empirical_cdf(std::move(draws));
    const double ks = mc::ks_distance(ecdf, [&](double x) { return sisr_cdf(p, x); });
    CHECK(ks <= 0.03);
}
