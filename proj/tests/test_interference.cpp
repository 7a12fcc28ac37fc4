#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "airis/interference.hpp"
#include "airis/specfun.hpp"
#include "test_util.hpp"

using namespace airis;
using namespace airis::interference;

namespace {

// Mild desk-scale population: poles of the transforms sit at s <= -1/3,
// far enough from the finite-difference stencils used below.
InterfererSet mild_set() {
    InterfererSet set;
    set.aerial = {{2.0, 3.0}, {1.5, 0.8}};
    set.ground = {{1.0, 1.0}, {0.5, 2.2}};
    return set;
}

double delta0(const InterfererSet& set, double s) {
    double v = std::exp(-s);
    for (const auto& l : set.all()) v *= laplace_inr(l.k_factor, l.mean_inr, s);
    return v;
}

}  // namespace

TEST_CASE("per-interferer laplace transform") {
    CHECK(laplace_inr(2.0, 3.0, 0.0) == doctest::Approx(1.0));
    for (double s : {0.1, 0.5, 2.0}) {
        CHECK(laplace_inr(0.0, 3.0, s) == doctest::Approx(1.0 / (1.0 + 3.0 * s)).epsilon(1e-14));
    }
    // quadrature of E[e^{-s gbar |h|^2}] with the matching power density
    CHECK(laplace_inr(2.0, 3.0, 0.5) == doctest::Approx(0.1204776847648808387).epsilon(1e-12));
    const double quad = testutil::adaptive_simpson(
        [](double x) {
            // power density of gbar |h|^2 with K = 2, gbar = 3: rate = 1
            return std::exp(-0.5 * x) *
                   std::exp(-x - 2.0 + specfun::log_bessel_i(0, 2.0 * std::sqrt(2.0 * x)));
        },
        0.0, 120.0, 1e-13);
    CHECK(laplace_inr(2.0, 3.0, 0.5) == doctest::Approx(quad).epsilon(1e-10));
    // complete monotonicity of L itself: decreasing and positive
    double prev = 1.1;
    for (double s = 0.0; s < 4.0; s += 0.2) {
        const double v = laplace_inr(1.3, 2.0, s);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("log-derivative blocks") {
    // first block equals d/ds log L by finite differences
    for (double k_factor : {0.0, 2.0}) {
        for (double s : {0.1, 0.6}) {
            auto logl = [&](double t) { return std::log(laplace_inr(k_factor, 3.0, t)); };
            const double fd = (logl(s + 5e-7) - logl(s - 5e-7)) / 1e-6;
            CHECK(delta_term(1, k_factor, 3.0, s) == doctest::Approx(fd).epsilon(1e-7));
        }
    }
    // K = 0 closed form
    for (int i : {1, 2, 3, 5}) {
        const double s = 0.4, g = 1.7;
        double expect = std::pow(-g / (1.0 + g * s), i);
        for (int j = 1; j < i; ++j) expect *= j;
        CHECK(delta_term(i, 0.0, g, s) == doctest::Approx(expect).epsilon(1e-12));
    }
    // frozen value (i = 3, K = 2, gbar = 3, s = 0.5): 2 (-3)^3/2.5^3 (1+6/2.5)
    CHECK(delta_term(3, 2.0, 3.0, 0.5) == doctest::Approx(-11.7504).epsilon(1e-12));
    // third derivative of log L by Richardson finite differences
    auto logl = [](double t) { return std::log(laplace_inr(2.0, 3.0, t)); };
    CHECK(delta_term(3, 2.0, 3.0, 0.5) ==
          doctest::Approx(testutil::richardson_fd(logl, 0.5, 3, 1e-2)).epsilon(1e-8));
}

TEST_CASE("aggregate blocks") {
    InterfererSet empty;
    CHECK(s_aggregate(1, empty, 0.3) == doctest::Approx(-1.0));
    CHECK(s_aggregate(2, empty, 0.3) == doctest::Approx(0.0));
    CHECK(s_aggregate(5, empty, 1.1) == doctest::Approx(0.0));
    const auto set = mild_set();
    for (int i : {1, 2, 4}) {
        double expect = (i == 1) ? -1.0 : 0.0;
        for (const auto& l : set.all()) expect += delta_term(i, l.k_factor, l.mean_inr, 0.1);
        CHECK(s_aggregate(i, set, 0.1) == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("derivative expansion against finite differences") {
    const auto set = mild_set();
    for (double s : {0.0, 0.1, 0.5, 2.0}) {
        CHECK(delta_n(0, set, s) == doctest::Approx(delta0(set, s)).epsilon(1e-12));
        CHECK(delta_n(1, set, s) ==
              doctest::Approx(delta_n(0, set, s) * s_aggregate(1, set, s)).epsilon(1e-12));
        for (int n = 2; n <= 8; ++n) {
            const double fd =
                testutil::richardson_fd([&](double t) { return delta0(set, t); }, s, n, 1e-2);
            const double got = delta_n(n, set, s);
            CHECK(got == doctest::Approx(fd).epsilon(1e-6));
        }
    }
    CHECK_THROWS_AS(delta_n(70, set, 0.1), std::domain_error);
}

TEST_CASE("sign alternation of the derivatives") {
    const auto set = mild_set();
    for (double s : {0.0, 0.3, 1.0, 4.0}) {
        for (int n = 0; n <= 10; ++n) {
            const double v = delta_n(n, set, s);
            CHECK((n % 2 == 0 ? v : -v) > 0.0);
        }
    }
}

TEST_CASE("scaled series agrees with the expansion and sums to one") {
    const auto set = mild_set();
    for (double s0 : {0.05, 0.4, 1.5}) {
        const auto series = scaled_derivative_series(set, s0, 4);
        for (int n = 0; n <= 12; ++n) {
            const double expect = std::pow(s0, n) * std::abs(delta_n(n, set, s0)) /
                                  std::exp(specfun::log_factorial(n));
            CHECK(series.t[static_cast<std::size_t>(n)] ==
                  doctest::Approx(expect).epsilon(1e-10));
        }
        double total = series.residual;
        for (double v : series.t) total += v;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("interference moments") {
    InterfererSet empty;
    CHECK(interference_moment(0, empty) == doctest::Approx(1.0));
    CHECK(interference_moment(1, empty) == doctest::Approx(1.0).epsilon(1e-12));
    const auto set = mild_set();
    const double m1 = interference_moment(1, set);
    // E[W] = 1 + sum of mean INRs
    double expect = 1.0;
    for (const auto& l : set.all()) expect += l.mean_inr;
    CHECK(m1 == doctest::Approx(expect).epsilon(1e-10));
    // Jensen chain
    for (int k = 1; k <= 6; ++k) {
        const double mk = interference_moment(k, set);
        CHECK(mk >= std::pow(m1, k) - 1e-9);
        CHECK(mk >= 1.0);
    }
    // matches the expansion at the origin
    for (int k = 0; k <= 6; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        CHECK(interference_moment(k, set) ==
              doctest::Approx(sign * delta_n(k, set, 0.0)).epsilon(1e-10));
    }
}
