#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "airis/specfun.hpp"
#include "test_util.hpp"

using namespace airis::specfun;

TEST_CASE("bessel_i at the origin and the series reference point") {
    CHECK(bessel_i(0, 0.0) == 1.0);
    CHECK(bessel_i(1, 0.0) == 0.0);
    // 60-term extended-precision power series value
    CHECK(bessel_i(0, 1.0) == doctest::Approx(1.2660658777520083356).epsilon(1e-13));
}

TEST_CASE("bessel_i against a long-double series across the working range") {
    for (int nu : {0, 1, 2, 5}) {
        for (double x : {0.3, 1.0, 4.0, 12.0, 19.5, 25.0, 80.0, 250.0, 700.0}) {
            long double term = 1.0L, sum = 1.0L;
            const long double q = static_cast<long double>(x) * x / 4.0L;
            for (int k = 1; k < 3000; ++k) {
                term *= q / (static_cast<long double>(k) * (k + nu));
                sum += term;
                if (term < sum * 1e-25L) break;
            }
            long double lead = 1.0L;
            for (int j = 1; j <= nu; ++j) lead *= x / (2.0L * j);
            const double log_ref = static_cast<double>(std::log(sum) + std::log(lead));
            CHECK(log_bessel_i(nu, x) == doctest::Approx(log_ref).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(bessel_i(0, -1.0), std::domain_error);
}

TEST_CASE("lower incomplete gamma values and limits") {
    for (double x : {0.1, 0.7, 2.0, 9.0}) {
        CHECK(lower_incomplete_gamma(1.0, x) == doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-13));
    }
    CHECK(lower_incomplete_gamma(2.0, 1.0) ==
          doctest::Approx(0.2642411176571153568).epsilon(1e-13));
    // adaptive quadrature oracle at tolerance 1e-13
    const double quad = testutil::adaptive_simpson(
        [](double t) { return std::pow(t, 2.5) * std::exp(-t); }, 1e-12, 2.2, 1e-15);
    CHECK(lower_incomplete_gamma(3.5, 2.2) == doctest::Approx(quad).epsilon(1e-12));
    CHECK(lower_incomplete_gamma(3.5, 2.2) ==
          doctest::Approx(0.8882549996163353719).epsilon(1e-13));
    CHECK_THROWS_AS(lower_incomplete_gamma(0.0, 1.0), std::domain_error);
    // gamma(a, x) -> Gamma(a) as x grows
    for (double a : {0.5, 1.0, 3.5, 20.0, 90.0}) {
        const double x = a + 40.0 * std::sqrt(a);
        CHECK(gamma_p(a, x) == doctest::Approx(1.0).epsilon(1e-10));
    }
    // monotone nondecreasing in x
    double prev = 0.0;
    for (double x = 0.0; x < 8.0; x += 0.25) {
        const double v = lower_incomplete_gamma(2.7, x);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("marcum q1 boundary rows, frozen value and derivative identity") {
    for (double a : {0.0, 0.5, 1.7, 4.0}) CHECK(marcum_q1(a, 0.0) == 1.0);
    for (double b : {0.2, 1.0, 3.0}) {
        CHECK(marcum_q1(0.0, b) == doctest::Approx(std::exp(-b * b / 2.0)).epsilon(1e-13));
    }
    // truncated Bessel-series oracle with error bound < 1e-12
    CHECK(marcum_q1(1.0, 2.0) == doctest::Approx(0.2690120600359099967).epsilon(1e-12));
    // monotone: nonincreasing in b, nondecreasing in a
    CHECK(marcum_q1(1.0, 2.0) > marcum_q1(1.0, 2.5));
    CHECK(marcum_q1(1.2, 2.0) > marcum_q1(1.0, 2.0));
    // d/db Q(a,b) = -b exp(-(a^2+b^2)/2) I0(ab), finite differences
    for (double a : {0.7, 1.5}) {
        for (double b : {0.8, 2.2}) {
            const double fd = (marcum_q1(a, b + 5e-6) - marcum_q1(a, b - 5e-6)) / 1e-5;
            const double closed = -b * std::exp(-(a * a + b * b) / 2.0) * bessel_i0(a * b);
            CHECK(fd == doctest::Approx(closed).epsilon(1e-6));
        }
    }
}

TEST_CASE("nuttall q reductions, frozen value and quadrature agreement grid") {
    for (double a : {0.0, 0.9, 2.5}) {
        CHECK(nuttall_q(1, 0, a, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    }
    for (double b : {0.5, 1.5}) {
        CHECK(nuttall_q(1, 0, 0.0, b) == doctest::Approx(std::exp(-b * b / 2.0)).epsilon(1e-12));
    }
    // adaptive quadrature oracle, tolerance 1e-12
    CHECK(nuttall_q(3, 0, std::sqrt(2.0), 1.0) ==
          doctest::Approx(3.9104400842943441776).epsilon(1e-11));

    auto quad = [](int m, int n, double a, double b) {
        const double top = b + a + 50.0;
        return testutil::adaptive_simpson(
            [=](double x) {
                const double la = (a * x > 0.0)
                                      ? airis::specfun::log_bessel_i(n, a * x)
                                      : (n == 0 ? 0.0 : -1e30);
                return std::exp(m * std::log(std::max(x, 1e-300)) -
                                (x * x + a * a) / 2.0 + la);
            },
            std::max(b, 1e-12), top, 1e-14);
    };
    for (int m = 1; m <= 9; ++m) {
        for (double a : {0.0, 0.5, 1.0, 2.0, 4.0}) {
            for (double b : {0.0, 0.5, 1.0, 2.0, 4.0}) {
                const double ref = quad(m, 0, a, b);
                const double got = nuttall_q(m, 0, a, b);
                CHECK(got == doctest::Approx(ref).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("kummer m special points and frozen value") {
    CHECK(kummer_m(0.7, 2.3, 0.0) == 1.0);
    for (double z : {-2.0, 0.5, 3.0}) {
        CHECK(kummer_m(0.0, 1.0, z) == doctest::Approx(1.0).epsilon(1e-14));
    }
    // extended-precision series oracle
    CHECK(kummer_m(-0.5, 1.0, -3.0) == doctest::Approx(2.1268525984794103733).epsilon(1e-13));
    CHECK_THROWS_AS(kummer_m(1.0, -2.0, 0.5), std::domain_error);
}

TEST_CASE("laguerre closed points and integer recurrence agreement") {
    for (double x : {-3.0, 0.0, 2.5}) CHECK(laguerre(0.0, x) == doctest::Approx(1.0));
    for (double k : {0.3, 1.0, 4.0}) {
        CHECK(laguerre(1.0, -k) == doctest::Approx(1.0 + k).epsilon(1e-13));
    }
    CHECK(laguerre(0.5, -1.0) == doctest::Approx(1.4464913440831718334).epsilon(1e-13));
    for (double x = -50.0; x <= 50.0; x += 12.5) {
        double lm2 = 1.0;             // L_0
        double lm1 = 1.0 - x;         // L_1
        CHECK(laguerre(0.0, x) == doctest::Approx(lm2).epsilon(1e-12));
        CHECK(laguerre(1.0, x) == doctest::Approx(lm1).epsilon(1e-12));
        for (int k = 2; k <= 30; ++k) {
            const double lk = ((2.0 * k - 1.0 - x) * lm1 - (k - 1.0) * lm2) / k;
            lm2 = lm1;
            lm1 = lk;
            const double got = laguerre(static_cast<double>(k), x);
            CHECK(got == doctest::Approx(lk).epsilon(1e-12));
        }
    }
}
