#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cumbound/asymptotics.hpp"
#include "cumbound/tail.hpp"

#include <cmath>

using namespace cumbound;

namespace {

// Exact cumulants of the centered Exponential(1): kappa_1 = 0, kappa_n = (n-1)!.
CumulantSequence centered_exponential_cumulants(int n_max) {
    CumulantSequence k;
    k.values.push_back(0);
    for (int n = 2; n <= n_max; ++n) k.values.emplace_back(factorial(n - 1));
    return k;
}

CumulantSequence centered_cumulants_of(const ReferenceLaw& law, int n_max) {
    CumulantSequence k;
    k.values.push_back(0);  // shift invariance: only kappa_1 moves under centering
    for (int n = 2; n <= n_max; ++n) k.values.push_back(law_cumulant(law, n));
    return k;
}

}  // namespace

TEST_CASE("bernstein_tail") {
    const BernsteinParams p{1.0, 1.0};
    CHECK(bernstein_tail(p, 3.0) == doctest::Approx(std::exp(-9.0 / 8.0)).epsilon(1e-15));
    CHECK(bernstein_tail(p, 3.0) == doctest::Approx(0.32465246735834974));
    // dominates the true centered Exponential(1) tail P(X - 1 >= 3) = e^-4
    CHECK(bernstein_tail(p, 3.0) > std::exp(-4.0));

    SUBCASE("vacuous at zero deviation") {
        CHECK(bernstein_tail(p, 1e-9) == doctest::Approx(1.0));
        CHECK(bernstein_tail(p, 1e-9, true) == 1.0);  // capped
    }
    SUBCASE("b = 0 recovers the sub-Gaussian form") {
        CHECK(bernstein_tail(BernsteinParams{1.0, 0.0}, 2.0) ==
              doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    }
    SUBCASE("monotone in x, v and b") {
        double prev = 1.0;
        for (double x : {0.5, 1.0, 2.0, 4.0, 8.0}) {
            const double value = bernstein_tail(p, x);
            CHECK(value < prev);
            prev = value;
        }
        CHECK(bernstein_tail(BernsteinParams{2.0, 1.0}, 3.0) > bernstein_tail(p, 3.0));
        CHECK(bernstein_tail(BernsteinParams{1.0, 2.0}, 3.0) > bernstein_tail(p, 3.0));
    }
    SUBCASE("Chernoff dominance at the named deviations") {
        for (double x : {1.0, 2.0, 3.0, 5.0}) {
            CHECK(std::exp(-(x + 1.0)) <= bernstein_tail(p, x));
        }
    }
    CHECK_THROWS_AS(bernstein_tail(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(bernstein_tail(p, -1.0), std::domain_error);
    CHECK_THROWS_AS(bernstein_tail(BernsteinParams{0.0, 1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bernstein_tail(BernsteinParams{1.0, -1.0}, 1.0), std::invalid_argument);
}

TEST_CASE("cgf_quadratic_bound") {
    const BernsteinParams p{1.0, 1.0};
    SUBCASE("centered Exponential(1) at t = 1/2") {
        const double cgf = -0.5 - std::log(0.5);  // K(t) = -t - log(1 - t)
        CHECK(cgf == doctest::Approx(0.19314718055994531));
        CHECK(cgf_quadratic_bound(p, 0.5) == doctest::Approx(0.25));
        CHECK(cgf <= cgf_quadratic_bound(p, 0.5));
    }
    SUBCASE("zero at zero and domination over the exact CGF on a grid") {
        CHECK(cgf_quadratic_bound(p, 0.0) == 0.0);
        for (int i = 0; i <= 99; ++i) {
            const double t = i * 0.01;
            const double cgf = -t - std::log1p(-t);
            CHECK(cgf <= cgf_quadratic_bound(p, t) + 1e-15);
        }
    }
    SUBCASE("the optimal Chernoff point lies inside the domain") {
        for (double x : {0.1, 1.0, 3.0, 10.0, 1000.0}) {
            const double t = optimal_chernoff_point(p, x);
            CHECK(t > 0.0);
            CHECK(t < 1.0 / p.b);
        }
    }
    CHECK_THROWS_AS(cgf_quadratic_bound(p, 1.0), std::domain_error);
    CHECK_THROWS_AS(cgf_quadratic_bound(p, -0.1), std::domain_error);
}

TEST_CASE("the elementary inequality behind the quadratic majorant") {
    // -u - log(1-u) <= u^2 / (2(1-u)) on [0, 0.99]
    for (int i = 0; i <= 99; ++i) {
        const long double u = i * 0.01L;
        const long double lhs = -u - std::log1p(-u);
        const long double rhs = u * u / (2.0L * (1.0L - u));
        CHECK(rhs - lhs >= 0.0L);
    }
}

TEST_CASE("compute_A_cen") {
    const ACenSweep sweep = compute_A_cen(64);
    const double rho = rate(PartitionClass::NoSingletons).rho;
    CHECK(sweep.ratios.size() == 63);
    CHECK(sweep.ratio_at(2) == doctest::Approx(rho * rho).epsilon(1e-14));
    CHECK(sweep.ratio_at(2) == doctest::Approx(1.3137588989965838).epsilon(1e-13));
    CHECK(sweep.ratio_at(3) == doctest::Approx(0.753).epsilon(1e-3));
    // the maximum sits at n = 2 and the sweep value equals it
    for (double r : sweep.ratios) CHECK(r <= sweep.ratio_at(2) + 1e-15);
    CHECK(sweep.value == doctest::Approx(sweep.ratio_at(2)).epsilon(1e-15));
    CHECK(compute_A_cen(2).value == doctest::Approx(rho * rho).epsilon(1e-14));
    // late ratios settle near 1 (the asymptotic trend)
    CHECK(sweep.ratios.back() == doctest::Approx(1.0).epsilon(0.02));
    CHECK_THROWS_AS(compute_A_cen(1), std::invalid_argument);
}

TEST_CASE("derive_params") {
    const double rho = rate(PartitionClass::NoSingletons).rho;
    SUBCASE("Rademacher scales") {
        const DerivedParams d = derive_params(1.0, 1.0);
        CHECK(d.a_cen == doctest::Approx(rho * rho).epsilon(1e-14));
        CHECK(d.v_prime == doctest::Approx(1.0).epsilon(1e-14));  // A_cen / rho^2
        CHECK(d.b == doctest::Approx(1.0 / rho).epsilon(1e-14));
        CHECK(d.b == doctest::Approx(0.8724532496000724).epsilon(1e-12));
        // the derived parameters control the exact Rademacher cumulants
        const auto check = cumulant_condition_check(centered_cumulants_of(rademacher(), 16),
                                                    d.params());
        CHECK(check.ok);
        // and the resulting two-sided tail dominates the true Rademacher tail
        for (double x : {0.5, 1.0}) {
            CHECK(bernstein_tail(d.params(), x, true) >= 1.0);  // P(|X| >= x) = 1
        }
        CHECK(bernstein_tail(d.params(), 1.0, false) >= 0.5);  // P(X >= 1) = 1/2
    }
    SUBCASE("homogeneity in (v, L)") {
        const DerivedParams base = derive_params(1.0, 1.0);
        const DerivedParams scaled = derive_params(9.0, 3.0);
        CHECK(scaled.v_prime == doctest::Approx(9.0 * base.v_prime).epsilon(1e-14));
        CHECK(scaled.b == doctest::Approx(3.0 * base.b).epsilon(1e-14));
    }
    SUBCASE("validation against laws") {
        CHECK_FALSE(validate_moment_growth(rademacher(), 1.0, 1.0, 16).has_value());
        const auto violation = validate_moment_growth(exponential(1), 1.0, 1.0, 16);
        REQUIRE(violation.has_value());
        CHECK(*violation == 2);  // E X^2 = 2 already exceeds v = 1
        // the named third-moment witness: mu_3 = 6 > v L = 1
        CHECK(law_abs_moment(exponential(1), 3) == Value(Rat(6)));
        CHECK_THROWS_AS(derive_params_checked(exponential(1), 1.0, 1.0), std::invalid_argument);
        CHECK_NOTHROW(derive_params_checked(rademacher(), 1.0, 1.0));
        // Bernoulli(1/2) centered: mu_n^c = (1/2)^n = v L^(n-2) with v = 1/4, L = 1/2
        const DerivedParams d = derive_params(0.25, 0.5);
        const auto check = cumulant_condition_check(centered_cumulants_of(bernoulli(Rat(1, 2)), 16),
                                                    d.params());
        CHECK(check.ok);
    }
    CHECK_THROWS_AS(derive_params(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(derive_params(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("cumulant_condition_check") {
    SUBCASE("centered Exponential(1) meets v = b = 1 with equality at every order") {
        const CumulantSequence k = centered_exponential_cumulants(20);
        const auto result = cumulant_condition_check(k, BernsteinParams{1.0, 1.0});
        CHECK(result.ok);
        CHECK_FALSE(result.first_violation.has_value());
        for (int n = 2; n <= 20; ++n) {
            CHECK(boost::multiprecision::abs(k.cumulant(n)) == factorial(n - 1));
        }
    }
    SUBCASE("Gaussian passes with any positive b") {
        CumulantSequence k;
        k.values = {0, Rat(9, 4), 0, 0, 0, 0};
        CHECK(cumulant_condition_check(k, BernsteinParams{2.25, 0.001}).ok);
    }
    SUBCASE("Rademacher with b = 0.2 fails") {
        const CumulantSequence k = centered_cumulants_of(rademacher(), 6);
        const auto result = cumulant_condition_check(k, BernsteinParams{1.0, 0.2});
        CHECK_FALSE(result.ok);
        REQUIRE(result.first_violation.has_value());
        CHECK(*result.first_violation == 4);  // |kappa_4| = 2 > 3! * 0.04
        // the order-6 violation quoted alongside it: |kappa_6| = 16 > 120 * 0.2^4
        CHECK(boost::multiprecision::abs(k.cumulant(6)) == 16);
        CHECK(16.0 > 120.0 * std::pow(0.2, 4));
    }
    SUBCASE("non-centered input is rejected") {
        CumulantSequence k;
        k.values = {Rat(1), Rat(1)};
        CHECK_THROWS_AS(cumulant_condition_check(k, BernsteinParams{1.0, 1.0}),
                        std::invalid_argument);
    }
}
