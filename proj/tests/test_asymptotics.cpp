#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cumbound/asymptotics.hpp"
#include "cumbound/combinatorics.hpp"
#include "cumbound/transforms.hpp"

#include <cmath>

using namespace cumbound;

TEST_CASE("rate constants") {
    const RateConstant raw = rate(PartitionClass::All);
    CHECK(std::abs(raw.rho - 0.6931471805599453) < 1e-14);

    const RateConstant cen = rate(PartitionClass::NoSingletons);
    CHECK(std::abs(std::exp(cen.rho) - 2.0 - cen.rho) < 1e-14);
    CHECK(cen.rho == doctest::Approx(1.1461932206205825).epsilon(1e-14));
    // the bracket used by the safeguarded Newton iteration
    CHECK(std::exp(1.0) - 2.0 - 1.0 < 0.0);
    CHECK(std::exp(1.5) - 2.0 - 1.5 > 0.0);

    const RateConstant sym = rate(PartitionClass::EvenBlocks);
    CHECK(sym.rho == doctest::Approx(std::log(2.0 + std::sqrt(3.0))).epsilon(1e-15));
    CHECK(sym.rho == doctest::Approx(std::acosh(2.0)).epsilon(1e-15));
    CHECK(std::abs(std::cosh(sym.rho) - 2.0) < 1e-14);

    // rounded displays
    CHECK(std::round(raw.rho * 1000.0) / 1000.0 == doctest::Approx(0.693));
    CHECK(std::round(cen.rho * 1000.0) / 1000.0 == doctest::Approx(1.146));
    CHECK(std::round(sym.rho * 1000.0) / 1000.0 == doctest::Approx(1.317));
}

TEST_CASE("asymptotic_coefficient") {
    const double rho_cen = rate(PartitionClass::NoSingletons).rho;
    CHECK(asymptotic_coefficient(PartitionClass::NoSingletons, 2) ==
          doctest::Approx(1.0 / (rho_cen * rho_cen)).epsilon(1e-12));
    CHECK(asymptotic_coefficient(PartitionClass::NoSingletons, 2) == doctest::Approx(0.761).epsilon(1e-3));
    CHECK(asymptotic_coefficient(PartitionClass::EvenBlocks, 7) == 0.0);
    CHECK(asymptotic_coefficient(PartitionClass::All, 1) ==
          doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(asymptotic_coefficient(PartitionClass::NoSingletons, 1),
                    std::invalid_argument);
}

TEST_CASE("ratio diagnostics converge to 1") {
    SUBCASE("small-order spot values") {
        const auto all = ratio_diagnostic(PartitionClass::All, 2);
        const double ln2 = std::log(2.0);
        CHECK(all.front().second == doctest::Approx(2.0 * ln2 * ln2).epsilon(1e-12));
    }
    SUBCASE("deviation shrinks and the order-40 values are tight") {
        for (PartitionClass cls :
             {PartitionClass::All, PartitionClass::NoSingletons, PartitionClass::EvenBlocks}) {
            const auto diag = ratio_diagnostic(cls, 40);
            const double early = std::abs(diag[2].second - 1.0);
            const double late = std::abs(diag.back().second - 1.0);
            CHECK(diag.back().first == 40);
            CHECK(late < early);
            CHECK(late < (cls == PartitionClass::NoSingletons ? 0.05 : 0.02));
        }
    }
    SUBCASE("within 10% for every order past 25") {
        for (PartitionClass cls :
             {PartitionClass::All, PartitionClass::NoSingletons, PartitionClass::EvenBlocks}) {
            for (const auto& [n, ratio] : ratio_diagnostic(cls, 40)) {
                if (n < 25) continue;
                CHECK(std::abs(ratio - 1.0) < 0.10);
            }
        }
    }
    SUBCASE("frozen order-40 golden values") {
        CHECK(ratio_diagnostic(PartitionClass::All, 40).back().second ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(ratio_diagnostic(PartitionClass::NoSingletons, 40).back().second ==
              doctest::Approx(1.0000000058121186).epsilon(1e-9));
        CHECK(ratio_diagnostic(PartitionClass::EvenBlocks, 40).back().second ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(ratio_diagnostic(PartitionClass::All, 201), std::invalid_argument);
}

TEST_CASE("series utilities") {
    SUBCASE("reciprocal times the input telescopes to 1") {
        const std::vector<Rat> u{Rat(2), Rat(-1), Rat(1, 3), Rat(0), Rat(5, 7)};
        const std::vector<Rat> r = series_reciprocal(u);
        for (std::size_t n = 0; n < u.size(); ++n) {
            Rat conv = 0;
            for (std::size_t k = 0; k <= n; ++k) conv += u[k] * r[n - k];
            CHECK(conv == (n == 0 ? Rat(1) : Rat(0)));
        }
    }
    SUBCASE("-log(1 - x) is the harmonic series") {
        std::vector<Rat> u(8, Rat(0));
        u[0] = 1;
        u[1] = -1;
        const std::vector<Rat> l = series_neg_log(u);
        CHECK(l[0] == 0);
        for (std::size_t n = 1; n < l.size(); ++n) CHECK(l[n] == Rat(1, static_cast<long>(n)));
    }
    CHECK_THROWS_AS(series_reciprocal({Rat(0), Rat(1)}), std::invalid_argument);
    CHECK_THROWS_AS(series_neg_log({Rat(2)}), std::invalid_argument);
}

TEST_CASE("EGF coefficients match the DP masses exactly") {
    SUBCASE("the centered row of the explicit table") {
        const std::vector<Rat> c = egf_coefficients(PartitionClass::NoSingletons, 9);
        const Int expected[] = {1, 1, 4, 11, 56, 267, 1730, 11643};
        for (int n = 2; n <= 9; ++n) {
            CHECK(c[static_cast<std::size_t>(n)] * Rat(factorial(n)) == Rat(expected[n - 2]));
        }
    }
    SUBCASE("constant terms") {
        for (PartitionClass cls :
             {PartitionClass::All, PartitionClass::NoSingletons, PartitionClass::EvenBlocks}) {
            CHECK(egf_coefficients(cls, 4)[0] == 0);
        }
    }
    SUBCASE("odd symmetric orders vanish") {
        const std::vector<Rat> c = egf_coefficients(PartitionClass::EvenBlocks, 15);
        for (int n = 1; n <= 15; n += 2) CHECK(c[static_cast<std::size_t>(n)] == 0);
    }
    SUBCASE("n! c_n equals coefficient_mass for every class up to 40") {
        for (PartitionClass cls :
             {PartitionClass::All, PartitionClass::NoSingletons, PartitionClass::EvenBlocks}) {
            const std::vector<Rat> c = egf_coefficients(cls, 40);
            for (int n = 1; n <= 40; ++n) {
                CHECK(c[static_cast<std::size_t>(n)] * Rat(factorial(n)) ==
                      Rat(coefficient_mass(cls, n)));
            }
        }
    }
    SUBCASE("order cap") {
        CHECK_NOTHROW(egf_coefficients(PartitionClass::EvenBlocks, 64));
        CHECK_THROWS_AS(egf_coefficients(PartitionClass::EvenBlocks, 65), std::invalid_argument);
    }
}

TEST_CASE("the three table provenances agree wherever computed") {
    for (PartitionClass cls :
         {PartitionClass::All, PartitionClass::NoSingletons, PartitionClass::EvenBlocks}) {
        const CoefficientTable recurrence = coefficient_table(cls, 24);
        const CoefficientTable egf = egf_coefficient_table(cls, 24);
        const CoefficientTable brute = coefficient_table_brute_force(cls, 10);
        CHECK(recurrence.provenance == Provenance::Recurrence);
        CHECK(egf.provenance == Provenance::EgfSeries);
        CHECK(brute.provenance == Provenance::BruteForce);
        for (int n = 1; n <= 24; ++n) CHECK(recurrence.at(n) == egf.at(n));
        for (int n = 1; n <= 10; ++n) CHECK(recurrence.at(n) == brute.at(n));
    }
}

TEST_CASE("cgf_radius_lower_bound") {
    const double rho_cen = rate(PartitionClass::NoSingletons).rho;
    CHECK(cgf_radius_lower_bound(rho_cen, 1.0) == doctest::Approx(1.1461932206205825));
    CHECK(std::isinf(cgf_radius_lower_bound(0.5, 0.0)));
    CHECK_THROWS_AS(cgf_radius_lower_bound(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(cgf_radius_lower_bound(1.0, -1.0), std::invalid_argument);
    // every rate beats the crude 1/e radius
    for (PartitionClass cls :
         {PartitionClass::All, PartitionClass::NoSingletons, PartitionClass::EvenBlocks}) {
        CHECK(1.0 / std::exp(1.0) < rate(cls).rho);
    }
}

TEST_CASE("efficiency gap") {
    const EfficiencyGap gap = efficiency_gap();
    CHECK(gap.eta == doctest::Approx(0.838).epsilon(2e-3));
    CHECK(gap.eta > 0.837);
    CHECK(gap.eta < 0.839);
    CHECK(gap.pi_half == doctest::Approx(std::acos(-1.0) / 2.0));
    CHECK(rate(PartitionClass::EvenBlocks).rho / rate(PartitionClass::NoSingletons).rho > 1.0);
}

TEST_CASE("Rademacher cumulant growth rate approaches pi/2 from above") {
    const double pi_half = std::acos(-1.0) / 2.0;
    const double r40 = rademacher_rate(40);
    CHECK(r40 == doctest::Approx(1.6929558284748223).epsilon(1e-12));
    const double r80 = rademacher_rate(80);
    CHECK(r80 == doctest::Approx(1.6449232037315142).epsilon(1e-12));
    CHECK(r40 > pi_half);
    CHECK(r80 > pi_half);
    CHECK(std::abs(r80 - pi_half) < std::abs(r40 - pi_half));
    // the polynomial factor m^(1/2m) keeps the plain rate ~7.8% high at 2m=40;
    // by 2m=80 it is inside 5%
    CHECK(std::abs(r40 - pi_half) / pi_half < 0.08);
    CHECK(std::abs(r80 - pi_half) / pi_half < 0.05);
    CHECK_THROWS_AS(rademacher_rate(7), std::invalid_argument);
}

TEST_CASE("Rademacher cumulants follow the tangent-number asymptotic law") {
    // |kappa_2m| ~ 2 (2m-1)! (2/pi)^(2m), checked at 2m = 40.
    MomentSequence m;
    for (int n = 1; n <= 40; ++n) m.values.emplace_back(n % 2 == 0 ? 1 : 0);
    const CumulantSequence k = moments_to_cumulants(m);
    const long double exact = std::fabs(to_long_double(k.cumulant(40)));
    const long double pi = std::acos(-1.0L);
    const long double asym =
        2.0L * to_long_double(factorial(39)) * std::pow(2.0L / pi, 40.0L);
    CHECK(static_cast<double>(exact / asym) == doctest::Approx(1.0).epsilon(0.05));
}
