#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cumbound/transforms.hpp"
#include "support/oracles.hpp"

using namespace cumbound;
namespace oracle = cumbound::testing;

namespace {

MomentSequence moments(std::vector<Rat> values) {
    MomentSequence m;
    m.values = std::move(values);
    return m;
}

CumulantSequence cumulants(std::vector<Rat> values) {
    CumulantSequence k;
    k.values = std::move(values);
    return k;
}

}  // namespace

TEST_CASE("moments_to_cumulants on the named sequences") {
    SUBCASE("Rademacher moments up to order 6") {
        const CumulantSequence k = moments_to_cumulants(moments({0, 1, 0, 1, 0, 1}));
        const std::vector<Rat> expected{0, 1, 0, -2, 0, 16};
        CHECK(k.values == expected);
        // direct partition-sum oracle at every order
        const std::vector<Rat> m{0, 1, 0, 1, 0, 1};
        for (int n = 1; n <= 6; ++n) {
            CHECK(k.cumulant(n) == oracle::partition_sum_cumulant(m, n));
        }
    }
    SUBCASE("constant random variable has vanishing higher cumulants") {
        const Rat c(3, 2);
        std::vector<Rat> m;
        Rat power = 1;
        for (int n = 1; n <= 8; ++n) {
            power *= c;
            m.push_back(power);
        }
        const CumulantSequence k = moments_to_cumulants(moments(m));
        CHECK(k.cumulant(1) == c);
        for (int n = 2; n <= 8; ++n) CHECK(k.cumulant(n) == 0);
    }
    SUBCASE("Poisson(1) moments give constant cumulants") {
        const CumulantSequence k = moments_to_cumulants(moments({1, 2, 5, 15}));
        CHECK(k.values == std::vector<Rat>{1, 1, 1, 1});
    }
    CHECK_THROWS_AS(moments_to_cumulants(MomentSequence{}), std::invalid_argument);
}

TEST_CASE("cumulants_to_moments on the named sequences") {
    SUBCASE("standard Gaussian via Wick pairings") {
        const MomentSequence m = cumulants_to_moments(cumulants({0, 1, 0, 0}));
        CHECK(m.values == std::vector<Rat>{0, 1, 0, 3});
        // 3 = number of pairings of {1..4}, counted by enumeration
        Int pairings = 0;
        for_each_partition(4, PartitionClass::EvenBlocks, [&](const SetPartition& p) {
            bool all_pairs = true;
            for (const auto& block : p.blocks) all_pairs = all_pairs && block.size() == 2;
            if (all_pairs) pairings += 1;
            return true;
        });
        CHECK(m.moment(4) == Rat(pairings));
        CHECK(m.mean_known_zero);
    }
    SUBCASE("constant cumulant sequence") {
        const Rat c(-5, 3);
        const MomentSequence m = cumulants_to_moments(cumulants({c, 0, 0, 0, 0}));
        Rat power = 1;
        for (int n = 1; n <= 5; ++n) {
            power *= c;
            CHECK(m.moment(n) == power);
        }
    }
    SUBCASE("all-ones cumulants recover the Poisson(1) moments") {
        const MomentSequence m = cumulants_to_moments(cumulants({1, 1, 1, 1}));
        CHECK(m.values == std::vector<Rat>{1, 2, 5, 15});
    }
    CHECK_THROWS_AS(cumulants_to_moments(CumulantSequence{}), std::invalid_argument);
}

TEST_CASE("roundtrips are exact on random rational sequences") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const std::vector<Rat> values = oracle::random_rational_sequence(12, seed);
        const MomentSequence m = moments(values);
        CHECK(cumulants_to_moments(moments_to_cumulants(m)).values == values);
        CumulantSequence k;
        k.values = values;
        CHECK(moments_to_cumulants(cumulants_to_moments(k)).values == values);
    }
}

TEST_CASE("recurrence equals the direct partition sum on random sequences") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const std::vector<Rat> values = oracle::random_rational_sequence(10, seed);
        const CumulantSequence k = moments_to_cumulants(moments(values));
        for (int n = 1; n <= 10; ++n) {
            CHECK(k.cumulant(n) == oracle::partition_sum_cumulant(values, n));
        }
    }
    // a couple of sequences against the fully ungrouped sum
    for (std::uint64_t seed : {500u, 501u}) {
        const std::vector<Rat> values = oracle::random_rational_sequence(8, seed);
        const CumulantSequence k = moments_to_cumulants(moments(values));
        for (int n = 1; n <= 8; ++n) {
            CHECK(k.cumulant(n) == oracle::partition_sum_cumulant_ungrouped(values, n));
        }
    }
}

TEST_CASE("cumulants are shift invariant for orders >= 2") {
    std::mt19937_64 engine(7);
    std::uniform_int_distribution<int> numerator(-6, 6);
    std::uniform_int_distribution<int> denominator(1, 9);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<Rat> values = oracle::random_rational_sequence(10, 900 + trial);
        const Rat shift(numerator(engine), denominator(engine));
        const CumulantSequence base = moments_to_cumulants(moments(values));
        const CumulantSequence shifted =
            moments_to_cumulants(shift_moments(moments(values), shift));
        CHECK(shifted.cumulant(1) == base.cumulant(1) + shift);
        for (int n = 2; n <= 10; ++n) CHECK(shifted.cumulant(n) == base.cumulant(n));
    }
}

TEST_CASE("center_moments") {
    SUBCASE("Bernoulli(1/2)") {
        const MomentSequence c = center_moments(moments({Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
        CHECK(c.values == std::vector<Rat>{0, Rat(1, 4), 0});
        CHECK(c.mean_known_zero);
    }
    SUBCASE("already centered input is unchanged") {
        const std::vector<Rat> values{0, Rat(2, 3), Rat(-1, 5), Rat(7, 9)};
        CHECK(center_moments(moments(values)).values == values);
    }
    SUBCASE("constants center to zero") {
        const Rat c(4, 7);
        CHECK(center_moments(moments({c, c * c, c * c * c})).values ==
              std::vector<Rat>{0, 0, 0});
    }
}

TEST_CASE("centering kills singleton blocks in the partition sum") {
    for (std::uint64_t seed = 40; seed < 48; ++seed) {
        const std::vector<Rat> values = oracle::random_rational_sequence(8, seed);
        const MomentSequence centered = center_moments(moments(values));
        const CumulantSequence k = moments_to_cumulants(centered);
        for (int n = 2; n <= 8; ++n) {
            CHECK(k.cumulant(n) ==
                  oracle::partition_sum_cumulant(centered.values, n, PartitionClass::NoSingletons));
        }
    }
}

TEST_CASE("validate enforces the declared invariants") {
    MomentSequence m = moments({Rat(1, 2), Rat(1, 3)});
    m.abs_values = {Value(Rat(1, 2)), Value(Rat(1, 3))};
    CHECK_NOTHROW(validate(m));

    MomentSequence bad_flag = moments({Rat(1, 2), Rat(1, 3)});
    bad_flag.symmetric = true;
    CHECK_THROWS_AS(validate(bad_flag), std::invalid_argument);

    MomentSequence bad_mean = moments({Rat(1, 2)});
    bad_mean.mean_known_zero = true;
    CHECK_THROWS_AS(validate(bad_mean), std::invalid_argument);

    MomentSequence bad_abs = moments({Rat(1)});
    bad_abs.abs_values = {Value(Rat(1, 2))};  // |m_1| = 1 > 1/2
    CHECK_THROWS_AS(validate(bad_abs), std::invalid_argument);

    MomentSequence bad_lyapunov = moments({0, 0});
    bad_lyapunov.abs_values = {Value(Rat(2)), Value(Rat(1))};  // mu_1^1 > mu_2^(1/2)
    CHECK_THROWS_AS(validate(bad_lyapunov), std::invalid_argument);
}

TEST_CASE("joint cumulants") {
    const DiscreteVectorLaw correlated = oracle::correlated_law();
    const MixedMomentTable table = correlated.mixed_moments(6);
    CHECK(table.moment({0, 0}) == 1);

    SUBCASE("order (1,1) is the covariance") {
        const Rat covariance = table.moment({1, 1}) - table.moment({1, 0}) * table.moment({0, 1});
        CHECK(joint_cumulant(table, MultiIndex{{1, 1}}) == covariance);
    }
    SUBCASE("univariate multi-index reduces to moments_to_cumulants") {
        DiscreteVectorLaw scalar;
        scalar.atoms = {{Rat(-1)}, {Rat(1, 2)}, {Rat(2)}};
        scalar.probabilities = {Rat(1, 4), Rat(1, 2), Rat(1, 4)};
        const MixedMomentTable univariate = scalar.mixed_moments(8);
        std::vector<Rat> raw;
        for (int n = 1; n <= 8; ++n) raw.push_back(univariate.moment({n}));
        const CumulantSequence k = moments_to_cumulants(moments(raw));
        for (int n = 1; n <= 8; ++n) {
            CHECK(joint_cumulant(univariate, MultiIndex{{n}}) == k.cumulant(n));
        }
    }
    SUBCASE("independent components have vanishing joint cumulants") {
        const MixedMomentTable independent = oracle::independent_pair_law().mixed_moments(5);
        CHECK(joint_cumulant(independent, MultiIndex{{1, 1}}) == 0);
        CHECK(joint_cumulant(independent, MultiIndex{{2, 1}}) == 0);
        CHECK(joint_cumulant(independent, MultiIndex{{2, 2}}) == 0);
        CHECK(joint_cumulant(independent, MultiIndex{{1, 3}}) == 0);
    }
    SUBCASE("multilinearity under scaling of one component") {
        const Rat c(3, 2);
        DiscreteVectorLaw scaled = correlated;
        for (auto& atom : scaled.atoms) atom[0] *= c;
        const MixedMomentTable scaled_table = scaled.mixed_moments(6);
        for (int a = 1; a <= 3; ++a) {
            for (int b = 1; a + b <= 5; ++b) {
                Rat factor = 1;
                for (int i = 0; i < a; ++i) factor *= c;
                CHECK(joint_cumulant(scaled_table, MultiIndex{{a, b}}) ==
                      factor * joint_cumulant(table, MultiIndex{{a, b}}));
            }
        }
    }
    SUBCASE("exchangeable slots give a symmetric cumulant") {
        const DiscreteVectorLaw sym = oracle::symmetric_pair_law();
        DiscreteVectorLaw swapped = sym;
        for (auto& atom : swapped.atoms) std::swap(atom[0], atom[1]);
        const MixedMomentTable t1 = sym.mixed_moments(5);
        const MixedMomentTable t2 = swapped.mixed_moments(5);
        CHECK(joint_cumulant(t1, MultiIndex{{2, 3}}) == joint_cumulant(t2, MultiIndex{{3, 2}}));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(joint_cumulant(table, MultiIndex{{4, 4}}), std::invalid_argument);
        CHECK_THROWS_AS(joint_cumulant(table, MultiIndex{{2, -1}}), std::invalid_argument);
        CHECK_THROWS_AS(joint_cumulant(table, MultiIndex{{0, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(joint_cumulant(table, MultiIndex{{2}}), std::invalid_argument);
        MixedMomentTable sparse;
        sparse.dimension = 2;
        sparse.max_total_degree = 2;
        sparse.moments[{0, 0}] = 1;
        CHECK_THROWS_AS(joint_cumulant(sparse, MultiIndex{{1, 1}}), std::out_of_range);
    }
}

TEST_CASE("joint_cumulant matches the independent oracles") {
    for (const DiscreteVectorLaw& law : {oracle::independent_pair_law(), oracle::correlated_law(),
                                         oracle::symmetric_pair_law()}) {
        const MixedMomentTable table = law.mixed_moments(5);
        for (int a = 0; a <= 3; ++a) {
            for (int b = a == 0 ? 1 : 0; a + b <= 5 && b <= 3; ++b) {
                const Rat via_library = joint_cumulant(table, MultiIndex{{a, b}});
                CHECK(via_library == oracle::joint_cumulant_rgs_oracle(table, MultiIndex{{a, b}}));
                CHECK(via_library == oracle::joint_cumulant_log_series_oracle(law, a, b));
            }
        }
    }
}

TEST_CASE("discrete vector law validation") {
    DiscreteVectorLaw bad;
    bad.atoms = {{Rat(1)}, {Rat(2)}};
    bad.probabilities = {Rat(1, 2), Rat(1, 3)};
    CHECK_THROWS_AS(bad.check(), std::invalid_argument);
    bad.probabilities = {Rat(1, 2), Rat(1, 2)};
    CHECK_NOTHROW(bad.check());
}
