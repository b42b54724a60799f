#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cantor/correlation.hpp"
#include "cantor/digit_core.hpp"
#include "cantor/errors.hpp"
#include "oracles.hpp"

using namespace cantor;

TEST_CASE("additive energy: pinned values and the Sidon characterization") {
    auto e02 = additive_energy({BigInt(0), BigInt(2)});
    CHECK(e02.energy == 6);
    CHECK(oracle::energy_quadruples({0, 2}) == 6);

    auto e013 = additive_energy({BigInt(0), BigInt(1), BigInt(3)});
    CHECK(e013.energy == 15);
    CHECK(e013.sidon);

    auto single = additive_energy({BigInt(42)});
    CHECK(single.energy == 1);
    CHECK(single.set_size == 1);

    // known Sidon sets and a non-Sidon control
    CHECK(additive_energy({BigInt(0), BigInt(1), BigInt(4), BigInt(9), BigInt(11)}).sidon);
    CHECK_FALSE(additive_energy({BigInt(0), BigInt(1), BigInt(2)}).sidon);
}

TEST_CASE("energy equals the quadruple count on random sets") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int64_t> a;
        std::vector<BigInt> big;
        int n = 3 + static_cast<int>(rng() % 18);
        for (int i = 0; i < n; ++i) a.push_back(static_cast<int64_t>(rng() % 200));
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        for (int64_t v : a) big.push_back(v);
        auto rep = additive_energy(big);
        CHECK(rep.energy == oracle::energy_quadruples(a));
        CHECK(rep.energy >= BigInt(rep.set_size) * rep.set_size);
        CHECK(rep.energy <= BigInt(rep.set_size) * rep.set_size * rep.set_size);
    }
}

TEST_CASE("truncation energy and the carry-free product law") {
    auto c = CantorSet::create(7, {0, 1, 3});
    auto rep2 = cantor_truncation_energy(c, 2);
    CHECK(rep2.carry_free);
    CHECK(rep2.energy == 225);
    CHECK(rep2.digit_power == 225);
    CHECK(rep2.product_identity_holds);
    CHECK(rep2.directly_computed);
    // the sumset-cardinality power is a different number; the enumeration
    // arbitrates between the two candidate formulas
    CHECK(rep2.sumset_power == 36);

    auto rep1 = cantor_truncation_energy(c, 1);
    CHECK(rep1.energy == additive_energy({BigInt(0), BigInt(1), BigInt(3)}).energy);

    for (int levels : {1, 2, 3}) {
        auto rep = cantor_truncation_energy(c, levels);
        auto members = oracle::members_below(7, {0, 1, 3}, static_cast<int64_t>(std::pow(7, levels)));
        CHECK(rep.energy == oracle::energy_quadruples(members));
    }

    // carries break the product law: 2*max(D) >= b
    auto tight = cantor_truncation_energy(CantorSet::create(3, {0, 2}), 2);
    CHECK_FALSE(tight.carry_free);
    CHECK(tight.directly_computed);
    CHECK(tight.energy == oracle::energy_quadruples(oracle::members_below(3, {0, 2}, 9)));
}

TEST_CASE("carry-free sumsets factor digit by digit") {
    auto c = CantorSet::create(7, {0, 1, 3});
    // C_s + C_s equals the sumset-digit Cantor set below 7^s, exhaustively
    for (int s = 1; s <= 3; ++s) {
        auto limit = static_cast<int64_t>(std::pow(7, s));
        auto members = oracle::members_below(7, {0, 1, 3}, limit);
        std::vector<int64_t> sums;
        for (int64_t a : members)
            for (int64_t b : members) sums.push_back(a + b);
        std::sort(sums.begin(), sums.end());
        sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
        auto expected = oracle::members_below(7, {0, 1, 2, 3, 4, 6}, 2 * limit);  // digits D+D
        // restrict the expectation to values reachable with s digit places
        std::vector<int64_t> reachable;
        for (int64_t v : expected)
            if (v < limit) reachable.push_back(v);
        // sums can exceed the truncation only through the top digit
        std::vector<int64_t> low;
        for (int64_t v : sums)
            if (v < limit) low.push_back(v);
        CHECK(low == reachable);
    }
}

TEST_CASE("pair correlation statistic") {
    // equally spaced points never come closer than 1/N
    std::vector<double> spaced;
    const int64_t n = 128;
    for (int64_t i = 0; i < n; ++i) spaced.push_back(static_cast<double>(i) / n);
    CHECK(pair_correlation(spaced, 0.9).r2 == 0.0);

    // one duplicated point among distinct others: one coincident ordered pair
    std::vector<double> dup = spaced;
    dup[1] = dup[0];
    CHECK(pair_correlation(dup, 0.5).r2 == doctest::Approx(2.0 / n));

    // seeded uniform draws approach the Poissonian value 2s
    std::vector<double> uniform;
    for (uint64_t i = 0; i < 10000; ++i) uniform.push_back(seeded_unit_draw(999, i));
    auto rep = pair_correlation(uniform, 0.5);
    CHECK(std::abs(rep.r2 - 1.0) < 0.1);
    CHECK(rep.target == 1.0);
}

TEST_CASE("sweep equals the quadratic scan") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 8; ++trial) {
        int64_t n = 20 + static_cast<int64_t>(rng() % 481);
        std::vector<double> thetas;
        for (int64_t i = 0; i < n; ++i) thetas.push_back((rng() >> 11) * 0x1.0p-53);
        if (trial % 3 == 0) thetas[n - 1] = thetas[0];
        for (double s : {0.1, 0.5, 0.9}) {
            CHECK(pair_correlation(thetas, s).r2 == oracle::pair_correlation_brute(thetas, s));
        }
    }
}

TEST_CASE("dilated set pair correlation with diagnostics") {
    auto c = CantorSet::create(7, {0, 1, 3});
    auto rep = cantor_pair_correlation(c, 0.7548776662466927, 0.5, 2048);
    CHECK(rep.hypotheses_hold);
    CHECK(rep.epsilon == doctest::Approx(3.0 - std::log(15.0) / std::log(3.0)));
    CHECK(rep.exceptional_dimension_bound ==
          doctest::Approx(1.0 - rep.epsilon / (3.0 + std::log(7.0) / std::log(3.0))));
    CHECK(rep.exceptional_dimension_bound == doctest::Approx(0.89).epsilon(0.01));
    CHECK(rep.correlation.r2 >= 0.0);

    // alpha = 0 collapses every phase: R2 = N - 1
    auto degenerate = cantor_pair_correlation(c, 0.0, 0.5, 256);
    CHECK(degenerate.correlation.r2 == doctest::Approx(255.0));

    // hypothesis diagnostics flag digit sets reaching past b/2
    auto flagged = cantor_pair_correlation(CantorSet::create(5, {0, 4}), 0.33, 0.5, 256);
    CHECK_FALSE(flagged.hypotheses_hold);
}

TEST_CASE("dilated phases match direct long-double evaluation") {
    auto c = CantorSet::create(7, {0, 1, 3});
    const double alpha = 0.41421356237309515;
    auto members = oracle::members_below(7, {0, 1, 3}, 7 * 7 * 7);
    // recompute R2 from raw values and compare to the library's exact-dyadic path
    std::vector<double> thetas;
    for (int64_t m : members) {
        long double t = static_cast<long double>(alpha) * m;
        thetas.push_back(static_cast<double>(t - std::floor(t)));
    }
    auto direct = pair_correlation(thetas, 0.5);
    auto lib = cantor_pair_correlation(c, alpha, 0.5, static_cast<int64_t>(members.size()));
    CHECK(lib.correlation.r2 == doctest::Approx(direct.r2).epsilon(1e-9));
}

TEST_CASE("seeded draws are deterministic and well spread") {
    CHECK(seeded_unit_draw(1, 0) == seeded_unit_draw(1, 0));
    CHECK(seeded_unit_draw(1, 0) != seeded_unit_draw(1, 1));
    CHECK(seeded_unit_draw(1, 0) != seeded_unit_draw(2, 0));
    double mean = 0.0;
    for (uint64_t i = 0; i < 4096; ++i) {
        double v = seeded_unit_draw(7, i);
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
        mean += v;
    }
    CHECK(std::abs(mean / 4096.0 - 0.5) < 0.02);
}
