#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "fdcmss/hash.hpp"
#include "fdcmss/space_saving.hpp"

using fdcmss::SpaceSavingSummary;

TEST_CASE("first insertion occupies a free counter") {
    SpaceSavingSummary s(2);
    s.update(6, 2.72);
    const auto c = s.max_counter();
    REQUIRE(c.has_value());
    CHECK(c->item == 6);
    CHECK(c->count == doctest::Approx(2.72));
}

TEST_CASE("monitored item is incremented in place") {
    SpaceSavingSummary s(2);
    s.update(6, 98.22);
    s.update(11, 36.76);
    s.update(6, 2.72);
    CHECK(s.estimate(6) == doctest::Approx(100.94));
    CHECK(s.estimate(11) == doctest::Approx(36.76));
}

TEST_CASE("full summary evicts the minimum counter") {
    SpaceSavingSummary s(2);
    s.update(2, 555.33);
    s.update(4, 537.23);
    s.update(5, 2.72);
    CHECK(s.estimate(2) == doctest::Approx(555.33));
    CHECK(s.estimate(5) == doctest::Approx(539.95));
    // item 4 was evicted; its estimate falls back to the cell minimum
    CHECK(s.estimate(4) == doctest::Approx(539.95));
}

TEST_CASE("min count") {
    SpaceSavingSummary s(2);
    CHECK(s.min_count() == 0.0);
    s.update(2, 555.33);
    CHECK(s.min_count() == 0.0);  // one of two occupied
    s.update(4, 537.23);
    CHECK(s.min_count() == doctest::Approx(537.23));
}

TEST_CASE("max counter and tie break") {
    SpaceSavingSummary s(2);
    CHECK_FALSE(s.max_counter().has_value());
    s.update(9, 5.0);
    CHECK(s.max_counter()->item == 9);
    s.update(7, 5.0);
    CHECK(s.max_counter()->item == 7);  // exact tie prefers the lower id
}

TEST_CASE("estimate of an unseen item on an empty summary is zero") {
    SpaceSavingSummary s(3);
    CHECK(s.estimate(42) == 0.0);
}

TEST_CASE("rejects bad weights") {
    SpaceSavingSummary s(2);
    CHECK_THROWS_AS(s.update(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(s.update(1, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(s.update(1, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSavingSummary(1), std::invalid_argument);
}

// Weighted forms of the summary inequalities, checked against a brute-force
// per-item accumulator over randomized streams.
TEST_CASE("weighted summary inequalities hold on random streams") {
    std::uint64_t rng = 0xfeedULL;
    for (int round = 0; round < 400; ++round) {
        const std::size_t k = 2 + fdcmss::splitmix64(rng) % 7;
        const std::uint32_t universe = 2 + fdcmss::splitmix64(rng) % 40;
        SpaceSavingSummary s(k);
        std::map<std::uint32_t, double> exact;
        double offered = 0.0;
        const int updates = 1 + static_cast<int>(fdcmss::splitmix64(rng) % 300);
        for (int u = 0; u < updates; ++u) {
            const auto item =
                static_cast<std::uint32_t>(fdcmss::splitmix64(rng) % universe);
            const double w =
                0.001 + static_cast<double>(fdcmss::splitmix64(rng) % 10000) / 100.0;
            s.update(item, w);
            exact[item] += w;
            offered += w;
        }

        double sum = 0.0;
        for (const auto& c : s.counters()) sum += c.count;
        CHECK(sum == doctest::Approx(offered).epsilon(1e-9));           // conservation
        CHECK(s.min_count() <= offered / static_cast<double>(k) + 1e-9); // min bound

        for (std::uint32_t v = 0; v < universe; ++v) {
            const double truth = exact.contains(v) ? exact[v] : 0.0;
            const double est = s.estimate(v);
            CHECK(est >= truth - 1e-9 * offered);            // overestimation
            CHECK(est - truth <= s.min_count() + 1e-9 * offered);  // error bound
        }
    }
}

TEST_CASE("scaling preserves relative structure") {
    SpaceSavingSummary s(2);
    s.update(1, 10.0);
    s.update(2, 4.0);
    s.scale(0.5);
    CHECK(s.estimate(1) == doctest::Approx(5.0));
    CHECK(s.estimate(2) == doctest::Approx(2.0));
    CHECK(s.offered_total() == doctest::Approx(7.0));
}
