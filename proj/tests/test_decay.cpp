#include <cmath>

#include "doctest.h"
#include "fdcmss/decay.hpp"

using fdcmss::DecaySpec;

TEST_CASE("exponential raw weight matches the worked example") {
    const auto spec = DecaySpec::exponential(0.999, 0.0);
    CHECK(spec.raw_weight(1001.0) == doctest::Approx(2.72).epsilon(0.004));
}

TEST_CASE("raw weight at the landmark") {
    CHECK(DecaySpec::exponential(0.5, 10.0).raw_weight(10.0) == 1.0);
    CHECK(DecaySpec::polynomial(2.0, 10.0).raw_weight(10.0) == 0.0);
}

TEST_CASE("raw weight ratio telescopes to lambda^dt") {
    const auto spec = DecaySpec::exponential(0.99, 0.0);
    const double ratio = spec.raw_weight(100.0) / spec.raw_weight(110.0);
    CHECK(ratio == doctest::Approx(0.904382).epsilon(1e-6));
}

TEST_CASE("raw weight rejects pre-landmark timestamps") {
    const auto spec = DecaySpec::exponential(0.9, 100.0);
    CHECK_THROWS_AS(spec.raw_weight(99.0), std::domain_error);
}

TEST_CASE("exponential raw weight overflows eventually") {
    const auto spec = DecaySpec::exponential(0.5, 0.0);
    CHECK_THROWS_AS(spec.raw_weight(2000.0), std::overflow_error);
}

TEST_CASE("normalized weight basics") {
    const auto poly = DecaySpec::polynomial(2.0, 0.0);
    CHECK(poly.normalized_weight(5.0, 10.0) == doctest::Approx(0.25));
    CHECK(poly.normalized_weight(7.0, 7.0) == 1.0);

    const auto exp = DecaySpec::exponential(0.999, 0.0);
    CHECK(exp.normalized_weight(1001.0, 1003.0) ==
          doctest::Approx(0.999 * 0.999).epsilon(1e-12));

    CHECK_THROWS_AS(exp.normalized_weight(10.0, 5.0), std::domain_error);
}

TEST_CASE("forward and backward exponential decay coincide") {
    const auto spec = DecaySpec::exponential(0.97, 3.0);
    for (double t_i = 3.0; t_i < 120.0; t_i += 7.3) {
        for (double dt = 0.0; dt < 80.0; dt += 11.1) {
            const double forward = spec.normalized_weight(t_i, t_i + dt);
            const double backward = std::pow(0.97, dt);
            CHECK(forward == doctest::Approx(backward).epsilon(1e-12));
        }
    }
}

TEST_CASE("polynomial decay is relative") {
    // items at a fixed fraction of the (L, t) window keep the same weight
    const auto spec = DecaySpec::polynomial(2.0, 50.0);
    for (double gamma : {0.1, 0.5, 0.9}) {
        const double reference =
            spec.normalized_weight(gamma * 100.0 + (1.0 - gamma) * 50.0, 100.0);
        for (double t = 200.0; t < 2000.0; t *= 1.7) {
            const double w =
                spec.normalized_weight(gamma * t + (1.0 - gamma) * 50.0, t);
            CHECK(w == doctest::Approx(reference).epsilon(1e-12));
        }
    }
}

TEST_CASE("decay-function conditions hold") {
    for (const auto& spec : {DecaySpec::exponential(0.95, 1.0),
                             DecaySpec::polynomial(2.0, 1.0)}) {
        double prev = 1.0;
        for (double t = 5.0; t < 100.0; t += 3.1) {
            const double w = spec.normalized_weight(5.0, t);
            CHECK(w <= 1.0);
            CHECK(w >= 0.0);
            CHECK(w <= prev);  // monotone non-increasing in t
            prev = w;
        }
        CHECK(spec.normalized_weight(5.0, 5.0) == 1.0);
    }
}

TEST_CASE("rebase factor") {
    const auto spec = DecaySpec::exponential(0.999, 0.0);
    CHECK(spec.rebase_factor(0.0) == 1.0);
    CHECK(spec.rebase_factor(1000.0) == doctest::Approx(0.3677).epsilon(1e-3));
    CHECK_THROWS_AS(DecaySpec::polynomial(2.0, 0.0).rebase_factor(10.0),
                    std::logic_error);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(DecaySpec::exponential(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(DecaySpec::exponential(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(DecaySpec::polynomial(0.0, 0.0), std::invalid_argument);
}
