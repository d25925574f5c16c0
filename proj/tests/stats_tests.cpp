#include "swcol/stats.hpp"

#include <doctest.h>

#include <cmath>

using namespace swcol;

TEST_SUITE("stats") {

TEST_CASE("normal quantile") {
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-9));
    CHECK(normal_quantile(0.995) == doctest::Approx(2.5758293035489004).epsilon(1e-9));
    CHECK(normal_quantile(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-9));
    CHECK_THROWS_AS(normal_quantile(0.0), std::invalid_argument);
    CHECK_THROWS_AS(normal_quantile(1.0), std::invalid_argument);
}

TEST_CASE("wilson interval boundaries") {
    for (std::uint64_t n : {1ULL, 10ULL, 1000ULL}) {
        const Interval zero = wilson_interval(0, n);
        CHECK(zero.lo == 0.0);
        CHECK(zero.hi > 0.0);
        const Interval all = wilson_interval(n, n);
        CHECK(all.hi == 1.0);
        CHECK(all.lo < 1.0);
    }
}

TEST_CASE("wilson interval closed-form value") {
    // 50/100 at 95%: 0.5 +- 0.0961660.. after the Wilson shift, i.e.
    // (0.4038, 0.5962) to 4 decimals.
    const Interval ci = wilson_interval(50, 100);
    CHECK(ci.lo == doctest::Approx(0.4038).epsilon(5e-4));
    CHECK(ci.hi == doctest::Approx(0.5962).epsilon(5e-4));
    CHECK(ci.lo == doctest::Approx(1.0 - ci.hi).epsilon(1e-12)); // symmetry at p=1/2
}

TEST_CASE("wilson interval argument checks") {
    CHECK_THROWS_AS(wilson_interval(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(wilson_interval(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(wilson_interval(1, 2, 1.0), std::invalid_argument);
}

TEST_CASE("wilson interval always brackets the point estimate") {
    for (std::uint64_t n : {1ULL, 7ULL, 100ULL, 12345ULL}) {
        for (std::uint64_t s = 0; s <= n; s += (n / 7) + 1) {
            const Interval ci = wilson_interval(s, n);
            const double phat = static_cast<double>(s) / static_cast<double>(n);
            CHECK(ci.lo <= phat);
            CHECK(ci.hi >= phat);
            CHECK(ci.lo >= 0.0);
            CHECK(ci.hi <= 1.0);
        }
    }
}

TEST_CASE("mean and median") {
    const std::uint64_t flat[] = {16, 16, 16};
    CHECK(mean(flat) == 16.0);
    CHECK(median(flat) == 16.0);

    const std::uint64_t odd[] = {3, 1, 2};
    CHECK(mean(odd) == 2.0);
    CHECK(median(odd) == 2.0);

    const std::uint64_t even[] = {4, 1, 3, 2};
    CHECK(median(even) == 2.5);

    CHECK_THROWS_AS(median(std::span<const std::uint64_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(mean(std::span<const std::uint64_t>{}), std::invalid_argument);
}

} // TEST_SUITE
