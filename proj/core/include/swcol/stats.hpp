#pragma once

#include <cstdint>
#include <span>

namespace swcol {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Standard normal quantile (inverse CDF), Acklam's rational approximation
/// refined with one Halley step; absolute error well below 1e-9.
double normal_quantile(double p);

/// Wilson score interval for a binomial proportion at the given two-sided
/// confidence level. successes <= trials, trials >= 1 (else throws).
/// Boundary cases: (0, n) has lo = 0 and (n, n) has hi = 1.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence = 0.95);

double mean(std::span<const std::uint64_t> values);

/// Median with the usual midpoint convention for even counts. Values need
/// not be sorted; the input is copied. Throws on empty input.
double median(std::span<const std::uint64_t> values);

} // namespace swcol
