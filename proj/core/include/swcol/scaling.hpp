#pragma once

#include "swcol/experiment.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace swcol {

struct CurveLabel {
    LatticeFamily family = LatticeFamily::Square;
    std::uint32_t L = 0;
    std::uint64_t N = 0;

    friend bool operator==(const CurveLabel&, const CurveLabel&) = default;
};

struct CurvePoint {
    double x = 0.0;       // p, or p * N^a after rescaling
    double y = 0.0;       // colourable fraction
    double ci_half = 0.0; // 95% half-width
};

/// One per-(family, L) fraction-vs-p curve; x strictly increasing.
struct Curve {
    CurveLabel label;
    std::vector<CurvePoint> points;
};

struct NoOverlapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Groups summary rows into curves (optionally one family only), points
/// sorted by p. Rows with no decided trials are dropped; duplicate p within
/// one curve is rejected.
std::vector<Curve> curves_from_summary(std::span<const SummaryRow> rows,
                                       std::optional<LatticeFamily> family = std::nullopt);

/// x -> p * N^exponent; point order and y values untouched.
Curve rescale(const Curve& curve, double exponent);

/// Collapse quality after rescaling with the given exponent: for each curve,
/// the remaining curves' points are pooled and interpolated piecewise-
/// linearly in log x, and the curve's points inside the pooled x-range
/// contribute their squared vertical deviation, weighted by inverse squared
/// confidence half-widths. The result is the weighted mean squared deviation
/// over all contributing points: 0 iff the curves coincide on the overlap.
/// Points with nonpositive rescaled x are outside the log-x domain and are
/// ignored. Throws NoOverlapError when no point of any curve lies inside the
/// others' pooled range, and std::invalid_argument for fewer than 2 curves.
double collapse_metric(std::span<const Curve> curves, double exponent);

struct ExponentScan {
    double best_a = 0.0;
    double best_metric = 0.0;
    /// (a, metric) over the whole grid; metric is +inf where the rescaled
    /// supports do not overlap.
    std::vector<std::pair<double, double>> points;
};

/// Grid search a = a_min, a_min+step, ..., a_max. Ties break toward smaller
/// |a|, then toward the smaller signed a. Grid points without overlap are
/// skipped; if every point is infeasible the NoOverlapError propagates.
ExponentScan find_best_exponent(std::span<const Curve> curves, double a_min, double a_max, double step);

} // namespace swcol
