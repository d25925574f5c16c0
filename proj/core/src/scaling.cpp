#include "swcol/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

namespace swcol {

std::vector<Curve> curves_from_summary(std::span<const SummaryRow> rows, std::optional<LatticeFamily> family) {
    std::map<std::pair<int, std::uint32_t>, Curve> grouped;
    for (const auto& row : rows) {
        if (family && row.family != *family)
            continue;
        if (std::isnan(row.fraction))
            continue; // no decided trials in this cell
        auto& curve = grouped[{static_cast<int>(row.family), row.L}];
        curve.label = {row.family, row.L, row.N};
        curve.points.push_back({row.p, row.fraction, (row.ci_hi - row.ci_lo) / 2.0});
    }
    std::vector<Curve> curves;
    curves.reserve(grouped.size());
    for (auto& [key, curve] : grouped) {
        std::sort(curve.points.begin(), curve.points.end(),
                  [](const CurvePoint& a, const CurvePoint& b) { return a.x < b.x; });
        for (std::size_t i = 0; i + 1 < curve.points.size(); ++i)
            if (curve.points[i].x == curve.points[i + 1].x)
                throw std::runtime_error("curves: duplicate p value in curve " +
                                         std::string(family_name(curve.label.family)) + " L=" +
                                         std::to_string(curve.label.L));
        curves.push_back(std::move(curve));
    }
    return curves;
}

Curve rescale(const Curve& curve, double exponent) {
    if (curve.label.N == 0)
        throw std::invalid_argument("rescale: curve has N = 0");
    Curve out = curve;
    const double factor = std::pow(static_cast<double>(curve.label.N), exponent);
    for (auto& point : out.points)
        point.x *= factor;
    return out;
}

namespace {

struct LogPoint {
    double lx; // log x
    double y;
    double w;  // inverse squared half-width
};

constexpr double min_half_width = 1e-6; // caps the weight of zero-width points

double weight_of(double ci_half) {
    const double h = std::max(ci_half, min_half_width);
    return 1.0 / (h * h);
}

// Piecewise-linear interpolation over knots sorted by lx (strictly
// increasing); lx must lie within [front.lx, back.lx].
double interpolate(const std::vector<LogPoint>& knots, double lx) {
    auto it = std::lower_bound(knots.begin(), knots.end(), lx,
                               [](const LogPoint& k, double value) { return k.lx < value; });
    if (it == knots.end())
        return knots.back().y;
    if (it->lx == lx || it == knots.begin())
        return it->y;
    const auto prev = it - 1;
    const double t = (lx - prev->lx) / (it->lx - prev->lx);
    return prev->y + t * (it->y - prev->y);
}

// Sorts by lx and merges exact ties into one knot (weighted mean), so the
// interpolant is a function even when different curves share an x value.
std::vector<LogPoint> make_knots(std::vector<LogPoint> points) {
    std::sort(points.begin(), points.end(), [](const LogPoint& a, const LogPoint& b) { return a.lx < b.lx; });
    std::vector<LogPoint> knots;
    knots.reserve(points.size());
    for (const auto& point : points) {
        if (!knots.empty() && knots.back().lx == point.lx) {
            LogPoint& last = knots.back();
            const double w = last.w + point.w;
            last.y = (last.y * last.w + point.y * point.w) / w;
            last.w = w;
        } else {
            knots.push_back(point);
        }
    }
    return knots;
}

} // namespace

double collapse_metric(std::span<const Curve> curves, double exponent) {
    if (curves.size() < 2)
        throw std::invalid_argument("collapse_metric: need at least 2 curves");

    std::vector<std::vector<LogPoint>> rescaled(curves.size());
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const Curve r = rescale(curves[i], exponent);
        for (const auto& point : r.points)
            if (point.x > 0.0)
                rescaled[i].push_back({std::log(point.x), point.y, weight_of(point.ci_half)});
    }

    double weighted_sq = 0.0;
    double weight_sum = 0.0;
    std::size_t used = 0;

    for (std::size_t i = 0; i < curves.size(); ++i) {
        std::vector<LogPoint> pooled;
        for (std::size_t j = 0; j < curves.size(); ++j)
            if (j != i)
                pooled.insert(pooled.end(), rescaled[j].begin(), rescaled[j].end());
        if (pooled.empty())
            continue;
        const auto knots = make_knots(std::move(pooled));
        const double lo = knots.front().lx;
        const double hi = knots.back().lx;
        for (const auto& point : rescaled[i]) {
            if (point.lx < lo || point.lx > hi)
                continue;
            const double dy = point.y - interpolate(knots, point.lx);
            weighted_sq += point.w * dy * dy;
            weight_sum += point.w;
            ++used;
        }
    }

    if (used == 0)
        throw NoOverlapError("collapse_metric: rescaled supports do not overlap");
    return weighted_sq / weight_sum;
}

ExponentScan find_best_exponent(std::span<const Curve> curves, double a_min, double a_max, double step) {
    if (!(step > 0.0))
        throw std::invalid_argument("find_best_exponent: step must be > 0");
    if (a_max < a_min)
        throw std::invalid_argument("find_best_exponent: a_max < a_min");

    constexpr double inf = std::numeric_limits<double>::infinity();
    ExponentScan scan;
    scan.best_metric = inf;

    const auto steps = static_cast<std::size_t>(std::floor((a_max - a_min) / step + 1e-9));
    for (std::size_t i = 0; i <= steps; ++i) {
        const double a = a_min + static_cast<double>(i) * step;
        double metric = inf;
        try {
            metric = collapse_metric(curves, a);
        } catch (const NoOverlapError&) {
            // no overlap at this exponent; leave it infeasible
        }
        scan.points.emplace_back(a, metric);
        const bool better = metric < scan.best_metric ||
                            (metric == scan.best_metric &&
                             (std::abs(a) < std::abs(scan.best_a) ||
                              (std::abs(a) == std::abs(scan.best_a) && a < scan.best_a)));
        if (better) {
            scan.best_metric = metric;
            scan.best_a = a;
        }
    }

    if (scan.best_metric == inf)
        throw NoOverlapError("find_best_exponent: no exponent in the grid yields overlapping supports");
    return scan;
}

} // namespace swcol
