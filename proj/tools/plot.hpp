#pragma once

#include "swcol/experiment.hpp"

#include <span>
#include <string>

namespace swcol {

enum class PlotKind { Fraction, Cost, Collapse };

struct PlotOptions {
    PlotKind kind = PlotKind::Fraction;
    double collapse_exponent = 0.0; // used by Collapse: x = p * N^a
    bool cost_median = false;       // Cost: plot the median instead of the mean
    std::string title;              // default derived from kind
};

/// Standalone SVG: log x axis, one series per (family, L), confidence bands
/// for fraction plots. The numbers behind every drawn point are embedded in a
/// <metadata id="swcol-data"> block so the figure can be re-derived without
/// the source CSV.
std::string render_svg(std::span<const SummaryRow> rows, const PlotOptions& options);

/// gnuplot script drawing the same figure directly from the summary CSV, for
/// users who want to restyle.
std::string render_gnuplot_script(const std::string& csv_path, const std::string& svg_out,
                                  std::span<const SummaryRow> rows, const PlotOptions& options);

} // namespace swcol
