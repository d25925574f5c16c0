#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <vector>

namespace swcol {

namespace {

struct SeriesPoint {
    double x, y, lo, hi;
};

struct Series {
    std::string label;
    std::vector<SeriesPoint> points;
};

std::string series_label(LatticeFamily family, std::uint32_t L) {
    return std::string(family_name(family)) + " L=" + std::to_string(L);
}

std::vector<Series> build_series(std::span<const SummaryRow> rows, const PlotOptions& options) {
    std::map<std::pair<int, std::uint32_t>, Series> grouped;
    for (const auto& row : rows) {
        double x = row.p;
        double y, lo, hi;
        switch (options.kind) {
        case PlotKind::Fraction:
            y = row.fraction;
            lo = row.ci_lo;
            hi = row.ci_hi;
            break;
        case PlotKind::Cost:
            y = options.cost_median ? row.cost_median : row.cost_mean;
            lo = hi = std::numeric_limits<double>::quiet_NaN();
            break;
        case PlotKind::Collapse:
            x = row.p * std::pow(static_cast<double>(row.N), options.collapse_exponent);
            y = row.fraction;
            lo = row.ci_lo;
            hi = row.ci_hi;
            break;
        default:
            throw std::logic_error("plot: unknown kind");
        }
        if (std::isnan(y) || !(x > 0.0))
            continue; // undecided cell, or off the log axis
        auto& series = grouped[{static_cast<int>(row.family), row.L}];
        if (series.label.empty())
            series.label = series_label(row.family, row.L);
        series.points.push_back({x, y, lo, hi});
    }
    std::vector<Series> out;
    for (auto& [key, series] : grouped) {
        std::sort(series.points.begin(), series.points.end(),
                  [](const SeriesPoint& a, const SeriesPoint& b) { return a.x < b.x; });
        out.push_back(std::move(series));
    }
    if (out.empty())
        throw std::runtime_error("plot: no plottable points in input");
    return out;
}

const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                               "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2"};

std::string fmt(double v, const char* spec = "%.2f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

double nice_step(double span) {
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (raw <= m * mag)
            return m * mag;
    return 10.0 * mag;
}

std::string axis_label_x(const PlotOptions& options) {
    if (options.kind == PlotKind::Collapse)
        return "p N^" + fmt(options.collapse_exponent, "%.4g");
    return "p";
}

std::string axis_label_y(const PlotOptions& options) {
    switch (options.kind) {
    case PlotKind::Cost: return options.cost_median ? "median search nodes" : "mean search nodes";
    default: return "fraction colourable";
    }
}

std::string default_title(const PlotOptions& options) {
    switch (options.kind) {
    case PlotKind::Fraction: return "Colourable fraction vs rewiring probability";
    case PlotKind::Cost: return "Search cost vs rewiring probability";
    case PlotKind::Collapse: return "Finite-size-scaling collapse";
    }
    return {};
}

} // namespace

std::string render_svg(std::span<const SummaryRow> rows, const PlotOptions& options) {
    const auto series = build_series(rows, options);

    constexpr double width = 860, height = 600;
    constexpr double ml = 74, mr = 234, mt = 46, mb = 66;
    const double pw = width - ml - mr;
    const double ph = height - mt - mb;

    double xmin = std::numeric_limits<double>::infinity(), xmax = 0;
    double ymax_data = 0;
    for (const auto& s : series) {
        for (const auto& q : s.points) {
            xmin = std::min(xmin, q.x);
            xmax = std::max(xmax, q.x);
            ymax_data = std::max(ymax_data, q.y);
        }
    }
    double lxmin = std::log10(xmin), lxmax = std::log10(xmax);
    if (lxmax - lxmin < 1e-12) { // degenerate single-x input
        lxmin -= 1.0;
        lxmax += 1.0;
    }
    const bool fraction_axis = options.kind != PlotKind::Cost;
    const double ymin = 0.0;
    const double ymax = fraction_axis ? 1.0 : (ymax_data > 0 ? ymax_data * 1.05 : 1.0);

    auto X = [&](double x) { return ml + (std::log10(x) - lxmin) / (lxmax - lxmin) * pw; };
    auto Y = [&](double y) {
        const double clamped = fraction_axis ? std::clamp(y, 0.0, 1.0) : y;
        return mt + (1.0 - (clamped - ymin) / (ymax - ymin)) * ph;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width, "%.0f") + "\" height=\"" +
           fmt(height, "%.0f") + "\" viewBox=\"0 0 " + fmt(width, "%.0f") + " " + fmt(height, "%.0f") + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // embedded data, one row per drawn point
    svg += "<metadata id=\"swcol-data\"><![CDATA[\n";
    svg += "label,x,y,ci_lo,ci_hi\n";
    for (const auto& s : series)
        for (const auto& q : s.points)
            svg += s.label + "," + fmt(q.x, "%.9g") + "," + fmt(q.y, "%.9g") + "," + fmt(q.lo, "%.9g") + "," +
                   fmt(q.hi, "%.9g") + "\n";
    svg += "]]></metadata>\n";

    const std::string title = options.title.empty() ? default_title(options) : options.title;
    svg += "<text x=\"" + fmt(ml + pw / 2) + "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" "
           "text-anchor=\"middle\">" + title + "</text>\n";

    // plot frame
    svg += "<rect x=\"" + fmt(ml) + "\" y=\"" + fmt(mt) + "\" width=\"" + fmt(pw) + "\" height=\"" + fmt(ph) +
           "\" fill=\"none\" stroke=\"#444\"/>\n";

    // x ticks: decades, with minor ticks at 2..9
    const int dec_lo = static_cast<int>(std::floor(lxmin));
    const int dec_hi = static_cast<int>(std::ceil(lxmax));
    for (int d = dec_lo; d <= dec_hi; ++d) {
        const double x = std::pow(10.0, d);
        if (std::log10(x) >= lxmin - 1e-12 && std::log10(x) <= lxmax + 1e-12) {
            const double px = X(x);
            svg += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(mt) + "\" x2=\"" + fmt(px) + "\" y2=\"" +
                   fmt(mt + ph) + "\" stroke=\"#ddd\"/>\n";
            svg += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(mt + ph + 20) +
                   "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">1e" +
                   std::to_string(d) + "</text>\n";
        }
        for (int m = 2; m <= 9; ++m) {
            const double x = m * std::pow(10.0, d);
            const double lx = std::log10(x);
            if (lx < lxmin - 1e-12 || lx > lxmax + 1e-12)
                continue;
            const double px = X(x);
            svg += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(mt + ph - 4) + "\" x2=\"" + fmt(px) + "\" y2=\"" +
                   fmt(mt + ph) + "\" stroke=\"#999\"/>\n";
        }
    }

    // y ticks
    const double ystep = fraction_axis ? 0.2 : nice_step(ymax);
    for (double y = ymin; y <= ymax + 1e-9; y += ystep) {
        const double py = Y(y);
        svg += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(py) + "\" x2=\"" + fmt(ml + pw) + "\" y2=\"" + fmt(py) +
               "\" stroke=\"#eee\"/>\n";
        svg += "<text x=\"" + fmt(ml - 8) + "\" y=\"" + fmt(py + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" + fmt(y, "%.4g") +
               "</text>\n";
    }

    // axis labels
    svg += "<text x=\"" + fmt(ml + pw / 2) + "\" y=\"" + fmt(height - 18) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" + axis_label_x(options) +
           "</text>\n";
    svg += "<text x=\"20\" y=\"" + fmt(mt + ph / 2) + "\" font-family=\"sans-serif\" font-size=\"14\" "
           "text-anchor=\"middle\" transform=\"rotate(-90 20 " + fmt(mt + ph / 2) + ")\">" +
           axis_label_y(options) + "</text>\n";

    // series: confidence band, then line, then markers
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        const char* colour = palette[i % (sizeof palette / sizeof palette[0])];

        if (fraction_axis && s.points.size() > 1 && !std::isnan(s.points.front().lo)) {
            std::string band = "<polygon fill=\"" + std::string(colour) + "\" fill-opacity=\"0.15\" "
                               "stroke=\"none\" points=\"";
            for (const auto& q : s.points)
                band += fmt(X(q.x)) + "," + fmt(Y(q.hi)) + " ";
            for (auto it = s.points.rbegin(); it != s.points.rend(); ++it)
                band += fmt(X(it->x)) + "," + fmt(Y(it->lo)) + " ";
            band += "\"/>\n";
            svg += band;
        }

        if (s.points.size() > 1) {
            std::string line = "<polyline fill=\"none\" stroke=\"" + std::string(colour) +
                               "\" stroke-width=\"1.6\" points=\"";
            for (const auto& q : s.points)
                line += fmt(X(q.x)) + "," + fmt(Y(q.y)) + " ";
            line += "\"/>\n";
            svg += line;
        }
        for (const auto& q : s.points)
            svg += "<circle cx=\"" + fmt(X(q.x)) + "\" cy=\"" + fmt(Y(q.y)) + "\" r=\"2.6\" fill=\"" + colour +
                   "\"/>\n";
    }

    // legend
    const double lx = ml + pw + 16;
    double ly = mt + 10;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* colour = palette[i % (sizeof palette / sizeof palette[0])];
        svg += "<rect x=\"" + fmt(lx) + "\" y=\"" + fmt(ly - 9) + "\" width=\"18\" height=\"4\" fill=\"" +
               colour + "\"/>\n";
        svg += "<text x=\"" + fmt(lx + 24) + "\" y=\"" + fmt(ly - 2) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + series[i].label + "</text>\n";
        ly += 18;
    }

    svg += "</svg>\n";
    return svg;
}

std::string render_gnuplot_script(const std::string& csv_path, const std::string& svg_out,
                                  std::span<const SummaryRow> rows, const PlotOptions& options) {
    // Column numbers in the summary CSV:
    //   1 family, 2 L, 3 N, 4 gamma, 5 p, 6 trials, 7 colourable,
    //   8 uncolourable, 9 exhausted, 10 fraction, 11 ci_lo, 12 ci_hi,
    //   13 cost_mean, 14 cost_median, 15 cost_max
    const auto series = build_series(rows, options);

    std::string gp;
    gp += "# generated by swcol plot; regenerate the figure with:  gnuplot <this file>\n";
    gp += "set datafile separator comma\n";
    gp += "set terminal svg size 860,600 font 'sans-serif,12'\n";
    gp += "set output '" + svg_out + "'\n";
    gp += "set logscale x\n";
    gp += "set xlabel '" + axis_label_x(options) + "'\n";
    gp += "set ylabel '" + axis_label_y(options) + "'\n";
    if (options.kind != PlotKind::Cost)
        gp += "set yrange [0:1]\n";
    gp += "set key outside right top\n";
    gp += "set title '" + (options.title.empty() ? default_title(options) : options.title) + "'\n";

    std::string ycol;
    std::string xexpr = "$5";
    switch (options.kind) {
    case PlotKind::Fraction: ycol = "$10"; break;
    case PlotKind::Cost: ycol = options.cost_median ? "$14" : "$13"; break;
    case PlotKind::Collapse:
        ycol = "$10";
        xexpr = "($5 * ($3 ** " + fmt(options.collapse_exponent, "%.9g") + "))";
        break;
    }

    gp += "plot \\\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        // series[i].label is "<family> L=<L>"
        const auto space = series[i].label.find(' ');
        const std::string family = series[i].label.substr(0, space);
        const std::string L = series[i].label.substr(space + 3);
        const std::string cond = "strcol(1) eq '" + family + "' && $2 == " + L;
        gp += "  '" + csv_path + "' skip 1 using (" + cond + " ? " + xexpr + " : NaN):(" + ycol + ")";
        if (options.kind != PlotKind::Cost)
            gp += ":($11):($12) with yerrorlines";
        else
            gp += " with linespoints";
        gp += " title '" + series[i].label + "'";
        gp += (i + 1 < series.size()) ? ", \\\n" : "\n";
    }
    return gp;
}

} // namespace swcol
