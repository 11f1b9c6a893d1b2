// emit.hpp — CSV and SVG writers
//
// Numbers are printed with snprintf("%.17g") so identical inputs give
// byte-identical files regardless of stream state or locale.

#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "qzc/dynamics.hpp"
#include "qzc/errors.hpp"

namespace qzc {

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// A labelled curve, y over x; the unit all plots in this artifact share is
// x = dimensionless time (kappa*t) and y = concurrence.
struct Series {
    std::string label;
    std::vector<double> x, y;
};

inline void write_trajectory_csv(std::ostream& os, const Trajectory& tr, double kappa) {
    os << "tau,C,u1_re,u1_im,u2_re,u2_im,eps\n";
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        os << format_number(kappa * tr.times[i]) << ',' << format_number(tr.concurrence[i]) << ','
           << format_number(tr.u1[i].real()) << ',' << format_number(tr.u1[i].imag()) << ','
           << format_number(tr.u2[i].real()) << ',' << format_number(tr.u2[i].imag()) << ','
           << format_number(tr.eps[i]) << '\n';
    }
}

struct StationaryGrid {
    std::vector<double> r1, s;       // axes
    std::vector<double> cs;          // row-major, r1 outer, s inner
};

inline void write_stationary_csv(std::ostream& os, const StationaryGrid& grid) {
    os << "r1,s,Cs\n";
    for (std::size_t i = 0; i < grid.r1.size(); ++i)
        for (std::size_t j = 0; j < grid.s.size(); ++j)
            os << format_number(grid.r1[i]) << ',' << format_number(grid.s[j]) << ','
               << format_number(grid.cs[i * grid.s.size() + j]) << '\n';
}

struct ZenoRow {
    double tau = 0.0;
    double concurrence = 0.0;
    double survival = 0.0;
    double lambda_z = 0.0;
};

inline void write_zeno_csv(std::ostream& os, const std::vector<ZenoRow>& rows) {
    os << "tau,C,survival,lambda_z\n";
    for (const auto& r : rows)
        os << format_number(r.tau) << ',' << format_number(r.concurrence) << ','
           << format_number(r.survival) << ',' << format_number(r.lambda_z) << '\n';
}

inline void write_series_csv(std::ostream& os, const std::vector<Series>& series) {
    os << "series,tau,C\n";
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i)
            os << s.label << ',' << format_number(s.x[i]) << ',' << format_number(s.y[i]) << '\n';
}

// Minimal SVG 1.1 line plot: one polyline per series, axes with labels.
inline void write_series_svg(std::ostream& os, const std::vector<Series>& series,
                             const std::string& x_label = "tau",
                             const std::string& y_label = "C") {
    if (series.empty()) throw validation_error("svg output needs at least one series");

    double xmin = series[0].x.empty() ? 0.0 : series[0].x[0], xmax = xmin;
    double ymin = 0.0, ymax = 1.0;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;

    const double w = 640.0, hgt = 480.0, ml = 64.0, mr = 16.0, mt = 16.0, mb = 48.0;
    const auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    const auto py = [&](double y) { return hgt - mb - (y - ymin) / (ymax - ymin) * (hgt - mt - mb); };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << (int)w
       << "\" height=\"" << (int)hgt << "\" viewBox=\"0 0 " << (int)w << ' ' << (int)hgt << "\">\n"
       << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "  <line x1=\"" << format_number(ml) << "\" y1=\"" << format_number(hgt - mb)
       << "\" x2=\"" << format_number(w - mr) << "\" y2=\"" << format_number(hgt - mb)
       << "\" stroke=\"black\"/>\n"
       << "  <line x1=\"" << format_number(ml) << "\" y1=\"" << format_number(mt) << "\" x2=\""
       << format_number(ml) << "\" y2=\"" << format_number(hgt - mb) << "\" stroke=\"black\"/>\n"
       << "  <text x=\"" << format_number(0.5 * (ml + w - mr)) << "\" y=\""
       << format_number(hgt - 12.0) << "\" text-anchor=\"middle\" font-size=\"14\">" << x_label
       << "</text>\n"
       << "  <text x=\"18\" y=\"" << format_number(0.5 * (mt + hgt - mb))
       << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 "
       << format_number(0.5 * (mt + hgt - mb)) << ")\">" << y_label << "</text>\n";

    // axis extent annotations
    os << "  <text x=\"" << format_number(ml) << "\" y=\"" << format_number(hgt - mb + 16.0)
       << "\" font-size=\"11\">" << format_number(xmin) << "</text>\n"
       << "  <text x=\"" << format_number(w - mr) << "\" y=\"" << format_number(hgt - mb + 16.0)
       << "\" text-anchor=\"end\" font-size=\"11\">" << format_number(xmax) << "</text>\n"
       << "  <text x=\"" << format_number(ml - 6.0) << "\" y=\"" << format_number(hgt - mb)
       << "\" text-anchor=\"end\" font-size=\"11\">" << format_number(ymin) << "</text>\n"
       << "  <text x=\"" << format_number(ml - 6.0) << "\" y=\"" << format_number(mt + 10.0)
       << "\" text-anchor=\"end\" font-size=\"11\">" << format_number(ymax) << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        os << "  <polyline fill=\"none\" stroke=\"" << palette[k % 8]
           << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i) os << ' ';
            os << format_number(px(s.x[i])) << ',' << format_number(py(s.y[i]));
        }
        os << "\"/>\n";
        os << "  <text x=\"" << format_number(w - mr - 8.0) << "\" y=\""
           << format_number(mt + 16.0 + 16.0 * static_cast<double>(k))
           << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << palette[k % 8] << "\">"
           << s.label << "</text>\n";
    }
    os << "</svg>\n";
}

} // namespace qzc
