#include <cstdio>
#include <fstream>

#include "cpih/scenario.hpp"

namespace cpih {

namespace {

constexpr double kCanvas = 800.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace

void write_trajectory_svg(const Trace& trace, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write svg file: " + path.string());

    Point lo(1e300, 1e300), hi(-1e300, -1e300);
    for (const TraceRow& row : trace.rows) {
        lo = lo.cwiseMin(row.state);
        hi = hi.cwiseMax(row.state);
    }
    for (const Point& v : trace.initial_normal_hull.vertices()) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    const double span = std::max({hi.x() - lo.x(), hi.y() - lo.y(), 1e-9});
    const double pad = 0.05 * span;
    const double scale = kCanvas / (span + 2.0 * pad);
    auto map = [&](const Point& p) {
        return Point((p.x() - lo.x() + pad) * scale,
                     kCanvas - (p.y() - lo.y() + pad) * scale);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    out << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

    if (!trace.initial_normal_hull.empty()) {
        out << "<polygon points=\"";
        for (const Point& v : trace.initial_normal_hull.vertices()) {
            const Point q = map(v);
            out << num(q.x()) << ',' << num(q.y()) << ' ';
        }
        out << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n";
    }

    const int n = trace.config.n_agents;
    for (int id = 0; id < n; ++id) {
        bool adversarial = false;
        std::string pts;
        Point start = Point::Zero();
        bool have_start = false;
        for (const TraceRow& row : trace.rows) {
            if (row.id != id) continue;
            adversarial = row.role == Role::adversarial;
            const Point q = map(row.state);
            pts += num(q.x());
            pts += ',';
            pts += num(q.y());
            pts += ' ';
            if (!have_start) {
                start = q;
                have_start = true;
            }
        }
        const char* color = kPalette[id % 10];
        out << "<polyline points=\"" << pts << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1\"";
        if (adversarial) out << " stroke-dasharray=\"6 4\"";
        out << "/>\n";
        if (have_start) {
            out << "<circle cx=\"" << num(start.x()) << "\" cy=\"" << num(start.y())
                << "\" r=\"4\" fill=\"" << color << "\"/>\n";
        }
    }
    out << "</svg>\n";
    if (!out) throw IoError("failed writing svg file: " + path.string());
}

}  // namespace cpih
