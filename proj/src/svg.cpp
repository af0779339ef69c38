#include "geomexp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace geomexp {

namespace {

struct Frame {
    double minx, miny, scale;
    double X(const Rational& x) const { return 20.0 + (rational_to_double(x) - minx) * scale; }
    double Y(const Rational& y) const { return 480.0 - (rational_to_double(y) - miny) * scale; }
};

Frame fit_frame(const PointSet& P) {
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    if (!P.pts.empty()) {
        minx = miny = 1e300;
        maxx = maxy = -1e300;
        for (const auto& p : P.pts) {
            minx = std::min(minx, rational_to_double(p.x[0]));
            maxx = std::max(maxx, rational_to_double(p.x[0]));
            miny = std::min(miny, rational_to_double(p.x[1]));
            maxy = std::max(maxy, rational_to_double(p.x[1]));
        }
    }
    double span = std::max({maxx - minx, maxy - miny, 1e-9});
    return {minx, miny, 460.0 / span};
}

const char* kBlockColors[] = {"#4c78a8", "#f58518", "#54a24b", "#e45756", "#72b7b2",
                              "#b279a2", "#ff9da6", "#9d755d", "#bab0ac", "#d67195"};

}  // namespace

std::string points_svg(const PointSet& P, const std::optional<Point>& mark,
                       const std::optional<SectorPartition>& sectors) {
    Frame fr = fit_frame(P);
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n";
    if (sectors) {
        double ax = fr.X(sectors->apex.x[0]), ay = fr.Y(sectors->apex.x[1]);
        for (const auto& d : sectors->line_dirs) {
            double dx = rational_to_double(d.x), dy = rational_to_double(d.y);
            double len = std::hypot(dx, dy);
            if (len == 0) continue;
            dx /= len;
            dy /= len;
            s << "<line x1=\"" << ax - 700 * dx << "\" y1=\"" << ay + 700 * dy << "\" x2=\""
              << ax + 700 * dx << "\" y2=\"" << ay - 700 * dy
              << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
        }
        for (int i = 0; i < P.size(); ++i) {
            int sec = sectors->sector_of[static_cast<size_t>(i)];
            const char* col = sec >= 0 ? kBlockColors[sec % 10] : "#000";
            s << "<circle cx=\"" << fr.X(P[i].x[0]) << "\" cy=\"" << fr.Y(P[i].x[1])
              << "\" r=\"3.5\" fill=\"" << col << "\"/>\n";
        }
    } else {
        for (const auto& p : P.pts)
            s << "<circle cx=\"" << fr.X(p.x[0]) << "\" cy=\"" << fr.Y(p.x[1])
              << "\" r=\"3.5\" fill=\"#4c78a8\"/>\n";
    }
    if (mark) {
        double mx = fr.X(mark->x[0]), my = fr.Y(mark->x[1]);
        s << "<path d=\"M " << mx - 6 << ' ' << my << " L " << mx + 6 << ' ' << my << " M " << mx
          << ' ' << my - 6 << " L " << mx << ' ' << my + 6
          << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::string partition_svg(const PointSet& P, const LabeledPartition& L) {
    Frame fr = fit_frame(P);
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n";
    for (size_t b = 0; b < L.blocks.size(); ++b)
        for (int idx : L.blocks[b])
            s << "<circle cx=\"" << fr.X(P[idx].x[0]) << "\" cy=\"" << fr.Y(P[idx].x[1])
              << "\" r=\"3.5\" fill=\"" << kBlockColors[b % 10] << "\"/>\n";
    if (L.kind == LabeledPartition::Kind::Cones && L.apex.dim() == 2) {
        double ax = fr.X(L.apex.x[0]), ay = fr.Y(L.apex.x[1]);
        s << "<circle cx=\"" << ax << "\" cy=\"" << ay
          << "\" r=\"4.5\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace geomexp
