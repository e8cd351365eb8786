#include "psb/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace psb {

namespace {

const char* kPalette[12] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                            "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                            "#bcbd22", "#17becf", "#4d66cc", "#cc4d99"};

struct Box {
    Quad x0, x1, y0, y1;
};

Box viewport_of(const ConstructionSpec& spec) {
    bool first = true;
    Box b;
    for (size_t i = 0; i < spec.boundary.size(); ++i)
        for (size_t j = i + 1; j < spec.boundary.size(); ++j) {
            if (parallel(spec.boundary[i], spec.boundary[j])) continue;
            Point p = *intersect(spec.boundary[i], spec.boundary[j]);
            if (first) {
                b = Box{p.x, p.x, p.y, p.y};
                first = false;
                continue;
            }
            if (p.x < b.x0) b.x0 = p.x;
            if (p.x > b.x1) b.x1 = p.x;
            if (p.y < b.y0) b.y0 = p.y;
            if (p.y > b.y1) b.y1 = p.y;
        }
    Quad margin(Rat(3, 20));
    Quad dx = (b.x1 - b.x0) * margin, dy = (b.y1 - b.y0) * margin;
    return Box{b.x0 - dx, b.x1 + dx, b.y0 - dy, b.y1 + dy};
}

// The two boundary points of a line clipped to the box, if it passes through.
bool clip_line(const Line& l, const Box& box, Point& a, Point& b) {
    std::vector<Point> pts;
    auto consider = [&](const Line& edge, bool horizontal) {
        if (parallel(l, edge)) return;
        Point p = *intersect(l, edge);
        bool within = horizontal ? (p.x >= box.x0 && p.x <= box.x1)
                                 : (p.y >= box.y0 && p.y <= box.y1);
        if (!within) return;
        for (const Point& q : pts)
            if (q == p) return;
        pts.push_back(p);
    };
    consider(Line{Quad(0), Quad(1), -box.y0}, true);
    consider(Line{Quad(0), Quad(1), -box.y1}, true);
    consider(Line{Quad(1), Quad(0), -box.x0}, false);
    consider(Line{Quad(1), Quad(0), -box.x1}, false);
    if (pts.size() < 2) return false;
    std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) {
        int c = p.x.cmp(q.x);
        return c != 0 ? c < 0 : p.y < q.y;
    });
    a = pts.front();
    b = pts.back();
    return true;
}

}  // namespace

std::string render_svg(const Arrangement& arr, const RenderOptions& opt) {
    if (arr.lines.size() > 600)
        throw usage_error("render is capped at 600 lines for legibility");
    const ConstructionSpec& spec = *arr.spec;
    Box box = viewport_of(spec);
    Quad xspan = box.x1 - box.x0, yspan = box.y1 - box.y0;
    Quad scale = Quad(opt.width) / xspan;
    std::string height = (yspan * scale).decimal(30);

    auto px = [&](const Quad& x) { return ((x - box.x0) * scale).decimal(30); };
    auto py = [&](const Quad& y) { return ((box.y1 - y) * scale).decimal(30); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << opt.width << " " << height
        << "\">\n";
    for (const Line& l : arr.lines) {
        Point a, b;
        if (!clip_line(l, box, a, b)) continue;
        out << "  <path d=\"M " << px(a.x) << " " << py(a.y) << " L " << px(b.x) << " "
            << py(b.y) << "\" stroke=\"" << kPalette[(l.bundle - 1) % 12]
            << "\" stroke-width=\"1\" fill=\"none\"/>\n";
    }
    if (opt.markers) {
        // Marker per crossing point, radius scaled by multiplicity, sorted by
        // exact coordinates for stable output.
        std::unordered_map<std::string, std::pair<Point, int>> agg;
        for (size_t i = 0; i < arr.lines.size(); ++i)
            for (size_t j = i + 1; j < arr.lines.size(); ++j) {
                if (arr.lines[i].bundle == arr.lines[j].bundle) continue;
                Point p = *intersect(arr.lines[i], arr.lines[j]);
                auto [it, fresh] = agg.emplace(p.key(), std::make_pair(p, 0));
                it->second.second += 1;
            }
        std::vector<std::pair<Point, int>> marks;
        for (auto& [key, entry] : agg) {
            int pairs = entry.second;
            int mult = static_cast<int>((1 + std::sqrt(1.0 + 8.0 * pairs)) / 2);
            if (mult >= opt.marker_min) marks.emplace_back(entry.first, mult);
        }
        std::sort(marks.begin(), marks.end(), [](const auto& p, const auto& q) {
            int c2 = p.first.x.cmp(q.first.x);
            return c2 != 0 ? c2 < 0 : p.first.y < q.first.y;
        });
        for (const auto& [p, mult] : marks)
            out << "  <circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\""
                << (10 + 8 * mult) / 10 << "." << (10 + 8 * mult) % 10
                << "\" fill=\"#333333\" fill-opacity=\"0.55\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace psb
