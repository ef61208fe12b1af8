#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "tverberg/point_set.hpp"

namespace tverberg::svg {

/// Rendering is the one place doubles appear: plots are illustrative and no
/// verdict depends on them.
struct Plot {
    PointSetPtr set;                           // must be 2-D
    std::vector<std::vector<int>> hulls;       // outlines to draw (witness parts)
    std::vector<Vec> marks;                    // highlighted points (witness / cell samples)
    std::string annotation;                    // e.g. "empty region"
};

namespace detail {

inline double to_d(const Rat& r) { return r.get_d(); }

/// Exact 2-D convex hull (monotone chain) used only to outline a part.
inline std::vector<int> hull_order(const PointSet& s, std::vector<int> idx) {
    auto cross = [&](int o, int a, int b) {
        const Vec &po = s.point(o), &pa = s.point(a), &pb = s.point(b);
        return sgn((pa[0] - po[0]) * (pb[1] - po[1]) - (pa[1] - po[1]) * (pb[0] - po[0]));
    };
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return s.point(a) < s.point(b); });
    if (idx.size() <= 2) return idx;
    std::vector<int> h;
    for (int stage = 0; stage < 2; ++stage) {
        std::size_t base = h.size();
        for (int i : idx) {
            while (h.size() >= base + 2 && cross(h[h.size() - 2], h.back(), i) <= 0) h.pop_back();
            h.push_back(i);
        }
        h.pop_back();
        std::reverse(idx.begin(), idx.end());
    }
    return h;
}

} // namespace detail

inline void write_plot(std::ostream& os, const Plot& plot) {
    const PointSet& s = *plot.set;
    if (s.dim() != 2) throw Error("plots are only available for dimension 2");
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    auto extend = [&](double x, double y) {
        if (first) {
            minx = maxx = x;
            miny = maxy = y;
            first = false;
        } else {
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
    };
    for (int i = 0; i < s.size(); ++i) extend(detail::to_d(s.point(i)[0]), detail::to_d(s.point(i)[1]));
    for (const Vec& m : plot.marks) extend(detail::to_d(m[0]), detail::to_d(m[1]));
    double span = std::max({maxx - minx, maxy - miny, 1e-9});
    double pad = 0.1 * span;
    minx -= pad;
    miny -= pad;
    span += 2 * pad;
    const double W = 480.0;
    auto X = [&](double x) { return (x - minx) / span * W; };
    auto Y = [&](double y) { return W - (y - miny) / span * W; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << W
       << "\" viewBox=\"0 0 " << W << " " << W << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    static const char* colors[] = {"#c0392b", "#2e86c1", "#1e8449", "#9b59b6", "#d68910", "#117a65"};
    for (std::size_t h = 0; h < plot.hulls.size(); ++h) {
        auto order = detail::hull_order(s, plot.hulls[h]);
        const char* col = colors[h % 6];
        if (order.size() == 1) {
            os << "  <circle cx=\"" << X(detail::to_d(s.point(order[0])[0])) << "\" cy=\""
               << Y(detail::to_d(s.point(order[0])[1])) << "\" r=\"9\" fill=\"none\" stroke=\"" << col
               << "\" stroke-width=\"1.5\"/>\n";
            continue;
        }
        os << "  <pol" << (order.size() == 2 ? "yline" : "ygon") << " points=\"";
        for (int i : order)
            os << X(detail::to_d(s.point(i)[0])) << "," << Y(detail::to_d(s.point(i)[1])) << " ";
        os << "\" fill=\"" << (order.size() == 2 ? "none" : col) << "\" fill-opacity=\"0.12\" stroke=\""
           << col << "\" stroke-width=\"1.5\"/>\n";
    }
    for (int i = 0; i < s.size(); ++i) {
        double x = X(detail::to_d(s.point(i)[0])), y = Y(detail::to_d(s.point(i)[1]));
        os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3.5\" fill=\"#2c3e50\"/>\n";
        std::string lab = s.labels().empty() || s.labels()[i].empty() ? "x" + std::to_string(i + 1)
                                                                      : s.labels()[i];
        os << "  <text x=\"" << x + 6 << "\" y=\"" << y - 6 << "\" font-size=\"11\" fill=\"#2c3e50\">"
           << lab << "</text>\n";
    }
    for (const Vec& m : plot.marks) {
        os << "  <circle cx=\"" << X(detail::to_d(m[0])) << "\" cy=\"" << Y(detail::to_d(m[1]))
           << "\" r=\"5\" fill=\"none\" stroke=\"#e74c3c\" stroke-width=\"2.5\"/>\n";
    }
    if (!plot.annotation.empty())
        os << "  <text x=\"10\" y=\"20\" font-size=\"14\" fill=\"#7f8c8d\">" << plot.annotation
           << "</text>\n";
    os << "</svg>\n";
}

} // namespace tverberg::svg
