#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pdstile/error.hpp"
#include "pdstile/overlap/overlap.hpp"

namespace pdstile {

namespace detail {

struct Box {
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
    double x1 = -std::numeric_limits<double>::infinity(), y1 = x1;

    void add(double x, double y) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    }
    bool empty() const { return x0 > x1; }
    bool meets(const Box& o) const { return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1; }
};

inline Box box_of(const Polygon& p) {
    Box b;
    for (const auto& v : p) b.add(v.x.to_double(), v.y.to_double());
    return b;
}

inline std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x == 0 ? 0.0 : x);
    return buf;
}

/// Polygon in SVG user space, y pointing up in the model and down on the canvas.
inline std::string svg_polygon(const Polygon& p, double dx, double dy, double scale, const std::string& style) {
    std::string pts;
    for (const auto& v : p) {
        if (!pts.empty()) pts += ' ';
        pts += num((v.x.to_double() + dx) * scale) + "," + num((dy - v.y.to_double()) * scale);
    }
    return "<polygon points=\"" + pts + "\" " + style + "/>\n";
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("cannot write " + path);
}

inline std::string svg_open(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) +
           " " + num(h) + "\">\n";
}

inline const char* kStyleBackground = "fill=\"#d9d9d9\" stroke=\"#7f7f7f\" stroke-width=\"0.5\"";
inline const char* kStyleCoincident = "fill=\"#9bd39b\" stroke=\"#2e7d32\" stroke-width=\"0.5\"";
inline const char* kStyleOverlay = "fill=\"none\" stroke=\"#d32f2f\" stroke-width=\"1\"";

}  // namespace detail

/// Φ^k(Q) outlined over the tiles of Φ^k(Q̄ - v) that meet it; tiles present in both are highlighted.
inline std::string stage_svg(const PlanarSubstitution& ps, const PeriodicTiling& t, const Vec2& v, int k, double scale = 40) {
    if (k < 0) throw InputError("stage must be non-negative");
    std::vector<PlacedTile> top = ps.substitute(t.patch, k);
    // Tiles of Q̄ - v meeting Q; their images cover everything that can meet Φ^k(Q).
    std::vector<PlacedTile> under;
    for (const auto& [a, b] : meeting_tiles(ps, t, v)) {
        bool fresh = true;
        for (const auto& u : under) fresh = fresh && !(u.type == b.type && u.position == b.position);
        if (fresh) under.push_back(b);
    }
    under = ps.substitute(under, k);

    std::vector<Polygon> top_polys;
    std::vector<detail::Box> top_boxes;
    detail::Box frame;
    for (const auto& a : top) {
        top_polys.push_back(ps.support(a));
        top_boxes.push_back(detail::box_of(top_polys.back()));
        frame.add(top_boxes.back().x0, top_boxes.back().y0);
        frame.add(top_boxes.back().x1, top_boxes.back().y1);
    }
    std::vector<std::pair<Polygon, bool>> shown;
    for (const auto& b : under) {
        Polygon pb = ps.support(b);
        detail::Box bb = detail::box_of(pb);
        bool meets = false, coincident = false;
        for (std::size_t i = 0; i < top.size(); ++i) {
            if (!top_boxes[i].meets(bb) || !interiors_intersect(top_polys[i], pb)) continue;
            meets = true;
            if (top[i].type == b.type && top[i].position == b.position) coincident = true;
        }
        if (!meets) continue;
        frame.add(bb.x0, bb.y0);
        frame.add(bb.x1, bb.y1);
        shown.emplace_back(std::move(pb), coincident);
    }
    if (frame.empty()) return detail::svg_open(0, 0) + "</svg>\n";
    const double pad = 0.5;
    const double dx = pad - frame.x0, dy = frame.y1 + pad;
    std::string out = detail::svg_open((frame.x1 - frame.x0 + 2 * pad) * scale, (frame.y1 - frame.y0 + 2 * pad) * scale);
    for (const auto& [p, c] : shown) out += detail::svg_polygon(p, dx, dy, scale, c ? detail::kStyleCoincident : detail::kStyleBackground);
    for (const auto& p : top_polys) out += detail::svg_polygon(p, dx, dy, scale, detail::kStyleOverlay);
    out += "</svg>\n";
    return out;
}

/// One cell per overlap class of `stage` (all classes when `stage` is empty), in node order.
/// type_a is outlined, type_b filled; coincidences are highlighted.
inline std::string overlaps_svg(const PlanarSubstitution& ps, const OverlapGraph& g, std::optional<std::size_t> stage = std::nullopt,
                                double scale = 40) {
    std::vector<std::size_t> ids;
    if (stage) {
        ids = g.stages.at(*stage);
    } else {
        for (std::size_t i = 0; i < g.nodes.size(); ++i) ids.push_back(i);
    }
    if (ids.empty()) return detail::svg_open(0, 0) + "</svg>\n";
    std::vector<std::array<Polygon, 2>> pics;
    std::vector<detail::Box> boxes;
    double cell = 0;
    for (std::size_t i : ids) {
        const Overlap& o = g.nodes[i];
        std::array<Polygon, 2> pic{ps.prototiles.at(o.type_a).polygon, translate(ps.prototiles.at(o.type_b).polygon, o.offset)};
        detail::Box b = detail::box_of(pic[0]);
        const detail::Box c = detail::box_of(pic[1]);
        b.add(c.x0, c.y0);
        b.add(c.x1, c.y1);
        cell = std::max({cell, b.x1 - b.x0, b.y1 - b.y0});
        pics.push_back(std::move(pic));
        boxes.push_back(b);
    }
    cell += 1;
    const std::size_t cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(ids.size()))));
    const std::size_t rows = (ids.size() + cols - 1) / cols;
    std::string out = detail::svg_open(static_cast<double>(cols) * cell * scale, static_cast<double>(rows) * cell * scale);
    for (std::size_t n = 0; n < ids.size(); ++n) {
        const double cx = static_cast<double>(n % cols) * cell, cy = static_cast<double>(n / cols) * cell;
        const double dx = cx + 0.5 - boxes[n].x0, dy = cy + 0.5 + boxes[n].y1;
        const bool hit = g.is_coincidence(ids[n]);
        out += detail::svg_polygon(pics[n][1], dx, dy, scale, hit ? detail::kStyleCoincident : detail::kStyleBackground);
        out += detail::svg_polygon(pics[n][0], dx, dy, scale, detail::kStyleOverlay);
    }
    out += "</svg>\n";
    return out;
}

inline void render_stage(const PlanarSubstitution& ps, const PeriodicTiling& t, const Vec2& v, int k, const std::string& path) {
    detail::write_text_file(path, stage_svg(ps, t, v, k));
}

inline void render_overlaps(const PlanarSubstitution& ps, const OverlapGraph& g, std::optional<std::size_t> stage,
                            const std::string& path) {
    detail::write_text_file(path, overlaps_svg(ps, g, stage));
}

}  // namespace pdstile
