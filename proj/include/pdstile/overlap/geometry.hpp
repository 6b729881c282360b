#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pdstile/algebra/quadratic.hpp"

namespace pdstile {

using Scalar = QuadraticElement;

struct Vec2 {
    Scalar x, y;

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(const Scalar& k, const Vec2& a) { return {k * a.x, k * a.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }

    bool is_zero() const { return x.sign() == 0 && y.sign() == 0; }
    std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

/// Exact total order: rational coordinates of x, then of y, lexicographically.
inline bool key_less(const Vec2& a, const Vec2& b) {
    if (key_less(a.x, b.x)) return true;
    if (key_less(b.x, a.x)) return false;
    return key_less(a.y, b.y);
}

inline Scalar cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

struct Mat2 {
    Scalar a, b, c, d;  // [[a, b], [c, d]]

    static Mat2 scalar(const Scalar& k) { return {k, Scalar(0), Scalar(0), k}; }
    Scalar det() const { return a * d - b * c; }
    friend Vec2 operator*(const Mat2& m, const Vec2& v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }
    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
};

using Polygon = std::vector<Vec2>;

inline Polygon translate(const Polygon& p, const Vec2& t) {
    Polygon out;
    out.reserve(p.size());
    for (const auto& v : p) out.push_back(v + t);
    return out;
}

inline Polygon transform(const Mat2& m, const Polygon& p) {
    Polygon out;
    out.reserve(p.size());
    for (const auto& v : p) out.push_back(m * v);
    if (m.det().sign() < 0) std::reverse(out.begin(), out.end());
    return out;
}

/// Twice the signed area (shoelace).
inline Scalar twice_area(const Polygon& p) {
    Scalar s(0);
    for (std::size_t i = 0; i < p.size(); ++i) s += cross(p[i], p[(i + 1) % p.size()]);
    return s;
}

inline Scalar area(const Polygon& p) { return twice_area(p) * Scalar(Rational(1, 2)); }

/// Counterclockwise, strictly convex (no three consecutive collinear vertices), positive area.
inline bool is_strictly_convex_ccw(const Polygon& p) {
    if (p.size() < 3) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Vec2& a = p[i];
        const Vec2& b = p[(i + 1) % p.size()];
        const Vec2& c = p[(i + 2) % p.size()];
        if (cross(b - a, c - b).sign() <= 0) return false;
    }
    return twice_area(p).sign() > 0;
}

/// Side of q relative to the directed edge a->b: +1 left (inside for ccw), 0 on the line, -1 right.
inline int side(const Vec2& a, const Vec2& b, const Vec2& q) { return cross(b - a, q - a).sign(); }

namespace detail {

inline bool some_vertex_strictly_inside_every_edge(const Polygon& p, const Polygon& q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Vec2& a = p[i];
        const Vec2& b = p[(i + 1) % p.size()];
        bool any = false;
        for (const auto& v : q)
            if (side(a, b, v) > 0) {
                any = true;
                break;
            }
        if (!any) return false;
    }
    return true;
}

}  // namespace detail

/// Interiors of two convex ccw polygons intersect iff no edge line of either weakly separates them.
inline bool interiors_intersect(const Polygon& p, const Polygon& q) {
    return detail::some_vertex_strictly_inside_every_edge(p, q) && detail::some_vertex_strictly_inside_every_edge(q, p);
}

/// Every vertex of q lies in the closed convex polygon p.
inline bool contains_polygon(const Polygon& p, const Polygon& q) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (const auto& v : q)
            if (side(p[i], p[(i + 1) % p.size()], v) < 0) return false;
    return true;
}

/// Sutherland-Hodgman clipping of a convex subject by a convex ccw clip polygon.
inline Polygon clip_convex(const Polygon& subject, const Polygon& clip) {
    Polygon out = subject;
    for (std::size_t i = 0; i < clip.size() && !out.empty(); ++i) {
        const Vec2& a = clip[i];
        const Vec2& b = clip[(i + 1) % clip.size()];
        Polygon in = std::move(out);
        out.clear();
        for (std::size_t j = 0; j < in.size(); ++j) {
            const Vec2& p = in[j];
            const Vec2& q = in[(j + 1) % in.size()];
            Scalar sp = cross(b - a, p - a), sq = cross(b - a, q - a);
            if (sp.sign() >= 0) out.push_back(p);
            if ((sp.sign() > 0 && sq.sign() < 0) || (sp.sign() < 0 && sq.sign() > 0)) {
                Scalar t = sp / (sp - sq);
                out.push_back(p + t * (q - p));
            }
        }
    }
    return out;
}

inline Scalar intersection_area(const Polygon& p, const Polygon& q) {
    Polygon c = clip_convex(p, q);
    return c.size() < 3 ? Scalar(0) : area(c);
}

}  // namespace pdstile
