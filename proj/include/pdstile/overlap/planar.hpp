#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdstile/algebra/linear_rank.hpp"
#include "pdstile/error.hpp"
#include "pdstile/overlap/geometry.hpp"

namespace pdstile {

struct PlanarPrototile {
    int id = 0;
    std::string label;
    Polygon polygon;  // convex, counterclockwise
};

struct RuleTile {
    std::size_t tile;  // prototile index
    Vec2 translation;
};

struct PlacedTile {
    std::size_t type;
    Vec2 position;
};

/// Prototiles are addressed by index; `id` is only a display handle.
struct PlanarSubstitution {
    std::string name;
    std::vector<PlanarPrototile> prototiles;
    Mat2 expansion;
    std::vector<std::vector<RuleTile>> rules;  // rules[i]: the patch replacing prototile i at the origin

    std::size_t size() const { return prototiles.size(); }

    Polygon support(const PlacedTile& t) const { return translate(prototiles.at(t.type).polygon, t.position); }

    /// Φ applied to a tile placed at x: rule tiles at Λx + u.
    std::vector<PlacedTile> substitute(const PlacedTile& t) const {
        std::vector<PlacedTile> out;
        Vec2 base = expansion * t.position;
        for (const auto& r : rules.at(t.type)) out.push_back({r.tile, base + r.translation});
        return out;
    }

    std::vector<PlacedTile> substitute(const std::vector<PlacedTile>& patch, int times = 1) const {
        std::vector<PlacedTile> cur = patch;
        for (int k = 0; k < times; ++k) {
            std::vector<PlacedTile> next;
            for (const auto& t : cur)
                for (auto& s : substitute(t)) next.push_back(std::move(s));
            cur = std::move(next);
        }
        return cur;
    }
};

struct ValidationReport {
    bool ok = true;
    std::string witness;  // first violation, empty when ok
};

/// Exact check that each rule patch tiles Λ·(prototile) with disjoint interiors.
inline ValidationReport validate_substitution(const PlanarSubstitution& ps) {
    auto fail = [](std::string w) { return ValidationReport{false, std::move(w)}; };
    if (ps.prototiles.empty()) return fail("no prototiles");
    if (ps.rules.size() != ps.size()) return fail("rule count differs from prototile count");
    const Scalar det = ps.expansion.det();
    if (det.sign() == 0) return fail("expansion is singular");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto& p = ps.prototiles[i];
        if (!is_strictly_convex_ccw(p.polygon)) return fail("prototile " + p.label + " is not a convex ccw polygon");
        Polygon big = transform(ps.expansion, p.polygon);
        Scalar total(0);
        const auto& rule = ps.rules[i];
        if (rule.empty()) return fail("prototile " + p.label + " has an empty rule");
        std::vector<Polygon> placed;
        for (const auto& r : rule) {
            if (r.tile >= ps.size()) return fail("rule of " + p.label + " names an unknown prototile");
            placed.push_back(translate(ps.prototiles[r.tile].polygon, r.translation));
        }
        for (std::size_t a = 0; a < placed.size(); ++a) {
            const std::string who = ps.prototiles[rule[a].tile].label + " at " + rule[a].translation.to_string();
            if (!contains_polygon(big, placed[a])) return fail("rule of " + p.label + ": " + who + " leaves the inflated support");
            for (std::size_t b = a + 1; b < placed.size(); ++b)
                if (interiors_intersect(placed[a], placed[b]))
                    return fail("rule of " + p.label + ": " + who + " overlaps " + ps.prototiles[rule[b].tile].label +
                                " at " + rule[b].translation.to_string());
            total += area(placed[a]);
        }
        Scalar expected = det * area(p.polygon);
        if (expected.sign() < 0) expected = -expected;
        if (total != expected)
            return fail("rule of " + p.label + " covers area " + total.to_string() + " of " + expected.to_string());
    }
    return {};
}

/// A finite patch Q with lattice L such that Q + L tiles the plane.
struct PeriodicTiling {
    std::vector<PlacedTile> patch;
    Vec2 v1, v2;

    Scalar covolume() const {
        Scalar c = cross(v1, v2);
        return c.sign() < 0 ? -c : c;
    }
};

inline ValidationReport validate_tiling(const PlanarSubstitution& ps, const PeriodicTiling& t) {
    auto fail = [](std::string w) { return ValidationReport{false, std::move(w)}; };
    if (t.patch.empty()) return fail("empty patch");
    if (cross(t.v1, t.v2).sign() == 0) return fail("degenerate lattice basis");
    Scalar total(0);
    for (const auto& p : t.patch) {
        if (p.type >= ps.size()) return fail("patch names an unknown prototile");
        total += area(ps.support(p));
    }
    if (total != t.covolume()) return fail("patch area " + total.to_string() + " differs from covolume " + t.covolume().to_string());
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
            Vec2 shift = Scalar(i) * t.v1 + Scalar(j) * t.v2;
            for (std::size_t a = 0; a < t.patch.size(); ++a)
                for (std::size_t b = 0; b < t.patch.size(); ++b) {
                    if (i == 0 && j == 0 && a >= b) continue;
                    PlacedTile moved{t.patch[b].type, t.patch[b].position + shift};
                    if (interiors_intersect(ps.support(t.patch[a]), ps.support(moved)))
                        return fail("patch tiles " + std::to_string(a) + " and " + std::to_string(b) + " overlap under shift (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
                }
        }
    return {};
}

/// Coordinates (a1, a2) of v in the basis v1, v2.
inline std::pair<Scalar, Scalar> lattice_coordinates(const Vec2& v, const Vec2& v1, const Vec2& v2) {
    Scalar det = cross(v1, v2);
    if (det.sign() == 0) throw DomainError("degenerate lattice basis");
    return {cross(v, v2) / det, cross(v1, v) / det};
}

inline std::size_t independence_rank(const Vec2& v, const Vec2& v1, const Vec2& v2) {
    auto [a1, a2] = lattice_coordinates(v, v1, v2);
    return q_linear_rank({a1, a2});
}

/// The coordinates of v in the basis are linearly independent over Q.
inline bool complete_rational_independence(const Vec2& v, const Vec2& v1, const Vec2& v2) {
    return independence_rank(v, v1, v2) == 2;
}

}  // namespace pdstile
