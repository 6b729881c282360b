#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pdstile/overlap/planar.hpp"

namespace pdstile {

/// A pair of tiles up to a common translation: type_a at the origin, type_b at `offset`.
struct Overlap {
    std::size_t type_a = 0, type_b = 0;
    Vec2 offset;

    bool is_coincidence() const { return type_a == type_b && offset.is_zero(); }

    friend bool operator==(const Overlap& x, const Overlap& y) {
        return x.type_a == y.type_a && x.type_b == y.type_b && x.offset == y.offset;
    }
    friend bool operator<(const Overlap& x, const Overlap& y) {
        if (x.type_a != y.type_a) return x.type_a < y.type_a;
        if (x.type_b != y.type_b) return x.type_b < y.type_b;
        return key_less(x.offset, y.offset);
    }
};

inline Overlap canonical_overlap(const PlacedTile& a, const PlacedTile& b) {
    return {a.type, b.type, b.position - a.position};
}

inline Overlap canonical_overlap(const Overlap& o) { return canonical_overlap({o.type_a, Vec2{}}, {o.type_b, o.offset}); }

inline std::string to_string(const PlanarSubstitution& ps, const Overlap& o) {
    return "{" + ps.prototiles.at(o.type_a).label + ", " + ps.prototiles.at(o.type_b).label + " @ " + o.offset.to_string() + "}";
}

inline bool is_overlap(const PlanarSubstitution& ps, const Overlap& o) {
    return interiors_intersect(ps.prototiles.at(o.type_a).polygon, translate(ps.prototiles.at(o.type_b).polygon, o.offset));
}

namespace detail {

inline double radius(const Polygon& p) {
    double r = 0;
    for (const auto& v : p) r = std::max(r, std::hypot(v.x.to_double(), v.y.to_double()));
    return r;
}

}  // namespace detail

/// Pairs (a, b) with a in Q and b in Q̄ - v whose interiors meet. Doubles only bound the lattice
/// window that is scanned; each candidate pair is decided exactly.
inline std::vector<std::pair<PlacedTile, PlacedTile>> meeting_tiles(const PlanarSubstitution& ps, const PeriodicTiling& t, const Vec2& v) {
    const double d = std::abs(cross(t.v1, t.v2).to_double());
    const double inv_norm =
        std::sqrt(t.v1.x.to_double() * t.v1.x.to_double() + t.v1.y.to_double() * t.v1.y.to_double() +
                  t.v2.x.to_double() * t.v2.x.to_double() + t.v2.y.to_double() * t.v2.y.to_double()) / d;
    std::vector<std::pair<PlacedTile, PlacedTile>> out;
    for (const auto& a : t.patch)
        for (const auto& b : t.patch) {
            // b + k - v meets a only if |k - w| is small in lattice coordinates, w = coords(a - b + v).
            Vec2 w = a.position - b.position + v;
            auto [c1, c2] = lattice_coordinates(w, t.v1, t.v2);
            const double reach = (detail::radius(ps.prototiles[a.type].polygon) + detail::radius(ps.prototiles[b.type].polygon) + 1) * inv_norm + 1;
            const long lo1 = static_cast<long>(std::floor(c1.to_double() - reach)), hi1 = static_cast<long>(std::ceil(c1.to_double() + reach));
            const long lo2 = static_cast<long>(std::floor(c2.to_double() - reach)), hi2 = static_cast<long>(std::ceil(c2.to_double() + reach));
            for (long k1 = lo1; k1 <= hi1; ++k1)
                for (long k2 = lo2; k2 <= hi2; ++k2) {
                    PlacedTile moved{b.type, b.position + Scalar(k1) * t.v1 + Scalar(k2) * t.v2 - v};
                    if (interiors_intersect(ps.support(a), ps.support(moved))) out.emplace_back(a, moved);
                }
        }
    return out;
}

/// Overlap classes between Q̄ and Q̄ - v.
inline std::vector<Overlap> initial_overlaps(const PlanarSubstitution& ps, const PeriodicTiling& t, const Vec2& v) {
    std::set<Overlap> found;
    for (const auto& [a, b] : meeting_tiles(ps, t, v)) found.insert(canonical_overlap(a, b));
    return {found.begin(), found.end()};
}

/// Substitute both tiles and keep every pair of image tiles whose interiors meet.
inline std::vector<Overlap> overlap_successors(const PlanarSubstitution& ps, const Overlap& o) {
    std::vector<PlacedTile> as = ps.substitute(PlacedTile{o.type_a, Vec2{}});
    std::vector<PlacedTile> bs = ps.substitute(PlacedTile{o.type_b, o.offset});
    std::set<Overlap> out;
    for (const auto& a : as) {
        Polygon pa = ps.support(a);
        for (const auto& b : bs)
            if (interiors_intersect(pa, ps.support(b))) out.insert(canonical_overlap(a, b));
    }
    return {out.begin(), out.end()};
}

struct OverlapGraph {
    std::vector<Overlap> nodes;
    std::map<Overlap, std::size_t> index;
    std::vector<std::vector<std::size_t>> edges;
    std::vector<bool> expanded;
    std::vector<std::vector<std::size_t>> stages;  // stage k: classes seen between Φ^k(Q̄) and Φ^k(Q̄ - v)
    std::optional<std::size_t> stabilization_depth;  // first k with stage k+1 inside stages 0..k
    bool capped = false;
    std::vector<int> steps_to_coincidence;  // -1 when no coincidence is reachable

    bool is_coincidence(std::size_t i) const { return nodes[i].is_coincidence(); }
    bool reaches_coincidence(std::size_t i) const { return steps_to_coincidence[i] >= 0; }

    bool all_reach_coincidence() const {
        return std::all_of(steps_to_coincidence.begin(), steps_to_coincidence.end(), [](int s) { return s >= 0; });
    }
    std::size_t coincidence_count() const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i) n += is_coincidence(i);
        return n;
    }
    int max_steps_to_coincidence() const {
        int m = 0;
        for (int s : steps_to_coincidence) m = std::max(m, s);
        return m;
    }
    /// Every class of stage `later` already occurs in stage `earlier`.
    bool stage_contained(std::size_t later, std::size_t earlier) const {
        const auto& a = stages.at(later);
        const auto& b = stages.at(earlier);
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
};

namespace detail {

inline std::size_t intern(OverlapGraph& g, const Overlap& o) {
    auto [it, inserted] = g.index.emplace(o, g.nodes.size());
    if (inserted) {
        g.nodes.push_back(o);
        g.edges.emplace_back();
        g.expanded.push_back(false);
    }
    return it->second;
}

inline void compute_reachability(OverlapGraph& g) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<std::size_t>> reverse(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : g.edges[i]) reverse[j].push_back(i);
    g.steps_to_coincidence.assign(n, -1);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i)
        if (g.is_coincidence(i)) {
            g.steps_to_coincidence[i] = 0;
            queue.push_back(i);
        }
    while (!queue.empty()) {
        std::size_t j = queue.front();
        queue.pop_front();
        for (std::size_t i : reverse[j])
            if (g.steps_to_coincidence[i] < 0 && g.expanded[i]) {
                g.steps_to_coincidence[i] = g.steps_to_coincidence[j] + 1;
                queue.push_back(i);
            }
    }
}

}  // namespace detail

/// Stage-by-stage closure. Stops once a stage repeats (the union is then closed) and at
/// least `min_stages` stages exist, or when the number of classes exceeds `cap`.
inline OverlapGraph overlap_closure(const PlanarSubstitution& ps, const std::vector<Overlap>& seeds, std::size_t cap = 50000,
                                    std::size_t min_stages = 5) {
    OverlapGraph g;
    std::vector<std::size_t> stage;
    for (const auto& s : seeds) stage.push_back(detail::intern(g, s));
    std::sort(stage.begin(), stage.end());
    stage.erase(std::unique(stage.begin(), stage.end()), stage.end());
    std::set<std::vector<std::size_t>> seen_stages;
    std::vector<bool> in_union(g.nodes.size(), false);
    for (std::size_t i : stage) in_union[i] = true;
    while (true) {
        g.stages.push_back(stage);
        const bool repeat = !seen_stages.insert(stage).second;
        if (repeat && g.stages.size() >= min_stages) break;
        std::set<std::size_t> next;
        for (std::size_t i : stage) {
            if (!g.expanded[i]) {
                for (const auto& o : overlap_successors(ps, g.nodes[i])) {
                    std::size_t j = detail::intern(g, o);
                    g.edges[i].push_back(j);
                }
                g.expanded[i] = true;
                if (g.nodes.size() > cap) {
                    g.capped = true;
                    break;
                }
            }
            next.insert(g.edges[i].begin(), g.edges[i].end());
        }
        if (g.capped) break;
        in_union.resize(g.nodes.size(), false);
        bool fresh = false;
        for (std::size_t j : next)
            if (!in_union[j]) {
                fresh = true;
                in_union[j] = true;
            }
        if (!fresh && !g.stabilization_depth) g.stabilization_depth = g.stages.size() - 1;
        stage.assign(next.begin(), next.end());
    }
    detail::compute_reachability(g);
    return g;
}

enum class OverlapKind { SufficientForPds, RefutesPds, Inconclusive, CapExceeded };

inline const char* to_string(OverlapKind k) {
    switch (k) {
        case OverlapKind::SufficientForPds: return "SufficientForPds";
        case OverlapKind::RefutesPds: return "RefutesPds";
        case OverlapKind::Inconclusive: return "Inconclusive";
        case OverlapKind::CapExceeded: return "CapExceeded";
    }
    return "?";
}

struct OverlapVerdict {
    OverlapKind kind = OverlapKind::Inconclusive;
    OverlapGraph graph;
    std::size_t independence_rank = 0;
    std::optional<std::string> gr_certificate;
    std::vector<Overlap> seeds;
    std::vector<std::string> reasons;
};

/// Certificate when v is completely rationally independent and every class leads to a
/// coincidence; refutation when some class never does and v is certified to be a return vector.
inline OverlapVerdict pds_verdict_2d(const PlanarSubstitution& ps, const PeriodicTiling& t, const Vec2& v,
                                     std::optional<std::string> gr_certificate = std::nullopt, std::size_t cap = 50000) {
    if (auto r = validate_substitution(ps); !r.ok) throw InputError("invalid substitution: " + r.witness);
    if (auto r = validate_tiling(ps, t); !r.ok) throw InputError("invalid periodic patch: " + r.witness);
    OverlapVerdict out;
    out.gr_certificate = std::move(gr_certificate);
    out.independence_rank = independence_rank(v, t.v1, t.v2);
    out.seeds = initial_overlaps(ps, t, v);
    out.graph = overlap_closure(ps, out.seeds, cap);
    if (out.graph.capped) {
        out.kind = OverlapKind::CapExceeded;
        out.reasons.push_back("more than " + std::to_string(cap) + " overlap classes");
        return out;
    }
    const bool independent = out.independence_rank == 2;
    const bool all = out.graph.all_reach_coincidence();
    if (!independent) out.reasons.push_back("independence");
    if (!all) out.reasons.push_back("some overlap never leads to coincidence");
    if (independent && all)
        out.kind = OverlapKind::SufficientForPds;
    else if (!all && out.gr_certificate)
        out.kind = OverlapKind::RefutesPds;
    else
        out.kind = OverlapKind::Inconclusive;
    return out;
}

}  // namespace pdstile
