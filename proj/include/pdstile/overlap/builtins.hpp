#pragma once

#include <string>
#include <vector>

#include "pdstile/overlap/planar.hpp"

namespace pdstile {

/// A built-in planar example: substitution, periodic patch, default shift and optional certificate.
struct PlanarExample {
    PlanarSubstitution substitution;
    PeriodicTiling tiling;
    Vec2 v;
    std::optional<std::string> gr_certificate;
};

namespace detail {

inline Scalar sqrt2_half() { return Scalar(Rational(0), Rational(1, 2), BigInt(2)); }

/// a + b·√2/2
inline Scalar oct(long a, long b) { return Scalar(a) + Scalar(b) * sqrt2_half(); }

inline Vec2 oct_vec(long xa, long xb, long ya, long yb) { return {oct(xa, xb), oct(ya, yb)}; }

inline Mat2 eighth_turn(int k) {
    const Scalar s = sqrt2_half();
    Mat2 r{s, -s, s, s};
    Mat2 m = Mat2::scalar(Scalar(1));
    for (int i = 0; i < ((k % 8) + 8) % 8; ++i) m = r * m;
    return m;
}

enum class OctFamily { Rhombus, Tau, TauPrime };

struct OctTile {
    OctFamily family;
    int turn;  // rhombi 0..3, triangles 0..7
    Vec2 t;
};

inline std::size_t oct_index(OctFamily f, int turn) {
    switch (f) {
        case OctFamily::Rhombus: return static_cast<std::size_t>(turn);
        case OctFamily::Tau: return 4 + static_cast<std::size_t>(turn);
        case OctFamily::TauPrime: return 12 + static_cast<std::size_t>(turn);
    }
    return 0;
}

}  // namespace detail

/// Octagonal (Ammann-Beenker type) substitution: rhombi ρ_0..ρ_3 (indices 0..3), marked
/// triangles τ_0..τ_7 (4..11) and τ'_0..τ'_7 (12..19). Λ = (1+√2)I.
inline PlanarSubstitution octagonal_substitution() {
    using detail::oct_vec;
    using detail::OctFamily;
    PlanarSubstitution ps;
    ps.name = "octagonal";
    const Polygon rho0 = {oct_vec(0, 0, 0, 0), oct_vec(1, 0, 0, 0), oct_vec(1, 1, 0, 1), oct_vec(0, 1, 0, 1)};
    const Polygon tau0 = {oct_vec(0, 0, 0, 0), oct_vec(1, 0, 0, 0), oct_vec(1, 0, 1, 0)};
    for (int k = 0; k < 4; ++k)
        ps.prototiles.push_back({k, "rho" + std::to_string(k), transform(detail::eighth_turn(k), rho0)});
    for (int k = 0; k < 8; ++k)
        ps.prototiles.push_back({4 + k, "tau" + std::to_string(k), transform(detail::eighth_turn(k), tau0)});
    for (int k = 0; k < 8; ++k)
        ps.prototiles.push_back({12 + k, "tau" + std::to_string(k) + "'", transform(detail::eighth_turn(k), tau0)});
    const Scalar lambda = Scalar(1) + Scalar(2) * detail::sqrt2_half();
    ps.expansion = Mat2::scalar(lambda);

    // Rules for ρ_0, τ_0, τ'_0; the rest are rotations.
    const std::vector<detail::OctTile> rule_rho0 = {
        {OctFamily::Rhombus, 0, oct_vec(0, 0, 0, 0)},   {OctFamily::Rhombus, 0, oct_vec(1, 2, 1, 0)},
        {OctFamily::Rhombus, 2, oct_vec(1, 2, 0, 0)},   {OctFamily::TauPrime, 0, oct_vec(0, 1, 0, 1)},
        {OctFamily::Tau, 3, oct_vec(1, 2, 0, 0)},       {OctFamily::TauPrime, 4, oct_vec(2, 2, 1, 0)},
        {OctFamily::Tau, 7, oct_vec(1, 1, 1, 1)},
    };
    const std::vector<detail::OctTile> rule_tau0 = {
        {OctFamily::Rhombus, 0, oct_vec(0, 0, 0, 0)}, {OctFamily::Rhombus, 2, oct_vec(1, 2, 0, 0)},
        {OctFamily::TauPrime, 0, oct_vec(0, 1, 0, 1)}, {OctFamily::Tau, 3, oct_vec(1, 2, 0, 0)},
        {OctFamily::Tau, 5, oct_vec(1, 2, 1, 2)},
    };
    const std::vector<detail::OctTile> rule_tau0p = {
        {OctFamily::Rhombus, 1, oct_vec(1, 1, 0, 1)}, {OctFamily::Rhombus, 3, oct_vec(1, 2, 0, 0)},
        {OctFamily::Tau, 0, oct_vec(0, 1, 0, 1)},     {OctFamily::TauPrime, 3, oct_vec(0, 2, 0, 0)},
        {OctFamily::TauPrime, 5, oct_vec(1, 2, 0, 2)},
    };
    // r^k(X_j + t) = X_{j+k} + r^k t; a rhombus turned by π is its own support shifted back by
    // the sum of its edge vectors.
    auto rotate_rule = [&](const std::vector<detail::OctTile>& rule, int k) {
        const Mat2 r = detail::eighth_turn(k);
        std::vector<RuleTile> out;
        for (const auto& tile : rule) {
            Vec2 t = r * tile.t;
            int turn = (tile.turn + k) % 8;
            if (tile.family == OctFamily::Rhombus && turn >= 4) {
                turn -= 4;
                t = t - detail::eighth_turn(turn) * oct_vec(1, 1, 0, 1);
            }
            out.push_back({detail::oct_index(tile.family, turn), t});
        }
        return out;
    };
    for (int k = 0; k < 4; ++k) ps.rules.push_back(rotate_rule(rule_rho0, k));
    for (int k = 0; k < 8; ++k) ps.rules.push_back(rotate_rule(rule_tau0, k));
    for (int k = 0; k < 8; ++k) ps.rules.push_back(rotate_rule(rule_tau0p, k));
    return ps;
}

/// Q = {τ_0, τ'_4 + (1,1)}, the unit square, with lattice Z²; v = (1 - √2/2, √2/2).
inline PlanarExample octagonal_example() {
    PlanarExample ex;
    ex.substitution = octagonal_substitution();
    ex.tiling.patch = {{detail::oct_index(detail::OctFamily::Tau, 0), detail::oct_vec(0, 0, 0, 0)},
                       {detail::oct_index(detail::OctFamily::TauPrime, 4), detail::oct_vec(1, 0, 1, 0)}};
    ex.tiling.v1 = detail::oct_vec(1, 0, 0, 0);
    ex.tiling.v2 = detail::oct_vec(0, 0, 1, 0);
    ex.v = detail::oct_vec(1, -1, 0, 1);
    return ex;
}

/// Table substitution: dominoes [0,2]x[0,1] and [0,1]x[0,2], Λ = 2I. Each domino inflates to a
/// doubled domino split into two parallel dominoes flanked by two perpendicular ones.
inline PlanarSubstitution table_substitution() {
    PlanarSubstitution ps;
    ps.name = "table";
    auto rect = [](long w, long h) { return Polygon{{Scalar(0), Scalar(0)}, {Scalar(w), Scalar(0)}, {Scalar(w), Scalar(h)}, {Scalar(0), Scalar(h)}}; };
    ps.prototiles.push_back({1, "rho1", rect(2, 1)});
    ps.prototiles.push_back({2, "rho2", rect(1, 2)});
    ps.expansion = Mat2::scalar(Scalar(2));
    auto at = [](long x, long y) { return Vec2{Scalar(x), Scalar(y)}; };
    ps.rules.push_back({{1, at(0, 0)}, {0, at(1, 0)}, {0, at(1, 1)}, {1, at(3, 0)}});
    ps.rules.push_back({{0, at(0, 0)}, {1, at(0, 1)}, {1, at(1, 1)}, {0, at(0, 3)}});
    return ps;
}

/// Q = {ρ_1}, lattice (2,0), (0,1), v = (1,0). The certificate records why v is a return vector.
inline PlanarExample table_example() {
    PlanarExample ex;
    ex.substitution = table_substitution();
    ex.tiling.patch = {{0, Vec2{Scalar(0), Scalar(0)}}};
    ex.tiling.v1 = {Scalar(2), Scalar(0)};
    ex.tiling.v2 = {Scalar(0), Scalar(1)};
    ex.v = {Scalar(1), Scalar(0)};
    ex.gr_certificate = "v = (1,0) is a return vector: the subdivision of rho2 places two rho2 tiles at (0,1) and (1,1)";
    return ex;
}

}  // namespace pdstile
