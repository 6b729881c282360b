#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "pdstile/io/json_io.hpp"
#include "pdstile/overlap/builtins.hpp"
#include "pdstile/overlap/overlap.hpp"
#include "pdstile/overlap/svg.hpp"

using namespace pdstile;

namespace {

struct P {
    double x, y;
};

std::vector<P> to_double(const Polygon& p) {
    std::vector<P> out;
    for (const auto& v : p) out.push_back({v.x.to_double(), v.y.to_double()});
    return out;
}

double cross3(P o, P a, P b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool inside(const std::vector<P>& poly, P q) {
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (cross3(poly[i], poly[(i + 1) % poly.size()], q) < -1e-12) return false;
    return true;
}

// Oracle: the intersection of two convex polygons is the hull of the vertices of each lying
// in the other together with all edge crossings.
double hull_intersection_area(const Polygon& pa, const Polygon& pb) {
    const auto a = to_double(pa), b = to_double(pb);
    std::vector<P> pts;
    for (auto q : a)
        if (inside(b, q)) pts.push_back(q);
    for (auto q : b)
        if (inside(a, q)) pts.push_back(q);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            P p = a[i], r{a[(i + 1) % a.size()].x - p.x, a[(i + 1) % a.size()].y - p.y};
            P q = b[j], s{b[(j + 1) % b.size()].x - q.x, b[(j + 1) % b.size()].y - q.y};
            double den = r.x * s.y - r.y * s.x;
            if (std::abs(den) < 1e-14) continue;
            double t = ((q.x - p.x) * s.y - (q.y - p.y) * s.x) / den;
            double u = ((q.x - p.x) * r.y - (q.y - p.y) * r.x) / den;
            if (t >= -1e-12 && t <= 1 + 1e-12 && u >= -1e-12 && u <= 1 + 1e-12) pts.push_back({p.x + t * r.x, p.y + t * r.y});
        }
    if (pts.size() < 3) return 0;
    std::sort(pts.begin(), pts.end(), [](P l, P r) { return l.x < r.x || (l.x == r.x && l.y < r.y); });
    std::vector<P> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    double twice = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) twice += h[i].x * h[i + 1].y - h[i + 1].x * h[i].y;
    return twice / 2;
}

bool oracle_meets(const Polygon& a, const Polygon& b) { return hull_intersection_area(a, b) > 1e-9; }

double oracle_area(const Polygon& p) { return hull_intersection_area(p, p); }

// Oracle: classes between tile lists `as` and `bs`, decided by hull area.
std::set<Overlap> oracle_classes(const PlanarSubstitution& ps, const std::vector<PlacedTile>& as, const std::vector<PlacedTile>& bs) {
    std::set<Overlap> out;
    for (const auto& a : as)
        for (const auto& b : bs)
            if (oracle_meets(ps.support(a), ps.support(b))) out.insert(canonical_overlap(a, b));
    return out;
}

// Tiles of Q̄ - v with lattice coordinates in [-r, r]².
std::vector<PlacedTile> shifted_window(const PeriodicTiling& t, const Vec2& v, long r) {
    std::vector<PlacedTile> out;
    for (long i = -r; i <= r; ++i)
        for (long j = -r; j <= r; ++j)
            for (const auto& p : t.patch) out.push_back({p.type, p.position + Scalar(i) * t.v1 + Scalar(j) * t.v2 - v});
    return out;
}

std::set<Overlap> stage_set(const OverlapGraph& g, std::size_t k) {
    std::set<Overlap> out;
    for (std::size_t i : g.stages.at(k)) out.insert(g.nodes[i]);
    return out;
}

Vec2 vec(long x, long y) { return {Scalar(x), Scalar(y)}; }

std::string test_dir() { return PDSTILE_TEST_DIR; }

}  // namespace

TEST(Validation, BuiltinsPassAndAgreeWithAreaOracle) {
    for (const auto& ps : {table_substitution(), octagonal_substitution()}) {
        auto r = validate_substitution(ps);
        EXPECT_TRUE(r.ok) << ps.name << ": " << r.witness;
        const double det = ps.expansion.det().to_double();
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const Polygon big = transform(ps.expansion, ps.prototiles[i].polygon);
            double covered = 0;
            for (std::size_t a = 0; a < ps.rules[i].size(); ++a) {
                const Polygon pa = translate(ps.prototiles[ps.rules[i][a].tile].polygon, ps.rules[i][a].translation);
                EXPECT_NEAR(hull_intersection_area(big, pa), oracle_area(pa), 1e-9) << ps.name << " rule " << i << " tile " << a;
                covered += oracle_area(pa);
                for (std::size_t b = a + 1; b < ps.rules[i].size(); ++b) {
                    const Polygon pb = translate(ps.prototiles[ps.rules[i][b].tile].polygon, ps.rules[i][b].translation);
                    EXPECT_LT(hull_intersection_area(pa, pb), 1e-9) << ps.name << " rule " << i;
                }
            }
            EXPECT_NEAR(covered, det * oracle_area(ps.prototiles[i].polygon), 1e-9) << ps.name << " rule " << i;
        }
    }
}

TEST(Validation, ShiftedTileIsReportedAsOverlap) {
    PlanarSubstitution ps = table_substitution();
    ps.rules[0][1].translation = ps.rules[0][1].translation + Vec2{Scalar(make_rational(1, 3)), Scalar(0)};
    auto r = validate_substitution(ps);
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.witness.find("overlaps"), std::string::npos) << r.witness;
}

TEST(Validation, BuiltinTilingsArePeriodic) {
    for (const auto& ex : {table_example(), octagonal_example()}) {
        auto r = validate_tiling(ex.substitution, ex.tiling);
        EXPECT_TRUE(r.ok) << r.witness;
    }
    PlanarExample ex = table_example();
    ex.tiling.v1 = vec(1, 0);
    EXPECT_FALSE(validate_tiling(ex.substitution, ex.tiling).ok);
}

TEST(Independence, Examples) {
    const Vec2 e1 = vec(1, 0), e2 = vec(0, 1);
    EXPECT_TRUE(complete_rational_independence(octagonal_example().v, e1, e2));
    EXPECT_FALSE(complete_rational_independence(vec(1, 0), e1, e2));
    EXPECT_FALSE(complete_rational_independence({Scalar(make_rational(1, 2)), Scalar(make_rational(1, 3))}, e1, e2));
    const Scalar r2 = Scalar(Rational(0), Rational(1), BigInt(2));
    EXPECT_EQ(independence_rank({r2, r2 + Scalar(1)}, e1, e2), 2u);
    EXPECT_EQ(independence_rank({r2, Scalar(3) * r2}, e1, e2), 1u);
    EXPECT_THROW(complete_rational_independence(vec(1, 0), e1, vec(2, 0)), DomainError);
}

TEST(InitialOverlaps, TableHasTwoHorizontalClasses) {
    const auto ex = table_example();
    auto seeds = initial_overlaps(ex.substitution, ex.tiling, ex.v);
    std::vector<Overlap> expected = {{0, 0, vec(-1, 0)}, {0, 0, vec(1, 0)}};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(seeds, expected);
}

TEST(InitialOverlaps, ZeroShiftGivesOnlyCoincidences) {
    for (const auto& ex : {table_example(), octagonal_example()}) {
        auto seeds = initial_overlaps(ex.substitution, ex.tiling, Vec2{});
        EXPECT_EQ(seeds.size(), ex.tiling.patch.size());
        for (const auto& o : seeds) EXPECT_TRUE(o.is_coincidence());
    }
}

TEST(InitialOverlaps, MatchWindowOracle) {
    for (const auto& ex : {table_example(), octagonal_example()}) {
        auto seeds = initial_overlaps(ex.substitution, ex.tiling, ex.v);
        auto expected = oracle_classes(ex.substitution, ex.tiling.patch, shifted_window(ex.tiling, ex.v, 3));
        EXPECT_EQ(std::set<Overlap>(seeds.begin(), seeds.end()), expected) << ex.substitution.name;
    }
    const auto oct = octagonal_example();
    EXPECT_EQ(initial_overlaps(oct.substitution, oct.tiling, oct.v).size(), 10u);
}

TEST(Successors, CoincidencesStayCoincident) {
    for (const auto& ps : {table_substitution(), octagonal_substitution()})
        for (std::size_t i = 0; i < ps.size(); ++i) {
            auto next = overlap_successors(ps, {i, i, Vec2{}});
            EXPECT_FALSE(next.empty());
            for (const auto& o : next) EXPECT_TRUE(o.is_coincidence()) << to_string(ps, o);
        }
}

TEST(Successors, TableGolden) {
    // Worked by hand from the rule: Φ(ρ1) = ρ2, ρ1, ρ1 + (0,1), ρ2 + (2,0) over [0,4]x[0,2];
    // the partner sits at (2,0).
    const auto ps = table_substitution();
    auto next = overlap_successors(ps, {0, 0, vec(1, 0)});
    std::vector<Overlap> expected = {{0, 1, vec(1, 0)}, {0, 1, vec(1, -1)}, {1, 0, vec(0, 0)}, {1, 0, vec(0, 1)}};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(next, expected);
    auto oracle = oracle_classes(ps, ps.substitute(PlacedTile{0, Vec2{}}), ps.substitute(PlacedTile{0, vec(1, 0)}));
    EXPECT_EQ(std::set<Overlap>(next.begin(), next.end()), oracle);
}

TEST(Successors, StagesMatchDirectInflation) {
    for (const auto& ex : {table_example(), octagonal_example()}) {
        const auto& ps = ex.substitution;
        auto g = overlap_closure(ps, initial_overlaps(ps, ex.tiling, ex.v));
        const auto window = shifted_window(ex.tiling, ex.v, 2);
        for (int k = 1; k <= 2; ++k)
            EXPECT_EQ(stage_set(g, static_cast<std::size_t>(k)), oracle_classes(ps, ps.substitute(ex.tiling.patch, k), ps.substitute(window, k)))
                << ps.name << " stage " << k;
    }
}

TEST(Closure, TableNeverCoincides) {
    const auto ex = table_example();
    auto g = overlap_closure(ex.substitution, initial_overlaps(ex.substitution, ex.tiling, ex.v));
    EXPECT_FALSE(g.capped);
    EXPECT_EQ(g.nodes.size(), 12u);
    ASSERT_TRUE(g.stabilization_depth);
    EXPECT_EQ(*g.stabilization_depth, 2u);
    EXPECT_EQ(g.coincidence_count(), 0u);
    EXPECT_FALSE(g.all_reach_coincidence());
}

TEST(Closure, OctagonalGolden) {
    const auto ex = octagonal_example();
    auto g = overlap_closure(ex.substitution, initial_overlaps(ex.substitution, ex.tiling, ex.v));
    EXPECT_FALSE(g.capped);
    std::vector<std::size_t> sizes;
    for (std::size_t k = 0; k < 4; ++k) sizes.push_back(g.stages[k].size());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{10, 28, 76, 86}));
    EXPECT_EQ(g.nodes.size(), 161u);
    EXPECT_TRUE(g.all_reach_coincidence());
    EXPECT_EQ(g.max_steps_to_coincidence(), 3);
    ASSERT_TRUE(g.stabilization_depth);
    EXPECT_EQ(*g.stabilization_depth, 3u);
}

TEST(Closure, SingleCoincidenceSeed) {
    const auto ps = octagonal_substitution();
    auto g = overlap_closure(ps, {{4, 4, Vec2{}}});
    for (std::size_t i = 0; i < g.nodes.size(); ++i) EXPECT_TRUE(g.is_coincidence(i));
    EXPECT_TRUE(g.all_reach_coincidence());
    EXPECT_EQ(g.max_steps_to_coincidence(), 0);
}

TEST(Closure, CapIsReported) {
    const auto ex = octagonal_example();
    auto g = overlap_closure(ex.substitution, initial_overlaps(ex.substitution, ex.tiling, ex.v), 20);
    EXPECT_TRUE(g.capped);
}

TEST(Verdict, Octagonal) {
    const auto ex = octagonal_example();
    auto v = pds_verdict_2d(ex.substitution, ex.tiling, ex.v);
    EXPECT_EQ(v.kind, OverlapKind::SufficientForPds);
    EXPECT_EQ(v.independence_rank, 2u);
    auto w = pds_verdict_2d(ex.substitution, ex.tiling, vec(1, 0));
    EXPECT_EQ(w.kind, OverlapKind::Inconclusive);
    EXPECT_NE(std::find(w.reasons.begin(), w.reasons.end(), "independence"), w.reasons.end());
}

TEST(Verdict, Table) {
    const auto ex = table_example();
    EXPECT_EQ(pds_verdict_2d(ex.substitution, ex.tiling, ex.v, ex.gr_certificate).kind, OverlapKind::RefutesPds);
    EXPECT_EQ(pds_verdict_2d(ex.substitution, ex.tiling, ex.v).kind, OverlapKind::Inconclusive);
    EXPECT_EQ(pds_verdict_2d(ex.substitution, ex.tiling, ex.v, ex.gr_certificate, 5).kind, OverlapKind::CapExceeded);
}

TEST(Verdict, InvalidInputThrows) {
    auto ex = table_example();
    ex.substitution.rules[0].pop_back();
    EXPECT_THROW(pds_verdict_2d(ex.substitution, ex.tiling, ex.v), InputError);
    ex = table_example();
    ex.tiling.patch.clear();
    EXPECT_THROW(pds_verdict_2d(ex.substitution, ex.tiling, ex.v), InputError);
}

TEST(Svg, EmptyCanvas) {
    OverlapGraph g;
    g.stages.emplace_back();
    const std::string s = overlaps_svg(table_substitution(), g, 0);
    EXPECT_EQ(s.rfind("<svg", 0), 0u);
    EXPECT_NE(s.find("</svg>"), std::string::npos);
    EXPECT_EQ(s.find("<polygon"), std::string::npos);
}

TEST(Svg, TableStageOneMatchesGolden) {
    const auto ex = table_example();
    const std::string s = stage_svg(ex.substitution, ex.tiling, ex.v, 1);
    EXPECT_EQ(s, stage_svg(ex.substitution, ex.tiling, ex.v, 1));
    EXPECT_EQ(s, read_text_file(test_dir() + "/golden/table_stage1.svg"));
}

TEST(Svg, OverlapGridHasTwoPolygonsPerClass) {
    const auto ex = octagonal_example();
    auto g = overlap_closure(ex.substitution, initial_overlaps(ex.substitution, ex.tiling, ex.v));
    const std::string s = overlaps_svg(ex.substitution, g, 0);
    std::size_t n = 0;
    for (std::size_t p = s.find("<polygon"); p != std::string::npos; p = s.find("<polygon", p + 1)) ++n;
    EXPECT_EQ(n, 2 * g.stages[0].size());
}

TEST(Svg, UnwritablePathThrows) {
    const auto ex = table_example();
    // A regular file as parent directory defeats even a privileged writer.
    const auto blocker = std::filesystem::temp_directory_path() / "pdstile_svg_blocker";
    std::ofstream(blocker) << "x";
    EXPECT_THROW(render_stage(ex.substitution, ex.tiling, ex.v, 1, (blocker / "x.svg").string()), InputError);
}

TEST(Json, PlanarRoundTrip) {
    for (const auto& ex : {table_example(), octagonal_example()}) {
        const Json j = planar_to_json(ex);
        const PlanarExample back = planar_from_json(parse_json_text(j.dump(), "test"));
        EXPECT_EQ(planar_to_json(back), j);
        ASSERT_EQ(back.substitution.size(), ex.substitution.size());
        for (std::size_t i = 0; i < ex.substitution.size(); ++i) {
            EXPECT_EQ(back.substitution.prototiles[i].polygon, ex.substitution.prototiles[i].polygon);
            ASSERT_EQ(back.substitution.rules[i].size(), ex.substitution.rules[i].size());
            for (std::size_t r = 0; r < ex.substitution.rules[i].size(); ++r) {
                EXPECT_EQ(back.substitution.rules[i][r].tile, ex.substitution.rules[i][r].tile);
                EXPECT_EQ(back.substitution.rules[i][r].translation, ex.substitution.rules[i][r].translation);
            }
        }
        EXPECT_EQ(back.v, ex.v);
        EXPECT_EQ(back.gr_certificate, ex.gr_certificate);
    }
}

TEST(Json, SubstitutionRoundTrip) {
    Substitution s = Substitution::from_strings(Alphabet({"a", "b", "c"}), {"ab", "ac", "a"});
    Substitution back = substitution_from_json(parse_json_text(substitution_to_json(s).dump(), "test"));
    EXPECT_EQ(substitution_to_json(back), substitution_to_json(s));
    for (Letter x = 0; x < 3; ++x) EXPECT_EQ(back.image(x), s.image(x));
}

TEST(Json, Errors) {
    try {
        parse_json_text("{\"alphabet\": [", "in.json");
        FAIL() << "no error";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos) << e.what();
    }
    EXPECT_THROW(substitution_from_json(parse_json_text(R"({"alphabet":["a","b"],"rules":{"a":"ab"}})", "t")), InputError);
    EXPECT_THROW(substitution_from_json(parse_json_text(R"({"alphabet":["a"],"rules":{"a":"ax"}})", "t")), InputError);
    EXPECT_THROW(planar_from_json(parse_json_text(R"({"prototiles":[],"expansion":[[1]],"rules":[]})", "t")), InputError);
    EXPECT_THROW(read_text_file("/nonexistent-dir/x.json"), InputError);
}
