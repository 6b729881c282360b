#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pdstile/pdstile.hpp"

using namespace pdstile;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;
constexpr int kSchemaVersion = 1;

struct Options {
    std::size_t cap_bpa = 10000;
    std::size_t cap_overlap = 50000;
    std::string format = "text";
    bool dual_quotient = false;
    bool timings = false;
};

struct Report {
    Json doc = Json::object();
    std::ostringstream text;
    int exit_code = kExitClean;
};

bool is_file_input(const std::string& input) { return !is_builtin(input); }

Substitution load_substitution(const std::string& input) {
    if (!is_file_input(input)) return builtin_substitution(input);
    return substitution_from_json(parse_json_text(read_text_file(input), input));
}

PlanarExample load_planar(const std::string& input) {
    if (!is_file_input(input)) return builtin_planar(input);
    return planar_from_json(parse_json_text(read_text_file(input), input));
}

std::pair<std::string, std::string> split_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError("expected U,V but got '" + text + "'");
    return {text.substr(0, comma), text.substr(comma + 1)};
}

std::string matrix_text(const IntMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += "  [";
        for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " " : "") + m(r, c).get_str();
        out += "]\n";
    }
    return out;
}

Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        rows.push_back(row);
    }
    return rows;
}

Json pds_json(const PdsVerdict& v) {
    Json checks = Json::array();
    for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    Json out = {{"verdict", to_string(v.kind)}, {"rule", v.rule}, {"checks", checks}, {"failed", v.reasons}};
    if (v.independence_rank) out["independence_rank"] = *v.independence_rank;
    return out;
}

void pds_text(std::ostream& os, const PdsVerdict& v) {
    os << "verdict: " << to_string(v.kind) << " (" << v.rule << ")\n";
    for (const auto& c : v.checks) os << "  [" << (c.passed ? "ok" : "failed") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
}

int pds_exit(const PdsVerdict& v) {
    if (v.kind == PdsKind::PdsCertified) return kExitClean;
    if (v.bpa && v.bpa->kind == BpaKind::FiniteNoCoincidence) return kExitRefuted;
    return kExitInconclusive;
}

void cmd_analyze(const Options&, const std::string& input, Report& rep) {
    Substitution s = load_substitution(input);
    auto& os = rep.text;
    const IntMatrix& m = s.incidence();
    const bool primitive = is_primitive(s);
    IntPolynomial cp = char_poly(m);
    auto irr = is_irreducible_over_Q(cp);
    os << "substitution: " << s.to_string() << "\n";
    os << "incidence matrix:\n" << matrix_text(m);
    os << "primitive: " << (primitive ? "true" : "false") << "\n";
    os << "char poly: " << cp.to_string() << "\n";
    os << "irreducible: " << (irr.irreducible ? "true" : "false") << "\n";
    rep.doc["substitution"] = substitution_to_json(s);
    rep.doc["incidence"] = matrix_json(m);
    rep.doc["primitive"] = primitive;
    rep.doc["char_poly"] = cp.to_string();
    rep.doc["irreducible"] = irr.irreducible;
    if (!primitive) {
        os << "pisot: n/a (not primitive)\n";
        rep.doc["pisot"] = nullptr;
        return;
    }
    PerronData pd = perron_data(m);
    PisotReport pr = is_pisot(pd.minimal_polynomial);
    os << "dominant eigenvalue: root of " << pd.minimal_polynomial.to_string() << "\n";
    os << "pisot: " << (pr.pisot ? "true" : "false") << (pr.reason.empty() ? "" : " (" + pr.reason + ")") << "\n";
    Json omega = Json::array();
    os << "omega:";
    for (std::size_t i = 0; i < pd.omega.size(); ++i) {
        os << (i ? ", " : " ") << s.alphabet().name(static_cast<Letter>(i)) << " = " << pd.omega[i].to_string();
        omega.push_back(pd.omega[i].to_string());
    }
    os << "\n";
    rep.doc["minimal_polynomial"] = pd.minimal_polynomial.to_string();
    rep.doc["pisot"] = pr.pisot;
    rep.doc["pisot_reason"] = pr.reason;
    rep.doc["omega"] = omega;
}

void bpa_report(const Options& opt, const Substitution& s, const BpaVerdict& v, Report& rep) {
    auto& os = rep.text;
    const Alphabet& a = s.alphabet();
    const BpaClosure& c = v.closure;
    os << "verdict: " << to_string(v.kind) << (v.note.empty() ? "" : " (" + v.note + ")") << "\n";
    os << "closure: " << c.nodes.size() << " pairs, " << v.coincidence_nodes << " coincidences\n";
    Json pairs = Json::array();
    for (const auto& p : closure_pairs(c, opt.dual_quotient)) pairs.push_back(format_pair(a, p));
    os << "non-coincidence pairs" << (opt.dual_quotient ? " up to duals" : "") << " (" << pairs.size() << "):\n";
    for (const auto& p : pairs) os << "  " << p.get<std::string>() << "\n";
    Json table = Json::array();
    if (v.kind != BpaKind::CapExceeded) {
        os << "reachability:\n";
        for (std::size_t i = 0; i < c.nodes.size(); ++i) {
            const bool hit = v.reaches_coincidence[i];
            os << "  " << format_pair(a, c.nodes[i]) << "  depth " << c.depth[i] << "  " << (hit ? "reaches coincidence" : "no coincidence")
               << "\n";
            table.push_back({{"pair", format_pair(a, c.nodes[i])}, {"depth", c.depth[i]}, {"reaches_coincidence", hit}});
        }
    }
    rep.doc["verdict"] = to_string(v.kind);
    rep.doc["closure_size"] = c.nodes.size();
    rep.doc["coincidences"] = v.coincidence_nodes;
    rep.doc["dual_quotient"] = opt.dual_quotient;
    rep.doc["pairs"] = pairs;
    rep.doc["reachability"] = table;
    if (!v.note.empty()) rep.doc["note"] = v.note;
}

void cmd_bpa(const Options& opt, const std::string& input, const std::string& pair, Report& rep) {
    Substitution s = load_substitution(input);
    auto [u, w] = split_pair(pair);
    BalancedPair p{parse_word(s.alphabet(), u), parse_word(s.alphabet(), w)};
    if (p.u.empty() || !is_balanced(p, s.size())) throw InputError("pair (" + u + ", " + w + ") is not balanced");
    BpaVerdict v = bpa_run(s, p, {opt.cap_bpa});
    rep.doc["seed"] = format_pair(s.alphabet(), p);
    bpa_report(opt, s, v, rep);
    rep.exit_code = v.kind == BpaKind::TerminatesWithCoincidence ? kExitClean : v.kind == BpaKind::FiniteNoCoincidence ? kExitRefuted : kExitInconclusive;
}

void cmd_theorem(const Options& opt, const std::string& input, const std::string& u, const std::string& v, Report& rep) {
    Substitution s = load_substitution(input);
    PdsVerdict r = theorem_uv_vu(s, parse_word(s.alphabet(), u), parse_word(s.alphabet(), v), {opt.cap_bpa});
    pds_text(rep.text, r);
    rep.doc.update(pds_json(r));
    rep.exit_code = pds_exit(r);
}

void cmd_ar(const Options& opt, const std::string& word, int d, std::size_t prefix_bound, Report& rep) {
    PdsVerdict r = ar_pipeline(parse_word(Alphabet::numeric(d), word), d, {opt.cap_bpa}, prefix_bound);
    rep.text << "substitution: " << ar_substitution(parse_word(Alphabet::numeric(d), word), d).to_string() << "\n";
    pds_text(rep.text, r);
    rep.doc.update(pds_json(r));
    if (r.used_witness) {
        const Alphabet a = Alphabet::numeric(d);
        rep.text << "witness: P_" << r.used_witness->i + 1 << " = " << format_word(a, r.used_witness->p_i) << ", P_" << r.used_witness->j + 1
                 << " = " << format_word(a, r.used_witness->p_j) << "\n";
        rep.doc["witness"] = {format_word(a, r.used_witness->p_i), format_word(a, r.used_witness->p_j)};
    }
    rep.exit_code = pds_exit(r);
}

void cmd_rauzy_family(const Options& opt, const std::string& c, Report& rep) {
    RauzyFamilyReport r = rauzy_family_check(c, {opt.cap_bpa});
    const Alphabet& a = r.substitution.alphabet();
    auto& os = rep.text;
    os << "composition: " << c << "\n";
    os << "substitution: " << r.substitution.to_string() << "\n";
    os << "bpa: " << to_string(r.bpa.kind) << ", " << r.bpa.closure.nodes.size() << " pairs\n";
    os << "closure pairs up to duals: " << r.closure_pairs.size() << "\n";
    Json outside = Json::array();
    for (const auto& p : r.outside_list) outside.push_back(format_pair(a, p));
    if (outside.empty())
        os << "containment in list: confirmed\n";
    else
        for (const auto& p : outside) os << "outside list: " << p.get<std::string>() << "\n";
    rep.doc["composition"] = c;
    rep.doc["bpa"] = to_string(r.bpa.kind);
    rep.doc["closure_pairs"] = r.closure_pairs.size();
    rep.doc["outside_list"] = outside;
    rep.doc["contained"] = r.ok();
    rep.exit_code = r.ok() ? kExitClean : r.bpa.kind == BpaKind::CapExceeded ? kExitInconclusive : kExitRefuted;
}

void cmd_apcomplex(const Options&, const std::string& input, int K, std::size_t depth, Report& rep) {
    Substitution s = load_substitution(input);
    APComplexReport r = analyze_ap_complex(s, K, depth);
    auto& os = rep.text;
    os << "collared complex: " << r.collaring.graph.edge_count() << " edges, " << r.collaring.graph.vertex_count << " vertices, H1 rank "
       << r.basis.rank() << "\n";
    os << "f_* char poly: " << char_poly(r.f_star.matrix).to_string() << "\n";
    os << "nonzero eigenvalue product: " << r.eigenvalue_product.get_str() << "\n";
    os << "GR = " << r.gr.to_string() << "\n";
    os << "collared GR = " << r.collared_gr.to_string() << "\n";
    os << "return sample (depth " << depth << "): " << r.returns.sample.size() << " vectors, K = " << K << "\n";
    Json failures = Json::array();
    for (const auto& f : r.returns.failures) {
        os << "  not in GR: λ^" << f.k << " · " << f.v.to_string() << " = " << f.scaled.to_string() << "\n";
        failures.push_back({{"v", f.v.to_string()}, {"k", f.k}, {"scaled", f.scaled.to_string()}});
    }
    if (failures.empty()) os << "  every λ^k v lies in GR\n";
    rep.doc["h1_rank"] = r.basis.rank();
    rep.doc["f_star"] = matrix_json(r.f_star.matrix);
    rep.doc["eigenvalue_product"] = r.eigenvalue_product.get_str();
    rep.doc["gr"] = r.gr.to_string();
    rep.doc["collared_gr"] = r.collared_gr.to_string();
    rep.doc["K"] = K;
    rep.doc["sample_size"] = r.returns.sample.size();
    rep.doc["failures"] = failures;
    rep.exit_code = failures.empty() ? kExitClean : kExitRefuted;
}

Vec2 parse_vec(const std::string& text) {
    auto [x, y] = split_pair(text);
    auto scalar = [](std::string t) {
        // "a" is rational, "a:b" is a + b√2.
        const auto colon = t.find(':');
        if (colon == std::string::npos) return Scalar(parse_rational(t));
        return Scalar(parse_rational(t.substr(0, colon)), parse_rational(t.substr(colon + 1)), BigInt(2));
    };
    return {scalar(x), scalar(y)};
}

void cmd_overlap2d(const Options& opt, const std::string& input, const std::string& v_text, const std::string& svg_dir, Report& rep) {
    PlanarExample ex = load_planar(input);
    if (!v_text.empty()) ex.v = parse_vec(v_text);
    auto sv = validate_substitution(ex.substitution);
    if (!sv.ok) throw InputError("invalid substitution: " + sv.witness);
    OverlapVerdict r = pds_verdict_2d(ex.substitution, ex.tiling, ex.v, ex.gr_certificate, opt.cap_overlap);
    const OverlapGraph& g = r.graph;
    auto& os = rep.text;
    os << "substitution: " << ex.substitution.name << " (" << ex.substitution.size() << " prototiles)\n";
    os << "v = " << ex.v.to_string() << ", independence rank " << r.independence_rank << "\n";
    os << "seed overlaps: " << r.seeds.size() << "\n";
    os << "overlap classes: " << g.nodes.size() << ", coincidences " << g.coincidence_count() << "\n";
    os << "stage sizes:";
    Json stages = Json::array();
    for (const auto& s : g.stages) {
        os << " " << s.size();
        stages.push_back(s.size());
    }
    os << "\n";
    if (g.stabilization_depth) os << "stabilization depth: " << *g.stabilization_depth << "\n";
    if (!g.capped) {
        if (g.all_reach_coincidence())
            os << "every class reaches a coincidence within " << g.max_steps_to_coincidence() << " inflations\n";
        else {
            std::size_t stuck = 0;
            for (std::size_t i = 0; i < g.nodes.size(); ++i) stuck += !g.reaches_coincidence(i);
            os << stuck << " classes never reach a coincidence\n";
        }
    }
    if (r.gr_certificate) os << "certificate: " << *r.gr_certificate << "\n";
    os << "verdict: " << to_string(r.kind) << "\n";
    for (const auto& why : r.reasons) os << "  " << why << "\n";
    rep.doc["verdict"] = to_string(r.kind);
    rep.doc["v"] = detail::vec_json(ex.v);
    rep.doc["independence_rank"] = r.independence_rank;
    rep.doc["seeds"] = r.seeds.size();
    rep.doc["classes"] = g.nodes.size();
    rep.doc["coincidences"] = g.coincidence_count();
    rep.doc["stage_sizes"] = stages;
    rep.doc["stabilization_depth"] = g.stabilization_depth ? Json(*g.stabilization_depth) : Json(nullptr);
    rep.doc["all_reach_coincidence"] = !g.capped && g.all_reach_coincidence();
    rep.doc["max_steps_to_coincidence"] = !g.capped && g.all_reach_coincidence() ? Json(g.max_steps_to_coincidence()) : Json(nullptr);
    rep.doc["reasons"] = r.reasons;
    if (r.gr_certificate) rep.doc["certificate"] = *r.gr_certificate;
    if (!svg_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(svg_dir, ec);
        Json files = Json::array();
        const std::size_t last = std::min<std::size_t>(g.stages.size(), 4);
        for (std::size_t k = 0; k < last; ++k) {
            const std::string path = svg_dir + "/stage_" + std::to_string(k) + ".svg";
            render_stage(ex.substitution, ex.tiling, ex.v, static_cast<int>(k), path);
            files.push_back(path);
        }
        const std::string path = svg_dir + "/overlaps.svg";
        render_overlaps(ex.substitution, g, std::nullopt, path);
        files.push_back(path);
        for (const auto& f : files) os << "wrote " << f.get<std::string>() << "\n";
        rep.doc["svg"] = files;
    }
    switch (r.kind) {
        case OverlapKind::SufficientForPds: rep.exit_code = kExitClean; break;
        case OverlapKind::RefutesPds: rep.exit_code = kExitRefuted; break;
        default: rep.exit_code = kExitInconclusive;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pure discrete spectrum checks for substitutions and tilings"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--cap-bpa", opt.cap_bpa, "balanced pair node cap")->check(CLI::PositiveNumber);
    app.add_option("--cap-overlap", opt.cap_overlap, "overlap class cap")->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--dual-quotient", opt.dual_quotient, "identify pairs with their duals");
    app.add_flag("--timings", opt.timings, "include wall-clock timings");

    std::string input, pair, u, v, word, comp, v2d, svg_dir;
    int d = 3, K = 1;
    std::size_t prefix_bound = 0, depth = 8;

    auto* analyze = app.add_subcommand("analyze", "incidence matrix, char poly, Pisot check, ω");
    analyze->add_option("input", input, "built-in name or JSON file")->required();
    auto* bpa = app.add_subcommand("bpa", "balanced pair algorithm");
    bpa->add_option("input", input)->required();
    bpa->add_option("--pair", pair, "U,V")->required();
    auto* theorem = app.add_subcommand("theorem-uvvu", "independence plus BPA on (uv, vu)");
    theorem->add_option("input", input)->required();
    theorem->add_option("--u", u)->required();
    theorem->add_option("--v", v)->required();
    auto* ar = app.add_subcommand("ar", "Arnoux-Rauzy pipeline");
    ar->add_option("--word", word)->required();
    ar->add_option("--d", d)->check(CLI::Range(2, 9));
    ar->add_option("--prefix-bound", prefix_bound, "cyclic witness prefix bound (0: automatic)");
    auto* family = app.add_subcommand("rauzy-family", "composition of Rauzy substitutions against the pair list");
    family->add_option("--c", comp)->required();
    auto* apc = app.add_subcommand("apcomplex", "GR, f_* and return vectors");
    apc->add_option("input", input)->required();
    apc->add_option("--K", K)->check(CLI::NonNegativeNumber);
    apc->add_option("--depth", depth, "factor length for the return sample")->check(CLI::Range(3, 64));
    auto* ov = app.add_subcommand("overlap2d", "planar overlap coincidence");
    ov->add_option("input", input)->required();
    ov->add_option("--v", v2d, "X,Y with coordinates a or a:b meaning a + b√2");
    ov->add_option("--svg", svg_dir, "directory for SVG figures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitClean : kExitInput;
    }

    Report rep;
    const auto start = std::chrono::steady_clock::now();
    std::string command;
    try {
        if (*analyze) {
            command = "analyze";
            cmd_analyze(opt, input, rep);
        } else if (*bpa) {
            command = "bpa";
            cmd_bpa(opt, input, pair, rep);
        } else if (*theorem) {
            command = "theorem-uvvu";
            cmd_theorem(opt, input, u, v, rep);
        } else if (*ar) {
            command = "ar";
            cmd_ar(opt, word, d, prefix_bound, rep);
        } else if (*family) {
            command = "rauzy-family";
            cmd_rauzy_family(opt, comp, rep);
        } else if (*apc) {
            command = "apcomplex";
            cmd_apcomplex(opt, input, K, depth, rep);
        } else {
            command = "overlap2d";
            cmd_overlap2d(opt, input, v2d, svg_dir, rep);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInconclusive;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (opt.format == "structured") {
        Json doc = {{"schema_version", kSchemaVersion}, {"command", command}, {"exit_code", rep.exit_code}};
        if (!input.empty()) doc["input"] = input;
        doc["report"] = rep.doc;
        if (opt.timings) doc["timings"] = {{"total_ms", ms}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << rep.text.str();
        if (opt.timings) std::cout << "time: " << ms << " ms\n";
    }
    return rep.exit_code;
}
