#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdstile/error.hpp"
#include "pdstile/overlap/builtins.hpp"
#include "pdstile/symbolic/substitution.hpp"

namespace pdstile {

using Json = nlohmann::json;

inline Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
    return j.at(key);
}

inline std::string as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw InputError(where + ": expected a string");
    return j.get<std::string>();
}

inline Word json_word(const Alphabet& alphabet, const Json& j, const std::string& where) {
    if (j.is_string()) return parse_word(alphabet, j.get<std::string>());
    if (!j.is_array()) throw InputError(where + ": a word is a string or an array of letter names");
    Word w;
    for (const auto& x : j) w.push_back(alphabet.index_of(as_string(x, where)));
    return w;
}

inline Rational json_rational(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return parse_rational(as_string(j, where));
}

/// ["a", "b"] means a + b√d; a bare string or integer is rational.
inline Scalar json_scalar(const Json& j, const BigInt& d, const std::string& where) {
    if (j.is_array()) {
        if (j.size() != 2) throw InputError(where + ": field element must be [\"a\", \"b\"]");
        return Scalar(json_rational(j[0], where), json_rational(j[1], where), d);
    }
    return Scalar(json_rational(j, where));
}

inline Vec2 json_vec(const Json& j, const BigInt& d, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw InputError(where + ": a point is a pair of field elements");
    return {json_scalar(j[0], d, where), json_scalar(j[1], d, where)};
}

inline Json scalar_json(const Scalar& x) { return Json::array({x.a().get_str(), x.b().get_str()}); }
inline Json vec_json(const Vec2& v) { return Json::array({scalar_json(v.x), scalar_json(v.y)}); }

inline BigInt field_of(const Scalar& x, BigInt d) { return x.b() == 0 ? d : x.d(); }

}  // namespace detail

/// {"alphabet": ["a","b"], "rules": {"a": "ab", "b": "a"}}; rules may also be arrays of letter names.
inline Substitution substitution_from_json(const Json& j) try {
    const std::string where = "substitution";
    const Json& jalpha = detail::field(j, "alphabet", where);
    if (!jalpha.is_array()) throw InputError(where + ": \"alphabet\" must be an array");
    std::vector<std::string> names;
    for (const auto& x : jalpha) names.push_back(detail::as_string(x, where + ".alphabet"));
    Alphabet alphabet(names);
    const Json& jrules = detail::field(j, "rules", where);
    if (!jrules.is_object()) throw InputError(where + ": \"rules\" must be an object keyed by letter");
    std::vector<Word> images;
    for (const auto& n : names) {
        if (!jrules.contains(n)) throw InputError(where + ": no rule for letter '" + n + "'");
        images.push_back(detail::json_word(alphabet, jrules.at(n), where + ".rules." + n));
    }
    if (jrules.size() != names.size()) throw InputError(where + ": rule for a letter outside the alphabet");
    return Substitution(alphabet, std::move(images));
} catch (const Json::exception& e) {
    throw InputError(std::string("substitution: ") + e.what());
}

inline Json substitution_to_json(const Substitution& s) {
    Json rules = Json::object();
    const Alphabet& a = s.alphabet();
    for (Letter x = 0; x < s.size(); ++x) {
        if (a.single_char_names()) {
            rules[a.name(x)] = format_word(a, s.image(x));
        } else {
            Json w = Json::array();
            for (Letter y : s.image(x)) w.push_back(a.name(y));
            rules[a.name(x)] = w;
        }
    }
    return {{"alphabet", a.names()}, {"rules", rules}};
}

/// Planar substitution with optional "tiling" ({"patch": [{"tile", "position"}], "lattice": [v1, v2]}),
/// "v" and "certificate". Tiles are referred to by prototile id.
inline PlanarExample planar_from_json(const Json& j) try {
    const std::string where = "planar substitution";
    BigInt d = 1;
    if (j.contains("field_d")) {
        const Json& jd = j.at("field_d");
        d = jd.is_string() ? BigInt(jd.get<std::string>()) : BigInt(jd.get<long>());
    }
    PlanarExample ex;
    auto& ps = ex.substitution;
    ps.name = j.contains("name") ? detail::as_string(j.at("name"), where) : "planar";
    std::map<long, std::size_t> by_id;
    const Json& jp = detail::field(j, "prototiles", where);
    if (!jp.is_array()) throw InputError(where + ": \"prototiles\" must be an array");
    for (const auto& t : jp) {
        PlanarPrototile p;
        p.id = detail::field(t, "id", where).get<int>();
        p.label = t.contains("label") ? detail::as_string(t.at("label"), where) : std::to_string(p.id);
        for (const auto& v : detail::field(t, "vertices", where)) p.polygon.push_back(detail::json_vec(v, d, where + " " + p.label));
        if (!by_id.emplace(p.id, ps.prototiles.size()).second) throw InputError(where + ": duplicate prototile id " + std::to_string(p.id));
        ps.prototiles.push_back(std::move(p));
    }
    auto index_of = [&](const Json& id) {
        auto it = by_id.find(id.get<long>());
        if (it == by_id.end()) throw InputError(where + ": unknown prototile id " + id.dump());
        return it->second;
    };
    const Json& je = detail::field(j, "expansion", where);
    if (!je.is_array() || je.size() != 2 || je[0].size() != 2 || je[1].size() != 2) throw InputError(where + ": expansion must be 2x2");
    ps.expansion = {detail::json_scalar(je[0][0], d, where), detail::json_scalar(je[0][1], d, where),
                    detail::json_scalar(je[1][0], d, where), detail::json_scalar(je[1][1], d, where)};
    const Json& jr = detail::field(j, "rules", where);
    if (!jr.is_array() || jr.size() != ps.size()) throw InputError(where + ": one rule per prototile required");
    for (const auto& rule : jr) {
        std::vector<RuleTile> r;
        for (const auto& x : rule)
            r.push_back({index_of(detail::field(x, "tile", where)), detail::json_vec(detail::field(x, "translation", where), d, where)});
        ps.rules.push_back(std::move(r));
    }
    if (j.contains("tiling")) {
        const Json& jt = j.at("tiling");
        for (const auto& x : detail::field(jt, "patch", where))
            ex.tiling.patch.push_back({index_of(detail::field(x, "tile", where)), detail::json_vec(detail::field(x, "position", where), d, where)});
        const Json& jl = detail::field(jt, "lattice", where);
        if (!jl.is_array() || jl.size() != 2) throw InputError(where + ": lattice must list two vectors");
        ex.tiling.v1 = detail::json_vec(jl[0], d, where);
        ex.tiling.v2 = detail::json_vec(jl[1], d, where);
    }
    if (j.contains("v")) ex.v = detail::json_vec(j.at("v"), d, where);
    if (j.contains("certificate")) ex.gr_certificate = detail::as_string(j.at("certificate"), where);
    return ex;
} catch (const Json::exception& e) {
    throw InputError(std::string("planar substitution: ") + e.what());
}

inline Json planar_to_json(const PlanarExample& ex) {
    const auto& ps = ex.substitution;
    BigInt d = 1;
    auto note = [&](const Vec2& v) {
        d = detail::field_of(v.x, d);
        d = detail::field_of(v.y, d);
    };
    Json protos = Json::array();
    for (const auto& p : ps.prototiles) {
        Json verts = Json::array();
        for (const auto& v : p.polygon) {
            note(v);
            verts.push_back(detail::vec_json(v));
        }
        protos.push_back({{"id", p.id}, {"label", p.label}, {"vertices", verts}});
    }
    Json rules = Json::array();
    for (const auto& rule : ps.rules) {
        Json r = Json::array();
        for (const auto& t : rule) {
            note(t.translation);
            r.push_back({{"tile", ps.prototiles.at(t.tile).id}, {"translation", detail::vec_json(t.translation)}});
        }
        rules.push_back(r);
    }
    const Mat2& m = ps.expansion;
    note({m.a, m.b});
    note({m.c, m.d});
    Json out = {{"name", ps.name},
                {"prototiles", protos},
                {"expansion", Json::array({Json::array({detail::scalar_json(m.a), detail::scalar_json(m.b)}),
                                           Json::array({detail::scalar_json(m.c), detail::scalar_json(m.d)})})},
                {"rules", rules}};
    if (!ex.tiling.patch.empty()) {
        Json patch = Json::array();
        for (const auto& t : ex.tiling.patch) {
            note(t.position);
            patch.push_back({{"tile", ps.prototiles.at(t.type).id}, {"position", detail::vec_json(t.position)}});
        }
        out["tiling"] = {{"patch", patch}, {"lattice", Json::array({detail::vec_json(ex.tiling.v1), detail::vec_json(ex.tiling.v2)})}};
    }
    note(ex.v);
    out["v"] = detail::vec_json(ex.v);
    if (ex.gr_certificate) out["certificate"] = *ex.gr_certificate;
    out["field_d"] = d.get_str();
    return out;
}

}  // namespace pdstile
