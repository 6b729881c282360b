#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pdstile/bpa/balanced_pair.hpp"

namespace pdstile {

/// Rauzy (τ1) and modified Rauzy (τ2, τ3, τ4) substitutions on {1,2,3}; k in 1..4.
inline Substitution rauzy_tau(int k) {
    static const char* rules[4][3] = {
        {"12", "13", "1"},
        {"12", "31", "1"},
        {"21", "13", "1"},
        {"21", "31", "1"},
    };
    if (k < 1 || k > 4) throw InputError("Rauzy family index must be 1..4");
    const auto& r = rules[k - 1];
    return Substitution::from_strings(Alphabet::numeric(3), {r[0], r[1], r[2]});
}

/// Irreducible non-coincidence pairs in the closure of (12, 21), up to duals.
inline const std::vector<std::pair<std::string, std::string>>& rauzy_pair_list() {
    static const std::vector<std::pair<std::string, std::string>> list = {
        {"12", "21"}, {"13", "31"}, {"123", "231"}, {"321", "132"}, {"213", "312"},
        {"1123", "3112"}, {"3211", "2113"}, {"1213", "3112"}, {"3121", "2113"}, {"1213", "3121"},
        {"1231", "3112"}, {"1321", "2113"}, {"2131", "3112"}, {"1312", "2113"}, {"11231", "31112"},
        {"12123", "23112"}, {"32121", "21132"}, {"12311", "31112"}, {"11321", "21113"},
        {"121213", "311212"}, {"312121", "212113"}, {"121123", "311212"}, {"321121", "212113"},
        {"121213", "312112"}, {"312121", "211213"}, {"121231", "231112"}, {"132121", "211132"},
        {"1121231", "3112112"}, {"1321211", "2112113"}, {"12121231", "23111212"}, {"13212121", "21211132"},
    };
    return list;
}

/// Reads "u v" lines; blank lines and '#' comments are skipped.
inline std::vector<std::pair<std::string, std::string>> read_pair_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open pair list '" + path + "'");
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string u, v, extra;
        if (!(ls >> u >> v) || (ls >> extra)) throw InputError(path + ":" + std::to_string(lineno) + ": expected 'u v'");
        out.emplace_back(u, v);
    }
    return out;
}

inline std::vector<BalancedPair> rauzy_pairs(const Alphabet& alphabet) {
    std::vector<BalancedPair> out;
    for (const auto& [u, v] : rauzy_pair_list()) out.push_back({parse_word(alphabet, u), parse_word(alphabet, v)});
    return out;
}

struct RauzyFamilyReport {
    std::string composition;                 // e.g. "42"
    Substitution substitution;
    BpaVerdict bpa;
    std::vector<BalancedPair> closure_pairs;     // non-coincidence nodes up to duals
    std::vector<BalancedPair> outside_list;      // closure pairs neither in the list nor dual to one
    bool ok() const { return bpa.kind == BpaKind::TerminatesWithCoincidence && outside_list.empty(); }
};

/// τ_{c1} ∘ ... ∘ τ_{ck}, then BPA on (12, 21) and containment in the reference list.
inline RauzyFamilyReport rauzy_family_check(const std::string& c, BpaLimits limits = {}) {
    if (c.empty()) throw InputError("rauzy_family_check: empty composition word");
    Alphabet abc = Alphabet::numeric(3);
    Substitution s = identity_substitution(abc);
    for (char ch : c) {
        if (ch < '1' || ch > '4') throw InputError("composition word must use letters 1..4");
        s = compose(s, rauzy_tau(ch - '0'));
    }
    BpaVerdict v = bpa_run(s, {parse_word(abc, "12"), parse_word(abc, "21")}, limits);
    std::vector<BalancedPair> reference;
    for (const auto& p : rauzy_pairs(abc)) reference.push_back(dual_canonical(p));
    std::sort(reference.begin(), reference.end());
    RauzyFamilyReport rep{c, s, std::move(v), {}, {}};
    rep.closure_pairs = closure_pairs(rep.bpa.closure, true);
    for (const auto& p : rep.closure_pairs)
        if (!std::binary_search(reference.begin(), reference.end(), p)) rep.outside_list.push_back(p);
    return rep;
}

}  // namespace pdstile
