#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pdstile/overlap/builtins.hpp"
#include "pdstile/verdicts/rauzy.hpp"

namespace pdstile {

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"fibonacci", "thue-morse", "period-doubling", "rauzy", "tau2",
                                                   "tau3",      "tau4",       "octagonal",       "table"};
    return names;
}

inline bool is_builtin(const std::string& name) {
    for (const auto& n : builtin_names())
        if (n == name) return true;
    return false;
}

inline bool is_planar_builtin(const std::string& name) { return name == "octagonal" || name == "table"; }

/// One-dimensional built-ins. "rauzy" is τ1; tau2..tau4 are the modified Rauzy substitutions.
inline Substitution builtin_substitution(const std::string& name) {
    const Alphabet ab({"a", "b"});
    if (name == "fibonacci") return Substitution::from_strings(ab, {"ab", "a"});
    if (name == "thue-morse") return Substitution::from_strings(ab, {"ab", "ba"});
    if (name == "period-doubling") return Substitution::from_strings(ab, {"ab", "aa"});
    if (name == "rauzy") return rauzy_tau(1);
    if (name == "tau2") return rauzy_tau(2);
    if (name == "tau3") return rauzy_tau(3);
    if (name == "tau4") return rauzy_tau(4);
    if (is_planar_builtin(name)) throw InputError("'" + name + "' is a planar built-in");
    throw InputError("unknown built-in '" + name + "'");
}

inline PlanarExample builtin_planar(const std::string& name) {
    if (name == "octagonal") return octagonal_example();
    if (name == "table") return table_example();
    if (is_builtin(name)) throw InputError("'" + name + "' is a one-dimensional built-in");
    throw InputError("unknown built-in '" + name + "'");
}

}  // namespace pdstile
