#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdstile/symbolic/substitution.hpp"

namespace pdstile {

/// σ_i on {1..d}: j -> j i for j != i, i -> i. `i` is a letter index (0-based).
inline Substitution ar_generator(Letter i, int d) {
    if (i < 0 || i >= d) throw InputError("Arnoux-Rauzy generator index out of range");
    std::vector<Word> images;
    for (Letter j = 0; j < d; ++j) images.push_back(j == i ? Word{i} : Word{j, i});
    return Substitution(Alphabet::numeric(d), std::move(images));
}

/// σ_w = σ_{w_1} ∘ ... ∘ σ_{w_k}; w holds 0-based letter indices.
inline Substitution ar_substitution(const Word& w, int d) {
    Abelian ab = abelianize(w, d);
    for (int i = 0; i < d; ++i)
        if (ab[static_cast<std::size_t>(i)] == 0)
            throw DomainError("not Arnoux-Rauzy: letter " + std::to_string(i + 1) + " does not occur in w");
    Substitution s = identity_substitution(Alphabet::numeric(d));
    for (Letter i : w) s = compose(s, ar_generator(i, d));
    return s;
}

inline bool parallel(const Abelian& x, const Abelian& y) {
    // x ∥ y iff every 2x2 minor vanishes
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] * y[j] != x[j] * y[i]) return false;
    return true;
}

struct CyclicEquivalenceWitness {
    Letter i = 0, j = 0;
    Word p_i, p_j, u, v;  // p_i = u v, p_j = v u

    /// Re-checks the defining properties literally.
    bool verify(int d) const {
        Word uv = u, vu = v;
        uv.insert(uv.end(), v.begin(), v.end());
        vu.insert(vu.end(), u.begin(), u.end());
        return !u.empty() && !v.empty() && uv == p_i && vu == p_j && !parallel(abelianize(u, d), abelianize(v, d));
    }
};

struct CyclicEquivalenceSearch {
    std::vector<CyclicEquivalenceWitness> witnesses;  // one per pair i < j that was found
    std::vector<std::pair<Letter, Letter>> missing;   // pairs with no witness within the bound
    std::size_t bound = 0;
    bool complete() const { return missing.empty(); }
};

/// Shortest non-parallel cyclic equivalence between equal-length prefixes of
/// the fixed words, for each pair of letters.
inline CyclicEquivalenceSearch cyclically_equivalent_prefixes(const Substitution& s, std::size_t bound = 0) {
    const int d = s.size();
    if (bound == 0) {
        Letter shortest = 0;
        for (Letter a = 1; a < d; ++a)
            if (s.image(a).size() < s.image(shortest).size()) shortest = a;
        bound = s.apply_power(s.image(shortest), 3, 5000000).size() * static_cast<std::size_t>(d);
    }
    CyclicEquivalenceSearch out;
    out.bound = bound;
    std::vector<Word> fixed;
    for (Letter a = 0; a < d; ++a) fixed.push_back(fixed_point_prefix(s, a, bound));

    for (Letter i = 0; i < d; ++i)
        for (Letter j = i + 1; j < d; ++j) {
            const Word& wi = fixed[static_cast<std::size_t>(i)];
            const Word& wj = fixed[static_cast<std::size_t>(j)];
            Abelian diff(static_cast<std::size_t>(d), 0);
            std::optional<CyclicEquivalenceWitness> found;
            for (std::size_t n = 1; n <= bound && !found; ++n) {
                ++diff[static_cast<std::size_t>(wi[n - 1])];
                --diff[static_cast<std::size_t>(wj[n - 1])];
                bool balanced = true;
                for (auto x : diff) balanced = balanced && x == 0;
                if (!balanced) continue;
                for (std::size_t k = 1; k < n && !found; ++k) {
                    // wj[0..n) == wi[k..n) wi[0..k) ?
                    if (!std::equal(wi.begin() + static_cast<std::ptrdiff_t>(k), wi.begin() + static_cast<std::ptrdiff_t>(n), wj.begin()))
                        continue;
                    if (!std::equal(wi.begin(), wi.begin() + static_cast<std::ptrdiff_t>(k), wj.begin() + static_cast<std::ptrdiff_t>(n - k)))
                        continue;
                    CyclicEquivalenceWitness w;
                    w.i = i;
                    w.j = j;
                    w.p_i.assign(wi.begin(), wi.begin() + static_cast<std::ptrdiff_t>(n));
                    w.p_j.assign(wj.begin(), wj.begin() + static_cast<std::ptrdiff_t>(n));
                    w.u.assign(wi.begin(), wi.begin() + static_cast<std::ptrdiff_t>(k));
                    w.v.assign(wi.begin() + static_cast<std::ptrdiff_t>(k), wi.begin() + static_cast<std::ptrdiff_t>(n));
                    if (!parallel(abelianize(w.u, d), abelianize(w.v, d))) found = w;
                }
            }
            if (found) {
                if (!found->verify(d)) throw InternalError("cyclic equivalence witness fails verification");
                out.witnesses.push_back(*found);
            } else {
                out.missing.emplace_back(i, j);
            }
        }
    return out;
}

}  // namespace pdstile
