#pragma once

#include <deque>
#include <map>
#include <string>
#include <vector>

#include "pdstile/symbolic/substitution.hpp"

namespace pdstile {

struct BalancedPair {
    Word u, v;

    bool is_coincidence() const { return u.size() == 1 && u == v; }
    BalancedPair dual() const { return {v, u}; }

    friend bool operator==(const BalancedPair& a, const BalancedPair& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const BalancedPair& a, const BalancedPair& b) { return !(a == b); }
    friend bool operator<(const BalancedPair& a, const BalancedPair& b) {
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    }
};

inline std::string format_pair(const Alphabet& alphabet, const BalancedPair& p) {
    return "(" + format_word(alphabet, p.u) + ", " + format_word(alphabet, p.v) + ")";
}

inline bool is_balanced(const BalancedPair& p, int d) { return abelianize(p.u, d) == abelianize(p.v, d); }

/// Splits p at every position where the prefixes have equal abelianization.
inline std::vector<BalancedPair> irreducible_factors(const BalancedPair& p, int d) {
    if (p.u.size() != p.v.size() || !is_balanced(p, d)) throw InputError("pair is not balanced");
    std::vector<BalancedPair> out;
    Abelian diff(static_cast<std::size_t>(d), 0);
    std::size_t nonzero = 0, start = 0;
    for (std::size_t i = 0; i < p.u.size(); ++i) {
        for (auto [letter, delta] : {std::pair{p.u[i], 1}, std::pair{p.v[i], -1}}) {
            auto& x = diff[static_cast<std::size_t>(letter)];
            if (x == 0) ++nonzero;
            x += delta;
            if (x == 0) --nonzero;
        }
        if (nonzero == 0) {
            out.push_back({Word(p.u.begin() + static_cast<std::ptrdiff_t>(start), p.u.begin() + static_cast<std::ptrdiff_t>(i + 1)),
                           Word(p.v.begin() + static_cast<std::ptrdiff_t>(start), p.v.begin() + static_cast<std::ptrdiff_t>(i + 1))});
            start = i + 1;
        }
    }
    return out;
}

inline bool is_irreducible(const BalancedPair& p, int d) { return !p.u.empty() && irreducible_factors(p, d).size() == 1; }

inline std::vector<BalancedPair> bpa_successors(const Substitution& s, const BalancedPair& p) {
    if (!is_irreducible(p, s.size())) throw InputError("bpa_successors: pair is not irreducible");
    return irreducible_factors({s.apply(p.u), s.apply(p.v)}, s.size());
}

enum class BpaKind { TerminatesWithCoincidence, FiniteNoCoincidence, CapExceeded };

inline const char* to_string(BpaKind k) {
    switch (k) {
        case BpaKind::TerminatesWithCoincidence: return "TerminatesWithCoincidence";
        case BpaKind::FiniteNoCoincidence: return "FiniteNoCoincidence";
        case BpaKind::CapExceeded: return "CapExceeded";
    }
    return "?";
}

struct BpaClosure {
    BalancedPair seed;
    std::vector<BalancedPair> nodes;               // breadth-first discovery order
    std::vector<std::vector<std::size_t>> edges;   // successor multiset per expanded node
    std::vector<int> depth;                        // BFS depth (seed factors have depth 0)
    bool exhausted = false;                        // every node expanded under the cap

    std::size_t index_of(const BalancedPair& p) const {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i] == p) return i;
        return nodes.size();
    }
    bool contains(const BalancedPair& p) const { return index_of(p) < nodes.size(); }
};

struct BpaVerdict {
    BpaKind kind = BpaKind::CapExceeded;
    BpaClosure closure;
    std::vector<bool> reaches_coincidence;  // per node
    std::vector<std::size_t> offending;     // nodes reaching no coincidence
    std::size_t coincidence_nodes = 0;
    std::string note;
};

struct BpaLimits {
    std::size_t max_nodes = 10000;
    std::size_t max_word_length = 1000000;
};

/// Breadth-first closure of bpa_successors from the irreducible factors of seed.
inline BpaVerdict bpa_run(const Substitution& s, const BalancedPair& seed, BpaLimits limits = {}) {
    const int d = s.size();
    BpaVerdict out;
    BpaClosure& c = out.closure;
    c.seed = seed;
    std::map<BalancedPair, std::size_t> index;
    auto intern = [&](const BalancedPair& p, int depth) {
        auto [it, inserted] = index.emplace(p, c.nodes.size());
        if (inserted) {
            c.nodes.push_back(p);
            c.depth.push_back(depth);
        }
        return it->second;
    };
    for (const auto& f : irreducible_factors(seed, d)) intern(f, 0);

    bool capped = false;
    for (std::size_t next = 0; next < c.nodes.size(); ++next) {
        if (c.nodes.size() > limits.max_nodes) {
            capped = true;
            out.note = "node cap " + std::to_string(limits.max_nodes) + " exceeded";
            break;
        }
        BalancedPair p = c.nodes[next];
        int depth = c.depth[next];
        Word fu = s.apply(p.u), fv = s.apply(p.v);
        if (fu.size() > limits.max_word_length) {
            capped = true;
            out.note = "word length guard " + std::to_string(limits.max_word_length) + " exceeded";
            break;
        }
        std::vector<std::size_t> succ;
        for (const auto& f : irreducible_factors({std::move(fu), std::move(fv)}, d)) succ.push_back(intern(f, depth + 1));
        c.edges.push_back(std::move(succ));
    }
    c.exhausted = !capped;
    for (const auto& p : c.nodes)
        if (p.is_coincidence()) ++out.coincidence_nodes;
    if (capped) {
        out.kind = BpaKind::CapExceeded;
        return out;
    }

    // Reverse reachability from coincidence nodes.
    const std::size_t n = c.nodes.size();
    std::vector<std::vector<std::size_t>> reverse(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : c.edges[i]) reverse[j].push_back(i);
    out.reaches_coincidence.assign(n, false);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i)
        if (c.nodes[i].is_coincidence()) {
            out.reaches_coincidence[i] = true;
            queue.push_back(i);
        }
    while (!queue.empty()) {
        std::size_t j = queue.front();
        queue.pop_front();
        for (std::size_t i : reverse[j])
            if (!out.reaches_coincidence[i]) {
                out.reaches_coincidence[i] = true;
                queue.push_back(i);
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!out.reaches_coincidence[i]) out.offending.push_back(i);
    out.kind = out.offending.empty() ? BpaKind::TerminatesWithCoincidence : BpaKind::FiniteNoCoincidence;
    return out;
}

/// Representative of {p, dual(p)}: the smaller of the two.
inline BalancedPair dual_canonical(const BalancedPair& p) {
    BalancedPair q = p.dual();
    return q < p ? q : p;
}

/// Non-coincidence nodes, optionally identified with their duals; sorted.
inline std::vector<BalancedPair> closure_pairs(const BpaClosure& c, bool dual_quotient) {
    std::vector<BalancedPair> out;
    for (const auto& p : c.nodes) {
        if (p.is_coincidence()) continue;
        out.push_back(dual_quotient ? dual_canonical(p) : p);
    }
    std::sort(out.begin(), out.end(), [](const BalancedPair& a, const BalancedPair& b) {
        if (a.u.size() != b.u.size()) return a.u.size() < b.u.size();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace pdstile
