#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdstile/algebra/factor.hpp"
#include "pdstile/algebra/linear_rank.hpp"
#include "pdstile/algebra/perron.hpp"
#include "pdstile/algebra/pisot.hpp"
#include "pdstile/bpa/balanced_pair.hpp"
#include "pdstile/symbolic/arnoux_rauzy.hpp"

namespace pdstile {

enum class PdsKind { PdsCertified, NotPdsCertified, Inconclusive };

inline const char* to_string(PdsKind k) {
    switch (k) {
        case PdsKind::PdsCertified: return "PdsCertified";
        case PdsKind::NotPdsCertified: return "NotPdsCertified";
        case PdsKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct Precondition {
    std::string name;    // machine-readable, e.g. "char_poly_irreducible"
    bool passed = false;
    std::string detail;
};

struct PdsVerdict {
    PdsKind kind = PdsKind::Inconclusive;
    std::string rule;                     // "uv_vu", "ab_ba", "arnoux_rauzy"
    std::vector<Precondition> checks;
    std::optional<BpaVerdict> bpa;
    std::optional<std::size_t> independence_rank;
    std::vector<std::string> reasons;     // failed check names when not certified
    std::optional<CyclicEquivalenceSearch> witnesses;
    std::optional<CyclicEquivalenceWitness> used_witness;

    const Precondition* check(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

inline NumberFieldElement pairing(const Abelian& a, const PerronData& pd) {
    NumberFieldElement acc(pd.field, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) acc += Rational(static_cast<long>(a[i])) * pd.omega[i];
    return acc;
}

inline void finish(PdsVerdict& v) {
    v.reasons.clear();
    for (const auto& c : v.checks)
        if (!c.passed) v.reasons.push_back(c.name);
    v.kind = v.reasons.empty() ? PdsKind::PdsCertified : PdsKind::Inconclusive;
}

inline Precondition bpa_check(const BpaVerdict& b) {
    Precondition p{"bpa_terminates_with_coincidence", b.kind == BpaKind::TerminatesWithCoincidence, to_string(b.kind)};
    p.detail += ", " + std::to_string(b.closure.nodes.size()) + " nodes";
    if (b.kind == BpaKind::CapExceeded) p.detail += " (" + b.note + ")";
    return p;
}

inline Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

}  // namespace detail

/// Independence of ⟨[u],ω⟩, ⟨[v],ω⟩ plus BPA on (uv, vu).
inline PdsVerdict theorem_uv_vu(const Substitution& s, const Word& u, const Word& v, BpaLimits limits = {}) {
    if (!is_primitive(s)) throw DomainError("theorem_uv_vu: substitution is not primitive");
    IntPolynomial cp = char_poly(s.incidence());
    PisotReport pr = is_pisot(cp);
    if (!pr.pisot) throw DomainError("theorem_uv_vu: substitution is not Pisot (" + pr.reason + ")");
    if (u.empty() || v.empty()) throw InputError("theorem_uv_vu: u and v must be nonempty");
    PdsVerdict out;
    out.rule = "uv_vu";
    out.checks.push_back({"primitive", true, ""});
    out.checks.push_back({"pisot", true, pr.reason});
    PerronData pd = perron_data(s.incidence());
    std::size_t r = q_linear_rank({detail::pairing(abelianize(u, s.size()), pd), detail::pairing(abelianize(v, s.size()), pd)});
    out.independence_rank = r;
    out.checks.push_back({"independence", r == 2, "Q-rank of (<[u],ω>, <[v],ω>) = " + std::to_string(r)});
    out.bpa = bpa_run(s, {detail::concat(u, v), detail::concat(v, u)}, limits);
    out.checks.push_back(detail::bpa_check(*out.bpa));
    detail::finish(out);
    return out;
}

/// Irreducible Pisot incidence plus BPA on (ab, ba).
inline PdsVerdict corollary_ab_ba(const Substitution& s, Letter a, Letter b, BpaLimits limits = {}) {
    if (a == b) throw InputError("corollary_ab_ba: letters must differ");
    PdsVerdict out;
    out.rule = "ab_ba";
    const bool primitive = is_primitive(s);
    out.checks.push_back({"primitive", primitive, ""});
    IntPolynomial cp = char_poly(s.incidence());
    auto irr = is_irreducible_over_Q(cp);
    out.checks.push_back({"char_poly_irreducible", irr.irreducible,
                          cp.to_string() + (irr.factor ? " has factor " + irr.factor->to_string() : "")});
    bool pisot = false;
    std::string why;
    try {
        PisotReport pr = is_pisot(cp);
        pisot = pr.pisot;
        why = pr.reason;
    } catch (const DomainError& e) {
        why = e.what();
    }
    out.checks.push_back({"pisot", pisot, why});
    if (primitive) {
        PerronData pd = perron_data(s.incidence());
        out.independence_rank = q_linear_rank({pd.omega[static_cast<std::size_t>(a)], pd.omega[static_cast<std::size_t>(b)]});
    }
    out.bpa = bpa_run(s, {Word{a, b}, Word{b, a}}, limits);
    out.checks.push_back(detail::bpa_check(*out.bpa));
    detail::finish(out);
    return out;
}

/// σ_w, irreducible Pisot check, a non-parallel cyclic witness (P_i, P_j) = (uv, vu),
/// then BPA on (P_i, P_j).
inline PdsVerdict ar_pipeline(const Word& w, int d, BpaLimits limits = {}, std::size_t prefix_bound = 0) {
    Substitution s = ar_substitution(w, d);
    PdsVerdict out;
    out.rule = "arnoux_rauzy";
    BigInt det = determinant(s.incidence());
    out.checks.push_back({"unimodular", abs(det) == 1, "det = " + det.get_str()});
    IntPolynomial cp = char_poly(s.incidence());
    auto irr = is_irreducible_over_Q(cp);
    out.checks.push_back({"char_poly_irreducible", irr.irreducible, cp.to_string()});
    PisotReport pr = is_pisot(cp);
    out.checks.push_back({"pisot", pr.pisot, pr.reason});
    out.witnesses = cyclically_equivalent_prefixes(s, prefix_bound);
    const auto& ws = out.witnesses->witnesses;
    bool all_ok = true;
    for (const auto& x : ws) all_ok = all_ok && x.verify(d);
    out.checks.push_back({"cyclic_witness", !ws.empty() && all_ok,
                          std::to_string(ws.size()) + " witness(es), bound " + std::to_string(out.witnesses->bound)});
    if (ws.empty()) {
        detail::finish(out);
        return out;
    }
    // Independence: from the witness being non-parallel when irreducible, and checked directly.
    PerronData pd = perron_data(s.incidence());
    std::optional<BpaVerdict> last;
    for (const auto& x : ws) {
        std::size_t r = q_linear_rank({detail::pairing(abelianize(x.u, d), pd), detail::pairing(abelianize(x.v, d), pd)});
        BpaVerdict b = bpa_run(s, {x.p_i, x.p_j}, limits);
        const bool done = b.kind == BpaKind::TerminatesWithCoincidence;
        if (!last || done) {
            out.used_witness = x;
            out.independence_rank = r;
            last = std::move(b);
        }
        if (done) break;
    }
    out.checks.push_back({"independence", out.independence_rank == 2u,
                          "Q-rank of (<[u],ω>, <[v],ω>) = " + std::to_string(*out.independence_rank)});
    out.bpa = std::move(last);
    out.checks.push_back(detail::bpa_check(*out.bpa));
    detail::finish(out);
    return out;
}

}  // namespace pdstile
