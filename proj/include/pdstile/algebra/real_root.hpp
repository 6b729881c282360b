#pragma once

#include <optional>
#include <vector>

#include "pdstile/algebra/polynomial.hpp"

namespace pdstile {

/// Sturm chain of a squarefree polynomial over Q.
class SturmSequence {
public:
    explicit SturmSequence(const RatPolynomial& p) {
        if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
        seq_.push_back(p);
        seq_.push_back(p.derivative());
        while (!seq_.back().is_zero()) {
            RatPolynomial r = seq_[seq_.size() - 2] % seq_.back();
            seq_.push_back(-r);
        }
        seq_.pop_back();
    }

    int sign_changes(const Rational& x) const {
        int changes = 0, last = 0;
        for (const auto& q : seq_) {
            int s = sign(q.evaluate(x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    }

    /// Number of distinct real roots in (a, b].
    int count(const Rational& a, const Rational& b) const { return sign_changes(a) - sign_changes(b); }

private:
    std::vector<RatPolynomial> seq_;
};

/// Cauchy bound: every complex root has modulus < bound.
inline Rational root_bound(const RatPolynomial& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
    return m + 1;
}

/// A real algebraic number: the unique root of a squarefree polynomial in
/// (lo, hi], or exactly lo when lo == hi.
class RealRoot {
public:
    RealRoot(RatPolynomial squarefree_poly, Rational lo, Rational hi)
        : poly_(monic(std::move(squarefree_poly))), lo_(std::move(lo)), hi_(std::move(hi)) {}

    const RatPolynomial& polynomial() const { return poly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool is_exact() const { return lo_ == hi_; }
    Rational width() const { return hi_ - lo_; }

    /// Halves the isolating interval (or pins the root exactly).
    void refine() {
        if (is_exact()) return;
        Rational mid = (lo_ + hi_) / 2;
        if (poly_.evaluate(mid) == 0) {
            lo_ = hi_ = mid;
            return;
        }
        if (sturm().count(lo_, mid) == 1)
            hi_ = mid;
        else
            lo_ = mid;
    }

    void refine_to(const Rational& max_width) {
        while (!is_exact() && width() > max_width) refine();
    }

    double approximate() const {
        RealRoot r = *this;
        r.refine_to(Rational(1, 1) / Rational(BigInt(1) << 64));
        Rational mid = (r.lo_ + r.hi_) / 2;
        return mid.get_d();
    }

    /// Exact sign of g at this root.
    int sign_of(const RatPolynomial& g) const {
        if (g.is_zero()) return 0;
        RealRoot r = *this;
        RatPolynomial h = gcd(g, poly_);
        if (h.degree() >= 1) {
            if (r.is_exact()) {
                if (h.evaluate(r.lo_) == 0) return 0;
            } else if (SturmSequence(h).count(r.lo_, r.hi_) == 1) {
                return 0;
            }
        }
        if (r.is_exact()) return sign(g.evaluate(r.lo_));
        if (g.degree() <= 0) return sign(g.coeff(0));
        SturmSequence gs(primitive_part_rat(g));
        while (!r.is_exact() && (g.evaluate(r.lo_) == 0 || gs.count(r.lo_, r.hi_) != 0)) r.refine();
        return sign(g.evaluate(r.is_exact() ? r.lo_ : r.hi_));
    }

    /// Orders two real roots (possibly of different polynomials).
    friend int compare(RealRoot a, RealRoot b) {
        if (a.is_exact()) return -b.compare_to(a.lo_);
        if (b.is_exact()) return a.compare_to(b.lo_);
        RatPolynomial h = gcd(a.poly_, b.poly_);
        const bool common = h.degree() >= 1 && a.sign_of(h) == 0 && b.sign_of(h) == 0;
        std::optional<SturmSequence> hs;
        if (common) hs.emplace(h);
        for (;;) {
            if (a.hi_ <= b.lo_) return -1;
            if (b.hi_ <= a.lo_) return 1;
            // Each interval holds exactly one root of h; one root in the union means equality.
            if (common && hs->count(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)) == 1) return 0;
            a.refine();
            b.refine();
            if (a.is_exact()) return -b.compare_to(a.lo_);
            if (b.is_exact()) return a.compare_to(b.lo_);
        }
    }

    /// Sign of (root - x).
    int compare_to(const Rational& x) const {
        RealRoot r = *this;
        for (;;) {
            if (r.is_exact()) return sign(r.lo_ - x);
            if (r.lo_ >= x) return 1;  // root > lo >= x
            if (r.hi_ < x) return -1;
            if (r.hi_ == x) return poly_.evaluate(x) == 0 ? 0 : -1;
            r.refine();
        }
    }

private:
    static RatPolynomial primitive_part_rat(const RatPolynomial& g) { return to_rational(squarefree_part(primitive_part(g))); }
    SturmSequence sturm() const { return SturmSequence(poly_); }

    RatPolynomial poly_;
    Rational lo_, hi_;
};

/// Isolates every real root of p, ascending.
inline std::vector<RealRoot> isolate_real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw InputError("isolate_real_roots of the zero polynomial");
    RatPolynomial sf = to_rational(squarefree_part(p));
    std::vector<RealRoot> out;
    if (sf.degree() < 1) return out;
    SturmSequence st(sf);
    Rational b = root_bound(sf);
    struct Span {
        Rational lo, hi;
    };
    std::vector<Span> stack{{-b, b}};
    while (!stack.empty()) {
        Span s = stack.back();
        stack.pop_back();
        int c = st.count(s.lo, s.hi);
        if (c == 0) continue;
        if (c == 1) {
            if (sf.evaluate(s.hi) == 0)
                out.emplace_back(sf, s.hi, s.hi);
            else
                out.emplace_back(sf, s.lo, s.hi);
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        stack.push_back({s.lo, mid});
        stack.push_back({mid, s.hi});
    }
    std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) { return x.hi() < y.hi() || (x.hi() == y.hi() && x.lo() < y.lo()); });
    return out;
}

inline std::optional<RealRoot> largest_real_root(const IntPolynomial& p) {
    auto roots = isolate_real_roots(p);
    if (roots.empty()) return std::nullopt;
    return roots.back();
}

}  // namespace pdstile
