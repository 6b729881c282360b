#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "pdstile/algebra/polynomial.hpp"

namespace pdstile {

namespace detail {

inline std::vector<BigInt> positive_divisors(const BigInt& n) {
    BigInt m = abs(n);
    if (m == 0) throw DomainError("divisors of zero");
    if (m > BigInt("1000000000000000000")) throw DomainError("integer too large for trial-division factoring: " + m.get_str());
    std::vector<std::pair<BigInt, int>> primes;
    for (BigInt p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        primes.emplace_back(p, e);
    }
    if (m > 1) primes.emplace_back(m, 1);
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : primes) {
        std::size_t base = divs.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Newton interpolation through (xs[i], ys[i]) over Q.
inline RatPolynomial interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
    RatPolynomial result = RatPolynomial::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        result = result * RatPolynomial({Rational(-xs[i]), Rational(1)});
        result += RatPolynomial::constant(dd[i]);
    }
    return result;
}

inline std::optional<IntPolynomial> kronecker_factor_of_degree(const IntPolynomial& p, int k) {
    // Evaluation points with the fewest divisors keep the search small.
    struct Point {
        BigInt x, value;
        std::size_t ndiv;
    };
    std::vector<Point> pts;
    const int bound = 2 * p.degree() + 12;
    for (int t = 0; t <= bound; ++t) {
        for (int k = 0; k < (t == 0 ? 1 : 2); ++k) {
            BigInt x = k == 0 ? t : -t;
            BigInt v = p.evaluate(x);
            if (v == 0) continue;
            if (abs(v) > BigInt("1000000000000000000")) continue;
            pts.push_back({x, v, positive_divisors(v).size()});
        }
    }
    if (pts.size() < static_cast<std::size_t>(k + 1)) throw DomainError("Kronecker: not enough evaluation points");
    std::stable_sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.ndiv < b.ndiv; });
    pts.resize(static_cast<std::size_t>(k + 1));

    std::vector<BigInt> xs, choice(pts.size());
    std::vector<std::vector<BigInt>> options;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        xs.push_back(pts[i].x);
        std::vector<BigInt> divs = positive_divisors(pts[i].value);
        std::vector<BigInt> opts;
        for (const auto& d : divs) {
            opts.push_back(d);
            if (i > 0) opts.push_back(-d);  // fix the sign of q at the first point
        }
        options.push_back(std::move(opts));
    }

    std::optional<IntPolynomial> found;
    auto leaf = [&]() {
        RatPolynomial q = interpolate(xs, choice);
        if (q.degree() < 1) return false;
        for (const auto& c : q.coefficients())
            if (!is_integer(c)) return false;
        IntPolynomial qi = primitive_part(q);
        if (qi.degree() >= p.degree()) return false;
        if (p.leading() % qi.leading() != 0) return false;
        if (!divides_exactly(qi, p)) return false;
        found = qi;
        return true;
    };
    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (i == xs.size()) return leaf();
        for (const auto& d : options[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if ((d - choice[j]) % (xs[i] - xs[j]) != 0) ok = false;
            if (!ok) continue;
            choice[i] = d;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    dfs(dfs, 0);
    return found;
}

}  // namespace detail

/// All rational roots of p (without multiplicity), ascending.
inline std::vector<Rational> rational_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw InputError("rational_roots of the zero polynomial");
    std::vector<Rational> roots;
    int z = p.zero_root_multiplicity();
    if (z > 0) roots.emplace_back(0);
    IntPolynomial q = p.divided_by_x_power(z);
    if (q.degree() >= 1) {
        auto num = detail::positive_divisors(q.coeff(0));
        auto den = detail::positive_divisors(q.leading());
        RatPolynomial rq = to_rational(q);
        for (const auto& a : num)
            for (const auto& b : den)
                for (int s : {1, -1}) {
                    Rational r = make_rational(BigInt(s * a), b);
                    if (rq.evaluate(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
                        roots.push_back(r);
                }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Some nontrivial factor of p over Z (degree between 1 and deg/2), if one exists.
inline std::optional<IntPolynomial> find_factor(const IntPolynomial& p_in) {
    IntPolynomial p = primitive_part(p_in);
    if (p.degree() <= 1) return std::nullopt;
    auto roots = rational_roots(p);
    if (!roots.empty()) {
        const Rational& r = roots.front();
        return IntPolynomial({BigInt(-r.get_num()), r.get_den()});
    }
    for (int k = 2; k <= p.degree() / 2; ++k)
        if (auto f = detail::kronecker_factor_of_degree(p, k)) return f;
    return std::nullopt;
}

struct Factorization {
    BigInt scalar;                        // sign and content
    std::vector<IntPolynomial> factors;   // irreducible, primitive, positive leading coefficient; with multiplicity
};

inline Factorization factor_over_Z(const IntPolynomial& p) {
    if (p.is_zero()) throw InputError("factor_over_Z of the zero polynomial");
    Factorization out;
    IntPolynomial prim = primitive_part(p);
    out.scalar = p.leading() / prim.leading();
    std::vector<IntPolynomial> work{prim};
    while (!work.empty()) {
        IntPolynomial f = work.back();
        work.pop_back();
        if (f.degree() <= 0) continue;
        if (auto g = find_factor(f)) {
            IntPolynomial q;
            if (!divides_exactly(*g, f, &q)) throw InternalError("factor does not divide");
            work.push_back(*g);
            work.push_back(primitive_part(q));
        } else {
            out.factors.push_back(f);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const IntPolynomial& a, const IntPolynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coefficients() < b.coefficients();
    });
    return out;
}

struct IrreducibilityResult {
    bool irreducible = false;
    std::optional<IntPolynomial> factor;  // a nontrivial factor when reducible
};

inline IrreducibilityResult is_irreducible_over_Q(const IntPolynomial& p) {
    if (p.is_zero()) throw InputError("irreducibility of the zero polynomial is undefined");
    if (p.degree() == 0) return {false, std::nullopt};
    if (auto f = find_factor(p)) return {false, *f};
    return {true, std::nullopt};
}

}  // namespace pdstile
