#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pdstile/algebra/rational.hpp"

namespace pdstile {

/// Dense univariate polynomial, coefficients lowest degree first.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has an empty vector and degree -1.
template <class Coeff>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }
    static Polynomial monomial(int degree, const Coeff& c = Coeff(1)) {
        std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, Coeff(0));
        v.back() = c;
        return Polynomial(std::move(v));
    }
    /// x - root
    static Polynomial linear_root(const Coeff& root) { return Polynomial({Coeff(-root), Coeff(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Coeff>& coefficients() const { return c_; }

    Coeff coeff(int i) const {
        if (i < 0 || i > degree()) return Coeff(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const Coeff& leading() const { return c_.back(); }

    template <class T>
    T evaluate(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    Polynomial derivative() const {
        std::vector<Coeff> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Coeff(static_cast<long>(i)));
        return Polynomial(std::move(d));
    }

    /// x^deg * p(1/x)
    Polynomial reversed() const {
        std::vector<Coeff> r(c_.rbegin(), c_.rend());
        return Polynomial(std::move(r));
    }

    /// p(-x)
    Polynomial negated_argument() const {
        std::vector<Coeff> r = c_;
        for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return Polynomial(std::move(r));
    }

    /// Number of trailing zero coefficients (multiplicity of the root 0).
    int zero_root_multiplicity() const {
        int m = 0;
        while (m <= degree() && c_[static_cast<std::size_t>(m)] == 0) ++m;
        return m;
    }

    Polynomial divided_by_x_power(int k) const {
        if (k <= 0) return *this;
        if (k > degree()) return Polynomial();
        return Polynomial(std::vector<Coeff>(c_.begin() + k, c_.end()));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Coeff& k, Polynomial p) {
        for (auto& x : p.c_) x *= k;
        p.trim();
        return p;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Human-readable form such as "x^2 - x - 1".
    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            Coeff a = c_[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            bool neg = a < 0;
            Coeff mag = neg ? Coeff(-a) : a;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            bool unit = (mag == 1);
            if (i == 0 || !unit) os << mag;
            if (i >= 1) {
                if (!unit) os << "*";
                os << var;
                if (i >= 2) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Coeff> c_;
};

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const Polynomial<Coeff>& p) {
    return os << p.to_string();
}

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> v;
    v.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) v.emplace_back(c);
    return RatPolynomial(std::move(v));
}

inline BigInt content(const IntPolynomial& p) {
    BigInt g = 0;
    for (const auto& c : p.coefficients()) g = gcd_of(g, c);
    return g;
}

/// Primitive integer polynomial with positive leading coefficient.
inline IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<BigInt> v;
    for (const auto& c : p.coefficients()) v.push_back(BigInt(c / g));
    return IntPolynomial(std::move(v));
}

/// Clears denominators and content: the primitive integer multiple of p.
inline IntPolynomial primitive_part(const RatPolynomial& p) {
    if (p.is_zero()) return {};
    BigInt den = 1;
    for (const auto& c : p.coefficients()) den = lcm_of(den, c.get_den());
    std::vector<BigInt> v;
    for (const auto& c : p.coefficients()) v.push_back(BigInt(c.get_num() * (den / c.get_den())));
    return primitive_part(IntPolynomial(std::move(v)));
}

inline RatPolynomial monic(const RatPolynomial& p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.leading();
    return inv * p;
}

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> r = a.coefficients();
    int db = b.degree();
    if (a.degree() < db) return {RatPolynomial(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        Rational f = r[static_cast<std::size_t>(i)] / lead;
        if (f == 0) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
    }
    r.resize(static_cast<std::size_t>(db));
    return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

inline RatPolynomial operator%(const RatPolynomial& a, const RatPolynomial& b) { return divmod(a, b).second; }

/// Monic gcd over Q (zero if both are zero).
inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
    while (!b.is_zero()) {
        RatPolynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    return primitive_part(gcd(to_rational(a), to_rational(b)));
}

/// Exact quotient a/b over Z, if b divides a with an integer quotient.
inline bool divides_exactly(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient = nullptr) {
    auto [q, r] = divmod(to_rational(a), to_rational(b));
    if (!r.is_zero()) return false;
    for (const auto& c : q.coefficients())
        if (!is_integer(c)) return false;
    if (quotient) {
        std::vector<BigInt> v;
        for (const auto& c : q.coefficients()) v.push_back(c.get_num());
        *quotient = IntPolynomial(std::move(v));
    }
    return true;
}

/// Squarefree part over Q, returned primitive.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.degree() <= 0) return p;
    RatPolynomial rp = to_rational(p);
    RatPolynomial g = gcd(rp, rp.derivative());
    return primitive_part(divmod(rp, g).first);
}

}  // namespace pdstile
