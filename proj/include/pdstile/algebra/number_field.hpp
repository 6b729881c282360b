#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pdstile/algebra/factor.hpp"
#include "pdstile/algebra/real_root.hpp"

namespace pdstile {

/// Q(λ) = Q[x]/(m) together with the real embedding sending x to a fixed root of m.
class NumberField {
public:
    /// m must be irreducible over Q; `embedding` is a root of m.
    NumberField(IntPolynomial minimal_polynomial, RealRoot embedding)
        : data_(std::make_shared<Data>(Data{primitive_part(minimal_polynomial), {}, std::move(embedding)})) {
        if (data_->modulus.degree() < 1) throw DomainError("number field modulus must have degree >= 1");
        data_->rmodulus = monic(to_rational(data_->modulus));
        if (data_->embedding.sign_of(data_->rmodulus) != 0)
            throw DomainError("embedding is not a root of the modulus");
    }

    int degree() const { return data_->modulus.degree(); }
    const IntPolynomial& modulus() const { return data_->modulus; }
    const RatPolynomial& monic_modulus() const { return data_->rmodulus; }
    const RealRoot& embedding() const { return data_->embedding; }

    friend bool operator==(const NumberField& a, const NumberField& b) {
        if (a.data_ == b.data_) return true;
        return a.data_->modulus == b.data_->modulus && compare(a.data_->embedding, b.data_->embedding) == 0;
    }
    friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

private:
    struct Data {
        IntPolynomial modulus;
        RatPolynomial rmodulus;
        RealRoot embedding;
    };
    std::shared_ptr<Data> data_;
};

class NumberFieldElement {
public:
    NumberFieldElement(NumberField field, const RatPolynomial& value)
        : field_(std::move(field)), value_(value % field_.monic_modulus()) {}
    NumberFieldElement(NumberField field, const Rational& q)
        : NumberFieldElement(std::move(field), RatPolynomial::constant(q)) {}

    static NumberFieldElement generator(const NumberField& f) { return {f, RatPolynomial::monomial(1)}; }

    const NumberField& field() const { return field_; }
    const RatPolynomial& polynomial() const { return value_; }

    /// Rational coordinates in the power basis 1, λ, ..., λ^(n-1).
    std::vector<Rational> coords() const {
        std::vector<Rational> c(static_cast<std::size_t>(field_.degree()), Rational(0));
        for (int i = 0; i <= value_.degree(); ++i) c[static_cast<std::size_t>(i)] = value_.coeff(i);
        return c;
    }

    bool is_zero() const { return value_.is_zero(); }
    bool is_rational() const { return value_.degree() <= 0; }
    Rational rational_value() const {
        if (!is_rational()) throw DomainError("element is not rational");
        return value_.coeff(0);
    }

    /// Exact sign under the real embedding.
    int sign() const { return field_.embedding().sign_of(value_); }

    double to_double() const {
        RealRoot r = field_.embedding();
        r.refine_to(Rational(1) / Rational(BigInt(1) << 80));
        Rational mid = (r.lo() + r.hi()) / 2;
        return value_.evaluate(mid).get_d();
    }

    NumberFieldElement inverse() const {
        if (is_zero()) throw DomainError("inverse of zero in number field");
        // Extended Euclid: s*value + t*m = 1.
        RatPolynomial r0 = field_.monic_modulus(), r1 = value_;
        RatPolynomial s0, s1 = RatPolynomial::constant(1);
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            RatPolynomial s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.degree() != 0) throw DomainError("modulus is not irreducible: zero divisor found");
        return {field_, (Rational(1) / r0.coeff(0)) * s0};
    }

    NumberFieldElement pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        NumberFieldElement result(field_, Rational(1)), base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
        check_same(a, b);
        return {a.field_, a.value_ + b.value_};
    }
    friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
        check_same(a, b);
        return {a.field_, a.value_ - b.value_};
    }
    friend NumberFieldElement operator-(const NumberFieldElement& a) { return {a.field_, -a.value_}; }
    friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
        check_same(a, b);
        return {a.field_, a.value_ * b.value_};
    }
    friend NumberFieldElement operator*(const Rational& k, const NumberFieldElement& a) { return {a.field_, k * a.value_}; }
    friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) { return a * b.inverse(); }
    NumberFieldElement& operator+=(const NumberFieldElement& o) { return *this = *this + o; }
    NumberFieldElement& operator-=(const NumberFieldElement& o) { return *this = *this - o; }
    NumberFieldElement& operator*=(const NumberFieldElement& o) { return *this = *this * o; }

    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
        check_same(a, b);
        return a.value_ == b.value_;
    }
    friend bool operator!=(const NumberFieldElement& a, const NumberFieldElement& b) { return !(a == b); }
    friend bool operator<(const NumberFieldElement& a, const NumberFieldElement& b) { return (a - b).sign() < 0; }

    std::string to_string(const std::string& var = "λ") const { return value_.to_string(var); }

    friend void check_same(const NumberFieldElement& a, const NumberFieldElement& b) {
        if (a.field_ != b.field_) throw DomainError("mixed fields");
    }

private:
    NumberField field_;
    RatPolynomial value_;
};

inline std::ostream& operator<<(std::ostream& os, const NumberFieldElement& x) { return os << x.to_string(); }

/// Minimal polynomial of the largest real root of p, with that root.
struct DominantRoot {
    IntPolynomial minimal_polynomial;
    RealRoot root;
};

inline DominantRoot dominant_root(const IntPolynomial& p) {
    Factorization f = factor_over_Z(p);
    std::optional<DominantRoot> best;
    for (const auto& factor : f.factors) {
        auto r = largest_real_root(factor);
        if (!r) continue;
        if (!best || compare(*r, best->root) > 0) best = DominantRoot{factor, *r};
    }
    if (!best) throw DomainError("polynomial " + p.to_string() + " has no real root");
    return *best;
}

inline NumberField dominant_field(const IntPolynomial& p) {
    DominantRoot d = dominant_root(p);
    return NumberField(d.minimal_polynomial, d.root);
}

}  // namespace pdstile
