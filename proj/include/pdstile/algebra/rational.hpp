#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "pdstile/error.hpp"

namespace pdstile {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; values built from raw parts go through canonicalize().
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InputError("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw InputError("bad integer literal '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw InputError("bad integer literal '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

/// Parses "p", "-p" or "p/q" into a reduced rational.
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

inline int sign(const Rational& x) { return sgn(x); }
inline int sign(const BigInt& x) { return sgn(x); }

inline Rational abs_value(const Rational& x) { return abs(x); }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline BigInt floor_of(const Rational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline BigInt ceil_of(const Rational& x) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline BigInt lcm_of(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt gcd_of(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::int64_t to_int64(const BigInt& x) {
    if (!x.fits_slong_p()) throw DomainError("integer does not fit in 64 bits: " + x.get_str());
    return x.get_si();
}

}  // namespace pdstile
