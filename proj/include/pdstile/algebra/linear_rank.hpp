#pragma once

#include <vector>

#include "pdstile/algebra/matrix.hpp"
#include "pdstile/algebra/number_field.hpp"
#include "pdstile/algebra/quadratic.hpp"

namespace pdstile {

/// Dimension over Q of the span of xs (rank of the rational coordinate matrix).
inline std::size_t q_linear_rank(const std::vector<NumberFieldElement>& xs) {
    if (xs.empty()) return 0;
    const NumberField& f = xs.front().field();
    RatMatrix m(xs.size(), static_cast<std::size_t>(f.degree()));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].field() != f) throw DomainError("mixed fields");
        auto c = xs[i].coords();
        for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = c[j];
    }
    return rank(m);
}

inline std::size_t q_linear_rank(const std::vector<QuadraticElement>& xs) {
    BigInt d = 1;
    for (const auto& x : xs) {
        if (x.is_rational()) continue;
        if (d != 1 && x.d() != d) throw DomainError("mixed fields");
        d = x.d();
    }
    RatMatrix m(xs.size(), 2);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        m(i, 0) = xs[i].a();
        m(i, 1) = xs[i].b();
    }
    return rank(m);
}

}  // namespace pdstile
