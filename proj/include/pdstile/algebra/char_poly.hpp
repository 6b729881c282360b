#pragma once

#include "pdstile/algebra/matrix.hpp"
#include "pdstile/algebra/polynomial.hpp"

namespace pdstile {

/// det(xI - M) by the Faddeev-LeVerrier recurrence. Every division by k is
/// exact over Z, so the computation never leaves the integers.
inline IntPolynomial char_poly(const IntMatrix& m) {
    if (!m.is_square()) throw InputError("char_poly: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<BigInt> c(n + 1, BigInt(0));
    c[n] = 1;
    IntMatrix mk(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        BigInt tr = (m * mk).trace();
        BigInt q = -tr;
        if (q % static_cast<long>(k) != 0) throw InternalError("Faddeev-LeVerrier: inexact division");
        c[n - k] = q / static_cast<long>(k);
    }
    return IntPolynomial(std::move(c));
}

/// p(M) by Horner's scheme; used to check Cayley-Hamilton.
inline IntMatrix evaluate_at_matrix(const IntPolynomial& p, const IntMatrix& m) {
    if (!m.is_square()) throw InputError("evaluate_at_matrix: matrix is not square");
    IntMatrix acc(m.rows(), m.cols());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        for (std::size_t j = 0; j < m.rows(); ++j) acc(j, j) += p.coeff(i);
    }
    return acc;
}

}  // namespace pdstile
