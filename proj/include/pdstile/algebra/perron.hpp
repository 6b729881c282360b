#pragma once

#include <vector>

#include "pdstile/algebra/char_poly.hpp"
#include "pdstile/algebra/number_field.hpp"

namespace pdstile {

/// Nonnegative square matrix with some power strictly positive. Checks powers up
/// to the Wielandt bound d² - 2d + 2 on the zero pattern.
inline bool is_primitive_matrix(const IntMatrix& m) {
    if (!m.is_square() || m.rows() == 0) return false;
    const std::size_t n = m.rows();
    std::vector<std::vector<char>> a(n, std::vector<char>(n)), p;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) < 0) return false;
            a[i][j] = m(i, j) > 0;
        }
    p = a;
    const std::size_t bound = n * n - 2 * n + 2;
    for (std::size_t k = 1;; ++k) {
        bool positive = true;
        for (std::size_t i = 0; i < n && positive; ++i)
            for (std::size_t j = 0; j < n && positive; ++j) positive = p[i][j];
        if (positive) return true;
        if (k >= bound) return false;
        std::vector<std::vector<char>> q(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (p[i][l])
                    for (std::size_t j = 0; j < n; ++j) q[i][j] |= a[l][j];
        p = std::move(q);
    }
}

struct PerronData {
    IntPolynomial minimal_polynomial;
    NumberField field;
    NumberFieldElement lambda;
    std::vector<NumberFieldElement> omega;  // left eigenvector, omega[0] = 1
};

/// Solves ω (M - λI) = 0 over Q(λ) for the dominant eigenvalue λ.
inline PerronData perron_data(const IntMatrix& m) {
    if (!m.is_square()) throw InputError("perron_data: matrix is not square");
    if (!is_primitive_matrix(m)) throw DomainError("perron_data: matrix is not primitive");
    const std::size_t n = m.rows();
    NumberField field = dominant_field(char_poly(m));
    NumberFieldElement lambda = NumberFieldElement::generator(field);
    NumberFieldElement zero(field, Rational(0));

    // Rows of A = (M - λI)^T; ω^T spans ker A.
    std::vector<std::vector<NumberFieldElement>> a(n, std::vector<NumberFieldElement>(n, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = NumberFieldElement(field, Rational(m(j, i)));
            if (i == j) a[i][j] -= lambda;
        }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t p = r;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) continue;
        std::swap(a[p], a[r]);
        NumberFieldElement inv = a[r][c].inverse();
        for (std::size_t k = 0; k < n; ++k) a[r][k] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            NumberFieldElement f = a[i][c];
            for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[r][k];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r != n - 1) throw InternalError("perron_data: eigenspace is not one-dimensional");
    std::size_t free_col = 0;
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_col = c;
    std::vector<NumberFieldElement> omega(n, zero);
    omega[free_col] = NumberFieldElement(field, Rational(1));
    for (std::size_t i = 0; i < r; ++i) omega[pivot_col[i]] = -a[i][free_col];
    if (omega[0].is_zero()) throw InternalError("perron_data: first coordinate vanishes");
    NumberFieldElement scale = omega[0].inverse();
    for (auto& w : omega) w *= scale;
    for (const auto& w : omega)
        if (w.sign() <= 0) throw InternalError("perron_data: eigenvector not positive");
    return PerronData{field.modulus(), field, lambda, omega};
}

}  // namespace pdstile
