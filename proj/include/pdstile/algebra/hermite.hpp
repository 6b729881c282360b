#pragma once

#include <vector>

#include "pdstile/algebra/matrix.hpp"

namespace pdstile {

/// Row-style Hermite normal form: the nonzero rows form an echelon basis of the
/// Z-span of the input rows, pivots positive, entries above each pivot reduced
/// into [0, pivot).
struct HermiteForm {
    IntMatrix basis;                     // r x n, r = rank
    std::vector<std::size_t> pivots;     // pivot column of each row
};

inline HermiteForm hermite_normal_form(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols; ++c) std::swap(m(i, c), m(j, c));
    };
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid on column c among rows r.. until a single nonzero entry remains.
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (m(i, c) != 0 && (best == rows || abs(m(i, c)) < abs(m(best, c)))) best = i;
            if (best == rows) break;
            if (best != r) swap_rows(best, r);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m(i, c) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
                for (std::size_t k = c; k < cols; ++k) m(i, k) -= q * m(r, k);
                if (m(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (r >= rows || m(r, c) == 0) continue;
        if (m(r, c) < 0)
            for (std::size_t k = c; k < cols; ++k) m(r, k) = -m(r, k);
        for (std::size_t i = 0; i < r; ++i) {
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
            if (q != 0)
                for (std::size_t k = c; k < cols; ++k) m(i, k) -= q * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    HermiteForm h{IntMatrix(r, cols), pivots};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < cols; ++c) h.basis(i, c) = m(i, c);
    return h;
}

/// Whether x lies in the Z-span of the HNF rows.
inline bool lattice_contains(const HermiteForm& h, std::vector<BigInt> x) {
    if (x.size() != h.basis.cols()) throw DomainError("lattice membership: dimension mismatch");
    std::size_t row = 0;
    for (std::size_t c = 0; c < x.size(); ++c) {
        if (row < h.pivots.size() && h.pivots[row] == c) {
            const BigInt& p = h.basis(row, c);
            if (x[c] % p != 0) return false;
            BigInt q = x[c] / p;
            for (std::size_t k = c; k < x.size(); ++k) x[k] -= q * h.basis(row, k);
            ++row;
        } else if (x[c] != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace pdstile
