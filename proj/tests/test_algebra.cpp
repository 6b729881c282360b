#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pdstile/algebra/char_poly.hpp"
#include "pdstile/algebra/factor.hpp"
#include "pdstile/algebra/hermite.hpp"
#include "pdstile/algebra/linear_rank.hpp"
#include "pdstile/algebra/perron.hpp"
#include "pdstile/algebra/pisot.hpp"
#include "pdstile/algebra/quadratic.hpp"

using namespace pdstile;

namespace {

IntPolynomial P(std::initializer_list<long> c) {
    std::vector<BigInt> v;
    for (long x : c) v.emplace_back(x);
    return IntPolynomial(v);
}

IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

}  // namespace

TEST(Rational, ParseAndCanonical) {
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-3"), Rational(-3));
    EXPECT_EQ(parse_rational("2/-4").get_den(), 2);
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("x"), InputError);
    EXPECT_EQ(floor_of(Rational(-1, 2)), -1);
    EXPECT_EQ(ceil_of(Rational(-1, 2)), 0);
}

TEST(Polynomial, Basics) {
    IntPolynomial p = P({-1, -1, 1});
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.to_string(), "x^2 - x - 1");
    EXPECT_EQ(P({}).degree(), -1);
    EXPECT_EQ((P({1, 1}) * P({-1, 1})), P({-1, 0, 1}));
    auto [q, r] = divmod(to_rational(P({-1, 0, 1})), to_rational(P({-1, 1})));
    EXPECT_EQ(q, to_rational(P({1, 1})));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(squarefree_part(P({1, -2, 1})), P({-1, 1}));
    EXPECT_EQ(gcd(P({-1, 0, 1}), P({1, 2, 1})), P({1, 1}));
}

TEST(CharPoly, Examples) {
    EXPECT_EQ(char_poly(M({{1, 1}, {1, 0}})), P({-1, -1, 1}));
    EXPECT_EQ(char_poly(M({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}})), P({-1, -1, -1, 1}));
    EXPECT_EQ(char_poly(M({{1, 0}, {0, 1}})), P({1, -2, 1}));
    EXPECT_THROW(char_poly(IntMatrix(2, 3)), InputError);
}

TEST(CharPoly, AgreesWithCofactorOracle) {
    IntMatrix m = M({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}});
    IntPolynomial p = char_poly(m);
    for (long x = -4; x <= 4; ++x) EXPECT_EQ(p.evaluate(BigInt(x)), oracle::char_poly_at(m, x)) << x;
    IntMatrix n = M({{2, -1, 0, 3}, {1, 1, 4, 0}, {0, 5, -2, 1}, {7, 0, 1, 1}});
    IntPolynomial q = char_poly(n);
    for (long x = -5; x <= 5; ++x) EXPECT_EQ(q.evaluate(BigInt(x)), oracle::char_poly_at(n, x)) << x;
    EXPECT_EQ(determinant(n), oracle::cofactor_det(n));
}

TEST(Irreducible, Examples) {
    EXPECT_TRUE(is_irreducible_over_Q(P({-1, -1, 1})).irreducible);
    auto r = is_irreducible_over_Q(P({-1, 0, 1}));
    EXPECT_FALSE(r.irreducible);
    ASSERT_TRUE(r.factor);
    IntPolynomial f = *r.factor;
    EXPECT_TRUE(f == P({-1, 1}) || f == P({1, 1}));
    EXPECT_TRUE(is_irreducible_over_Q(P({-1, -1, -1, 1})).irreducible);
    EXPECT_THROW(is_irreducible_over_Q(P({})), InputError);
}

TEST(Irreducible, QuarticWithoutRationalRoots) {
    // (x^2+1)(x^2-x-1): no rational roots, reducible.
    IntPolynomial p = P({1, 0, 1}) * P({-1, -1, 1});
    auto r = is_irreducible_over_Q(p);
    EXPECT_FALSE(r.irreducible);
    ASSERT_TRUE(r.factor);
    EXPECT_TRUE(divides_exactly(*r.factor, p));
    EXPECT_EQ(r.factor->degree(), 2);
    EXPECT_TRUE(is_irreducible_over_Q(P({-2, 0, 0, 0, 1})).irreducible);  // x^4 - 2
    Factorization fz = factor_over_Z(P({0, -2, 1}));                      // x^2 - 2x
    EXPECT_EQ(fz.factors.size(), 2u);
}

TEST(RealRoots, IsolationAndCompare) {
    auto roots = isolate_real_roots(P({-2, 0, 1}));
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_NEAR(roots[1].approximate(), std::sqrt(2.0), 1e-12);
    EXPECT_EQ(roots[1].compare_to(Rational(3, 2)), -1);
    EXPECT_EQ(roots[1].sign_of(to_rational(P({-2, 0, 1}))), 0);
    EXPECT_EQ(roots[1].sign_of(to_rational(P({-1, 1}))), 1);  // sqrt2 - 1 > 0
    // sqrt2 as root of x^4 - 4 equals sqrt2 from x^2 - 2
    auto other = isolate_real_roots(P({-4, 0, 0, 0, 1}));
    EXPECT_EQ(compare(other.back(), roots[1]), 0);
    auto exact = isolate_real_roots(P({-2, 1}));
    EXPECT_EQ(compare(exact.back(), roots[1]), 1);
}

TEST(Pisot, Examples) {
    EXPECT_TRUE(is_pisot(P({-1, -1, 1})).pisot);
    EXPECT_TRUE(is_pisot(P({-1, -1, -1, 1})).pisot);
    EXPECT_FALSE(is_pisot(P({-3, -1, 1})).pisot);
    EXPECT_TRUE(is_pisot(P({-2, -1, 1})).pisot);  // (x-2)(x+1): λ = 2
    EXPECT_THROW(is_pisot(P({1, 1})), DomainError);
    EXPECT_FALSE(is_pisot(P({1, -1, -1, -1, 1})).pisot);  // Salem-type reciprocal quartic
}

TEST(Pisot, AgreesWithNumericOracle) {
    for (auto p : {P({-1, -1, 1}), P({-1, -1, -1, 1}), P({-3, -1, 1}), P({-1, 0, -1, 1}), P({-1, -1, 0, 1}),
                   P({1, -3, 0, 1}), P({-1, -2, -1, 1}), P({-1, 1, -2, 1}), P({1, -1, -2, 0, 1})}) {
        PisotReport rep = is_pisot(p);
        auto roots = oracle::numeric_roots(rep.minimal_polynomial);
        double top = -1e9;
        for (auto z : roots)
            if (std::abs(z.imag()) < 1e-9) top = std::max(top, z.real());
        int big = 0;
        for (auto z : roots)
            if (std::abs(z) > 1 - 1e-9) ++big;
        EXPECT_EQ(rep.pisot, top > 1 && big == 1) << p;
    }
}

TEST(Perron, Fibonacci) {
    PerronData d = perron_data(M({{1, 1}, {1, 0}}));
    EXPECT_EQ(d.minimal_polynomial, P({-1, -1, 1}));
    ASSERT_EQ(d.omega.size(), 2u);
    EXPECT_EQ(d.omega[0], NumberFieldElement(d.field, Rational(1)));
    EXPECT_EQ(d.omega[1], d.lambda - NumberFieldElement(d.field, Rational(1)));
}

TEST(Perron, PeriodDoublingAndScalar) {
    PerronData d = perron_data(M({{1, 2}, {1, 0}}));
    EXPECT_EQ(d.minimal_polynomial, P({-2, 1}));
    EXPECT_TRUE(d.lambda.is_rational());
    EXPECT_EQ(d.lambda.rational_value(), 2);
    EXPECT_EQ(d.omega[1].rational_value(), 1);
    PerronData s = perron_data(M({{2}}));
    EXPECT_EQ(s.lambda.rational_value(), 2);
    EXPECT_EQ(s.omega.size(), 1u);
    EXPECT_THROW(perron_data(M({{1, 0}, {0, 1}})), DomainError);
}

TEST(Perron, EigenvectorIdentityHolds) {
    for (auto m : {M({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}), M({{2, 1, 0}, {1, 1, 1}, {1, 0, 1}}), M({{1, 1}, {1, 1}})}) {
        PerronData d = perron_data(m);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            NumberFieldElement acc(d.field, Rational(0));
            for (std::size_t i = 0; i < m.rows(); ++i) acc += Rational(m(i, j)) * d.omega[i];
            EXPECT_EQ(acc, d.lambda * d.omega[j]);
        }
    }
}

TEST(NumberField, ArithmeticAndErrors) {
    NumberField f = dominant_field(P({-1, -1, 1}));
    auto l = NumberFieldElement::generator(f);
    EXPECT_EQ(l * l, l + NumberFieldElement(f, Rational(1)));
    EXPECT_EQ(l.inverse(), l - NumberFieldElement(f, Rational(1)));
    EXPECT_EQ(l.pow(-2) * l.pow(2), NumberFieldElement(f, Rational(1)));
    EXPECT_EQ((l - NumberFieldElement(f, Rational(2))).sign(), -1);
    NumberField g = dominant_field(P({-2, 0, 1}));
    EXPECT_THROW((void)(l + NumberFieldElement::generator(g)), DomainError);
    EXPECT_NEAR(l.to_double(), (1 + std::sqrt(5.0)) / 2, 1e-14);
}

TEST(Quadratic, SignAndArithmetic) {
    QuadraticElement s2(0, 1, 2);
    EXPECT_EQ(s2 * s2, QuadraticElement(2));
    EXPECT_EQ(QuadraticElement(Rational(3, 2), -1, 2).sign(), 1);   // 1.5 - 1.414
    EXPECT_EQ(QuadraticElement(Rational(7, 5), -1, 2).sign(), -1);  // 1.4 - 1.414
    EXPECT_EQ((QuadraticElement(1) / (QuadraticElement(1) + s2)), s2 - QuadraticElement(1));
    EXPECT_THROW(QuadraticElement(0, 1, 4), DomainError);
    EXPECT_THROW((void)(s2 + QuadraticElement(0, 1, 3)), DomainError);
    EXPECT_EQ(QuadraticElement(1, 2, 1), QuadraticElement(3));
}

TEST(Quadratic, UnreducedRationalsAreCanonicalized) {
    // mpq's two-argument constructor does not reduce.
    QuadraticElement x(Rational(-6, 2), Rational(4, 8), 2);
    EXPECT_EQ(x, QuadraticElement(-3, make_rational(1, 2), 2));
    EXPECT_EQ(x.to_string(), QuadraticElement(-3, make_rational(1, 2), 2).to_string());
    EXPECT_EQ(QuadraticElement(Rational(10, 5)).to_string(), "2");
}

TEST(LinearRank, Examples) {
    NumberField f = dominant_field(P({-1, -1, 1}));
    EXPECT_EQ(q_linear_rank({NumberFieldElement(f, Rational(1)), NumberFieldElement::generator(f)}), 2u);
    EXPECT_EQ(q_linear_rank({NumberFieldElement(f, Rational(1)), NumberFieldElement(f, Rational(2))}), 1u);
    QuadraticElement h(0, Rational(1, 2), 2);
    EXPECT_EQ(q_linear_rank({QuadraticElement(1) - h, h}), 2u);
    EXPECT_EQ(q_linear_rank(std::vector<QuadraticElement>{QuadraticElement(1), QuadraticElement(2)}), 1u);
    NumberField g = dominant_field(P({-2, 0, 1}));
    EXPECT_THROW(q_linear_rank({NumberFieldElement(f, Rational(1)), NumberFieldElement(g, Rational(1))}), DomainError);
}

TEST(Hermite, Membership) {
    HermiteForm h = hermite_normal_form(M({{2, 4}, {3, 6}, {0, 5}}));
    EXPECT_EQ(h.basis.rows(), 2u);
    EXPECT_TRUE(lattice_contains(h, {BigInt(1), BigInt(2)}));
    EXPECT_TRUE(lattice_contains(h, {BigInt(0), BigInt(5)}));
    EXPECT_FALSE(lattice_contains(h, {BigInt(0), BigInt(1)}));
    EXPECT_FALSE(lattice_contains(h, {BigInt(1), BigInt(0)}));
}
