#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <string>
#include <vector>

#include "pdstile/algebra/number_field.hpp"

namespace pdstile {

struct PisotReport {
    bool pisot = false;
    IntPolynomial minimal_polynomial;
    std::string reason;
    int precision_digits = 0;                    // working precision of the root certificate (0 if none was needed)
    std::vector<std::pair<double, double>> conjugates;  // certified disk centres, for display only
};

namespace detail {

/// Certifies the unit-circle position of every root of a squarefree polynomial
/// (no root of modulus 1). Returns the number of roots outside the unit disk, or
/// -1 when the disks could not be separated at this precision.
template <unsigned Digits>
int count_roots_outside_unit_disk(const IntPolynomial& p, std::vector<std::pair<double, double>>& centres) {
    using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>, boost::multiprecision::et_off>;
    using Complex = boost::multiprecision::number<boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<Digits>>, boost::multiprecision::et_off>;
    auto mod = [](const Complex& z) { return Real(abs(z)); };
    const int n = p.degree();
    std::vector<Complex> a;
    for (int i = 0; i <= n; ++i) a.emplace_back(Real(p.coeff(i).get_str()));
    auto eval = [&](const Complex& z, Complex& value, Complex& deriv) {
        value = a[static_cast<std::size_t>(n)];
        deriv = Complex(0);
        for (int i = n - 1; i >= 0; --i) {
            deriv = deriv * z + value;
            value = value * z + a[static_cast<std::size_t>(i)];
        }
    };

    // Aberth iteration from points on a circle of radius equal to the root bound.
    Real bound = 0;
    for (int i = 0; i < n; ++i) {
        Real c = mod(a[static_cast<std::size_t>(i)] / a[static_cast<std::size_t>(n)]);
        if (c > bound) bound = c;
    }
    bound += 1;
    std::vector<Complex> z;
    const Real pi = boost::math::constants::pi<Real>();
    for (int k = 0; k < n; ++k) {
        Real angle = 2 * pi * (Real(k) + Real(1) / 4) / n + Real(1) / 7;
        z.emplace_back(bound * cos(angle), bound * sin(angle));
    }
    const Real tiny = pow(Real(10), -static_cast<int>(Digits) + 8);
    for (int iter = 0; iter < 2000; ++iter) {
        Real max_step = 0;
        for (int i = 0; i < n; ++i) {
            Complex v, d;
            eval(z[static_cast<std::size_t>(i)], v, d);
            if (v == Complex(0)) continue;
            Complex ratio = v / d;
            Complex sum(0);
            for (int j = 0; j < n; ++j)
                if (j != i) sum += Complex(1) / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            Complex step = ratio / (Complex(1) - ratio * sum);
            z[static_cast<std::size_t>(i)] -= step;
            Real s = mod(step);
            if (s > max_step) max_step = s;
        }
        if (max_step < tiny) break;
    }

    // Inclusion disks: |root - z_i| <= n |p(z_i)| / |a_n prod (z_i - z_j)|; disjoint disks hold one root each.
    std::vector<Real> radius(static_cast<std::size_t>(n));
    const Real slack = pow(Real(10), -static_cast<int>(Digits) + 10);
    for (int i = 0; i < n; ++i) {
        Complex v, d;
        eval(z[static_cast<std::size_t>(i)], v, d);
        Complex prod = a[static_cast<std::size_t>(n)];
        for (int j = 0; j < n; ++j)
            if (j != i) prod *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
        if (prod == Complex(0)) return -1;
        radius[static_cast<std::size_t>(i)] = Real(n) * mod(v) / mod(prod) + slack;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mod(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]) <=
                radius[static_cast<std::size_t>(i)] + radius[static_cast<std::size_t>(j)])
                return -1;
    int outside = 0;
    centres.clear();
    for (int i = 0; i < n; ++i) {
        Real m = mod(z[static_cast<std::size_t>(i)]);
        Real r = radius[static_cast<std::size_t>(i)];
        if (m - r > 1)
            ++outside;
        else if (!(m + r < 1))
            return -1;
        centres.emplace_back(static_cast<double>(z[static_cast<std::size_t>(i)].real()),
                             static_cast<double>(z[static_cast<std::size_t>(i)].imag()));
    }
    return outside;
}

}  // namespace detail

/// Decides whether the largest real root of p is a Pisot number.
inline PisotReport is_pisot(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() < 1) throw InputError("is_pisot: polynomial of degree >= 1 required");
    if (p.leading() != 1) throw InputError("is_pisot: polynomial must be monic");
    auto roots = isolate_real_roots(p);
    if (roots.empty() || roots.back().compare_to(Rational(1)) <= 0)
        throw DomainError("is_pisot: " + p.to_string() + " has no real root > 1");
    DominantRoot dom = dominant_root(p);
    PisotReport rep;
    rep.minimal_polynomial = dom.minimal_polynomial;
    const IntPolynomial& m = dom.minimal_polynomial;
    if (m.leading() != 1) {
        rep.reason = "minimal polynomial is not monic (not an algebraic integer)";
        return rep;
    }
    if (m.degree() == 1) {
        rep.pisot = true;
        rep.reason = "rational integer > 1";
        return rep;
    }
    // Any root of modulus 1 of an irreducible m forces m to be reciprocal.
    IntPolynomial g = gcd(m, m.reversed());
    if (g.degree() >= 1) {
        if (m.degree() == 2) {
            rep.pisot = true;
            rep.reason = "reciprocal quadratic: conjugate is 1/λ";
        } else {
            rep.reason = "reciprocal minimal polynomial of degree > 2 (conjugate pairs z, 1/z)";
        }
        return rep;
    }
    int outside = detail::count_roots_outside_unit_disk<50>(m, rep.conjugates);
    rep.precision_digits = 50;
    if (outside < 0) {
        outside = detail::count_roots_outside_unit_disk<120>(m, rep.conjugates);
        rep.precision_digits = 120;
    }
    if (outside < 0) throw DomainError("is_pisot: could not certify root positions for " + m.to_string());
    rep.pisot = (outside == 1);
    rep.reason = rep.pisot ? "all conjugates certified inside the unit disk"
                           : std::to_string(outside - 1) + " conjugate(s) certified outside the unit disk";
    return rep;
}

}  // namespace pdstile
