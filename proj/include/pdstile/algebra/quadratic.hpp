#pragma once

#include <cmath>
#include <ostream>
#include <string>
#include <tuple>

#include "pdstile/algebra/rational.hpp"

namespace pdstile {

/// a + b·√d with d a positive square-free integer. Rational values (b = 0)
/// mix freely with any d.
class QuadraticElement {
public:
    QuadraticElement() = default;
    QuadraticElement(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT: implicit from rationals is intended
    QuadraticElement(long a) : a_(a) {}                 // NOLINT
    QuadraticElement(Rational a, Rational b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ < 1) throw DomainError("quadratic field needs d >= 1");
        if (!square_free(d_)) throw DomainError("d = " + d_.get_str() + " is not square-free");
        a_.canonicalize();
        b_.canonicalize();
        normalize();
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const BigInt& d() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    int sign() const {
        int sa = pdstile::sign(a_), sb = pdstile::sign(b_);
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
        // Opposite signs: compare a² with b²d.
        Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
        if (lhs == rhs) return 0;
        return lhs > rhs ? sa : sb;
    }

    double to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d()); }

    friend QuadraticElement operator+(const QuadraticElement& x, const QuadraticElement& y) {
        return make(x.a_ + y.a_, x.b_ + y.b_, common_d(x, y));
    }
    friend QuadraticElement operator-(const QuadraticElement& x, const QuadraticElement& y) {
        return make(x.a_ - y.a_, x.b_ - y.b_, common_d(x, y));
    }
    friend QuadraticElement operator-(const QuadraticElement& x) { return make(-x.a_, -x.b_, x.d_); }
    friend QuadraticElement operator*(const QuadraticElement& x, const QuadraticElement& y) {
        BigInt d = common_d(x, y);
        return make(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadraticElement operator/(const QuadraticElement& x, const QuadraticElement& y) { return x * y.inverse(); }
    QuadraticElement& operator+=(const QuadraticElement& o) { return *this = *this + o; }
    QuadraticElement& operator-=(const QuadraticElement& o) { return *this = *this - o; }
    QuadraticElement& operator*=(const QuadraticElement& o) { return *this = *this * o; }

    QuadraticElement inverse() const {
        Rational n = a_ * a_ - b_ * b_ * Rational(d_);
        if (n == 0) throw DomainError("division by zero in quadratic field");
        return make(a_ / n, -b_ / n, d_);
    }

    friend bool operator==(const QuadraticElement& x, const QuadraticElement& y) {
        if (x.b_ != y.b_) return false;
        if (x.b_ != 0 && x.d_ != y.d_) throw DomainError("mixed fields");
        return x.a_ == y.a_;
    }
    friend bool operator!=(const QuadraticElement& x, const QuadraticElement& y) { return !(x == y); }

    /// Numeric order of the real values.
    friend int compare(const QuadraticElement& x, const QuadraticElement& y) { return (x - y).sign(); }

    /// Lexicographic order on (a, b); used for canonical keys, not numeric order.
    friend bool key_less(const QuadraticElement& x, const QuadraticElement& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

    std::string to_string() const {
        if (b_ == 0) return a_.get_str();
        std::string s = a_ == 0 ? "" : a_.get_str() + (b_ > 0 ? " + " : " - ");
        Rational mag = (a_ == 0) ? b_ : abs(b_);
        if (mag == -1) return "-√" + d_.get_str();
        if (mag == 1) return s + "√" + d_.get_str();
        return s + mag.get_str() + "√" + d_.get_str();
    }

    static bool square_free(const BigInt& d) {
        if (d > BigInt("1000000000000")) throw DomainError("d too large for square-free check");
        for (BigInt p = 2; p * p <= d; ++p)
            if (d % (p * p) == 0) return false;
        return true;
    }

private:
    static QuadraticElement make(Rational a, Rational b, BigInt d) {
        QuadraticElement q;
        q.a_ = std::move(a);
        q.b_ = std::move(b);
        q.d_ = std::move(d);
        q.normalize();
        return q;
    }
    static BigInt common_d(const QuadraticElement& x, const QuadraticElement& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_) throw DomainError("mixed fields");
        return x.d_;
    }
    void normalize() {
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
        }
    }

    Rational a_ = 0;
    Rational b_ = 0;
    BigInt d_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const QuadraticElement& x) { return os << x.to_string(); }

}  // namespace pdstile
