#pragma once

#include <string>

#include "eo/rational.hpp"

namespace eo {

// The field Q(sqrt5): a + b*sqrt5 with rational a, b. Only sqrt5 is needed
// (golden-ratio weight), so this is a fixed quadratic extension rather than a
// generic number field.
class QuadExtSqrt5 {
  public:
    QuadExtSqrt5() = default;
    QuadExtSqrt5(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
    QuadExtSqrt5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadExtSqrt5 zero() { return QuadExtSqrt5(); }
    static QuadExtSqrt5 one() { return QuadExtSqrt5(1); }
    static QuadExtSqrt5 from_long(long n) { return QuadExtSqrt5(n); }
    static QuadExtSqrt5 from_rational(const Rational& r) { return {r, Rational(0)}; }
    static QuadExtSqrt5 sqrt5() { return {Rational(0), Rational(1)}; }
    // (1+sqrt5)/2
    static QuadExtSqrt5 golden_ratio() { return {Rational(1, 2), Rational(1, 2)}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    // conjugation a + b*sqrt5 -> a - b*sqrt5 (a ring automorphism)
    QuadExtSqrt5 conj() const { return {a_, -b_}; }
    // field norm a^2 - 5 b^2, always rational
    Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }
    // sign of the real number a + b*sqrt5, decided exactly
    int sign_as_real() const;

    QuadExtSqrt5 operator-() const { return {-a_, -b_}; }
    QuadExtSqrt5& operator+=(const QuadExtSqrt5& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadExtSqrt5& operator-=(const QuadExtSqrt5& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    friend QuadExtSqrt5 operator+(QuadExtSqrt5 a, const QuadExtSqrt5& b) { return a += b; }
    friend QuadExtSqrt5 operator-(QuadExtSqrt5 a, const QuadExtSqrt5& b) { return a -= b; }
    friend QuadExtSqrt5 operator*(const QuadExtSqrt5& x, const QuadExtSqrt5& y) {
        return {x.a_ * y.a_ + Rational(5) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    QuadExtSqrt5 inverse() const;
    friend QuadExtSqrt5 operator/(const QuadExtSqrt5& x, const QuadExtSqrt5& y) {
        return x * y.inverse();
    }
    friend bool operator==(const QuadExtSqrt5& x, const QuadExtSqrt5& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExtSqrt5& x, const QuadExtSqrt5& y) { return !(x == y); }

    static bool try_divide(QuadExtSqrt5& out, const QuadExtSqrt5& num, const QuadExtSqrt5& den) {
        if (den.is_zero()) return false;
        out = num / den;
        return true;
    }

    // "a", "b*sqrt5" or "a+b*sqrt5" with rationals in num/den form
    std::string str() const;

  private:
    Rational a_, b_;
};

}  // namespace eo
