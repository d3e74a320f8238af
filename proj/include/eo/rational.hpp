#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "eo/errors.hpp"

namespace eo {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (GMP canonical form). All arithmetic is exact.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_long(long n) { return Rational(n); }
    static Rational from_rational(const Rational& r) { return r; }

    // Parses "num" or "num/den" in base 10.
    static Rational from_string(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw BadParameter("division by zero rational");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    // Exact division; fails only for zero divisor (Q is a field).
    static bool try_divide(Rational& out, const Rational& num, const Rational& den) {
        if (den.is_zero()) return false;
        out = num / den;
        return true;
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    // "num" when the denominator is 1, otherwise "num/den".
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

  private:
    mpq_class v_;
};

// n-th power of a small integer base, as a Rational. Exponent grows as the
// theta sums do, so this goes through mpz.
Rational int_pow(long base, unsigned exp);

// Binomial and factorial helpers used by the map-count cross-check.
mpz_class factorial_mpz(unsigned n);

}  // namespace eo
