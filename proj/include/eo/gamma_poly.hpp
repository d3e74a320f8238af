#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "eo/rational.hpp"

namespace eo {

// Dense univariate polynomial in the vertex weight gamma over Rational.
// Canonical form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector. This is the universal coefficient ring for the
// symbolic series mode.
class GammaPoly {
  public:
    GammaPoly() = default;
    GammaPoly(long c) : c_{Rational(c)} { trim(); }  // NOLINT(google-explicit-constructor)
    explicit GammaPoly(Rational c) : c_{std::move(c)} { trim(); }
    explicit GammaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    GammaPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static GammaPoly zero() { return GammaPoly(); }
    static GammaPoly one() { return GammaPoly(1); }
    static GammaPoly from_long(long n) { return GammaPoly(n); }
    static GammaPoly from_rational(const Rational& r) { return GammaPoly(r); }
    // The indeterminate itself.
    static GammaPoly gamma() { return GammaPoly({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coef(int i) const {
        static const Rational kZero;
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : kZero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    GammaPoly operator-() const;
    GammaPoly& operator+=(const GammaPoly& o);
    GammaPoly& operator-=(const GammaPoly& o);
    friend GammaPoly operator+(GammaPoly a, const GammaPoly& b) { return a += b; }
    friend GammaPoly operator-(GammaPoly a, const GammaPoly& b) { return a -= b; }
    friend GammaPoly operator*(const GammaPoly& a, const GammaPoly& b);
    friend bool operator==(const GammaPoly& a, const GammaPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const GammaPoly& a, const GammaPoly& b) { return !(a == b); }

    // Exact polynomial division; returns false when the remainder is nonzero
    // (or den is zero). Used for the structural (gamma+2) cancellations.
    static bool try_divide(GammaPoly& out, const GammaPoly& num, const GammaPoly& den);

    Rational eval(const Rational& g) const;  // Horner

    // Substitute gamma by a value living in another coefficient ring.
    template <class R>
    R eval_in(const R& g) const {
        R acc = R::zero();
        for (size_t i = c_.size(); i-- > 0;) acc = acc * g + R::from_rational(c_[i]);
        return acc;
    }

    // e.g. "2*g^2 - 1/2*g + 3" with variable name "g"
    std::string str(const std::string& var = "g") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace eo
