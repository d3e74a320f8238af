#pragma once

#include <map>
#include <string>

#include "eo/gamma_poly.hpp"
#include "eo/rational.hpp"

namespace eo {

// Sparse Laurent polynomial in the turn weight omega over Rational.
// Exponents may be negative; zero coefficients are never stored. This is the
// coefficient ring of the loop-equation oracle, where gamma = w^2 + w^-2.
class OmegaLaurent {
  public:
    OmegaLaurent() = default;
    OmegaLaurent(long c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) c_[0] = Rational(c);
    }
    explicit OmegaLaurent(Rational c) {
        if (!c.is_zero()) c_[0] = std::move(c);
    }

    static OmegaLaurent zero() { return OmegaLaurent(); }
    static OmegaLaurent one() { return OmegaLaurent(1); }
    static OmegaLaurent from_long(long n) { return OmegaLaurent(n); }
    static OmegaLaurent from_rational(const Rational& r) { return OmegaLaurent(r); }
    static OmegaLaurent monomial(Rational c, int exp);
    // w + w^-1 and w^2 + w^-2, the two combinations the oracle needs
    static OmegaLaurent omega_plus_inverse();
    static OmegaLaurent gamma_in_omega();

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    const std::map<int, Rational>& terms() const { return c_; }
    Rational coef(int exp) const;
    int min_exp() const;  // throws on zero
    int max_exp() const;  // throws on zero

    OmegaLaurent operator-() const;
    OmegaLaurent& operator+=(const OmegaLaurent& o);
    OmegaLaurent& operator-=(const OmegaLaurent& o);
    friend OmegaLaurent operator+(OmegaLaurent a, const OmegaLaurent& b) { return a += b; }
    friend OmegaLaurent operator-(OmegaLaurent a, const OmegaLaurent& b) { return a -= b; }
    friend OmegaLaurent operator*(const OmegaLaurent& a, const OmegaLaurent& b);
    friend bool operator==(const OmegaLaurent& a, const OmegaLaurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const OmegaLaurent& a, const OmegaLaurent& b) { return !(a == b); }

    // Exact Laurent division (false when not exact).
    static bool try_divide(OmegaLaurent& out, const OmegaLaurent& num, const OmegaLaurent& den);

    // substitution w -> w^-1
    OmegaLaurent conj() const;
    bool is_conj_symmetric() const { return *this == conj(); }
    bool has_even_support_only() const;

    std::string str(const std::string& var = "w") const;

  private:
    std::map<int, Rational> c_;
};

// Rewrites a conj-symmetric, even-support Laurent polynomial p(w) as a
// polynomial g with g(w^2 + w^-2) = p, by repeated extraction of the top
// coefficient against the binomial expansion of (w^2+w^-2)^k.
// Throws NotExpressible otherwise: that signals an oracle bug or a wrong
// weight convention upstream.
GammaPoly omega_to_gamma(const OmegaLaurent& p);

// Substitutes gamma -> w^2 + w^-2 (the inverse direction, used in round-trip
// property tests).
OmegaLaurent gamma_to_omega(const GammaPoly& g);

}  // namespace eo
