#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "eo/errors.hpp"
#include "eo/rational.hpp"

namespace eo {

// Truncated Laurent series over a coefficient ring R.
//
// Stored data: coefficients for exponents valuation .. order-1 (order is an
// exclusive bound). The order tracks how far the series is *known*; asking
// for a coefficient at or beyond it is a hard error, never a silent zero.
// Truncation propagates pessimistically through every operation: the result
// order is the tightest bound justified by the inputs.
//
// The ring R must provide: zero(), one(), from_long(), from_rational(),
// +, -, unary -, *, ==, is_zero(), try_divide(out, num, den), str().
// Values are immutable in practice; all operations are pure functions, so
// series can be shared freely across threads.
template <class R>
class TruncSeries {
  public:
    TruncSeries() : val_(0), order_(0) {}
    TruncSeries(int valuation, int order, std::vector<R> coeffs)
        : val_(valuation), order_(order), c_(std::move(coeffs)) {
        if (order_ < val_ || c_.size() != static_cast<size_t>(order_ - val_))
            throw BadParameter("inconsistent series bounds");
    }

    // O(q^order): nothing known to be nonzero
    static TruncSeries zero_to(int order) { return TruncSeries(order, order, {}); }
    static TruncSeries constant(const R& c, int order) { return monomial(c, 0, order); }
    static TruncSeries monomial(const R& c, int exp, int order) {
        if (exp >= order) return zero_to(order);
        std::vector<R> v(static_cast<size_t>(order - exp), R::zero());
        v[0] = c;
        return TruncSeries(exp, order, std::move(v));
    }
    // the series "q" itself
    static TruncSeries identity(int order) { return monomial(R::one(), 1, order); }
    // polynomial from coefficients of exponents 0,1,2,...
    static TruncSeries from_poly(const std::vector<R>& coeffs, int order) {
        std::vector<R> v(static_cast<size_t>(order), R::zero());
        for (size_t i = 0; i < coeffs.size() && i < v.size(); ++i) v[i] = coeffs[i];
        return TruncSeries(0, order, std::move(v));
    }

    int valuation() const { return val_; }
    int order() const { return order_; }
    int known_terms() const { return order_ - val_; }

    const R& coef(int n) const {
        if (n >= order_)
            throw OrderExceeded("coefficient at exponent " + std::to_string(n) +
                                " requested, series known only below " + std::to_string(order_));
        if (n < val_) {
            static const R kZero = R::zero();
            return kZero;
        }
        return c_[static_cast<size_t>(n - val_)];
    }

    bool is_identically_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const R& x) { return x.is_zero(); });
    }

    // smallest exponent with a nonzero stored coefficient, or order() if none
    int first_nonzero_exponent() const {
        for (int n = val_; n < order_; ++n)
            if (!c_[static_cast<size_t>(n - val_)].is_zero()) return n;
        return order_;
    }

    // trims leading stored zeros (raises the valuation, keeps the order)
    TruncSeries normalized() const {
        int v = first_nonzero_exponent();
        if (v == val_) return *this;
        return TruncSeries(v, order_, std::vector<R>(c_.begin() + (v - val_), c_.end()));
    }

    TruncSeries truncated(int new_order) const {
        if (new_order >= order_) return *this;
        if (new_order <= val_) return zero_to(new_order);
        return TruncSeries(val_, new_order,
                           std::vector<R>(c_.begin(), c_.begin() + (new_order - val_)));
    }

    // multiply by q^delta
    TruncSeries shifted(int delta) const { return TruncSeries(val_ + delta, order_ + delta, c_); }

    TruncSeries operator-() const {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(-x);
        return TruncSeries(val_, order_, std::move(v));
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        int order = std::min(a.order_, b.order_);
        int val = std::min(std::min(a.val_, b.val_), order);
        std::vector<R> v(static_cast<size_t>(order - val), R::zero());
        for (int n = val; n < order; ++n) {
            R s = R::zero();
            if (n >= a.val_ && n < a.order_) s += a.c_[static_cast<size_t>(n - a.val_)];
            if (n >= b.val_ && n < b.order_) s += b.c_[static_cast<size_t>(n - b.val_)];
            v[static_cast<size_t>(n - val)] = s;
        }
        return TruncSeries(val, order, std::move(v));
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

    // plain O(n^2) convolution; exactness first, speed second
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        int order = std::min(a.order_ + b.val_, b.order_ + a.val_);
        int val = std::min(a.val_ + b.val_, order);
        std::vector<R> v(static_cast<size_t>(order - val), R::zero());
        for (int i = a.val_; i < a.order_; ++i) {
            const R& ai = a.c_[static_cast<size_t>(i - a.val_)];
            if (ai.is_zero()) continue;
            int jmax = std::min(b.order_, order - i);
            for (int j = b.val_; j < jmax; ++j) {
                const R& bj = b.c_[static_cast<size_t>(j - b.val_)];
                if (bj.is_zero()) continue;
                v[static_cast<size_t>(i + j - val)] += ai * bj;
            }
        }
        return TruncSeries(val, order, std::move(v));
    }

    TruncSeries operator*(const R& c) const {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(x * c);
        return TruncSeries(val_, order_, std::move(v));
    }

    std::string str(const std::string& var = "q") const {
        std::string s;
        for (int n = val_; n < order_; ++n) {
            const R& c = c_[static_cast<size_t>(n - val_)];
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*" + var + "^" + std::to_string(n);
        }
        if (s.empty()) s = "0";
        s += " + O(" + var + "^" + std::to_string(order_) + ")";
        return s;
    }

  private:
    int val_;
    int order_;
    std::vector<R> c_;
};

template <class R>
bool operator==(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    if (a.order() != b.order()) return false;
    int lo = std::min(a.valuation(), b.valuation());
    for (int n = lo; n < a.order(); ++n)
        if (!(a.coef(n) == b.coef(n))) return false;
    return true;
}

// Multiplicative inverse. The lowest nonzero coefficient must be a unit; the
// valuation negates and the relative precision is preserved.
template <class R>
TruncSeries<R> inverse(const TruncSeries<R>& f) {
    TruncSeries<R> g = f.normalized();
    if (g.known_terms() == 0) throw NonUnitLeading("inverse of a series with no known nonzero term");
    const int v = g.valuation();
    const int rel = g.known_terms();
    R lead_inv = R::zero();
    if (!R::try_divide(lead_inv, R::one(), g.coef(v)))
        throw NonUnitLeading("leading coefficient is not invertible: " + g.coef(v).str());
    // h = g shifted to valuation 0; compute h^-1 by the standard recurrence
    std::vector<R> inv(static_cast<size_t>(rel), R::zero());
    inv[0] = lead_inv;
    for (int n = 1; n < rel; ++n) {
        R acc = R::zero();
        for (int k = 1; k <= n; ++k) {
            const R& hk = g.coef(v + k);
            if (hk.is_zero()) continue;
            acc += hk * inv[static_cast<size_t>(n - k)];
        }
        inv[static_cast<size_t>(n)] = -(lead_inv * acc);
    }
    return TruncSeries<R>(-v, -v + rel, std::move(inv));
}

// f(g) for a power series f (valuation >= 0) and g with valuation >= 1.
// Horner scheme over g; result order = min(order(g), val(g)*order(f)).
template <class R>
TruncSeries<R> compose(const TruncSeries<R>& f, const TruncSeries<R>& g) {
    if (f.valuation() < 0)
        throw PositiveValuationRequired("outer series must be a power series (valuation >= 0)");
    TruncSeries<R> gn = g.normalized();
    if (gn.known_terms() == 0)
        throw PositiveValuationRequired("inner series is identically zero to its order");
    if (gn.valuation() < 1)
        throw PositiveValuationRequired("inner series must have positive valuation");
    const int w = gn.valuation();
    const int order = std::min(gn.order(), w * f.order());
    TruncSeries<R> acc = TruncSeries<R>::zero_to(order);
    for (int e = f.order() - 1; e >= 0; --e) {
        acc = (acc * gn).truncated(order);
        const R& fe = (e >= f.valuation()) ? f.coef(e) : R::zero();
        if (!fe.is_zero()) acc = acc + TruncSeries<R>::constant(fe, order);
    }
    return acc;
}

// Compositional inverse of f = c1*q + ... (valuation exactly 1, c1 a unit),
// by Lagrange inversion: [q^n] g = (1/n) [q^{n-1}] (q/f)^n.
template <class R>
TruncSeries<R> revert(const TruncSeries<R>& f) {
    TruncSeries<R> fn = f.normalized();
    if (fn.known_terms() == 0 || fn.valuation() != 1)
        throw BadValuation("reversion needs valuation exactly 1");
    const int order = fn.order();
    TruncSeries<R> u = inverse(fn.shifted(-1));  // q/f, valuation 0, unit constant
    std::vector<R> g(static_cast<size_t>(order - 1), R::zero());
    TruncSeries<R> upow = u;
    for (int n = 1; n < order; ++n) {
        R c = upow.coef(n - 1);
        R gn = R::zero();
        if (!R::try_divide(gn, c, R::from_long(n)))
            throw BadValuation("coefficient ring does not allow division by " + std::to_string(n));
        g[static_cast<size_t>(n - 1)] = gn;
        if (n + 1 < order) upow = (upow * u).truncated(order);
    }
    return TruncSeries<R>(1, order, std::move(g));
}

// Euler operator q d/dq: multiplies the coefficient at exponent n by n.
// The result is normalized; in particular a constant term always drops out,
// which keeps the justified orders tight in iterated d/dR applications.
template <class R>
TruncSeries<R> euler_d(const TruncSeries<R>& f) {
    std::vector<R> v;
    v.reserve(static_cast<size_t>(f.known_terms()));
    for (int n = f.valuation(); n < f.order(); ++n) v.push_back(f.coef(n) * R::from_long(n));
    return TruncSeries<R>(f.valuation(), f.order(), std::move(v)).normalized();
}

// plain formal derivative d/dq
template <class R>
TruncSeries<R> formal_deriv(const TruncSeries<R>& f) {
    return euler_d(f).shifted(-1);
}

// df/dg = (q d/dq f) / (q d/dq g) for two series in the same variable q.
template <class R>
TruncSeries<R> deriv_wrt(const TruncSeries<R>& f, const TruncSeries<R>& g) {
    return euler_d(f) * inverse(euler_d(g));
}

// Divides every coefficient exactly by a ring element; throws
// CancellationFailure when any division is not exact. This is how the
// structural (gamma+2) factors are removed in symbolic mode.
template <class R>
TruncSeries<R> exact_div_coeffs(const TruncSeries<R>& f, const R& d, const char* what) {
    std::vector<R> v;
    v.reserve(static_cast<size_t>(f.known_terms()));
    for (int n = f.valuation(); n < f.order(); ++n) {
        R q = R::zero();
        if (!R::try_divide(q, f.coef(n), d))
            throw CancellationFailure(std::string(what) + ": coefficient at exponent " +
                                      std::to_string(n) + " not divisible by " + d.str());
        v.push_back(std::move(q));
    }
    return TruncSeries<R>(f.valuation(), f.order(), std::move(v));
}

// Lift a rational-coefficient series into another ring.
template <class To>
TruncSeries<To> lift_series(const TruncSeries<Rational>& s) {
    std::vector<To> v;
    v.reserve(static_cast<size_t>(s.known_terms()));
    for (int n = s.valuation(); n < s.order(); ++n) v.push_back(To::from_rational(s.coef(n)));
    return TruncSeries<To>(s.valuation(), s.order(), std::move(v));
}

}  // namespace eo
