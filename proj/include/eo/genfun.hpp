#pragma once

#include <optional>

#include "eo/theta.hpp"

namespace eo {

// The generating-function pipeline for quartic rooted planar Eulerian
// orientations with weight gamma per alternating vertex.
//
// All formulas are pre-reduced to prefactor-stripped theta ratios (see
// theta.hpp); with sin^2(a) = (g+2)/4 the trig factors collapse into exact
// (g+2) divisions, so the symbolic mode runs entirely in Q[g][[q]]:
//
//   t(q)    = ( S0*C3/C1^2 - S2/C1 ) / (16 (g+2))
//   R(q)    = ( (S0/C1)^2 * (C3/C1 - Z3/Z1) ) / (24 (g+2))
//   q(t)    = reversion of t(q);   R(t) = R(q) o q(t)
//   Q(t)    = ( t - (g+2) t^2 - R(t) ) / ((g+2) t^2)
//   Ahat(q) = C1/S0                (tan(a) * theta'(alpha)/theta(alpha))
//   S(q)    = 2 (g+2) Ahat^2 / (q d/dq R)       (simple pole at q = 0)
//
// and the two differential checks, with d/dR = (q d/dq)/(q d/dq R):
//
//   d^2 t / dR^2 - S t = 0
//   d^2 Ahat / dR^2 - T dAhat/dR - S Ahat = 0,  T = (dS/dR)/S.
template <class R>
struct GenFunBundle {
    R gamma;
    int order = 0;  // q-order the q-side series are built to
    TruncSeries<R> t_q, R_q, Ahat_q, S_q;
    // t-side (reversion chain); absent when only the q-side was requested
    std::optional<TruncSeries<R>> q_t, R_t, Q_t;

    const TruncSeries<R>& q_of_t() const { return require(q_t, "q(t)"); }
    const TruncSeries<R>& R_of_t() const { return require(R_t, "R(t)"); }
    const TruncSeries<R>& Q_of_t() const { return require(Q_t, "Q(t)"); }

  private:
    static const TruncSeries<R>& require(const std::optional<TruncSeries<R>>& s, const char* name) {
        if (!s) throw BadParameter(std::string(name) + " was not built (q-side-only bundle)");
        return *s;
    }
};

enum class BuildParts { QSideOnly, Full };

template <class R>
GenFunBundle<R> build_genfun(const R& gamma, int K, BuildParts parts = BuildParts::Full) {
    if (K < 2) throw BadParameter("order must be at least 2");
    GenFunBundle<R> b;
    b.gamma = gamma;
    b.order = K;

    const R g2 = gamma + R::from_long(2);
    if (g2.is_zero())
        throw BadParameter("gamma = -2 is outside the parametrization (division by gamma+2)");

    const auto S0 = reduced_theta<R>(ThetaKind::S, 0, K, gamma);
    const auto S2 = reduced_theta<R>(ThetaKind::S, 2, K, gamma);
    const auto C1 = reduced_theta<R>(ThetaKind::C, 1, K, gamma);
    const auto C3 = reduced_theta<R>(ThetaKind::C, 3, K, gamma);
    const auto Z1 = reduced_theta<R>(ThetaKind::Z, 1, K, gamma);
    const auto Z3 = reduced_theta<R>(ThetaKind::Z, 3, K, gamma);

    const auto iC1 = inverse(C1);
    {
        auto num = S0 * C3 * iC1 * iC1 - S2 * iC1;
        b.t_q = exact_div_coeffs(num, R::from_long(16) * g2, "t(q): (gamma+2) cancellation")
                    .normalized();
    }
    {
        auto ratio = S0 * iC1;
        auto num = ratio * ratio * (C3 * iC1 - Z3 * inverse(Z1));
        b.R_q = exact_div_coeffs(num, R::from_long(24) * g2, "R(q): (gamma+2) cancellation")
                    .normalized();
    }
    if (b.t_q.valuation() != 1 || !(b.t_q.coef(1) == R::one()))
        throw CancellationFailure("t(q) does not start with q");
    if (b.R_q.valuation() != 1 || !(b.R_q.coef(1) == R::one()))
        throw CancellationFailure("R(q) does not start with q");

    b.Ahat_q = C1 * inverse(S0);
    b.S_q = (b.Ahat_q * b.Ahat_q * inverse(euler_d(b.R_q))) * (R::from_long(2) * g2);

    if (parts == BuildParts::Full) {
        b.q_t = revert(b.t_q);
        b.R_t = compose(b.R_q, *b.q_t);
        // Q(t) = (t - (g+2) t^2 - R(t)) / ((g+2) t^2); the numerator must
        // vanish to order 3, which is exactly the [t^0..t^2] agreement of
        // R(t) with t - (g+2) t^2.
        auto ident = TruncSeries<R>::identity(b.R_t->order());
        auto num = (ident - (ident * ident) * g2 - *b.R_t).normalized();
        if (num.known_terms() > 0 && num.valuation() < 3)
            throw CancellationFailure("Q(t): numerator valuation below 3");
        b.Q_t = exact_div_coeffs(num.shifted(-2), g2, "Q(t): (gamma+2) division");
    }
    return b;
}

// Residual of d^2 t/dR^2 - S t; identically zero through its order when the
// pipeline is consistent. Nonzero residuals are a test failure, not a throw.
template <class R>
TruncSeries<R> ode_residual_t(const GenFunBundle<R>& b) {
    auto dt = deriv_wrt(b.t_q, b.R_q);
    auto d2t = deriv_wrt(dt, b.R_q);
    return d2t - b.S_q * b.t_q;
}

// Residual of d^2 A/dR^2 - T dA/dR - S A for A = Ahat (the equation is linear
// homogeneous, so the dropped constant prefactor is immaterial). T = (dS/dR)/S
// is computed from the normalized S/(2(g+2)), whose leading coefficient is 1;
// log-derivatives do not see constant factors, so this is the same T and it
// keeps symbolic coefficients polynomial.
template <class R>
TruncSeries<R> ode_residual_ahat(const GenFunBundle<R>& b) {
    auto S_norm = b.Ahat_q * b.Ahat_q * inverse(euler_d(b.R_q));
    auto T = deriv_wrt(S_norm, b.R_q) * inverse(S_norm);
    auto dA = deriv_wrt(b.Ahat_q, b.R_q);
    auto d2A = deriv_wrt(dA, b.R_q);
    return d2A - T * dA - b.S_q * b.Ahat_q;
}

}  // namespace eo
