#pragma once

#include <vector>

#include "eo/gamma_poly.hpp"
#include "eo/series.hpp"

namespace eo {

// Reduced q-expansions of the odd Jacobi theta function and its z-derivatives
// at z = alpha and z = 0, with the weight parametrized by gamma = -2 cos(2a).
//
// From the sum form, theta(z) = 2 q^{1/8} sum_{n>=0} (-1)^n q^{n(n+1)/2}
// sin((2n+1)z), so the k-th z-derivative at alpha splits off a common
// prefactor eps_k * 2 q^{1/8} * trig_k(alpha) with
//
//     k mod 4 :   0     1     2     3
//     eps_k   :  +1    +1    -1    -1        (eps_k = (-1)^floor(k/2))
//     trig_k  :  sin   cos   sin   cos
//
// and leaves the reduced series
//
//     S_k = sum (-1)^n (2n+1)^k q^{n(n+1)/2} P_n(gamma)   (k even, z=alpha)
//     C_k = sum (-1)^n (2n+1)^k q^{n(n+1)/2} Q_n(gamma)   (k odd,  z=alpha)
//     Z_k = sum (-1)^n (2n+1)^k q^{n(n+1)/2}              (k odd,  z=0)
//
// where P_n = sin((2n+1)a)/sin(a) and Q_n = cos((2n+1)a)/cos(a) are
// polynomials in gamma through the shared recurrence X_n = -g X_{n-1} - X_{n-2}
// (from sin(x+2a) = 2cos(2a) sin(x) - sin(x-2a) and 2cos(2a) = -g).
// The prefactors cancel in every ratio used downstream, so together with
// sin^2(a) = (g+2)/4 and cos^2(a) = (2-g)/4 all arithmetic stays in Q[g][[q]].
enum class ThetaKind {
    S,  // z = alpha, even derivative order, sine prefactor
    C,  // z = alpha, odd derivative order, cosine prefactor
    Z,  // z = 0, odd derivative order
};

// P_n(gamma): P_0 = 1, P_1 = 1 - gamma, P_n = -gamma P_{n-1} - P_{n-2}
GammaPoly cheb_p(int n);
// Q_n(gamma): Q_0 = 1, Q_1 = -1 - gamma, same recurrence
GammaPoly cheb_q(int n);

// Ring-generic multiplier tables with gamma evaluated at a ring element.
template <class R>
std::vector<R> cheb_p_values(const R& gamma, int count) {
    std::vector<R> xs;
    xs.reserve(static_cast<size_t>(count));
    if (count > 0) xs.push_back(R::one());
    if (count > 1) xs.push_back(R::one() - gamma);
    while (static_cast<int>(xs.size()) < count)
        xs.push_back(-(gamma * xs[xs.size() - 1]) - xs[xs.size() - 2]);
    return xs;
}

template <class R>
std::vector<R> cheb_q_values(const R& gamma, int count) {
    std::vector<R> xs;
    xs.reserve(static_cast<size_t>(count));
    if (count > 0) xs.push_back(R::one());
    if (count > 1) xs.push_back(-R::one() - gamma);
    while (static_cast<int>(xs.size()) < count)
        xs.push_back(-(gamma * xs[xs.size() - 1]) - xs[xs.size() - 2]);
    return xs;
}

// The reduced theta series of the given kind and derivative order k, to
// q-order K, over the ring R with the given gamma value. The derivative
// order's parity must match the kind. Triangular exponents n(n+1)/2 are
// generated until they exceed K.
template <class R>
TruncSeries<R> reduced_theta(ThetaKind kind, int k, int K, const R& gamma) {
    if (k < 0) throw BadParameter("negative derivative order");
    const bool even = (k % 2 == 0);
    if ((kind == ThetaKind::S && !even) || (kind != ThetaKind::S && even))
        throw ParityMismatch("derivative order parity does not match the series kind");

    int nmax = 0;
    while (nmax * (nmax + 1) / 2 < K) ++nmax;
    std::vector<R> mult;
    switch (kind) {
        case ThetaKind::S: mult = cheb_p_values(gamma, nmax + 1); break;
        case ThetaKind::C: mult = cheb_q_values(gamma, nmax + 1); break;
        case ThetaKind::Z: mult.assign(static_cast<size_t>(nmax + 1), R::one()); break;
    }

    std::vector<R> coeffs(static_cast<size_t>(K), R::zero());
    for (int n = 0;; ++n) {
        long long tri = static_cast<long long>(n) * (n + 1) / 2;
        if (tri >= K) break;
        R term = R::from_rational(int_pow(2 * n + 1, static_cast<unsigned>(k)));
        if (n % 2 == 1) term = -term;
        coeffs[static_cast<size_t>(tri)] += term * mult[static_cast<size_t>(n)];
    }
    return TruncSeries<R>(0, K, std::move(coeffs));
}

// Symbolic-mode shorthand (coefficients in Q[gamma]).
inline TruncSeries<GammaPoly> reduced_theta_symbolic(ThetaKind kind, int k, int K) {
    return reduced_theta<GammaPoly>(kind, k, K, GammaPoly::gamma());
}

}  // namespace eo
