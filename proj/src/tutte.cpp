#include "eo/tutte.hpp"

namespace eo {

namespace {

const OmegaLaurent kOmega = OmegaLaurent::monomial(Rational(1), 1);
const OmegaLaurent kOmegaInv = OmegaLaurent::monomial(Rational(1), -1);

// [t^k][x^r] of x^2 W(x)^2
OmegaLaurent w_square_term(const std::vector<WSlice>& w, int k, int r) {
    OmegaLaurent acc;
    for (int j = 0; j <= k; ++j) {
        const WSlice& a = w[static_cast<size_t>(j)];
        const WSlice& b = w[static_cast<size_t>(k - j)];
        for (int r1 = 0; r1 <= std::min(2 * j, r - 2); ++r1) {
            const OmegaLaurent& ar = a.at(r1);
            if (ar.is_zero()) continue;
            const OmegaLaurent& br = b.at(r - 2 - r1);
            if (br.is_zero()) continue;
            acc += ar * br;
        }
    }
    return acc;
}

// t-order-k convolution sum_j [t^j][x^r]W * [t^{k-j}][x^s]W
OmegaLaurent w_star_w(const std::vector<WSlice>& w, int k, int r, int s) {
    OmegaLaurent acc;
    for (int j = 0; j <= k; ++j) {
        const OmegaLaurent& a = w[static_cast<size_t>(j)].at(r);
        if (a.is_zero()) continue;
        const OmegaLaurent& b = w[static_cast<size_t>(k - j)].at(s);
        if (b.is_zero()) continue;
        acc += a * b;
    }
    return acc;
}

}  // namespace

WHSlices iterate_wh(int K) {
    if (K < 0) throw BadParameter("negative t-order");
    WHSlices out;
    out.w.reserve(static_cast<size_t>(K) + 1);
    out.h.reserve(static_cast<size_t>(K) + 1);

    for (int k = 0; k <= K; ++k) {
        // W slice: [t^k]W = [t^{k-1}](x^2 W^2 + w x H(x,0) + w^-1 x H(0,x)),
        // with the atomic map contributing [t^0]W = 1.
        WSlice ws;
        ws.k = k;
        ws.poly.assign(static_cast<size_t>(2 * k) + 1, OmegaLaurent());
        if (k == 0) {
            ws.poly[0] = OmegaLaurent::one();
        } else {
            const HSlice& hprev = out.h[static_cast<size_t>(k - 1)];
            for (int r = 0; r <= 2 * k; ++r) {
                OmegaLaurent v = w_square_term(out.w, k - 1, r);
                if (r >= 1) {
                    v += kOmega * hprev.at(r - 1, 0);
                    v += kOmegaInv * hprev.at(0, r - 1);
                }
                ws.poly[static_cast<size_t>(r)] = std::move(v);
            }
        }
        out.w.push_back(std::move(ws));

        // H slice: descending recursion on r+s from the degree cap 2k,
        //   h_{r,s} = (w*w)_{r,s} + w^-1 h_{r,s+1} + w h_{r+1,s}
        HSlice hs;
        hs.k = k;
        hs.h.assign(static_cast<size_t>(2 * k) + 1,
                    std::vector<OmegaLaurent>(static_cast<size_t>(2 * k) + 1, OmegaLaurent()));
        for (int d = 2 * k; d >= 0; --d) {
            for (int r = 0; r <= d; ++r) {
                int s = d - r;
                OmegaLaurent v = w_star_w(out.w, k, r, s);
                v += kOmegaInv * hs.at(r, s + 1);
                v += kOmega * hs.at(r + 1, s);
                hs.h[static_cast<size_t>(r)][static_cast<size_t>(s)] = std::move(v);
            }
        }
        out.h.push_back(std::move(hs));
    }

    // Back-substitution of both equations, per t-order. The H equation is
    // checked in its xy-cleared form
    //   xy H = xy W(x)W(y) + w^-1 x (H - H(x,0)) + w y (H - H(0,y)).
    for (int k = 0; k <= K; ++k) {
        const WSlice& wk = out.w[static_cast<size_t>(k)];
        for (int r = 0; r <= 2 * k + 2; ++r) {
            OmegaLaurent rhs;  // [t^k][x^r] of the W equation right side
            if (k >= 1) {
                rhs = w_square_term(out.w, k - 1, r);
                if (r >= 1) {
                    rhs += kOmega * out.h[static_cast<size_t>(k - 1)].at(r - 1, 0);
                    rhs += kOmegaInv * out.h[static_cast<size_t>(k - 1)].at(0, r - 1);
                }
            }
            if (k == 0 && r == 0) rhs += OmegaLaurent::one();
            if (!(rhs == wk.at(r)))
                throw VerificationFailure("W equation fails at t^" + std::to_string(k) + " x^" +
                                          std::to_string(r));
        }
        const HSlice& hk = out.h[static_cast<size_t>(k)];
        for (int a = 0; a <= 2 * k + 2; ++a) {
            for (int bb = 0; bb <= 2 * k + 2 - a; ++bb) {
                // coefficient of x^a y^b in the cleared H equation
                OmegaLaurent lhs = hk.at(a - 1, bb - 1);
                OmegaLaurent rhs;
                if (a >= 1 && bb >= 1) rhs += w_star_w(out.w, k, a - 1, bb - 1);
                if (a >= 1) {
                    rhs += kOmegaInv * hk.at(a - 1, bb);
                    if (bb == 0) rhs -= kOmegaInv * hk.at(a - 1, 0);
                }
                if (bb >= 1) {
                    rhs += kOmega * hk.at(a, bb - 1);
                    if (a == 0) rhs -= kOmega * hk.at(0, bb - 1);
                }
                if (!(lhs == rhs))
                    throw VerificationFailure("H equation fails at t^" + std::to_string(k) +
                                              " x^" + std::to_string(a) + " y^" +
                                              std::to_string(bb));
            }
        }
    }
    return out;
}

TruncSeries<OmegaLaurent> c_of_t(const WHSlices& slices) {
    const int K = slices.order();
    std::vector<OmegaLaurent> coeffs;
    coeffs.reserve(static_cast<size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) coeffs.push_back(slices.h[static_cast<size_t>(k)].at(0, 0));

    // second route: [x^1] W(x) / (t (w + w^-1))
    const OmegaLaurent wpwi = OmegaLaurent::omega_plus_inverse();
    for (int k = 1; k <= K; ++k) {
        OmegaLaurent ratio;
        if (!OmegaLaurent::try_divide(ratio, slices.w[static_cast<size_t>(k)].at(1), wpwi))
            throw VerificationFailure("[x^1]W not divisible by (w + w^-1) at t^" +
                                      std::to_string(k));
        if (!(ratio == coeffs[static_cast<size_t>(k - 1)]))
            throw VerificationFailure("H(0,0) and [x^1]W/(t(w+w^-1)) disagree at t^" +
                                      std::to_string(k - 1));
    }
    return TruncSeries<OmegaLaurent>(0, K + 1, std::move(coeffs));
}

OracleComparison compare_c_q(const TruncSeries<OmegaLaurent>& c,
                             const TruncSeries<GammaPoly>& q_of_t_symbolic) {
    OracleComparison res;
    res.order = std::min(c.order(), q_of_t_symbolic.order());
    res.match = true;
    for (int k = 0; k < res.order; ++k) {
        GammaPoly lhs = omega_to_gamma(c.coef(k));
        GammaPoly rhs = q_of_t_symbolic.coef(k);
        if (k == 0) rhs += GammaPoly::one();  // C counts the atomic map: C = 1 + Q
        if (lhs != rhs) {
            res.match = false;
            res.first_mismatch = k;
            break;
        }
    }
    return res;
}

}  // namespace eo
