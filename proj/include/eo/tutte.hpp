#pragma once

#include <vector>

#include "eo/omega_laurent.hpp"
#include "eo/series.hpp"

namespace eo {

// Loop-equation oracle: iterates the recursive map decomposition
//
//   W(x)   = x^2 t W(x)^2 + w x t H(x,0) + w^-1 x t H(0,x) + 1
//   H(x,y) = W(x) W(y) + (w^-1/y)(H(x,y) - H(x,0)) + (w/x)(H(x,y) - H(0,y))
//
// order by order in t over OmegaLaurent coefficients, entirely independently
// of the theta pipeline. C(t,w) = H(0,0) counts cubic partial Eulerian
// orientations and equals 1 + Q(t, w^2+w^-2).

// [t^k] W(x): polynomial in x of degree <= 2k
struct WSlice {
    int k = 0;
    std::vector<OmegaLaurent> poly;  // index = x-power, size 2k+1
    const OmegaLaurent& at(int r) const {
        static const OmegaLaurent kZero;
        return (r >= 0 && r < static_cast<int>(poly.size())) ? poly[static_cast<size_t>(r)]
                                                             : kZero;
    }
};

// [t^k] H(x,y): polynomial supported on x^r y^s with r+s <= 2k
struct HSlice {
    int k = 0;
    // h[r][s] for r+s <= 2k; rectangular storage with zero padding
    std::vector<std::vector<OmegaLaurent>> h;
    const OmegaLaurent& at(int r, int s) const {
        static const OmegaLaurent kZero;
        if (r < 0 || s < 0 || r >= static_cast<int>(h.size()) ||
            s >= static_cast<int>(h[static_cast<size_t>(r)].size()))
            return kZero;
        return h[static_cast<size_t>(r)][static_cast<size_t>(s)];
    }
};

struct WHSlices {
    std::vector<WSlice> w;  // indices 0..K
    std::vector<HSlice> h;  // indices 0..K
    int order() const { return static_cast<int>(w.size()) - 1; }
};

// Computes all slices through t-order K and verifies them by substituting
// back into both defining equations (throws VerificationFailure on any
// mismatch — that is a bug trap, not a user error).
WHSlices iterate_wh(int K);

// H(0,0) as a t-series; also recomputes it as [x^1]W / (t (w + w^-1)) and
// asserts the two routes agree to order K (VerificationFailure otherwise).
TruncSeries<OmegaLaurent> c_of_t(const WHSlices& slices);

// Per-order comparison of omega_to_gamma(C) against 1 + Q(t,gamma).
struct OracleComparison {
    int order = 0;
    bool match = false;
    int first_mismatch = -1;  // t-exponent, or -1
};
OracleComparison compare_c_q(const TruncSeries<OmegaLaurent>& c,
                             const TruncSeries<GammaPoly>& q_of_t_symbolic);

}  // namespace eo
