#pragma once

#include "eo/series.hpp"

namespace eo {

// q-series carrying a rational leading-exponent offset, i.e. q^offset * series.
// This is the natural home of eta powers: eta(q^k)^m has offset k*m/24.
// Offsets add under multiplication and subtract under division; conversion to
// a plain series is only legal once the net offset is an integer.
struct OffsetQSeries {
    Rational offset;
    TruncSeries<Rational> series;

    OffsetQSeries() : series(TruncSeries<Rational>::zero_to(0)) {}
    OffsetQSeries(Rational off, TruncSeries<Rational> s)
        : offset(std::move(off)), series(std::move(s)) {}

    friend OffsetQSeries operator*(const OffsetQSeries& a, const OffsetQSeries& b) {
        return {a.offset + b.offset, a.series * b.series};
    }
    friend OffsetQSeries operator/(const OffsetQSeries& a, const OffsetQSeries& b) {
        return {a.offset - b.offset, a.series * inverse(b.series)};
    }
    OffsetQSeries pow(int e) const;

    // requires an integer net offset (OffsetMismatch otherwise)
    TruncSeries<Rational> to_series() const;
};

// eta(q^k) = q^{k/24} prod_{n>=1} (1 - q^{kn}), expanded by the pentagonal
// number theorem: prod (1-q^n) = sum_m (-1)^m q^{m(3m-1)/2}.
OffsetQSeries eta_pow_series(int k, int K);

// Hauptmoduls normalized to h = q + O(q^2), one per supported torsion level:
//   N=3: ([3]/[1])^12       N=4: ([4]/[1])^8
//   N=6: ([1][6]^3/([2][3]^3))^3
//   N=5: q * prod_n (1-q^n)^{5 chi(n)} with chi the quadratic character mod 5
//        (the fifth power of the Rogers-Ramanujan product; its expansion
//        starts q - 5q^2 + 15q^3 - 30q^4 + 40q^5 - 26q^6).
// The eta-offset bookkeeping must net to exactly 1 (OffsetMismatch otherwise).
TruncSeries<Rational> hauptmodul(int N, int K);

// Gauss hypergeometric 2F1(a,b;c; scale*z) as an exact z-series, via the
// term ratio c_{n+1}/c_n = (a+n)(b+n) scale / ((c+n)(1+n)).
TruncSeries<Rational> f21_series(const Rational& a, const Rational& b, const Rational& c,
                                 const Rational& scale, int K);

enum class LatticeForm {
    Hex,     // sum_{m,n in Z} q^{m^2+mn+n^2}
    Square,  // (sum_{n in Z} q^{n^2})^2
};
TruncSeries<Rational> lattice_theta_sum(LatticeForm form, int K);

}  // namespace eo
