#include "eo/modular.hpp"

#include <cmath>

namespace eo {

OffsetQSeries OffsetQSeries::pow(int e) const {
    if (e < 0) {
        OffsetQSeries inv{-offset, inverse(series)};
        return inv.pow(-e);
    }
    OffsetQSeries acc{Rational(0), TruncSeries<Rational>::constant(Rational(1), series.order())};
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

TruncSeries<Rational> OffsetQSeries::to_series() const {
    if (!offset.is_integer())
        throw OffsetMismatch("net exponent offset " + offset.str() + " is not an integer");
    long shift = offset.numerator().get_si();
    return series.shifted(static_cast<int>(shift));
}

OffsetQSeries eta_pow_series(int k, int K) {
    if (k < 1) throw BadParameter("eta argument power must be positive");
    std::vector<Rational> c(static_cast<size_t>(K), Rational(0));
    if (K > 0) c[0] = Rational(1);
    for (long m = 1;; ++m) {
        long e1 = k * m * (3 * m - 1) / 2;
        long e2 = k * m * (3 * m + 1) / 2;
        if (e1 >= K && e2 >= K) break;
        Rational sign(m % 2 == 0 ? 1 : -1);
        if (e1 < K) c[static_cast<size_t>(e1)] += sign;
        if (e2 < K) c[static_cast<size_t>(e2)] += sign;
    }
    return {Rational(k, 24), TruncSeries<Rational>(0, K, std::move(c))};
}

namespace {

// prod_{n>=1} (1-q^n)^{mult * chi(n)} with chi the quadratic character mod 5
TruncSeries<Rational> rogers_ramanujan_product(int mult, int K) {
    auto acc = TruncSeries<Rational>::constant(Rational(1), K);
    for (int n = 1; n < K; ++n) {
        int m = n % 5;
        int e;
        if (m == 1 || m == 4)
            e = mult;
        else if (m == 2 || m == 3)
            e = -mult;
        else
            continue;
        auto factor = TruncSeries<Rational>::from_poly({Rational(1)}, K) +
                      TruncSeries<Rational>::monomial(Rational(-1), n, K);
        if (e > 0) {
            for (int i = 0; i < e; ++i) acc = acc * factor;
        } else {
            auto fi = inverse(factor);
            for (int i = 0; i < -e; ++i) acc = acc * fi;
        }
    }
    return acc;
}

}  // namespace

TruncSeries<Rational> hauptmodul(int N, int K) {
    if (K < 2) throw BadParameter("order must be at least 2");
    TruncSeries<Rational> h = TruncSeries<Rational>::zero_to(K);
    switch (N) {
        case 3:
            h = (eta_pow_series(3, K) / eta_pow_series(1, K)).pow(12).to_series();
            break;
        case 4:
            h = (eta_pow_series(4, K) / eta_pow_series(1, K)).pow(8).to_series();
            break;
        case 6: {
            auto e1 = eta_pow_series(1, K), e2 = eta_pow_series(2, K);
            auto e3 = eta_pow_series(3, K), e6 = eta_pow_series(6, K);
            h = ((e1 * e6.pow(3)) / (e2 * e3.pow(3))).pow(3).to_series();
            break;
        }
        case 5:
            h = rogers_ramanujan_product(5, K).shifted(1).truncated(K);
            break;
        default:
            throw UsageError("unsupported torsion level " + std::to_string(N) +
                             " (supported: 3, 4, 5, 6)");
    }
    auto hn = h.normalized();
    if (hn.valuation() != 1 || !hn.coef(1).is_one())
        throw OffsetMismatch("Hauptmodul is not normalized to q + O(q^2)");
    return hn;
}

TruncSeries<Rational> f21_series(const Rational& a, const Rational& b, const Rational& c,
                                 const Rational& scale, int K) {
    if (c.is_integer() && c.sign() <= 0)
        throw BadParameter("lower parameter must not be a nonpositive integer");
    std::vector<Rational> coeffs(static_cast<size_t>(K), Rational(0));
    Rational cur(1);
    for (int n = 0; n < K; ++n) {
        coeffs[static_cast<size_t>(n)] = cur;
        Rational nn(n);
        cur = cur * (a + nn) * (b + nn) * scale / ((c + nn) * (nn + Rational(1)));
    }
    return TruncSeries<Rational>(0, K, std::move(coeffs));
}

TruncSeries<Rational> lattice_theta_sum(LatticeForm form, int K) {
    std::vector<Rational> c(static_cast<size_t>(K), Rational(0));
    if (form == LatticeForm::Hex) {
        // m^2+mn+n^2 = (n+m/2)^2 + 3m^2/4 >= 3 max(m,n)^2 / 4
        int bound = static_cast<int>(std::sqrt(4.0 * K / 3.0)) + 2;
        for (int m = -bound; m <= bound; ++m)
            for (int n = -bound; n <= bound; ++n) {
                long e = static_cast<long>(m) * m + static_cast<long>(m) * n +
                         static_cast<long>(n) * n;
                if (e < K) c[static_cast<size_t>(e)] += Rational(1);
            }
        return TruncSeries<Rational>(0, K, std::move(c));
    }
    int bound = static_cast<int>(std::sqrt(static_cast<double>(K))) + 2;
    for (int n = -bound; n <= bound; ++n) {
        long e = static_cast<long>(n) * n;
        if (e < K) c[static_cast<size_t>(e)] += Rational(1);
    }
    auto s = TruncSeries<Rational>(0, K, std::move(c));
    return s * s;
}

}  // namespace eo
