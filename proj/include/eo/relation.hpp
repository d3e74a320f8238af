#pragma once

#include <utility>
#include <vector>

#include "eo/quad_sqrt5.hpp"
#include "eo/series.hpp"

namespace eo {

// Exact nullspace machinery and the polynomial-relation finder used to
// discover P(R, S) = 0 for the torsion weights.

// Fraction-free (Bareiss) forward elimination followed by exact
// back-substitution. Entries live in an exact field; no floating point, so a
// near-kernel can never masquerade as a kernel. Returns a basis of the right
// nullspace of the nrows x ncols matrix (row-major).
template <class F>
std::vector<std::vector<F>> exact_kernel(std::vector<std::vector<F>> m) {
    const int nrows = static_cast<int>(m.size());
    const int ncols = nrows == 0 ? 0 : static_cast<int>(m[0].size());
    std::vector<int> pivot_col;
    F prev = F::one();
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int pr = -1;
        for (int i = r; i < nrows; ++i)
            if (!m[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(pr)]);
        const F piv = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
        for (int i = r + 1; i < nrows; ++i) {
            const F mic = m[static_cast<size_t>(i)][static_cast<size_t>(c)];
            for (int j = c; j < ncols; ++j) {
                F num = piv * m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                        mic * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
                F q = F::zero();
                if (!F::try_divide(q, num, prev))
                    throw InternalError("fraction-free elimination division failed");
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(q);
            }
        }
        prev = piv;
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<F>> basis;
    for (int fc = 0; fc < ncols; ++fc) {
        if (is_pivot[static_cast<size_t>(fc)]) continue;
        std::vector<F> v(static_cast<size_t>(ncols), F::zero());
        v[static_cast<size_t>(fc)] = F::one();
        for (int rr = static_cast<int>(pivot_col.size()) - 1; rr >= 0; --rr) {
            int pc = pivot_col[static_cast<size_t>(rr)];
            F acc = F::zero();
            for (int j = pc + 1; j < ncols; ++j)
                acc += m[static_cast<size_t>(rr)][static_cast<size_t>(j)] *
                       v[static_cast<size_t>(j)];
            F q = F::zero();
            if (!F::try_divide(q, acc, m[static_cast<size_t>(rr)][static_cast<size_t>(pc)]))
                throw InternalError("back-substitution division failed");
            v[static_cast<size_t>(pc)] = -q;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// --- content/sign normalization, per field ---

inline void content_normalize(std::vector<Rational>& v) {
    mpz_class l(1), g(0);
    for (const auto& x : v) l = lcm(l, x.denominator());
    for (const auto& x : v) g = gcd(g, mpz_class(x.numerator() * (l / x.denominator())));
    if (g == 0) return;
    Rational scale(mpq_class(l) / mpq_class(g));
    for (auto& x : v) x = x * scale;
}

inline void content_normalize(std::vector<QuadExtSqrt5>& v) {
    mpz_class l(1), g(0);
    for (const auto& x : v) {
        l = lcm(l, x.a().denominator());
        l = lcm(l, x.b().denominator());
    }
    for (const auto& x : v) {
        g = gcd(g, mpz_class(x.a().numerator() * (l / x.a().denominator())));
        g = gcd(g, mpz_class(x.b().numerator() * (l / x.b().denominator())));
    }
    if (g == 0) return;
    QuadExtSqrt5 scale = QuadExtSqrt5::from_rational(Rational(mpq_class(l) / mpq_class(g)));
    for (auto& x : v) x = x * scale;
}

inline int sign_of(const Rational& x) { return x.sign(); }
inline int sign_of(const QuadExtSqrt5& x) { return x.sign_as_real(); }

// A discovered polynomial relation sum c_{ij} R^i S^j = 0, normalized to
// integer content 1 with the leading monomial positive. Monomials are ordered
// by S-exponent first, then R-exponent; that ordering makes both the toy
// S - R^2 relation and the +256 R^4 S^2 leading sign come out as expected.
template <class F>
struct RelationCandidate {
    std::vector<std::pair<int, int>> support;  // (r_exp, s_exp), nonzero terms only
    std::vector<F> coeffs;                     // parallel to support
    int certified_order = 0;                   // residual vanishes below this q-exponent
};

// Searches for an exact linear relation among the monomials R^i S^j over the
// given support. The matrix columns are q-coefficient vectors of the
// monomials, aligned from the minimum valuation (S-powers are Laurent).
// NoRelation if the kernel is trivial, AmbiguousRelation if its dimension
// exceeds 1 (support too generous for the available order).
template <class F>
RelationCandidate<F> find_poly_relation(const TruncSeries<F>& R_series,
                                        const TruncSeries<F>& S_series,
                                        const std::vector<std::pair<int, int>>& support) {
    if (support.empty()) throw BadParameter("empty support");
    int max_i = 0, max_j = 0;
    for (auto [i, j] : support) {
        if (i < 0 || j < 0) throw BadParameter("negative exponent in support");
        max_i = std::max(max_i, i);
        max_j = std::max(max_j, j);
    }
    // power tables
    std::vector<TruncSeries<F>> rp, sp;
    rp.push_back(TruncSeries<F>::constant(F::one(), R_series.order()));
    for (int i = 1; i <= max_i; ++i) rp.push_back(rp.back() * R_series);
    sp.push_back(TruncSeries<F>::constant(F::one(), S_series.order()));
    for (int j = 1; j <= max_j; ++j) sp.push_back(sp.back() * S_series);

    std::vector<TruncSeries<F>> cols;
    cols.reserve(support.size());
    int vmin = 0, omin = R_series.order();
    for (auto [i, j] : support) {
        auto m = rp[static_cast<size_t>(i)] * sp[static_cast<size_t>(j)];
        vmin = std::min(vmin, m.valuation());
        omin = std::min(omin, m.order());
        cols.push_back(std::move(m));
    }
    const int ncols = static_cast<int>(support.size());
    const int nrows = omin - vmin;
    if (nrows < ncols + 4)
        throw BadParameter("series order too small for the requested support");

    std::vector<std::vector<F>> m(static_cast<size_t>(nrows),
                                  std::vector<F>(static_cast<size_t>(ncols), F::zero()));
    for (int c = 0; c < ncols; ++c)
        for (int e = vmin; e < omin; ++e)
            m[static_cast<size_t>(e - vmin)][static_cast<size_t>(c)] =
                (e < cols[static_cast<size_t>(c)].valuation())
                    ? F::zero()
                    : cols[static_cast<size_t>(c)].coef(e);

    auto basis = exact_kernel(std::move(m));
    if (basis.empty()) throw NoRelation("no exact relation on the given support");
    if (basis.size() > 1)
        throw AmbiguousRelation("kernel dimension " + std::to_string(basis.size()) +
                                "; shrink the support or raise the order");

    std::vector<F> vec = std::move(basis[0]);
    content_normalize(vec);
    // sign: positive coefficient at the largest (s_exp, r_exp) monomial
    int lead = 0;
    for (int c = 1; c < ncols; ++c) {
        auto key = std::make_pair(support[static_cast<size_t>(c)].second,
                                  support[static_cast<size_t>(c)].first);
        auto lk = std::make_pair(support[static_cast<size_t>(lead)].second,
                                 support[static_cast<size_t>(lead)].first);
        if (!vec[static_cast<size_t>(c)].is_zero() &&
            (vec[static_cast<size_t>(lead)].is_zero() || key > lk))
            lead = c;
    }
    if (sign_of(vec[static_cast<size_t>(lead)]) < 0)
        for (auto& x : vec) x = -x;

    // certification: the combination really vanishes through omin
    TruncSeries<F> resid = TruncSeries<F>::zero_to(omin);
    for (int c = 0; c < ncols; ++c)
        resid = resid + cols[static_cast<size_t>(c)] * vec[static_cast<size_t>(c)];
    if (!resid.is_identically_zero())
        throw InternalError("relation certification failed");

    RelationCandidate<F> out;
    out.certified_order = omin;
    for (int c = 0; c < ncols; ++c)
        if (!vec[static_cast<size_t>(c)].is_zero()) {
            out.support.push_back(support[static_cast<size_t>(c)]);
            out.coeffs.push_back(vec[static_cast<size_t>(c)]);
        }
    return out;
}

// Evaluates a relation candidate on (possibly recomputed) series; used by the
// doubled-order guard against accidental kernels.
template <class F>
TruncSeries<F> relation_residual(const RelationCandidate<F>& rel, const TruncSeries<F>& R_series,
                                 const TruncSeries<F>& S_series) {
    int max_i = 0, max_j = 0;
    for (auto [i, j] : rel.support) {
        max_i = std::max(max_i, i);
        max_j = std::max(max_j, j);
    }
    std::vector<TruncSeries<F>> rp{TruncSeries<F>::constant(F::one(), R_series.order())};
    for (int i = 1; i <= max_i; ++i) rp.push_back(rp.back() * R_series);
    std::vector<TruncSeries<F>> sp{TruncSeries<F>::constant(F::one(), S_series.order())};
    for (int j = 1; j <= max_j; ++j) sp.push_back(sp.back() * S_series);
    TruncSeries<F> acc = TruncSeries<F>::zero_to(R_series.order());
    for (size_t k = 0; k < rel.support.size(); ++k)
        acc = acc + rp[static_cast<size_t>(rel.support[k].first)] *
                        sp[static_cast<size_t>(rel.support[k].second)] * rel.coeffs[k];
    return acc;
}

}  // namespace eo
